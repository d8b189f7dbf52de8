"""Named law suite over a model, plus an independent multiplication oracle.

``run_checks`` evaluates every structural law the package promises
(ring laws, coproduct laws, surface-operation laws) over a degree window
and a seeded stream of random elements, and returns a deterministic
report: same model, window and seed always give byte-identical output.

``DenseOracle`` recomputes products from the raw presentation by direct
exponent-vector arithmetic (bubble-sorted letter sequences for signs,
relation scans for moduli).  It shares no code with the normal-form
engine, so agreement between the two is meaningful evidence.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from .algebra import Element, LoopModel, Monomial
from .coalgebra import (
    apply_delta_factorwise,
    apply_psi,
    psi,
    psi_mirror,
    psi_split,
    tensor,
    tensor_scale,
    twist,
)
from .modelfile import ModelDoc, parse_model, print_model
from .tqft import (
    Surface,
    VanishingReason,
    sew,
    string_operation,
    string_operation_via_pants,
    vanishing_certificate,
)

_CHI_ZERO_TAG = "vanishes identically (chi = 0)"
_INCONSISTENT_TAG = "model is inconsistent with string topology"


@dataclass
class CheckResult:
    law: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""
    witness: str | None = None


@dataclass
class CheckReport:
    model_name: str
    window: int
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def render_text(self) -> str:
        lines = [f"model: {self.model_name}", f"window: {self.window}", f"seed: {self.seed}"]
        for r in self.results:
            head = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[r.status]
            line = f"{head} {r.law}"
            if r.detail:
                line += f" ({r.detail})"
            if r.witness:
                line += f" witness: {r.witness}"
            lines.append(line)
        np = sum(1 for r in self.results if r.status == "pass")
        nf = sum(1 for r in self.results if r.status == "fail")
        ns = sum(1 for r in self.results if r.status == "skip")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"result: {verdict} ({np} passed, {nf} failed, {ns} skipped)")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "model": self.model_name,
            "window": self.window,
            "seed": self.seed,
            "passed": self.passed,
            "results": [
                {
                    "law": r.law,
                    "status": r.status,
                    "detail": r.detail,
                    "witness": r.witness,
                }
                for r in self.results
            ],
        }

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


# -- independent multiplication oracle -----------------------------------------


class DenseOracle:
    """Structure constants recomputed from the raw presentation.

    Basis enumeration scans plain exponent boxes, moduli come from a
    direct divisibility scan over the relation list (plus this class's
    own square-kill rule for odd generators), and product signs come from
    bubble-sorting the concatenated letter sequence while counting
    odd-odd swaps.
    """

    def __init__(self, model: LoopModel, max_abs_degree: int):
        self.window = max_abs_degree
        self.degrees = [g.degree for g in model.generators]
        self.odd = [g.degree % 2 != 0 for g in model.generators]
        self.relations = [
            (rel.coeff, list(rel.monomial.exps)) for rel in model.relations
        ]
        n = len(self.degrees)
        for i in range(n):
            if self.odd[i]:
                self.relations.append((1, [2 if j == i else 0 for j in range(n)]))
        self.basis = self._enumerate()

    def _bound(self, i: int) -> int:
        # exponent bound for generator i inside the window
        if self.odd[i]:
            return 1
        kill = None
        for k, exps in self.relations:
            if k == 1 and exps[i] >= 1 and all(e == 0 for j, e in enumerate(exps) if j != i):
                kill = exps[i] if kill is None else min(kill, exps[i])
        if kill is not None:
            return kill - 1
        d = self.degrees[i]
        if d <= 0:
            raise ValueError("oracle needs nilpotent non-positive generators")
        neg_room = sum(
            -self.degrees[j] * self._bound(j)
            for j in range(len(self.degrees))
            if self.degrees[j] < 0 and j != i
        )
        return (self.window + neg_room) // d

    def _enumerate(self) -> dict[int, list[tuple[int, ...]]]:
        bounds = [self._bound(i) for i in range(len(self.degrees))]
        out: dict[int, list[tuple[int, ...]]] = {}
        vec = [0] * len(bounds)

        def rec(i: int):
            if i == len(bounds):
                deg = sum(e * d for e, d in zip(vec, self.degrees))
                if abs(deg) <= self.window and self.modulus(vec) != 1:
                    out.setdefault(deg, []).append(tuple(vec))
                return
            for e in range(bounds[i] + 1):
                vec[i] = e
                rec(i + 1)
            vec[i] = 0

        rec(0)
        for deg in out:
            out[deg].sort()
        return out

    def modulus(self, exps) -> int:
        mod = 0
        for k, rexps in self.relations:
            if all(re <= e for re, e in zip(rexps, exps)):
                mod = gcd(mod, k)
        return mod

    def _letters(self, exps) -> list[int]:
        word = []
        for i, e in enumerate(exps):
            word.extend([i] * e)
        return word

    def sign(self, exps1, exps2) -> int:
        word = self._letters(exps1) + self._letters(exps2)
        sign = 1
        for i in range(len(word)):
            for j in range(len(word) - 1 - i):
                if word[j] > word[j + 1]:
                    if self.odd[word[j]] and self.odd[word[j + 1]]:
                        sign = -sign
                    word[j], word[j + 1] = word[j + 1], word[j]
        return sign

    def multiply(self, exps1, exps2) -> tuple[int, tuple[int, ...]] | None:
        """Canonical (coefficient, exponents) of the product of two basis
        monomials, or None when it dies."""
        combined = tuple(a + b for a, b in zip(exps1, exps2))
        mod = self.modulus(combined)
        if mod == 1:
            return None
        coeff = self.sign(exps1, exps2)
        if mod:
            coeff %= mod
        if coeff == 0:
            return None
        return coeff, combined

    def reduce(self, raw_terms) -> dict[tuple[int, ...], int]:
        """Canonical form of a list of (coefficient, exponent-vector)."""
        acc: dict[tuple[int, ...], int] = {}
        for c, exps in raw_terms:
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + c
        out = {}
        for key, c in acc.items():
            mod = self.modulus(key)
            if mod:
                c %= mod
            if c:
                out[key] = c
        return out


# -- law implementations ---------------------------------------------------------


class _Ctx:
    def __init__(self, model: LoopModel, doc: ModelDoc | None, window: int, seed: int):
        self.model = model
        self.doc = doc
        self.window = window
        self.seed = seed
        self.basis = model.basis_window(window)  # (degree, monomial, modulus)
        self.monomials = [m for _, m, _ in self.basis]
        self.chi_zero = model.euler == 0

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def random_element(self, rng: random.Random, max_terms: int = 3, coeff: int = 4) -> Element:
        k = rng.randint(0, max_terms)
        pairs = [
            (rng.randint(-coeff, coeff), rng.choice(self.monomials)) for _ in range(k)
        ]
        return self.model.normal_form(pairs)

    def fmt(self, m: Monomial) -> str:
        return self.model.format_monomial(m)


def _passed(law: str, cases: int, tag: str = "") -> CheckResult:
    detail = f"{cases} cases"
    if tag:
        detail += f"; {tag}"
    return CheckResult(law, "pass", detail)


def _check_normal_form_idempotent(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    cases = 0
    for _ in range(60):
        x = ctx.random_element(rng)
        again = model.normal_form([(c, m) for m, c in x.terms.items()])
        if again != x:
            return CheckResult(
                "normal-form-idempotent", "fail", witness=f"{x} renormalized to {again}"
            )
        cases += 1
    return _passed("normal-form-idempotent", cases)


def _check_normal_form_order(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    cases = 0
    for _ in range(40):
        raw = [
            (rng.randint(-6, 6), rng.choice(ctx.monomials))
            for _ in range(rng.randint(0, 6))
        ]
        ref = model.normal_form(list(raw))
        for _ in range(3):
            rng.shuffle(raw)
            if model.normal_form(list(raw)) != ref:
                return CheckResult(
                    "normal-form-order-independence",
                    "fail",
                    witness=f"reordering changed the normal form of {raw}",
                )
        cases += 1
    return _passed("normal-form-order-independence", cases)


def _check_ring_unit(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    one = model.unit()
    for _, m, _ in ctx.basis:
        x = model.mono_elem(m)
        if model.mul(one, x) != x or model.mul(x, one) != x:
            return CheckResult("ring-unit-law", "fail", witness=f"unit law fails on {ctx.fmt(m)}")
    return _passed("ring-unit-law", len(ctx.basis))


def _check_ring_associativity(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    cases = 0
    # exhaustive over a small sub-window of monomials, then random elements
    small = [model.mono_elem(m) for _, m, _ in model.basis_window(min(ctx.window, 4))]
    for x in small:
        for y in small:
            for z in small:
                if model.mul(model.mul(x, y), z) != model.mul(x, model.mul(y, z)):
                    return CheckResult(
                        "ring-associativity", "fail", witness=f"({x})*({y})*({z})"
                    )
                cases += 1
    for _ in range(80):
        x, y, z = (ctx.random_element(rng, max_terms=2) for _ in range(3))
        if model.mul(model.mul(x, y), z) != model.mul(x, model.mul(y, z)):
            return CheckResult(
                "ring-associativity", "fail", witness=f"({x})*({y})*({z})"
            )
        cases += 1
    return _passed("ring-associativity", cases)


def _check_ring_distributivity(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    cases = 0
    for _ in range(80):
        x, y, z = (ctx.random_element(rng, max_terms=2) for _ in range(3))
        lhs = model.mul(x, model.add(y, z))
        rhs = model.add(model.mul(x, y), model.mul(x, z))
        if lhs != rhs:
            return CheckResult(
                "ring-distributivity", "fail", witness=f"({x})*(({y})+({z}))"
            )
        cases += 1
    return _passed("ring-distributivity", cases)


def _check_graded_commutativity(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    cases = 0
    for d1, m1, _ in ctx.basis:
        x = model.mono_elem(m1)
        for d2, m2, _ in ctx.basis:
            y = model.mono_elem(m2)
            sign = -1 if (d1 * d2) % 2 else 1
            if model.mul(x, y) != model.scale(sign, model.mul(y, x)):
                return CheckResult(
                    "graded-commutativity",
                    "fail",
                    witness=f"{ctx.fmt(m1)} * {ctx.fmt(m2)}",
                )
            cases += 1
    return _passed("graded-commutativity", cases)


def _check_mul_oracle(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    window = min(ctx.window, 6)
    oracle = DenseOracle(model, window)
    cases = 0
    for deg1, monos1 in sorted(oracle.basis.items()):
        for exps1 in monos1:
            x = model.mono_elem(Monomial(exps1))
            for deg2, monos2 in sorted(oracle.basis.items()):
                for exps2 in monos2:
                    got = model.mul(x, model.mono_elem(Monomial(exps2)))
                    want = oracle.multiply(exps1, exps2)
                    expected = {} if want is None else {Monomial(want[1]): want[0]}
                    if got.terms != expected:
                        return CheckResult(
                            "mul-oracle-agreement",
                            "fail",
                            witness=f"{model.format_monomial(Monomial(exps1))} * "
                            f"{model.format_monomial(Monomial(exps2))}: engine {got}, oracle {expected}",
                        )
                    cases += 1
    return _passed("mul-oracle-agreement", cases)


def _check_torsion_identity(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    if ctx.chi_zero:
        return _passed("torsion-identity", len(ctx.basis), _CHI_ZERO_TAG)
    for deg, m, _ in ctx.basis:
        if deg == 0:
            continue
        value = model.scale(model.euler, model.mul(model.c0, model.mono_elem(m)))
        if value:
            return CheckResult(
                "torsion-identity",
                "fail",
                detail=_INCONSISTENT_TAG,
                witness=f"chi*c0*{ctx.fmt(m)} = {value} != 0",
            )
    return _passed("torsion-identity", len(ctx.basis))


def _check_bracket_unit(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    if model.bracket_on_generators is None:
        return CheckResult("bracket-unit", "skip", "no bracket data")
    one = model.unit()
    for _, m, _ in ctx.basis:
        x = model.mono_elem(m)
        if model.bracket(one, x) or model.bracket(x, one):
            return CheckResult("bracket-unit", "fail", witness=f"bracket with 1 on {ctx.fmt(m)}")
    return _passed("bracket-unit", len(ctx.basis))


def _check_bracket_antisymmetry(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    if model.bracket_on_generators is None:
        return CheckResult("bracket-antisymmetry", "skip", "no bracket data")
    cases = 0
    for d1, m1, _ in ctx.basis:
        x = model.mono_elem(m1)
        for d2, m2, _ in ctx.basis:
            y = model.mono_elem(m2)
            sign = 1 if ((d1 + 1) * (d2 + 1)) % 2 else -1
            if model.bracket(x, y) != model.scale(sign, model.bracket(y, x)):
                return CheckResult(
                    "bracket-antisymmetry",
                    "fail",
                    witness=f"bracket({ctx.fmt(m1)}, {ctx.fmt(m2)})",
                )
            cases += 1
    return _passed("bracket-antisymmetry", cases)


def _check_bracket_torsion(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    if model.bracket_on_generators is None:
        return CheckResult("bracket-torsion", "skip", "no bracket data")
    if ctx.chi_zero:
        return _passed("bracket-torsion", len(ctx.basis), _CHI_ZERO_TAG)
    excluded = {-1} if model.simply_connected else {0, -1}
    cases = 0
    for deg, m, _ in ctx.basis:
        if deg in excluded:
            continue
        value = model.scale(model.euler, model.bracket(model.c0, model.mono_elem(m)))
        if value:
            return CheckResult(
                "bracket-torsion",
                "fail",
                witness=f"chi*bracket(c0, {ctx.fmt(m)}) = {value} != 0",
            )
        cases += 1
    return _passed("bracket-torsion", cases)


def _check_delta_squared(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    if model.delta_on_generators is None:
        return CheckResult("delta-squared", "skip", "no BV-operator data")
    for _, m, _ in ctx.basis:
        value = model.delta(model.delta(model.mono_elem(m)))
        if value:
            return CheckResult(
                "delta-squared",
                "fail",
                detail="BV data is inconsistent",
                witness=f"delta(delta({ctx.fmt(m)})) = {value} != 0",
            )
    return _passed("delta-squared", len(ctx.basis))


def _check_delta_bv_residual(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    if model.delta_on_generators is None:
        return CheckResult("delta-bv-residual", "skip", "no BV-operator data")
    cases = 0
    for _ in range(60):
        x = ctx.random_element(rng, max_terms=2)
        y = ctx.random_element(rng, max_terms=2)
        dx = model.degree_of(x)
        if not isinstance(dx, int):
            continue
        sign = -1 if dx % 2 else 1
        residual = model.delta(model.mul(x, y))
        residual = model.add(residual, model.scale(-1, model.mul(model.delta(x), y)))
        residual = model.add(residual, model.scale(-sign, model.mul(x, model.delta(y))))
        residual = model.add(residual, model.scale(-sign, model.bracket(x, y)))
        if residual:
            return CheckResult(
                "delta-bv-residual", "fail", witness=f"x={x}, y={y}: residual {residual}"
            )
        cases += 1
    return _passed("delta-bv-residual", cases)


def _check_coproduct_symmetry(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    tag = _CHI_ZERO_TAG if ctx.chi_zero else ""
    for _, m, _ in ctx.basis:
        value = psi(model, model.mono_elem(m))
        if twist(value) != value:
            return CheckResult(
                "coproduct-symmetry", "fail", witness=f"psi({ctx.fmt(m)}) = {value}"
            )
    return _passed("coproduct-symmetry", len(ctx.basis), tag)


def _check_coproduct_forms_agree(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    tag = _CHI_ZERO_TAG if ctx.chi_zero else ""
    for _, m, _ in ctx.basis:
        x = model.mono_elem(m)
        if psi(model, x) != psi_mirror(model, x):
            return CheckResult(
                "coproduct-forms-agree",
                "fail",
                detail=_INCONSISTENT_TAG,
                witness=f"psi({ctx.fmt(m)}): {psi(model, x)} vs {psi_mirror(model, x)}",
            )
    return _passed("coproduct-forms-agree", len(ctx.basis), tag)


def _integer_multiple_of(t, base):
    """k with t == k * base, or None."""
    if not base.terms:
        return 0 if not t.terms else None
    key = min(base.terms, key=lambda ms: tuple(m.exps for m in ms))
    c = base.terms[key]
    v = t.terms.get(key, 0)
    if v % c:
        return None
    k = v // c
    return k if t == tensor_scale(k, base) else None


def _check_coproduct_concentration(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    tag = _CHI_ZERO_TAG if ctx.chi_zero else ""
    c0c0 = tensor([model.c0, model.c0])
    for deg, m, _ in ctx.basis:
        value = psi(model, model.mono_elem(m))
        if deg != 0:
            if value:
                return CheckResult(
                    "coproduct-concentration",
                    "fail",
                    detail=_INCONSISTENT_TAG,
                    witness=f"psi({ctx.fmt(m)}) = {value} != 0 in degree {deg}",
                )
        elif _integer_multiple_of(value, c0c0) is None:
            return CheckResult(
                "coproduct-concentration",
                "fail",
                witness=f"psi({ctx.fmt(m)}) = {value} is not a multiple of c0 (x) c0",
            )
    return _passed("coproduct-concentration", len(ctx.basis), tag)


def _check_coproduct_frobenius(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    tag = _CHI_ZERO_TAG if ctx.chi_zero else ""
    cases = 0
    for _ in range(50):
        p = rng.randint(0, 4)
        factors = [model.mono_elem(rng.choice(ctx.monomials)) for _ in range(p)]
        values = [psi_split(model, factors, ell) for ell in range(p + 1)]
        for ell in range(1, p + 1):
            if values[ell] != values[0]:
                names = ", ".join(str(f) for f in factors)
                return CheckResult(
                    "coproduct-frobenius",
                    "fail",
                    detail=_INCONSISTENT_TAG,
                    witness=f"psi_split([{names}], {ell}) = {values[ell]} "
                    f"differs from split 0 = {values[0]}",
                )
        cases += 1
    return _passed("coproduct-frobenius", cases, tag)


def _check_coproduct_coassociativity(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    tag = _CHI_ZERO_TAG if ctx.chi_zero else ""
    for _, m, _ in ctx.basis:
        value = psi(model, model.mono_elem(m))
        if apply_psi(value, 1) != apply_psi(value, 2):
            return CheckResult(
                "coproduct-coassociativity", "fail", witness=f"on {ctx.fmt(m)}"
            )
    return _passed("coproduct-coassociativity", len(ctx.basis), tag)


def _check_coproduct_delta_factorwise(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    if model.delta_on_generators is None:
        return CheckResult("coproduct-delta-factorwise", "skip", "no BV-operator data")
    tag = _CHI_ZERO_TAG if ctx.chi_zero else ""
    for _, m, _ in ctx.basis:
        value = apply_delta_factorwise(psi(model, model.mono_elem(m)))
        if value:
            return CheckResult(
                "coproduct-delta-factorwise",
                "fail",
                witness=f"factorwise delta of psi({ctx.fmt(m)}) = {value}",
            )
    return _passed("coproduct-delta-factorwise", len(ctx.basis), tag)


def _check_coproduct_kills_geometric_brackets(ctx: _Ctx) -> CheckResult:
    model = ctx.model
    if model.bracket_on_generators is None:
        return CheckResult("coproduct-kills-geometric-brackets", "skip", "no bracket data")
    geometric = [g.name for g in model.generators if g.geometric]
    if not geometric:
        return CheckResult(
            "coproduct-kills-geometric-brackets", "skip", "no geometric generators"
        )
    tag = _CHI_ZERO_TAG if ctx.chi_zero else ""
    cases = 0
    for name in geometric:
        g = model.gen(name)
        for _, m, _ in ctx.basis:
            value = psi(model, model.bracket(g, model.mono_elem(m)))
            if value:
                return CheckResult(
                    "coproduct-kills-geometric-brackets",
                    "fail",
                    witness=f"psi(bracket({name}, {ctx.fmt(m)})) = {value}",
                )
            cases += 1
    return _passed("coproduct-kills-geometric-brackets", cases, tag)


def _sample_inputs(ctx: _Ctx, rng: random.Random, arity: int, count: int):
    for _ in range(count):
        yield tuple(rng.choice(ctx.monomials) for _ in range(arity))


def _check_surface_closed_vs_pants(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    cases = 0
    for g in range(3):
        for p in range(1, 4):
            for q in range(1, 4):
                s = Surface(g, p, q)
                for monos in _sample_inputs(ctx, rng, p, 12):
                    inputs = [model.mono_elem(m) for m in monos]
                    closed = string_operation(model, s, inputs)
                    pants = string_operation_via_pants(model, s, inputs)
                    if closed != pants:
                        names = ", ".join(ctx.fmt(m) for m in monos)
                        return CheckResult(
                            "surface-closed-vs-pants",
                            "fail",
                            witness=f"{s} on [{names}]: closed {closed}, pants {pants}",
                        )
                    cases += 1
    return _passed("surface-closed-vs-pants", cases)


def _random_surface(rng: random.Random) -> Surface:
    return Surface(rng.randint(0, 2), rng.randint(1, 3), rng.randint(1, 3))


def _check_surface_functoriality(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    cases = 0
    for _ in range(30):
        s1 = _random_surface(rng)
        s2 = Surface(rng.randint(0, 2), s1.outputs, rng.randint(1, 3))
        glued = sew(s1, s2)
        for monos in _sample_inputs(ctx, rng, s1.inputs, 5):
            inputs = [model.mono_elem(m) for m in monos]
            composed = string_operation(model, s2, string_operation(model, s1, inputs))
            direct = string_operation(model, glued, inputs)
            if composed != direct:
                names = ", ".join(ctx.fmt(m) for m in monos)
                return CheckResult(
                    "surface-functoriality",
                    "fail",
                    witness=f"{s1} then {s2} vs {glued} on [{names}]",
                )
            cases += 1
    return _passed("surface-functoriality", cases)


def _check_surface_degree_shift(ctx: _Ctx) -> CheckResult:
    model, rng = ctx.model, ctx.rng()
    d = model.dim
    cases = 0
    for g in range(3):
        for p in range(1, 4):
            for q in range(1, 4):
                s = Surface(g, p, q)
                for monos in _sample_inputs(ctx, rng, p, 6):
                    in_h = sum(model.monomial_degree(m) + d for m in monos)
                    out = string_operation(model, s, [model.mono_elem(m) for m in monos])
                    for ms in out.terms:
                        out_h = sum(model.monomial_degree(m) + d for m in ms)
                        if out_h != in_h + s.euler_char * d:
                            return CheckResult(
                                "surface-degree-shift",
                                "fail",
                                witness=f"{s}: output degree {out_h}, expected "
                                f"{in_h + s.euler_char * d}",
                            )
                    cases += 1
    return _passed("surface-degree-shift", cases)


def _check_surface_certificate_sew(ctx: _Ctx) -> CheckResult:
    rng = ctx.rng()
    cases = 0
    for _ in range(60):
        s1 = _random_surface(rng)
        s2 = Surface(rng.randint(0, 2), s1.outputs, rng.randint(1, 3))
        if s1.genus >= 1 or s2.genus >= 1:
            if vanishing_certificate(sew(s1, s2)) is not VanishingReason.GENUS_AT_LEAST_ONE:
                return CheckResult(
                    "surface-certificate-sew", "fail", witness=f"{s1} sewn to {s2}"
                )
        cases += 1
    return _passed("surface-certificate-sew", cases)


def _check_model_round_trip(ctx: _Ctx) -> CheckResult:
    text = print_model(ctx.model)
    doc = parse_model(text)
    if print_model(doc.model) != text:
        return CheckResult("model-round-trip", "fail", witness="printout changed after reparse")
    return _passed("model-round-trip", 1)


_LAWS: list[tuple[str, Callable[[_Ctx], CheckResult]]] = [
    ("normal-form-idempotent", _check_normal_form_idempotent),
    ("normal-form-order-independence", _check_normal_form_order),
    ("ring-unit-law", _check_ring_unit),
    ("ring-associativity", _check_ring_associativity),
    ("ring-distributivity", _check_ring_distributivity),
    ("graded-commutativity", _check_graded_commutativity),
    ("mul-oracle-agreement", _check_mul_oracle),
    ("torsion-identity", _check_torsion_identity),
    ("bracket-unit", _check_bracket_unit),
    ("bracket-antisymmetry", _check_bracket_antisymmetry),
    ("bracket-torsion", _check_bracket_torsion),
    ("delta-squared", _check_delta_squared),
    ("delta-bv-residual", _check_delta_bv_residual),
    ("coproduct-symmetry", _check_coproduct_symmetry),
    ("coproduct-forms-agree", _check_coproduct_forms_agree),
    ("coproduct-concentration", _check_coproduct_concentration),
    ("coproduct-frobenius", _check_coproduct_frobenius),
    ("coproduct-coassociativity", _check_coproduct_coassociativity),
    ("coproduct-delta-factorwise", _check_coproduct_delta_factorwise),
    ("coproduct-kills-geometric-brackets", _check_coproduct_kills_geometric_brackets),
    ("surface-closed-vs-pants", _check_surface_closed_vs_pants),
    ("surface-functoriality", _check_surface_functoriality),
    ("surface-degree-shift", _check_surface_degree_shift),
    ("surface-certificate-sew", _check_surface_certificate_sew),
    ("model-round-trip", _check_model_round_trip),
]


def run_checks(doc, max_abs_degree: int = 8, seed: int = 0) -> CheckReport:
    """Run every law over the degree window; deterministic for fixed inputs."""
    if isinstance(doc, ModelDoc):
        model, name = doc.model, doc.provenance
    else:
        model, name = doc, "<model>"
        doc = None
    report = CheckReport(model_name=name, window=max_abs_degree, seed=seed)
    ctx = _Ctx(model, doc, max_abs_degree, seed)
    for law, fn in _LAWS:
        result = fn(ctx)
        assert result.law == law
        report.results.append(result)
    return report
