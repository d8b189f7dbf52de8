"""Finitely presented graded-commutative algebra engine over the integers.

A :class:`LoopModel` presents the loop-homology ring of a closed oriented
d-manifold: named generators with integer degrees, monomial torsion
relations ``k*m = 0``, and the distinguished data (dimension, Euler
characteristic, constant-loop class, optional BV operator and bracket
values on generators) consumed by the coproduct and surface operations
built on top.

Degrees are loop-algebra degrees throughout: the homological grading is
shifted down by d, so the product has degree 0, the unit sits in degree 0
and the constant-loop class in degree -d.  ``LoopModel.h_degree`` converts
back to plain homological degree.

Normal forms: the *effective modulus* of a monomial is the gcd of the
coefficients k over all relations ``k*m' = 0`` whose monomial divides it
(gcd over the empty set is 0, a free coefficient).  Coefficients are
stored reduced into ``{0, ..., modulus-1}`` when the modulus is positive,
so modulus 1 kills a monomial outright.  Odd-degree generators square to
zero; the implicit relations are appended at validation time.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

#: ``degree_of`` result for the zero element.
ZERO = "zero"
#: ``degree_of`` result for an element with terms in several degrees.
INHOMOGENEOUS = "inhomogeneous"

#: Identifiers reserved by the expression language.
RESERVED_NAMES = frozenset({"psi", "delta", "bracket", "mu"})

_NAME_RE = re.compile(r"[A-Za-z_]\w*\Z")


class ModelError(ValueError):
    """A presentation, or an operation on one, violates a constraint.

    ``problems`` is a list of ``(where, message)`` pairs; ``where`` is a
    tag such as ``("generator", "a")``, ``("relation", 2)``, ``("c0",)``
    or ``("model",)`` so that file-based frontends can attach locations.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [(("model",), problems)]
        self.problems = list(problems)
        super().__init__("; ".join(msg for _, msg in self.problems))


@dataclass(frozen=True, slots=True)
class GeneratorSpec:
    """A named generator with its loop-algebra degree.

    ``geometric`` flags classes coming from the homology of the manifold
    itself (via the constant-loop map); it is consulted only by the
    bracket-related consistency checks.
    """

    name: str
    degree: int
    geometric: bool = False

    @property
    def parity(self) -> int:
        return self.degree % 2

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


@dataclass(frozen=True, slots=True)
class Monomial:
    """Exponent vector over a model's generators, in declaration order."""

    exps: tuple[int, ...]

    def is_unit(self) -> bool:
        return not any(self.exps)

    def divides(self, other: "Monomial") -> bool:
        return len(self.exps) == len(other.exps) and all(
            a <= b for a, b in zip(self.exps, other.exps)
        )

    def total_exponent(self) -> int:
        return sum(self.exps)

    def merged(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))


@dataclass(frozen=True, slots=True)
class Relation:
    """The relation ``coeff * monomial = 0`` with ``coeff >= 1``."""

    coeff: int
    monomial: Monomial


MonomialLike = Union[Monomial, Mapping[str, int], Sequence[int]]
RawTerms = Union["Element", int, Mapping[str, int], Iterable[tuple[int, MonomialLike]]]


class Element:
    """An integer combination of normal-form monomials of one model.

    Instances are immutable and canonical: no zero coefficients, every
    coefficient reduced into the canonical range for its monomial's
    effective modulus.  Two elements are equal iff they belong to the same
    model and have identical term maps.
    """

    __slots__ = ("model", "terms")
    __hash__ = None

    def __init__(self, model: "LoopModel", terms: dict[Monomial, int]):
        self.model = model
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self):
        return self.model.degree_of(self)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.model is other.model and self.terms == other.terms
        if isinstance(other, int):
            return self == self.model.scale(other, self.model.unit())
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, int):
            other = self.model.scale(other, self.model.unit())
        if not isinstance(other, Element):
            return NotImplemented
        return self.model.add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.model.scale(-1, self)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.model.scale(other, self.model.unit())
        if not isinstance(other, Element):
            return NotImplemented
        return self.model.add(self, self.model.scale(-1, other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.model.scale(other, self)
        if isinstance(other, Element):
            return self.model.mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.model.scale(other, self)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = self.model.unit()
        for _ in range(k):
            out = self.model.mul(out, self)
        return out

    def __str__(self) -> str:
        return self.model.format_element(self)

    def __repr__(self) -> str:
        return f"Element({self})"


class LoopModel:
    """Presentation of a loop-homology ring with its string-topology data.

    Build one with the raw inputs and run :func:`validate_model` (or use
    :meth:`create`); every operation requires a validated model.  Models
    are immutable once validated and safe for concurrent read-only use.
    """

    def __init__(
        self,
        dim: int,
        euler: int,
        generators: Sequence,
        relations: Sequence[tuple[int, MonomialLike]] = (),
        c0: RawTerms | None = None,
        delta: Mapping[str, RawTerms] | None = None,
        bracket: Mapping[tuple[str, str], RawTerms] | None = None,
        simply_connected: bool = False,
    ):
        self.dim = dim
        self.euler = euler
        self.simply_connected = bool(simply_connected)
        self._generators_input = tuple(generators)
        self._relations_input = tuple(relations)
        self._c0_input = c0
        self._delta_input = dict(delta) if delta is not None else None
        self._bracket_input = dict(bracket) if bracket is not None else None

        self.generators: tuple[GeneratorSpec, ...] = ()
        self.relations: tuple[Relation, ...] = ()
        self.c0: Element | None = None
        self.delta_on_generators: dict[str, Element] | None = None
        self.bracket_on_generators: dict[tuple[str, str], Element] | None = None

        self._structure_ready = False
        self._validated = False
        self._index: dict[str, int] = {}
        self._degrees: tuple[int, ...] = ()
        self._odd: tuple[bool, ...] = ()
        self._all_relations: tuple[Relation, ...] = ()
        self._caps: tuple[int | None, ...] = ()
        self._modulus_cache: dict[Monomial, int] = {}
        self._bracket_cache: dict[tuple[Monomial, Monomial], Element] = {}
        self._delta_cache: dict[Monomial, Element] = {}

    @classmethod
    def create(cls, **kwargs) -> "LoopModel":
        return validate_model(cls(**kwargs))

    @property
    def validated(self) -> bool:
        return self._validated

    def __repr__(self) -> str:
        names = ",".join(g.name for g in self.generators) or "?"
        return f"<LoopModel dim={self.dim} euler={self.euler} generators=[{names}]>"

    # -- validation ------------------------------------------------------

    def _prepare_structure(self, problems: list) -> bool:
        """Phase 1: generators, relations and nilpotence caps."""
        if self._structure_ready:
            return True
        if not isinstance(self.dim, int) or self.dim < 1:
            problems.append((("model",), f"dim must be a positive integer, got {self.dim!r}"))
        if not isinstance(self.euler, int):
            problems.append((("model",), f"euler must be an integer, got {self.euler!r}"))
        elif isinstance(self.dim, int) and self.dim % 2 == 1 and self.euler != 0:
            problems.append(
                (("model",), f"odd dimension {self.dim} forces euler = 0, got {self.euler}")
            )

        gens: list[GeneratorSpec] = []
        for item in self._generators_input:
            if isinstance(item, GeneratorSpec):
                spec = item
            else:
                try:
                    spec = GeneratorSpec(*item)
                except TypeError:
                    problems.append((("generator", repr(item)), f"bad generator spec {item!r}"))
                    continue
            gens.append(spec)
        seen: set[str] = set()
        for spec in gens:
            if not isinstance(spec.name, str) or not _NAME_RE.match(spec.name):
                problems.append(
                    (("generator", str(spec.name)), f"generator name {spec.name!r} is not an identifier")
                )
                continue
            if spec.name in RESERVED_NAMES:
                problems.append(
                    (("generator", spec.name), f"generator name '{spec.name}' is reserved")
                )
            if spec.name in seen:
                problems.append(
                    (("generator", spec.name), f"duplicate generator '{spec.name}'")
                )
            seen.add(spec.name)
            if not isinstance(spec.degree, int):
                problems.append(
                    (("generator", spec.name), f"degree of '{spec.name}' must be an integer")
                )
        if problems:
            return False

        self.generators = tuple(gens)
        self._index = {g.name: i for i, g in enumerate(gens)}
        self._degrees = tuple(g.degree for g in gens)
        self._odd = tuple(g.is_odd for g in gens)

        rels: list[Relation] = []
        for pos, item in enumerate(self._relations_input, 1):
            try:
                coeff, raw = item
            except (TypeError, ValueError):
                problems.append((("relation", pos), f"relation must be (coefficient, monomial), got {item!r}"))
                continue
            if not isinstance(coeff, int) or coeff < 1:
                problems.append(
                    (("relation", pos), f"relation coefficient must be a positive integer, got {coeff!r}")
                )
                continue
            try:
                mono = self._coerce_monomial(raw)
            except ModelError as exc:
                problems.append((("relation", pos), str(exc)))
                continue
            rels.append(Relation(coeff, mono))
        if problems:
            return False
        self.relations = tuple(rels)

        n = len(gens)
        implicit = [
            Relation(1, Monomial(tuple(2 if j == i else 0 for j in range(n))))
            for i in range(n)
            if self._odd[i]
        ]
        self._all_relations = self.relations + tuple(implicit)

        caps: list[int | None] = []
        for i, g in enumerate(gens):
            # smallest e with g^e = 0, from relations on pure powers of g
            powers = sorted(
                (rel.monomial.exps[i], rel.coeff)
                for rel in self._all_relations
                if all(e == 0 for j, e in enumerate(rel.monomial.exps) if j != i)
            )
            cap: int | None = None
            running = 0
            for threshold, k in powers:
                running = gcd(running, k)
                if running == 1:
                    cap = max(threshold - 1, 0)
                    break
            if cap is None and g.degree <= 0:
                problems.append(
                    (
                        ("generator", g.name),
                        f"generator '{g.name}' of degree {g.degree} is not nilpotent; "
                        "graded pieces would be infinite-dimensional",
                    )
                )
            caps.append(cap)
        self._caps = tuple(caps)
        if problems:
            return False
        self._structure_ready = True
        return True

    def _require_ready(self):
        if not self._structure_ready:
            raise ModelError("model not validated; call validate_model first")

    def _check_same(self, *xs: Element):
        for x in xs:
            if not isinstance(x, Element) or x.model is not self:
                raise ModelError("elements belong to different models")

    # -- monomial and element construction --------------------------------

    def _coerce_monomial(self, raw: MonomialLike) -> Monomial:
        n = len(self.generators)
        if isinstance(raw, Monomial):
            if len(raw.exps) != n:
                raise ModelError(f"monomial has {len(raw.exps)} exponents, expected {n}")
            exps = raw.exps
        elif isinstance(raw, Mapping):
            vec = [0] * n
            for name, e in raw.items():
                if name not in self._index:
                    raise ModelError(f"unknown generator '{name}'")
                vec[self._index[name]] += e
            exps = tuple(vec)
        else:
            exps = tuple(raw)
            if len(exps) != n:
                raise ModelError(f"monomial has {len(exps)} exponents, expected {n}")
        if any(not isinstance(e, int) or e < 0 for e in exps):
            raise ModelError(f"exponents must be non-negative integers, got {exps}")
        return Monomial(exps)

    def monomial(self, raw: MonomialLike) -> Monomial:
        self._require_ready()
        return self._coerce_monomial(raw)

    def _gen_monomial(self, i: int) -> Monomial:
        return Monomial(tuple(1 if j == i else 0 for j in range(len(self.generators))))

    def mono_elem(self, raw: MonomialLike) -> Element:
        """The element ``1 * monomial`` in normal form."""
        m = self.monomial(raw)
        return self._from_raw({m: 1})

    def gen(self, name: str) -> Element:
        self._require_ready()
        if name not in self._index:
            raise ModelError(f"unknown generator '{name}'")
        return self._from_raw({self._gen_monomial(self._index[name]): 1})

    def unit(self) -> Element:
        self._require_ready()
        return self._from_raw({Monomial((0,) * len(self.generators)): 1})

    def zero(self) -> Element:
        self._require_ready()
        return Element(self, {})

    def _coerce_element_input(self, raw: RawTerms) -> Element:
        if isinstance(raw, Element):
            self._check_same(raw)
            return raw
        if isinstance(raw, int):
            return self.scale(raw, self.unit())
        if isinstance(raw, Mapping):
            return self.normal_form([(1, raw)])
        return self.normal_form(raw)

    # -- normal forms ------------------------------------------------------

    def modulus(self, m: Monomial) -> int:
        """Effective modulus of a monomial (0 = free, 1 = dead)."""
        self._require_ready()
        cached = self._modulus_cache.get(m)
        if cached is None:
            cached = 0
            for rel in self._all_relations:
                if rel.monomial.divides(m):
                    cached = gcd(cached, rel.coeff)
                    if cached == 1:
                        break
            self._modulus_cache[m] = cached
        return cached

    def _from_raw(self, acc: dict[Monomial, int]) -> Element:
        terms: dict[Monomial, int] = {}
        for m, c in acc.items():
            mod = self.modulus(m)
            if mod:
                c %= mod
            if c:
                terms[m] = c
        return Element(self, terms)

    def normal_form(self, raw: RawTerms) -> Element:
        """Canonical element of a formal integer combination of monomials."""
        self._require_ready()
        if isinstance(raw, Element):
            self._check_same(raw)
            return self._from_raw(dict(raw.terms))
        acc: dict[Monomial, int] = {}
        items = raw.items() if isinstance(raw, Mapping) else raw
        for entry in items:
            if isinstance(raw, Mapping):
                mono_raw, coeff = entry
            else:
                coeff, mono_raw = entry
            if not isinstance(coeff, int):
                raise ModelError(f"coefficient must be an integer, got {coeff!r}")
            m = self._coerce_monomial(mono_raw)
            acc[m] = acc.get(m, 0) + coeff
        return self._from_raw(acc)

    # -- module and ring operations ---------------------------------------

    def add(self, x: Element, y: Element) -> Element:
        self._check_same(x, y)
        acc = dict(x.terms)
        for m, c in y.terms.items():
            acc[m] = acc.get(m, 0) + c
        return self._from_raw(acc)

    def scale(self, k: int, x: Element) -> Element:
        self._check_same(x)
        if not isinstance(k, int):
            raise ModelError(f"scalar must be an integer, got {k!r}")
        return self._from_raw({m: k * c for m, c in x.terms.items()})

    def _mono_mul(self, m1: Monomial, m2: Monomial) -> tuple[int, Monomial] | None:
        """Product of monomials with its Koszul sign; None if an odd
        generator squares."""
        merged = m1.merged(m2)
        for i, odd in enumerate(self._odd):
            if odd and merged.exps[i] > 1:
                return None
        odd1 = [i for i, e in enumerate(m1.exps) if e and self._odd[i]]
        odd2 = [i for i, e in enumerate(m2.exps) if e and self._odd[i]]
        inversions = 0
        for j in odd2:
            inversions += sum(1 for i in odd1 if i > j)
        return (-1 if inversions % 2 else 1), merged

    def mul(self, x: Element, y: Element) -> Element:
        """Loop product: bilinear extension of signed monomial concatenation."""
        self._check_same(x, y)
        acc: dict[Monomial, int] = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                hit = self._mono_mul(m1, m2)
                if hit is None:
                    continue
                sign, m = hit
                acc[m] = acc.get(m, 0) + sign * c1 * c2
        return self._from_raw(acc)

    # -- grading ------------------------------------------------------------

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m.exps, self._degrees))

    def degree_of(self, x: Element):
        """Loop-algebra degree of ``x``; ``ZERO`` or ``INHOMOGENEOUS`` when
        no single degree applies."""
        self._check_same(x)
        if not x.terms:
            return ZERO
        degrees = {self.monomial_degree(m) for m in x.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return INHOMOGENEOUS

    def h_degree(self, degree: int) -> int:
        """Convert a loop-algebra degree to a homological degree."""
        if not isinstance(degree, int):
            raise TypeError(f"expected an integer degree, got {degree!r}")
        return degree + self.dim

    # -- basis enumeration ---------------------------------------------------

    def enumerate_basis(self, degree: int) -> list[tuple[Monomial, int]]:
        """All surviving monomials of the given degree with their moduli."""
        self._require_ready()
        n = len(self.generators)
        nonpos = [i for i in range(n) if self._degrees[i] <= 0]
        pos = [i for i in range(n) if self._degrees[i] > 0]
        out: list[tuple[Monomial, int]] = []
        ranges = [range(self._caps[i] + 1) for i in nonpos]
        for combo in itertools.product(*ranges):
            exps = [0] * n
            part = 0
            for i, e in zip(nonpos, combo):
                exps[i] = e
                part += e * self._degrees[i]
            need = degree - part
            if need < 0:
                continue
            for assignment in self._fill_positive(pos, 0, need, []):
                vec = list(exps)
                for i, e in zip(pos, assignment):
                    vec[i] = e
                m = Monomial(tuple(vec))
                mod = self.modulus(m)
                if mod != 1:
                    out.append((m, mod))
        out.sort(key=lambda pair: pair[0].exps)
        return out

    def _fill_positive(self, pos, idx, remaining, acc):
        if idx == len(pos):
            if remaining == 0:
                yield tuple(acc)
            return
        i = pos[idx]
        d = self._degrees[i]
        emax = remaining // d
        cap = self._caps[i]
        if cap is not None:
            emax = min(emax, cap)
        for e in range(emax + 1):
            acc.append(e)
            yield from self._fill_positive(pos, idx + 1, remaining - e * d, acc)
            acc.pop()

    def basis_window(self, max_abs_degree: int) -> list[tuple[int, Monomial, int]]:
        """All basis monomials with ``|degree| <= max_abs_degree``."""
        out = []
        for deg in range(-max_abs_degree, max_abs_degree + 1):
            for mono, mod in self.enumerate_basis(deg):
                out.append((deg, mono, mod))
        return out

    # -- bracket and BV operator ---------------------------------------------

    def _gen_bracket(self, i: int, j: int) -> Element:
        data = self.bracket_on_generators
        key = (self.generators[i].name, self.generators[j].name)
        if key in data:
            return data[key]
        rkey = (key[1], key[0])
        if rkey in data:
            # {x, y} = -(-1)^((deg x + 1)(deg y + 1)) {y, x}
            e = ((self._degrees[i] + 1) * (self._degrees[j] + 1)) % 2
            return self.scale(1 if e else -1, data[rkey])
        return self.zero()

    def _peel(self, m: Monomial) -> tuple[int, Monomial]:
        i = next(idx for idx, e in enumerate(m.exps) if e)
        rest = list(m.exps)
        rest[i] -= 1
        return i, Monomial(tuple(rest))

    def _mono_bracket(self, m: Monomial, mp: Monomial) -> Element:
        if m.is_unit() or mp.is_unit():
            return self.zero()
        key = (m, mp)
        cached = self._bracket_cache.get(key)
        if cached is not None:
            return cached
        if m.total_exponent() == 1:
            g = next(i for i, e in enumerate(m.exps) if e)
            if mp.total_exponent() == 1:
                h = next(i for i, e in enumerate(mp.exps) if e)
                out = self._gen_bracket(g, h)
            else:
                # {g, h*rest} = {g,h}*rest + (-1)^((deg g + 1) deg h) h*{g, rest}
                h, rest = self._peel(mp)
                t1 = self.mul(self._gen_bracket(g, h), self.mono_elem(rest))
                sgn = -1 if ((self._degrees[g] + 1) * self._degrees[h]) % 2 else 1
                t2 = self.mul(
                    self.mono_elem(self._gen_monomial(h)),
                    self._mono_bracket(self._gen_monomial(g), rest),
                )
                out = self.add(t1, self.scale(sgn, t2))
        else:
            # {g*rest, y} = g*{rest, y} + (-1)^(deg rest (deg y + 1)) {g,y}*rest
            g, rest = self._peel(m)
            t1 = self.mul(
                self.mono_elem(self._gen_monomial(g)), self._mono_bracket(rest, mp)
            )
            sgn = (
                -1
                if (self.monomial_degree(rest) * (self.monomial_degree(mp) + 1)) % 2
                else 1
            )
            t2 = self.mul(
                self._mono_bracket(self._gen_monomial(g), mp), self.mono_elem(rest)
            )
            out = self.add(t1, self.scale(sgn, t2))
        self._bracket_cache[key] = out
        return out

    def bracket(self, x: Element, y: Element) -> Element:
        """Loop bracket, extended from generator pairs by the graded
        Leibniz rule in each slot; raises when the model carries no
        bracket data."""
        self._check_same(x, y)
        if self.bracket_on_generators is None:
            raise ModelError("model carries no bracket data")
        out = self.zero()
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                out = self.add(out, self.scale(c1 * c2, self._mono_bracket(m1, m2)))
        return out

    def _mono_delta(self, m: Monomial) -> Element:
        if m.is_unit():
            return self.zero()
        cached = self._delta_cache.get(m)
        if cached is not None:
            return cached
        # D(g*rest) = D(g)*rest + (-1)^deg g (g*D(rest) + {g, rest})
        g, rest = self._peel(m)
        name = self.generators[g].name
        dg = self.delta_on_generators.get(name, self.zero())
        t1 = self.mul(dg, self.mono_elem(rest))
        inner = self.add(
            self.mul(self.mono_elem(self._gen_monomial(g)), self._mono_delta(rest)),
            self._mono_bracket(self._gen_monomial(g), rest),
        )
        sgn = -1 if self._degrees[g] % 2 else 1
        out = self.add(t1, self.scale(sgn, inner))
        self._delta_cache[m] = out
        return out

    def delta(self, x: Element) -> Element:
        """BV operator: linear, degree +1, defined on monomials through the
        generator values and the bracket; raises when the data is absent."""
        self._check_same(x)
        if self.delta_on_generators is None or self.bracket_on_generators is None:
            raise ModelError("model carries no BV-operator data")
        out = self.zero()
        for m, c in x.terms.items():
            out = self.add(out, self.scale(c, self._mono_delta(m)))
        return out

    # -- printing --------------------------------------------------------------

    def format_monomial(self, m: Monomial) -> str:
        if m.is_unit():
            return "1"
        parts = []
        for g, e in zip(self.generators, m.exps):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts)

    def _format_term(self, c_abs: int, m: Monomial) -> str:
        if m.is_unit():
            return str(c_abs)
        body = self.format_monomial(m)
        return body if c_abs == 1 else f"{c_abs}*{body}"

    def format_element(self, x: Element) -> str:
        if not x.terms:
            return "0"
        bits = []
        for m in sorted(x.terms, key=lambda m: m.exps):
            c = x.terms[m]
            bits.append(("-" if c < 0 else "+", self._format_term(abs(c), m)))
        sign, body = bits[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in bits[1:]:
            out += f" {sign} {body}"
        return out


def validate_model(model: LoopModel) -> LoopModel:
    """Check all presentation invariants and attach derived data.

    Returns the validated model; raises :class:`ModelError` listing every
    problem found.  Idempotent.
    """
    if model._validated:
        return model
    problems: list = []
    if not model._prepare_structure(problems):
        raise ModelError(problems)

    if model._c0_input is None:
        problems.append((("c0",), "c0 required"))
    else:
        try:
            c0 = model._coerce_element_input(model._c0_input)
            deg = model.degree_of(c0)
            if deg != -model.dim:
                problems.append(
                    (
                        ("c0",),
                        f"constant-loop class must be homogeneous of degree {-model.dim}, got {deg}",
                    )
                )
            else:
                model.c0 = c0
        except ModelError as exc:
            problems.append((("c0",), str(exc)))

    if model._bracket_input is not None:
        table: dict[tuple[str, str], Element] = {}
        for key, raw in model._bracket_input.items():
            try:
                g1, g2 = key
            except (TypeError, ValueError):
                problems.append((("bracket", str(key)), f"bad bracket key {key!r}"))
                continue
            bad = False
            for name in (g1, g2):
                if name not in model._index:
                    problems.append((("bracket", g1, g2), f"unknown generator '{name}'"))
                    bad = True
            if bad:
                continue
            try:
                value = model._coerce_element_input(raw)
            except ModelError as exc:
                problems.append((("bracket", g1, g2), str(exc)))
                continue
            want = model._degrees[model._index[g1]] + model._degrees[model._index[g2]] + 1
            deg = model.degree_of(value)
            if value and deg != want:
                problems.append(
                    (
                        ("bracket", g1, g2),
                        f"bracket [{g1},{g2}] must be homogeneous of degree {want}, got {deg}",
                    )
                )
                continue
            table[(g1, g2)] = value
        for (g1, g2), val in sorted(table.items()):
            if g1 == g2:
                d = model._degrees[model._index[g1]]
                if d % 2 == 1 and model.scale(2, val):
                    problems.append(
                        (
                            ("bracket", g1, g2),
                            f"self-bracket of odd generator '{g1}' must be 2-torsion",
                        )
                    )
            elif (g2, g1) in table:
                e = (
                    (model._degrees[model._index[g1]] + 1)
                    * (model._degrees[model._index[g2]] + 1)
                ) % 2
                expected = model.scale(1 if e else -1, table[(g2, g1)])
                if val != expected:
                    problems.append(
                        (
                            ("bracket", g1, g2),
                            f"bracket [{g1},{g2}] conflicts with bracket [{g2},{g1}] under antisymmetry",
                        )
                    )
        model.bracket_on_generators = table

    if model._delta_input is not None:
        if model._bracket_input is None:
            problems.append((("delta",), "delta data requires bracket data"))
        else:
            dtable: dict[str, Element] = {}
            for name, raw in model._delta_input.items():
                if name not in model._index:
                    problems.append((("delta", name), f"unknown generator '{name}'"))
                    continue
                try:
                    value = model._coerce_element_input(raw)
                except ModelError as exc:
                    problems.append((("delta", name), str(exc)))
                    continue
                want = model._degrees[model._index[name]] + 1
                deg = model.degree_of(value)
                if value and deg != want:
                    problems.append(
                        (
                            ("delta", name),
                            f"delta {name} must be homogeneous of degree {want}, got {deg}",
                        )
                    )
                    continue
                dtable[name] = value
            model.delta_on_generators = dtable
            if model.c0 is not None and not problems:
                dc0 = model.delta(model.c0)
                if dc0:
                    problems.append(
                        (("delta",), f"delta of the constant-loop class must vanish, got {dc0}")
                    )

    if problems:
        model.c0 = None
        model.delta_on_generators = None
        model.bracket_on_generators = None
        raise ModelError(problems)
    model._validated = True
    return model
