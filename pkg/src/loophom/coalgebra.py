"""Tensor powers of a model and the loop coproduct.

A :class:`TensorElement` is an integer combination of pure q-fold tensors
of basis monomials.  The coefficient of a pure tensor is canonical modulo
the gcd of the factors' effective moduli (the tensor product of cyclic
modules), which is what makes identities like the split-independence of
the coproduct hold on the nose for torsion classes.

Factorwise operators (``apply_psi``, ``apply_delta_factorwise``) skip the
Koszul prefactor a degree-d operator would normally pick up when sliding
past earlier factors: the prefactor matters only for odd d, where the
Euler characteristic vanishes and the coproduct is identically zero.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .algebra import Element, LoopModel, ModelError, Monomial


class TensorElement:
    """Integer combination of pure q-fold tensors over one model."""

    __slots__ = ("model", "arity", "terms")
    __hash__ = None

    def __init__(self, model: LoopModel, arity: int, terms: dict[tuple[Monomial, ...], int]):
        self.model = model
        self.arity = arity
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return (
                self.model is other.model
                and self.arity == other.arity
                and self.terms == other.terms
            )
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return tensor_add(self, other)

    def __neg__(self):
        return tensor_scale(-1, self)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return tensor_add(self, tensor_scale(-1, other))

    def __mul__(self, other):
        if isinstance(other, int):
            return tensor_scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def as_element(self) -> Element:
        """Convert an arity-1 tensor back to a plain element."""
        if self.arity != 1:
            raise ValueError(f"cannot convert arity-{self.arity} tensor to an element")
        return self.model.normal_form([(c, ms[0]) for ms, c in self.terms.items()])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        model = self.model
        bits = []
        for ms in sorted(self.terms, key=lambda ms: tuple(m.exps for m in ms)):
            c = self.terms[ms]
            body = "(" + " (x) ".join(model.format_monomial(m) for m in ms) + ")"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            bits.append(("-" if c < 0 else "+", body))
        sign, body = bits[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in bits[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"TensorElement({self})"


def tensor_zero(model: LoopModel, arity: int) -> TensorElement:
    if arity < 1:
        raise ValueError("tensor arity must be at least 1")
    return TensorElement(model, arity, {})


def _tuple_modulus(model: LoopModel, ms: tuple[Monomial, ...]) -> int:
    mod = 0
    for m in ms:
        mod = gcd(mod, model.modulus(m))
    return mod


def _from_raw(model: LoopModel, arity: int, acc: dict[tuple[Monomial, ...], int]) -> TensorElement:
    terms: dict[tuple[Monomial, ...], int] = {}
    for ms, c in acc.items():
        mod = _tuple_modulus(model, ms)
        if mod:
            c %= mod
        if c:
            terms[ms] = c
    return TensorElement(model, arity, terms)


def tensor(factors: Sequence[Element]) -> TensorElement:
    """Pure tensor of elements, expanded multilinearly into monomial terms."""
    if not factors:
        raise ValueError("tensor needs at least one factor")
    model = factors[0].model
    for f in factors:
        if not isinstance(f, Element) or f.model is not model:
            raise ModelError("tensor factors belong to different models")
    acc: dict[tuple[Monomial, ...], int] = {(): 1}  # type: ignore[dict-item]
    for f in factors:
        nxt: dict[tuple[Monomial, ...], int] = {}
        for ms, c in acc.items():
            for m, cf in f.terms.items():
                key = ms + (m,)
                nxt[key] = nxt.get(key, 0) + c * cf
        acc = nxt
        if not acc:
            break
    return _from_raw(model, len(factors), acc)


def tensor_add(t1: TensorElement, t2: TensorElement) -> TensorElement:
    if t1.model is not t2.model:
        raise ModelError("tensors belong to different models")
    if t1.arity != t2.arity:
        raise ValueError(f"arity mismatch: {t1.arity} vs {t2.arity}")
    acc = dict(t1.terms)
    for ms, c in t2.terms.items():
        acc[ms] = acc.get(ms, 0) + c
    return _from_raw(t1.model, t1.arity, acc)


def tensor_scale(k: int, t: TensorElement) -> TensorElement:
    if not isinstance(k, int):
        raise ValueError(f"scalar must be an integer, got {k!r}")
    return _from_raw(t.model, t.arity, {ms: k * c for ms, c in t.terms.items()})


def twist(t: TensorElement) -> TensorElement:
    """Switch the two factors of an arity-2 tensor with the Koszul sign."""
    if t.arity != 2:
        raise ValueError(f"twist needs an arity-2 tensor, got arity {t.arity}")
    model = t.model
    acc: dict[tuple[Monomial, ...], int] = {}
    for (m1, m2), c in t.terms.items():
        sign = -1 if (model.monomial_degree(m1) * model.monomial_degree(m2)) % 2 else 1
        key = (m2, m1)
        acc[key] = acc.get(key, 0) + sign * c
    return _from_raw(model, 2, acc)


def contract(t: TensorElement, slot: int) -> TensorElement:
    """Multiply factors ``slot`` and ``slot+1`` together (1-indexed).

    No extra sign in the loop-algebra grading; see the module docstring.
    """
    if not 1 <= slot < t.arity:
        raise ValueError(f"slot {slot} out of range for arity {t.arity}")
    model = t.model
    acc: dict[tuple[Monomial, ...], int] = {}
    for ms, c in t.terms.items():
        prod = model.mul(model.mono_elem(ms[slot - 1]), model.mono_elem(ms[slot]))
        for pm, pc in prod.terms.items():
            key = ms[: slot - 1] + (pm,) + ms[slot + 1 :]
            acc[key] = acc.get(key, 0) + c * pc
    return _from_raw(model, t.arity - 1, acc)


def _require_coproduct_data(model: LoopModel):
    if not model.validated or model.c0 is None:
        raise ModelError("model not validated; call validate_model first")


def psi(model: LoopModel, a: Element) -> TensorElement:
    """Loop coproduct: ``chi * (c0 * a) (x) c0``, extended linearly.

    The mirror form ``chi * c0 (x) (c0 * a)`` is equal on any model that
    is consistent with string topology; check mode compares both.
    """
    _require_coproduct_data(model)
    model._check_same(a)
    return tensor_scale(model.euler, tensor([model.mul(model.c0, a), model.c0]))


def psi_mirror(model: LoopModel, a: Element) -> TensorElement:
    """The other closed form of the coproduct, ``chi * c0 (x) (c0 * a)``."""
    _require_coproduct_data(model)
    model._check_same(a)
    return tensor_scale(model.euler, tensor([model.c0, model.mul(model.c0, a)]))


def psi_split(model: LoopModel, factors: Sequence[Element], ell: int = 0) -> TensorElement:
    """Coproduct of a product, split after the first ``ell`` factors:

        chi * (c0 * a_1 ... a_ell) (x) (c0 * a_(ell+1) ... a_p)

    Every choice of ``ell`` gives the same value on a consistent model;
    that independence is a checked property, not an assumption.
    """
    _require_coproduct_data(model)
    factors = list(factors)
    if not 0 <= ell <= len(factors):
        raise ValueError(f"split point {ell} out of range for {len(factors)} factors")
    left = model.unit()
    for f in factors[:ell]:
        left = model.mul(left, f)
    right = model.unit()
    for f in factors[ell:]:
        right = model.mul(right, f)
    return tensor_scale(
        model.euler, tensor([model.mul(model.c0, left), model.mul(model.c0, right)])
    )


def apply_psi(t: TensorElement, slot: int) -> TensorElement:
    """Apply the coproduct to one factor, raising the arity by 1."""
    if not 1 <= slot <= t.arity:
        raise ValueError(f"slot {slot} out of range for arity {t.arity}")
    model = t.model
    _require_coproduct_data(model)
    acc: dict[tuple[Monomial, ...], int] = {}
    for ms, c in t.terms.items():
        expanded = psi(model, model.mono_elem(ms[slot - 1]))
        for (p1, p2), pc in expanded.terms.items():
            key = ms[: slot - 1] + (p1, p2) + ms[slot:]
            acc[key] = acc.get(key, 0) + c * pc
    return _from_raw(model, t.arity + 1, acc)


def apply_delta_factorwise(t: TensorElement) -> TensorElement:
    """Sum of the BV operator over the factors, with the Koszul sign of
    sliding a degree-1 operator past the preceding factors."""
    model = t.model
    acc: dict[tuple[Monomial, ...], int] = {}
    for ms, c in t.terms.items():
        for slot in range(t.arity):
            sign = (
                -1
                if sum(model.monomial_degree(m) for m in ms[:slot]) % 2
                else 1
            )
            image = model.delta(model.mono_elem(ms[slot]))
            for dm, dc in image.terms.items():
                key = ms[:slot] + (dm,) + ms[slot + 1 :]
                acc[key] = acc.get(key, 0) + sign * c * dc
    return _from_raw(model, t.arity, acc)
