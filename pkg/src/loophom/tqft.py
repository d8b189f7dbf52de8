"""Surface types, sewing, and the string operation attached to a surface.

Every oriented connected cobordism of genus g with p inputs and q >= 1
outputs acts on tensor powers of the loop homology.  The operation is
evaluated through closed forms: it vanishes outright for g >= 1 or
q >= 3, multiplies the inputs for (g, q) = (0, 1), and coproducts their
product for (g, q) = (0, 2).  ``string_operation_via_pants`` evaluates
the same operation by composing pair-of-pants pieces instead and exists
so the two routes can be compared.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .algebra import Element, LoopModel
from .coalgebra import (
    TensorElement,
    apply_psi,
    contract,
    psi_split,
    tensor,
    tensor_add,
    tensor_scale,
    tensor_zero,
)


class VanishingReason(enum.Enum):
    """Why an operation is zero before looking at any input."""

    GENUS_AT_LEAST_ONE = "genus >= 1"
    THREE_OR_MORE_OUTPUTS = "outputs >= 3"
    NOT_A_PRIORI = "not a priori"


@dataclass(frozen=True, slots=True)
class Surface:
    """Topological type of an oriented connected cobordism."""

    genus: int
    inputs: int
    outputs: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        if self.inputs < 0:
            raise ValueError(f"inputs must be >= 0, got {self.inputs}")
        if self.outputs < 1:
            raise ValueError(f"outputs must be >= 1, got {self.outputs}")

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus - self.inputs - self.outputs

    def __str__(self) -> str:
        return f"(g={self.genus}, in={self.inputs}, out={self.outputs})"


def euler_char(s: Surface) -> int:
    return s.euler_char


def sew(s1: Surface, s2: Surface) -> Surface:
    """Glue all outputs of ``s1`` to all inputs of ``s2``."""
    if s1.outputs != s2.inputs:
        raise ValueError(
            f"cannot sew: {s1} has {s1.outputs} outputs but {s2} has {s2.inputs} inputs"
        )
    genus = s1.genus + s2.genus + s1.outputs - 1
    out = Surface(genus, s1.inputs, s2.outputs)
    assert out.euler_char == s1.euler_char + s2.euler_char
    return out


def vanishing_certificate(s: Surface) -> VanishingReason:
    if s.genus >= 1:
        return VanishingReason.GENUS_AT_LEAST_ONE
    if s.outputs >= 3:
        return VanishingReason.THREE_OR_MORE_OUTPUTS
    return VanishingReason.NOT_A_PRIORI


InputLike = Union[TensorElement, Sequence[Element]]


def _coerce_input(model: LoopModel, s: Surface, inputs: InputLike) -> TensorElement:
    if s.inputs == 0:
        raise ValueError(
            "operations with no incoming boundary are not defined; "
            "pass the unit as an explicit input instead"
        )
    if isinstance(inputs, TensorElement):
        if inputs.model is not model:
            raise ValueError("input tensor belongs to a different model")
        t = inputs
    else:
        t = tensor(list(inputs))
    if t.arity != s.inputs:
        raise ValueError(f"arity mismatch: surface expects {s.inputs} inputs, got {t.arity}")
    return t


def string_operation(model: LoopModel, s: Surface, inputs: InputLike) -> TensorElement:
    """Evaluate the operation of ``s`` on an arity-p input, by closed form."""
    t = _coerce_input(model, s, inputs)
    if s.genus >= 1 or s.outputs >= 3:
        return tensor_zero(model, s.outputs)
    if s.outputs == 1:
        out = model.zero()
        for ms, c in t.terms.items():
            prod = model.unit()
            for m in ms:
                prod = model.mul(prod, model.mono_elem(m))
            out = model.add(out, model.scale(c, prod))
        return tensor([out]) if out else tensor_zero(model, 1)
    out2 = tensor_zero(model, 2)
    for ms, c in t.terms.items():
        piece = psi_split(model, [model.mono_elem(m) for m in ms], 0)
        out2 = tensor_add(out2, tensor_scale(c, piece))
    return out2


def string_operation_via_pants(model: LoopModel, s: Surface, inputs: InputLike) -> TensorElement:
    """Evaluate the same operation through its pair-of-pants decomposition:
    merge the inputs, run each handle as coproduct-then-product, then split
    off the outputs."""
    t = _coerce_input(model, s, inputs)
    for _ in range(s.inputs - 1):
        t = contract(t, 1)
    for _ in range(s.genus):
        t = contract(apply_psi(t, 1), 1)
    for _ in range(s.outputs - 1):
        t = apply_psi(t, 1)
    return t
