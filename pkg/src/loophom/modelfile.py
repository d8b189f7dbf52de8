"""Line-oriented model files.

One statement per line; ``#`` starts a comment; blank lines are ignored;
statement order does not matter (generators are collected first):

    dim = INT                      manifold dimension d        (required)
    euler = INT                    Euler characteristic        (required)
    generator NAME deg = INT [geometric]
    relation INT * MONOMIAL        imposes INT * MONOMIAL = 0
    c0 = EXPR                      constant-loop class         (required)
    flag simply_connected
    delta NAME = EXPR              BV-operator value on a generator
    bracket [NAME,NAME] = EXPR     loop-bracket value on a generator pair

MONOMIAL is a ``*``-joined product of ``NAME`` or ``NAME^INT`` factors,
or the literal ``1``.  EXPR uses the calculator grammar restricted to
generators, integers, ``+ - * ^`` and parentheses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .algebra import GeneratorSpec, LoopModel, ModelError
from .builtins import builtin_model
from .expr import ExprError, evaluate_scalar, parse_expr


class ModelParseError(Exception):
    """One or more problems in a model file.

    ``errors`` is a list of ``(line, message)`` pairs; ``line`` is 1-based
    or None for file-level problems.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__(
            "; ".join(
                f"line {line}: {msg}" if line else msg for line, msg in self.errors
            )
        )


@dataclass(frozen=True)
class ModelDoc:
    """A parsed model together with its source text and provenance."""

    source: str
    model: LoopModel
    provenance: str = "<string>"


_DIM_RE = re.compile(r"^(dim|euler)\s*=\s*(-?\d+)\Z")
_GEN_RE = re.compile(r"^generator\s+(\w+)\s+deg\s*=\s*(-?\d+)(\s+geometric)?\Z")
_REL_RE = re.compile(r"^relation\s+(-?\d+)\s*\*\s*(.+)\Z")
_C0_RE = re.compile(r"^c0\s*=\s*(.+)\Z")
_FLAG_RE = re.compile(r"^flag\s+(\w+)\Z")
_DELTA_RE = re.compile(r"^delta\s+(\w+)\s*=\s*(.+)\Z")
_BRACKET_RE = re.compile(r"^bracket\s*\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.+)\Z")
_FACTOR_RE = re.compile(r"^(\w+)(?:\^(\d+))?\Z")


def _parse_monomial_text(text: str) -> dict[str, int]:
    exps: dict[str, int] = {}
    for factor in text.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"bad monomial factor {factor!r}")
        name, power = m.group(1), m.group(2)
        exps[name] = exps.get(name, 0) + (int(power) if power else 1)
    return exps


def parse_model(text: str, provenance: str = "<string>") -> ModelDoc:
    """Parse a model file, validate it, and return the document.

    Raises :class:`ModelParseError` listing every problem found, each with
    its line number where one applies.
    """
    errors: list[tuple[int | None, str]] = []
    dim = euler = None
    scalars_line: dict[str, int] = {}
    gens: list[GeneratorSpec] = []
    gen_lines: dict[str, int] = {}
    rels: list[tuple[int, dict[str, int]]] = []
    rel_lines: list[int] = []
    c0_rhs: tuple[str, int] | None = None
    deltas: dict[str, tuple[str, int]] = {}
    brackets: dict[tuple[str, str], tuple[str, int]] = {}
    simply_connected = False
    flag_line = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _DIM_RE.match(line)
        if m:
            key = m.group(1)
            if key in scalars_line:
                errors.append((lineno, f"duplicate '{key}' (first on line {scalars_line[key]})"))
                continue
            scalars_line[key] = lineno
            if key == "dim":
                dim = int(m.group(2))
            else:
                euler = int(m.group(2))
            continue
        m = _GEN_RE.match(line)
        if m:
            name = m.group(1)
            if name in gen_lines:
                errors.append(
                    (lineno, f"duplicate generator '{name}' (first declared on line {gen_lines[name]})")
                )
                continue
            gen_lines[name] = lineno
            gens.append(GeneratorSpec(name, int(m.group(2)), bool(m.group(3))))
            continue
        m = _REL_RE.match(line)
        if m:
            coeff = int(m.group(1))
            if coeff < 1:
                errors.append((lineno, f"relation coefficient must be positive, got {coeff}"))
                continue
            try:
                exps = _parse_monomial_text(m.group(2))
            except ValueError as exc:
                errors.append((lineno, str(exc)))
                continue
            rels.append((coeff, exps))
            rel_lines.append(lineno)
            continue
        m = _C0_RE.match(line)
        if m:
            if c0_rhs is not None:
                errors.append((lineno, f"duplicate 'c0' (first on line {c0_rhs[1]})"))
                continue
            c0_rhs = (m.group(1), lineno)
            continue
        m = _FLAG_RE.match(line)
        if m:
            if m.group(1) != "simply_connected":
                errors.append((lineno, f"unknown flag '{m.group(1)}'"))
                continue
            if simply_connected:
                errors.append((lineno, f"duplicate flag (first on line {flag_line})"))
                continue
            simply_connected, flag_line = True, lineno
            continue
        m = _DELTA_RE.match(line)
        if m:
            name = m.group(1)
            if name in deltas:
                errors.append((lineno, f"duplicate delta for '{name}' (first on line {deltas[name][1]})"))
                continue
            deltas[name] = (m.group(2), lineno)
            continue
        m = _BRACKET_RE.match(line)
        if m:
            key = (m.group(1), m.group(2))
            if key in brackets:
                errors.append(
                    (lineno, f"duplicate bracket for [{key[0]},{key[1]}] (first on line {brackets[key][1]})")
                )
                continue
            brackets[key] = (m.group(3), lineno)
            continue
        errors.append((lineno, f"unrecognized statement: {line!r}"))

    if dim is None:
        errors.append((None, "dim required"))
    if euler is None:
        errors.append((None, "euler required"))
    if c0_rhs is None:
        errors.append((None, "c0 required"))
    if errors and (dim is None or euler is None):
        raise ModelParseError(errors)

    # where-tag -> line map for problems raised by validation
    lines_for: dict[tuple, int | None] = {("model",): scalars_line.get("dim")}
    for name, ln in gen_lines.items():
        lines_for[("generator", name)] = ln
    for pos, ln in enumerate(rel_lines, 1):
        lines_for[("relation", pos)] = ln
    if c0_rhs is not None:
        lines_for[("c0",)] = c0_rhs[1]
    for name, (_, ln) in deltas.items():
        lines_for[("delta", name)] = ln
    if deltas:
        lines_for[("delta",)] = min(ln for _, ln in deltas.values())
    for (g1, g2), (_, ln) in brackets.items():
        lines_for[("bracket", g1, g2)] = ln

    def absorb(exc: ModelError):
        for where, msg in exc.problems:
            errors.append((lines_for.get(tuple(where)), msg))

    model = LoopModel(
        dim=dim,
        euler=euler,
        generators=gens,
        relations=rels,
        simply_connected=simply_connected,
    )
    structural: list = []
    if not model._prepare_structure(structural):
        absorb(ModelError(structural))
        raise ModelParseError(errors)

    names = [g.name for g in gens]

    def eval_rhs(rhs: str, lineno: int):
        try:
            ast = parse_expr(rhs, names=names)
            return evaluate_scalar(model, ast)
        except (ExprError, ValueError) as exc:
            errors.append((lineno, str(exc)))
            return None

    if c0_rhs is not None:
        model._c0_input = eval_rhs(*c0_rhs)
    if deltas:
        model._delta_input = {
            name: eval_rhs(rhs, ln) for name, (rhs, ln) in deltas.items()
        }
    if brackets:
        model._bracket_input = {
            key: eval_rhs(rhs, ln) for key, (rhs, ln) in brackets.items()
        }
    if errors:
        raise ModelParseError(errors)

    try:
        from .algebra import validate_model

        validate_model(model)
    except ModelError as exc:
        absorb(exc)
    if errors:
        raise ModelParseError(errors)
    return ModelDoc(source=text, model=model, provenance=provenance)


def print_model(model: LoopModel) -> str:
    """Canonical text for a validated model; parsing it back gives an
    equivalent model whose printout is identical."""
    lines = [f"dim = {model.dim}", f"euler = {model.euler}"]
    for g in model.generators:
        suffix = " geometric" if g.geometric else ""
        lines.append(f"generator {g.name} deg = {g.degree}{suffix}")
    for rel in model.relations:
        lines.append(f"relation {rel.coeff} * {model.format_monomial(rel.monomial)}")
    lines.append(f"c0 = {model.c0}")
    if model.simply_connected:
        lines.append("flag simply_connected")
    if model.delta_on_generators is not None:
        for g in model.generators:
            if g.name in model.delta_on_generators:
                lines.append(f"delta {g.name} = {model.delta_on_generators[g.name]}")
    if model.bracket_on_generators is not None:
        order = {g.name: i for i, g in enumerate(model.generators)}
        for g1, g2 in sorted(
            model.bracket_on_generators, key=lambda k: (order[k[0]], order[k[1]])
        ):
            lines.append(f"bracket [{g1},{g2}] = {model.bracket_on_generators[(g1, g2)]}")
    return "\n".join(lines) + "\n"


def load_model(spec: str) -> ModelDoc:
    """Load a built-in model by name or a model file by path."""
    try:
        model = builtin_model(spec)
    except ValueError as exc:
        raise ModelParseError([(None, str(exc))]) from exc
    if model is not None:
        return ModelDoc(source=print_model(model), model=model, provenance=spec)
    path = Path(spec)
    if not path.is_file():
        raise ModelParseError(
            [(None, f"unknown model '{spec}': not a built-in name or a readable file")]
        )
    return parse_model(path.read_text(), provenance=str(path))
