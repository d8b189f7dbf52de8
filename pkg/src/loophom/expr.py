"""Expression language for the calculator.

Grammar, loosest binding first:

    tensor   :=  sum ( "(x)" sum )*          flat; arity = factor count
    sum      :=  ["+"|"-"] product ( ("+"|"-") product )*
    product  :=  power ( "*" power )*
    power    :=  atom [ "^" INT ]
    atom     :=  INT | NAME | "(" tensor ")"
              |  "psi" "(" tensor ")"
              |  "delta" "(" tensor ")"
              |  "bracket" "(" tensor "," tensor ")"
              |  "mu" "(" INT "," INT "," INT ";" tensor ("," tensor)* ")"

The three-character sequence ``(x)`` is always the tensor constructor; to
parenthesize a generator that happens to be named ``x`` write ``( x )``.
``psi``, ``delta``, ``bracket`` and ``mu`` are reserved.  The literal
``1`` doubles as the unit of the algebra: bare integers evaluate to
integer multiples of the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Union

from .algebra import RESERVED_NAMES, Element, LoopModel
from .coalgebra import TensorElement, psi, tensor, tensor_add, tensor_scale
from .tqft import Surface, string_operation


class ExprError(ValueError):
    """Syntax or resolution error, with a 1-based column."""

    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} (column {column})")


class EvalError(ValueError):
    """The expression parsed but cannot be evaluated in this model."""


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Lit:
    value: int


@dataclass(frozen=True, slots=True)
class Name:
    ident: str


@dataclass(frozen=True, slots=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True, slots=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True, slots=True)
class Pow:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True, slots=True)
class Call:
    func: str  # "psi", "delta", "bracket"
    args: tuple


@dataclass(frozen=True, slots=True)
class MuCall:
    genus: int
    inputs: int
    outputs: int
    args: tuple


@dataclass(frozen=True, slots=True)
class TensorExpr:
    factors: tuple


ExprAst = Union[Lit, Name, Neg, BinOp, Pow, Call, MuCall, TensorExpr]


# -- tokenizer ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # INT NAME OP TENSOR END
    text: str
    pos: int  # 0-based offset into the source


_OP_CHARS = set("+-*^(),;")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if text.startswith("(x)", i):
            tokens.append(_Token("TENSOR", "(x)", i))
            i += 3
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        if c in _OP_CHARS:
            tokens.append(_Token("OP", c, i))
            i += 1
            continue
        raise ExprError(f"unexpected character {c!r}", i + 1)
    tokens.append(_Token("END", "", n))
    return tokens


# -- parser --------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token], names: Collection[str]):
        self.tokens = tokens
        self.pos = 0
        self.names = set(names)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ExprError(message, tok.pos + 1)

    def expect_op(self, ch: str) -> _Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.text != ch:
            self.fail(f"expected '{ch}'")
        return self.next()

    def parse(self) -> ExprAst:
        ast = self.tensor()
        if self.peek().kind != "END":
            self.fail(f"unexpected trailing input '{self.peek().text}'")
        return ast

    def tensor(self) -> ExprAst:
        first = self.sum()
        if not (self.peek().kind == "TENSOR"):
            return first
        factors = [first]
        while self.peek().kind == "TENSOR":
            self.next()
            factors.append(self.sum())
        return TensorExpr(tuple(factors))

    def sum(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "OP" and tok.text in "+-":
            self.next()
            node = self.product()
            if tok.text == "-":
                node = Neg(node)
        else:
            node = self.product()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.next().text
            node = BinOp(op, node, self.product())
        return node

    def product(self) -> ExprAst:
        node = self.power()
        while self.peek().kind == "OP" and self.peek().text == "*":
            self.next()
            node = BinOp("*", node, self.power())
        return node

    def power(self) -> ExprAst:
        node = self.atom()
        if self.peek().kind == "OP" and self.peek().text == "^":
            self.next()
            tok = self.peek()
            if tok.kind != "INT":
                self.fail("exponent must be a non-negative integer literal")
            self.next()
            node = Pow(node, int(tok.text))
        return node

    def int_literal(self) -> int:
        tok = self.peek()
        if tok.kind != "INT":
            self.fail("expected an integer")
        self.next()
        return int(tok.text)

    def atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return Lit(int(tok.text))
        if tok.kind == "OP" and tok.text == "(":
            self.next()
            node = self.tensor()
            self.expect_op(")")
            return node
        if tok.kind == "NAME":
            if tok.text in RESERVED_NAMES:
                return self.call()
            self.next()
            if tok.text not in self.names:
                raise ExprError(f"unknown generator '{tok.text}'", tok.pos + 1)
            return Name(tok.text)
        self.fail(f"expected a value, got '{tok.text or 'end of input'}'", tok)

    def call(self) -> ExprAst:
        tok = self.next()
        func = tok.text
        self.expect_op("(")
        if func == "mu":
            genus = self.int_literal()
            self.expect_op(",")
            inputs = self.int_literal()
            self.expect_op(",")
            outputs = self.int_literal()
            self.expect_op(";")
            args = []
            if not (self.peek().kind == "OP" and self.peek().text == ")"):
                args.append(self.tensor())
                while self.peek().kind == "OP" and self.peek().text == ",":
                    self.next()
                    args.append(self.tensor())
            close = self.expect_op(")")
            if len(args) != inputs:
                raise ExprError(
                    f"mu declared {inputs} inputs but got {len(args)} arguments",
                    close.pos + 1,
                )
            return MuCall(genus, inputs, outputs, tuple(args))
        args = [self.tensor()]
        while self.peek().kind == "OP" and self.peek().text == ",":
            self.next()
            args.append(self.tensor())
        close = self.expect_op(")")
        want = 2 if func == "bracket" else 1
        if len(args) != want:
            raise ExprError(
                f"{func} takes {want} argument{'s' if want > 1 else ''}, got {len(args)}",
                close.pos + 1,
            )
        return Call(func, tuple(args))


def parse_expr(
    text: str,
    model: LoopModel | None = None,
    *,
    names: Collection[str] | None = None,
) -> ExprAst:
    """Parse an expression, resolving identifiers against a model (or an
    explicit name set)."""
    if names is None:
        if model is None:
            raise ValueError("parse_expr needs a model or a name set")
        names = [g.name for g in model.generators]
    return _Parser(_tokenize(text), names).parse()


# -- evaluation -----------------------------------------------------------------

Value = Union[int, Element, TensorElement]


def _as_element(model: LoopModel, v: Value, what: str) -> Element:
    if isinstance(v, int):
        return model.scale(v, model.unit())
    if isinstance(v, TensorElement):
        if v.arity == 1:
            return v.as_element()
        raise EvalError(f"{what} must be a scalar element, got an arity-{v.arity} tensor")
    return v


def _eval_add(model: LoopModel, left: Value, right: Value, sign: int) -> Value:
    if isinstance(left, int) and isinstance(right, int):
        return left + sign * right
    if isinstance(left, TensorElement) and left.arity > 1 or isinstance(
        right, TensorElement
    ) and right.arity > 1:
        if not isinstance(left, TensorElement) or not isinstance(right, TensorElement):
            raise EvalError("cannot add a tensor and a scalar element")
        if left.arity != right.arity:
            raise EvalError(f"cannot add tensors of arity {left.arity} and {right.arity}")
        return tensor_add(left, tensor_scale(sign, right))
    a = _as_element(model, left, "operand")
    b = _as_element(model, right, "operand")
    return model.add(a, model.scale(sign, b))


def _eval_mul(model: LoopModel, left: Value, right: Value) -> Value:
    if isinstance(left, int) and isinstance(right, int):
        return left * right
    if isinstance(left, int) and isinstance(right, TensorElement):
        return tensor_scale(left, right)
    if isinstance(right, int) and isinstance(left, TensorElement):
        return tensor_scale(right, left)
    if isinstance(left, TensorElement) and left.arity > 1:
        raise EvalError("cannot multiply by an arity >= 2 tensor")
    if isinstance(right, TensorElement) and right.arity > 1:
        raise EvalError("cannot multiply by an arity >= 2 tensor")
    if isinstance(left, int):
        return model.scale(left, _as_element(model, right, "operand"))
    if isinstance(right, int):
        return model.scale(right, _as_element(model, left, "operand"))
    return model.mul(
        _as_element(model, left, "operand"), _as_element(model, right, "operand")
    )


def _eval(model: LoopModel, ast: ExprAst, allow_calls: bool) -> Value:
    if isinstance(ast, Lit):
        return ast.value
    if isinstance(ast, Name):
        return model.gen(ast.ident)
    if isinstance(ast, Neg):
        v = _eval(model, ast.operand, allow_calls)
        if isinstance(v, int):
            return -v
        if isinstance(v, TensorElement):
            return tensor_scale(-1, v)
        return model.scale(-1, v)
    if isinstance(ast, BinOp):
        left = _eval(model, ast.left, allow_calls)
        right = _eval(model, ast.right, allow_calls)
        if ast.op == "+":
            return _eval_add(model, left, right, 1)
        if ast.op == "-":
            return _eval_add(model, left, right, -1)
        return _eval_mul(model, left, right)
    if isinstance(ast, Pow):
        base = _eval(model, ast.base, allow_calls)
        if isinstance(base, int):
            return base**ast.exponent
        if isinstance(base, TensorElement):
            base = _as_element(model, base, "power base")
        return base**ast.exponent
    if isinstance(ast, TensorExpr):
        if not allow_calls:
            raise EvalError("tensor values are not allowed here")
        factors = [
            _as_element(model, _eval(model, f, allow_calls), "tensor factor")
            for f in ast.factors
        ]
        return tensor(factors)
    if isinstance(ast, Call):
        if not allow_calls:
            raise EvalError(f"{ast.func}(...) is not allowed here")
        args = [
            _as_element(model, _eval(model, a, allow_calls), f"argument of {ast.func}")
            for a in ast.args
        ]
        if ast.func == "psi":
            return psi(model, args[0])
        if ast.func == "delta":
            return model.delta(args[0])
        return model.bracket(args[0], args[1])
    if isinstance(ast, MuCall):
        if not allow_calls:
            raise EvalError("mu(...) is not allowed here")
        try:
            surface = Surface(ast.genus, ast.inputs, ast.outputs)
        except ValueError as exc:
            raise EvalError(str(exc)) from exc
        args = [
            _as_element(model, _eval(model, a, allow_calls), "argument of mu")
            for a in ast.args
        ]
        try:
            return string_operation(model, surface, args)
        except ValueError as exc:
            raise EvalError(str(exc)) from exc
    raise TypeError(f"unknown AST node {ast!r}")


def evaluate(model: LoopModel, ast: ExprAst) -> Element | TensorElement:
    """Evaluate an AST to a canonical element or tensor."""
    v = _eval(model, ast, allow_calls=True)
    if isinstance(v, int):
        v = model.scale(v, model.unit())
    if isinstance(v, TensorElement) and v.arity == 1:
        v = v.as_element()
    return v


def evaluate_scalar(model: LoopModel, ast: ExprAst) -> Element:
    """Evaluate an AST restricted to plain ring arithmetic (used for the
    right-hand sides in model files)."""
    v = _eval(model, ast, allow_calls=False)
    if isinstance(v, int):
        v = model.scale(v, model.unit())
    return v


def run_expr(model: LoopModel, text: str) -> Element | TensorElement:
    """Parse and evaluate in one go."""
    return evaluate(model, parse_expr(text, model))
