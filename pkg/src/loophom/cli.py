"""Command-line interface.

Subcommands:

    eval  --model M [--json] EXPR
    basis --model M --degree K [--json]
    tqft  --model M --genus G --in P --out Q [--json] EXPR [EXPR ...]
    check --model M [--window W] [--seed S] [--json]

M is a built-in name (sphere:N, cpn:N, toy:bv0) or a model-file path.
Exit codes: 0 success / all checks pass, 1 check failures, 2 usage or
parse errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Element, ModelError
from .checks import run_checks
from .coalgebra import TensorElement
from .expr import EvalError, ExprError, parse_expr, evaluate
from .modelfile import ModelDoc, ModelParseError, load_model
from .tqft import Surface, string_operation


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loophom",
        description="exact calculator for loop-homology rings and their surface operations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression in a model")
    p_eval.add_argument("--model", required=True, help="built-in name or model file")
    p_eval.add_argument("--json", action="store_true", help="machine-readable output")
    p_eval.add_argument("expr", help="expression to evaluate")

    p_basis = sub.add_parser("basis", help="list the monomial basis in one degree")
    p_basis.add_argument("--model", required=True)
    p_basis.add_argument("--degree", required=True, type=int, help="loop-algebra degree")
    p_basis.add_argument("--json", action="store_true")

    p_tqft = sub.add_parser("tqft", help="evaluate the operation of a surface")
    p_tqft.add_argument("--model", required=True)
    p_tqft.add_argument("--genus", required=True, type=int)
    p_tqft.add_argument("--in", dest="n_in", required=True, type=int, metavar="P")
    p_tqft.add_argument("--out", dest="n_out", required=True, type=int, metavar="Q")
    p_tqft.add_argument("--json", action="store_true")
    p_tqft.add_argument("exprs", nargs="+", metavar="EXPR", help="one expression per input")

    p_check = sub.add_parser("check", help="run the law suite against a model")
    p_check.add_argument("--model", required=True)
    p_check.add_argument("--window", type=int, default=8, help="max |degree| (default 8)")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--json", action="store_true")
    return parser


def _value_dict(doc: ModelDoc, value) -> dict:
    model = doc.model
    if isinstance(value, Element):
        terms = [
            {
                "coefficient": value.terms[m],
                "monomial": model.format_monomial(m),
                "modulus": model.modulus(m),
            }
            for m in sorted(value.terms, key=lambda m: m.exps)
        ]
        return {"kind": "element", "value": str(value), "terms": terms}
    terms = [
        {
            "coefficient": value.terms[ms],
            "factors": [model.format_monomial(m) for m in ms],
        }
        for ms in sorted(value.terms, key=lambda ms: tuple(m.exps for m in ms))
    ]
    return {
        "kind": "tensor",
        "arity": value.arity,
        "value": str(value),
        "terms": terms,
    }


def _cmd_eval(args) -> int:
    doc = load_model(args.model)
    ast = parse_expr(args.expr, doc.model)
    value = evaluate(doc.model, ast)
    if args.json:
        payload = {"model": doc.provenance, "expr": args.expr}
        payload.update(_value_dict(doc, value))
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(value)
    return 0


def _cmd_basis(args) -> int:
    doc = load_model(args.model)
    basis = doc.model.enumerate_basis(args.degree)
    if args.json:
        payload = {
            "model": doc.provenance,
            "degree": args.degree,
            "basis": [
                {"monomial": doc.model.format_monomial(m), "modulus": mod}
                for m, mod in basis
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for m, mod in basis:
            ring = "Z" if mod == 0 else f"Z/{mod}"
            print(f"{doc.model.format_monomial(m)}  {ring}")
    return 0


def _cmd_tqft(args) -> int:
    doc = load_model(args.model)
    if len(args.exprs) != args.n_in:
        raise EvalError(
            f"surface expects {args.n_in} inputs but {len(args.exprs)} expressions were given"
        )
    surface = Surface(args.genus, args.n_in, args.n_out)
    inputs = [
        _as_scalar(doc, evaluate(doc.model, parse_expr(text, doc.model)))
        for text in args.exprs
    ]
    value = string_operation(doc.model, surface, inputs)
    if value.arity == 1:
        value = value.as_element()
    if args.json:
        payload = {
            "model": doc.provenance,
            "genus": surface.genus,
            "inputs": surface.inputs,
            "outputs": surface.outputs,
        }
        payload.update(_value_dict(doc, value))
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(value)
    return 0


def _as_scalar(doc: ModelDoc, value) -> Element:
    if isinstance(value, TensorElement):
        if value.arity != 1:
            raise EvalError("surface inputs must be scalar elements")
        return value.as_element()
    return value


def _cmd_check(args) -> int:
    doc = load_model(args.model)
    report = run_checks(doc, max_abs_degree=args.window, seed=args.seed)
    if args.json:
        sys.stdout.write(report.render_json())
    else:
        sys.stdout.write(report.render_text())
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "eval": _cmd_eval,
        "basis": _cmd_basis,
        "tqft": _cmd_tqft,
        "check": _cmd_check,
    }
    try:
        return handlers[args.command](args)
    except (ModelParseError, ExprError, EvalError, ModelError, ValueError, OSError) as exc:
        print(f"loophom: error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
