"""Command line front end.

    knotlab jones     --pd "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
    knotlab alexander --seifert "[[0,2],[1,0]]"
    knotlab signature --seifert "[[-1,1],[0,-1]]"
    knotlab sequiv    --seifert "[[0,1],[2,0]]" --ell 3 [--band second]
                      [--oracle-bound 6]
    knotlab lambda    --n 0 --m 0 --p 3 [--emit seifert|pd|jones|alexander]
    knotlab report    --paper

Matrix and diagram arguments accept inline text or @path to read a
file.  Every subcommand takes --json for machine-readable output with
the shape {"command", "input", "result", "paper_check"}.  Exit status:
0 on success (a negative mathematical answer is still success), 1 on
a domain error (invalid matrix, inconsistent diagram, ...), 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import jones, kauffman_bracket, parse_pd, writhe
from .errors import KnotError
from .family import (
    LambdaSpec,
    lambda_diagram,
    lambda_seifert,
    paper_report,
    render_report,
)
from .laurent import LaurentPoly
from .seifert import (
    SeifertMatrix,
    alexander,
    format_matrix,
    knot_determinant,
    parse_matrix,
    signature,
)
from .sequiv import brute_force_congruence, decide_first_sequiv

__all__ = ["main"]


def _read_arg(value: str) -> str:
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return value


def _seifert_from(value: str) -> SeifertMatrix:
    return SeifertMatrix(tuple(tuple(r) for r in parse_matrix(_read_arg(value))))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _poly_json(p: LaurentPoly) -> dict:
    return {str(e): c for e, c in p.items()}


def cmd_jones(args) -> int:
    d = parse_pd(_read_arg(args.pd))
    v = jones(d)
    bracket = kauffman_bracket(d)
    payload = {
        "command": "jones",
        "input": {"pd": str(d)},
        "result": {
            "jones": str(v),
            "coefficients": _poly_json(v),
            "bracket_A": bracket.format("A"),
            "writhe": writhe(d),
            "crossings": len(d.crossings),
        },
        "paper_check": None,
    }
    text = (
        f"crossings: {len(d.crossings)}\n"
        f"writhe: {writhe(d)}\n"
        f"bracket (A): {bracket.format('A')}\n"
        f"jones (t): {v}"
    )
    _emit(args, payload, text)
    return 0


def cmd_alexander(args) -> int:
    m = _seifert_from(args.seifert)
    poly = alexander(m)
    payload = {
        "command": "alexander",
        "input": {"seifert": [list(r) for r in m.rows]},
        "result": {
            "alexander": str(poly),
            "coefficients": _poly_json(poly),
            "determinant": knot_determinant(m),
        },
        "paper_check": None,
    }
    text = f"alexander (t): {poly}\ndeterminant: {knot_determinant(m)}"
    _emit(args, payload, text)
    return 0


def cmd_signature(args) -> int:
    m = _seifert_from(args.seifert)
    sig = signature(m)
    payload = {
        "command": "signature",
        "input": {"seifert": [list(r) for r in m.rows]},
        "result": {"signature": sig},
        "paper_check": None,
    }
    _emit(args, payload, f"signature: {sig}")
    return 0


def cmd_sequiv(args) -> int:
    m = _seifert_from(args.seifert)
    report = decide_first_sequiv(m, args.ell, args.band)
    oracle = None
    if args.oracle_bound is not None:
        witness = brute_force_congruence(m, report.twisted, args.oracle_bound)
        oracle = {
            "bound": args.oracle_bound,
            "witness": [list(r) for r in witness.rows] if witness else None,
            "agrees": (witness is not None) == report.equivalent,
        }
    payload = {
        "command": "sequiv",
        "input": {
            "seifert": [list(r) for r in m.rows],
            "ell": args.ell,
            "band": args.band,
        },
        "result": dict(report.as_dict(), oracle=oracle),
        "paper_check": None,
    }
    lines = [
        f"matrix: {m}",
        f"twisted (ell={args.ell}, band={args.band}): {report.twisted}",
        f"first S-equivalent: {'yes' if report.equivalent else 'no'} ({report.reason})",
    ]
    if report.certificate is not None:
        lines.append(f"certificate T with T M T^T = twisted: {report.certificate}")
    lines.append(f"note: {report.note}")
    if oracle is not None:
        w = oracle["witness"]
        lines.append(
            f"oracle (bound {args.oracle_bound}): "
            + (f"witness {format_matrix(w)}" if w else "no witness")
            + (", agrees" if oracle["agrees"] else ", DISAGREES")
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_lambda(args) -> int:
    spec = LambdaSpec(args.n, args.m, args.p)
    m = lambda_seifert(spec)
    result: dict = {"seifert": [list(r) for r in m.rows]}
    lines = [f"{spec}", f"seifert: {m}"]
    if args.emit in ("pd", "jones"):
        d = lambda_diagram(spec)
        result["pd"] = str(d)
        lines.append(f"pd ({len(d.crossings)} crossings): {d}")
        if args.emit == "jones":
            v = jones(d)
            result["jones"] = str(v)
            lines.append(f"jones (t): {v}")
    if args.emit == "alexander":
        poly = alexander(m)
        result["alexander"] = str(poly)
        lines.append(f"alexander (t): {poly}")
    payload = {
        "command": "lambda",
        "input": {"n": args.n, "m": args.m, "p": args.p, "emit": args.emit},
        "result": result,
        "paper_check": None,
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_report(args) -> int:
    if not args.paper:
        raise KnotError("report: nothing to do (use --paper)")
    lines = paper_report()
    ok = all(l["status"] in ("MATCH", "KNOWN-DISCREPANCY") for l in lines)
    payload = {
        "command": "report",
        "input": {"paper": True},
        "result": {"lines": lines, "ok": ok},
        "paper_check": ok,
    }
    _emit(args, payload, render_report(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotlab",
        description="Exact invariants and S-equivalence certificates for band knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", help="Jones polynomial of a planar diagram")
    p.add_argument("--pd", required=True, help="X[a,b,c,d] tokens, or @file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("alexander", help="Alexander polynomial of a Seifert matrix")
    p.add_argument("--seifert", required=True, help="[[..],[..]] or @file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("signature", help="signature of M + M^T")
    p.add_argument("--seifert", required=True, help="[[..],[..]] or @file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser(
        "sequiv", help="decide first S-equivalence of M and its band-twisted form"
    )
    p.add_argument("--seifert", required=True, help="genus-one matrix, or @file")
    p.add_argument("--ell", required=True, type=int, help="number of full twists")
    p.add_argument("--band", choices=("first", "second"), default="first")
    p.add_argument(
        "--oracle-bound",
        type=int,
        default=None,
        help="also run the exhaustive congruence search with this entry bound",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sequiv)

    p = sub.add_parser("lambda", help="the two-band knot lambda(n,m,p)")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--p", required=True, type=int)
    p.add_argument(
        "--emit",
        choices=("seifert", "pd", "jones", "alexander"),
        default="seifert",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("report", help="recompute and check published values")
    p.add_argument("--paper", action="store_true", help="run the full comparison")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KnotError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
