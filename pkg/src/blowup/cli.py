"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 step cap reached, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .driver import DEFAULT_MAX_STEPS, Strategy, counterexample_report, run
from .errors import InvariantError, ParseError, PreconditionError, StepCapError
from .expr import parse_direction, parse_poly, parse_script
from .polygon import minimize, newton_polygon
from .render import polygon_svg
from .scalar import QQ, Field, GF
from .surface import WeierstrassSurface, is_wt
from .transform import CurveCenter, find_permitted_curves, monoidal, near_points, quadratic

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_STEP_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def field_type(text: str) -> Field:
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        try:
            return GF(int(text[3:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    raise argparse.ArgumentTypeError(f"unknown field {text!r}; use 'q' or 'fp:P'")


def _m_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad m list {text!r}") from None


def _read_expr(arg: str) -> str:
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc}") from None
    return arg


def _surface(args) -> WeierstrassSurface:
    return WeierstrassSurface.from_poly(parse_poly(_read_expr(args.expr), args.field))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_info(args, out):
    S = _surface(args)
    print(f"multiplicity: {S.n}", file=out)
    print(f"wt: {'true' if is_wt(S) else 'false'}", file=out)
    for k, a in enumerate(S.z_profile()):
        print(f"a_{k}: {a}", file=out)


def cmd_polygon(args, out):
    poly = newton_polygon(_surface(args))
    if args.svg:
        Path(args.svg).write_text(polygon_svg(poly))
    if args.json:
        print(_dump(poly.to_json()), file=out)
    else:
        print(f"vertices: {poly}", file=out)


def cmd_minimize(args, out):
    print(minimize(_surface(args), step_cap=args.max_steps).eq, file=out)


def cmd_blowup(args, out):
    S = _surface(args)
    if args.curve is not None:
        result = monoidal(S, CurveCenter(parse_poly(args.curve, args.field)))
    else:
        result = quadratic(S, parse_direction(args.direction, args.field))
    print(result.result, file=out)
    status = "dropped" if result.dropped else "preserved"
    print(f"order: {result.new_order} (multiplicity {status})", file=out)


def cmd_permitted(args, out):
    curves = find_permitted_curves(_surface(args))
    for C in curves:
        print(C, file=out)
    if not curves:
        print("none", file=out)


def cmd_nearpoints(args, out):
    points = near_points(_surface(args))
    for d in points:
        print(f"({d})", file=out)
    if not points:
        print("none", file=out)


def cmd_resolve(args, out):
    S = _surface(args)
    if args.script:
        try:
            text = Path(args.script).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.script}: {exc}") from None
        strategy = Strategy.scripted(parse_script(text, args.field))
    else:
        strategy = Strategy.auto()
    trace = run(S, strategy, max_steps=args.max_steps)
    if args.json:
        print(_dump(trace.to_json()), file=out)
        return
    print(f"initial: {S.eq} (multiplicity {S.n})", file=out)
    for step in trace.steps:
        print(f"{step.index}: {step.center} -> {step.equation_after} [order {step.order_after}]", file=out)
    print(f"drop_step: {trace.drop_step if trace.drop_step is not None else 'none'}", file=out)


def cmd_counterexample(args, out):
    report = counterexample_report(args.m, args.field, max_steps=args.max_steps)
    if args.json:
        print(_dump(report.to_json()), file=out)
    else:
        for e in report.entries:
            print(f"m={e.m}: polygon {e.polygon}; blow-ups until drop: {e.drop_step}", file=out)
        print(f"polygons equal: {report.polygons_equal}", file=out)
        print(f"counts strictly increasing: {report.counts_increasing}", file=out)
        print(f"m+8 adds 4 blow-ups: {report.period_eight_adds_four}", file=out)
    if not report.ok:
        raise InvariantError("counterexample checks failed")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=field_type, default=QQ, help="coefficient field: q (default) or fp:P")

    parser = _Parser(prog="blowup", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    expr_help = "equation, e.g. 'Z^3 + X^19*Z + (X-Y)^4', or @FILE"

    p = sub.add_parser("info", parents=[common], help="multiplicity, WT flag and Z-profile")
    p.add_argument("expr", help=expr_help)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("polygon", parents=[common], help="Newton polygon vertices")
    p.add_argument("expr", help=expr_help)
    p.add_argument("--svg", metavar="PATH", help="also write an SVG drawing")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("minimize", parents=[common], help="contract vertices until the polygon is minimal")
    p.add_argument("expr", help=expr_help)
    p.add_argument("--max-steps", type=int, default=64)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser(
        "blowup",
        parents=[common],
        help="one quadratic or monoidal transform",
        description="Monoidal transforms use the chart Z -> G*Z only.",
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--direction", metavar="a:b:0", help="quadratic transform at this point")
    group.add_argument("--curve", metavar="G", help="monoidal transform along (Z, G)")
    p.add_argument("expr", help=expr_help)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("permitted", parents=[common], help="permitted curves (axes and rational lines)")
    p.add_argument("expr", help=expr_help)
    p.set_defaults(func=cmd_permitted)

    p = sub.add_parser("nearpoints", parents=[common], help="equimultiple points over the origin")
    p.add_argument("expr", help=expr_help)
    p.set_defaults(func=cmd_nearpoints)

    p = sub.add_parser(
        "resolve",
        parents=[common],
        help="blow up until the multiplicity drops",
        description="Script files hold one center per line: 'Q 1:c:0', 'Q 0:1:0' or 'M <G>'; "
        "'#' starts a comment. Monoidal transforms use the chart Z -> G*Z only.",
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--auto", action="store_true", help="maximal-center rule")
    group.add_argument("--script", metavar="FILE", help="apply the centers listed in FILE")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--json", action="store_true")
    p.add_argument("expr", help=expr_help)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("counterexample", parents=[common], help="blow-up counts for Z^3 + X^m*Z + (X-Y)^4")
    p.add_argument("--m", type=_m_list, required=True, metavar="LIST", help="comma-separated m values, each >= 19")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counterexample)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        args.func(args, out)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PRECONDITION
    except StepCapError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_STEP_CAP
    except InvariantError as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
