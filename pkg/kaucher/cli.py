"""The ``kaucher`` command.

Results go to stdout (or the file given with ``--out``), log output to stderr. Exit codes: 0 on
success, 1 when the operation refuses its arguments, 2 for usage and parse errors.
"""
import argparse
import contextlib
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Dict, List, Optional

from . import analysis
from . import logging as kaucher_logging
from ._version import __version__
from .algebra4 import a4_inverse, a4_is_invertible, a4_shapes
from .core import GClass, ProperInterval, neighborhood_vertices, tolerance
from .division import DivisionResult, divide
from .embedding import bullet, classical_mul, psi, r_key
from .errors import KaucherError, ParseError
from .linprog import dump_solution, load_problem, solve
from .text import evaluate, format_a4, format_class, format_number, parse_a4

logger = logging.getLogger("kaucher.cli")

FUNCTIONS: Dict[str, Callable[[GClass], GClass]] = {"q2": analysis.q2, "identity": analysis.identity}


def _class_json(a: GClass) -> dict:
    return {"inf": a.inf, "sup": a.sup, "text": format_class(a)}


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"should be a positive number: {text!r}")
    return value


def _tolerance(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0 <= value < float("inf"):
        raise argparse.ArgumentTypeError(f"tolerance should be a finite non-negative number: {text!r}")
    return value


def cmd_eval(args) -> str:
    result = evaluate(args.expression)
    if args.json:
        return json.dumps(_class_json(result)) + "\n"
    return format_class(result) + "\n"


def cmd_mul(args) -> str:
    x, y = evaluate(args.x), evaluate(args.y)
    product = bullet(x, y)
    classical = None
    if x.is_proper and y.is_proper:
        p = classical_mul(ProperInterval(x.inf, x.sup), ProperInterval(y.inf, y.sup))
        classical = GClass(p.lo, p.hi)
    if args.json:
        return json.dumps({"bullet": _class_json(product), "classical": classical and _class_json(classical)}) + "\n"
    lines = [f"bullet: {format_class(product)}"]
    if classical is not None:
        lines.append(f"classical: {format_class(classical)}")
    return "\n".join(lines) + "\n"


def _division_output(result: DivisionResult, as_json: bool) -> str:
    if as_json:
        data = {
            "quotient": _class_json(result.quotient),
            "remainder": _class_json(result.remainder),
            "exact": result.exact,
            "method": result.method,
        }
        return json.dumps(data) + "\n"
    return (
        f"quotient: {format_class(result.quotient)}\n"
        f"remainder: {format_class(result.remainder)}\n"
        f"exact: {str(result.exact).lower()}\n"
        f"method: {result.method}\n"
    )


def cmd_div(args) -> str:
    return _division_output(divide(evaluate(args.y), evaluate(args.x), euclidean=False), args.json)


def cmd_euclid(args) -> str:
    return _division_output(divide(evaluate(args.y), evaluate(args.x)), args.json)


def cmd_a4(args) -> str:
    x = parse_a4(args.element)
    invertible = a4_is_invertible(x)
    key = r_key(x)
    lines = [
        f"element: {format_a4(x)}",
        f"shapes: {','.join(a4_shapes(x)) or 'none'}",
        f"invertible: {str(invertible).lower()}",
        f"inverse: {format_a4(a4_inverse(x)) if invertible else 'none'}",
        f"key: ({format_number(key.u)},{format_number(key.v)})",
        f"psi: {format_class(psi(x))}",
    ]
    return "\n".join(lines) + "\n"


def cmd_lp(args) -> str:
    problem = load_problem(Path(args.problem))
    return dump_solution(solve(problem.to_lp(), max_iter=problem.max_iter))


def _executor(workers: int) -> Optional[ThreadPoolExecutor]:
    return ThreadPoolExecutor(max_workers=workers) if workers > 0 else None


def cmd_probe(args) -> str:
    f = FUNCTIONS[args.function]
    x0 = evaluate(args.x0)
    radii = [args.eps * 10.0**-k for k in range(args.count)]
    executor = _executor(args.workers)
    try:
        report = analysis.diff_probe(f, x0, analysis.differential_candidate(x0), radii, executor=executor)
    finally:
        if executor is not None:
            executor.shutdown()
    return report.to_csv()


def cmd_continuity(args) -> str:
    f = FUNCTIONS[args.function]
    executor = _executor(args.workers)
    try:
        result = analysis.continuity_probe(f, evaluate(args.x0), args.eps, executor=executor)
    finally:
        if executor is not None:
            executor.shutdown()
    eta = format_number(result.eta) if result.eta is not None else "none"
    return f"eps: {format_number(result.eps)}\neta: {eta}\nsamples: {result.samples}\n"


def cmd_neighborhood(args) -> str:
    shape = neighborhood_vertices(evaluate(args.x0), args.eps)
    lines = ["inf,sup"] + [f"{format_number(p)},{format_number(q)}" for p, q in shape.vertices]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_tolerance, default=None, help="comparison tolerance (default: $KAUCHER_TOL or 1e-12)")
    common.add_argument("--out", type=Path, default=None, help="write the result to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr (-v info, -vv debug)")

    parser = argparse.ArgumentParser(prog="kaucher", description="Arithmetic on generalized intervals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    p = commands.add_parser("eval", parents=[common], help="evaluate an interval expression")
    p.add_argument("expression", help='for instance "[2,4] + dual[6,1]"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_eval)

    p = commands.add_parser("mul", parents=[common], help="bullet product of two classes")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_mul)

    p = commands.add_parser("div", parents=[common], help="exact division Y / X")
    p.add_argument("y")
    p.add_argument("x")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_div)

    p = commands.add_parser("euclid", parents=[common], help="division Y = X • Z + R, exact when possible")
    p.add_argument("y")
    p.add_argument("x")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_euclid)

    p = commands.add_parser("a4", parents=[common], help="inspect an element of A4")
    p.add_argument("element", help='for instance "(0,2,4,0)"')
    p.set_defaults(run=cmd_a4)

    p = commands.add_parser("lp", parents=[common], help="solve a linear program given as JSON")
    p.add_argument("problem", help="path of the JSON problem")
    p.set_defaults(run=cmd_lp)

    for name, run, summary in [
        ("probe", cmd_probe, "differentiability probe (CSV of worst ratios per radius)"),
        ("continuity", cmd_continuity, "continuity probe (the eta found for eps)"),
    ]:
        p = commands.add_parser(name, parents=[common], help=summary)
        p.add_argument("function", choices=sorted(FUNCTIONS))
        p.add_argument("x0")
        p.add_argument("eps", type=_positive_float)
        p.add_argument("--workers", type=int, default=0, help="evaluate sample points on this many threads")
        if name == "probe":
            p.add_argument("--count", type=int, default=5, help="number of radii eps, eps/10, ...")
        p.set_defaults(run=run)

    p = commands.add_parser("neighborhood", parents=[common], help="vertices of the eps-ball around x0 (CSV)")
    p.add_argument("x0")
    p.add_argument("eps", type=_positive_float)
    p.set_defaults(run=cmd_neighborhood)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.verbose >= 2:
        kaucher_logging.set_log_level_debug()
    elif args.verbose == 1:
        kaucher_logging.set_log_level_info()

    try:
        with tolerance(args.tol) if args.tol is not None else contextlib.nullcontext():
            output = args.run(args)
        if args.out is not None:
            args.out.write_text(output, encoding="utf-8")
        else:
            sys.stdout.write(output)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except KaucherError as e:
        logger.info("%s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
