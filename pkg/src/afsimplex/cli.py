"""Command-line entry point.

    afsimplex check FILE [--method asm|oracle] [--trace] [--machine] [--max-iters N] [--bland]
    afsimplex dual FILE [--trace] [--machine] [--max-iters N] [--bland]
    afsimplex compare FILE [--path CORNERS] [--max-iters N] [--bland]
    afsimplex random --seed S --rows M --cols N --count K [--feasible]

Exit codes: 0 feasible / paths equal, 1 infeasible / paths differ,
2 usage, input or parse error, 3 iteration cap reached.
"""

import argparse
import random
import sys

from .asm import asm_solve
from .asmd import asmd_solve
from .exact import rat_render
from .lp_io import (LPSyntaxError, document_from_run, gen_random_lp, read_corner_path, read_lp,
                    render_trace)
from .oracle import CornerPath, compare_paths, oracle_solve
from .tableau import build_dictionary
from .trace import Outcome, SolverOptions

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_CAP = 0, 1, 2, 3

_EXIT_FOR = {
    Outcome.FEASIBLE: EXIT_OK,
    Outcome.DUAL_FEASIBLE: EXIT_OK,
    Outcome.INFEASIBLE: EXIT_NEGATIVE,
    Outcome.DUAL_INFEASIBLE: EXIT_NEGATIVE,
    Outcome.ITERATION_CAP: EXIT_CAP,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _solver_flags(p):
    p.add_argument("--max-iters", type=int, default=10_000, metavar="N")
    p.add_argument("--bland", action="store_true", help="smallest-index entering rule")


def _build_parser():
    parser = _Parser(prog="afsimplex", description="Artificial-free phase 1 simplex toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="primal phase 1 on an LP file")
    p.add_argument("file")
    p.add_argument("--method", choices=("asm", "oracle"), default="asm")
    p.add_argument("--trace", action="store_true", help="print every tableau")
    p.add_argument("--machine", action="store_true", help="line-delimited JSON trace")
    _solver_flags(p)

    p = sub.add_parser("dual", help="dual phase 1 on an LP file")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--machine", action="store_true")
    _solver_flags(p)

    p = sub.add_parser("compare", help="artificial-free path vs classical phase 1 path")
    p.add_argument("file")
    p.add_argument("--path", metavar="CORNERS",
                   help="compare the classical path against a stored corner list instead")
    _solver_flags(p)

    p = sub.add_parser("random", help="randomized clone check")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--feasible", action="store_true", help="construct feasible instances")
    _solver_flags(p)
    return parser


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(lp, run, args, out):
    doc = document_from_run(lp, run, snapshots=args.trace or args.machine)
    if args.machine:
        out.write(render_trace(doc, "machine"))
    elif args.trace:
        out.write(render_trace(doc, "table"))
    else:
        out.write(f"outcome: {doc.outcome.value}\n")
        out.write("solution: " + " ".join(rat_render(v) for v in doc.solution) + "\n")
    return _EXIT_FOR[run.outcome]


def _points(path):
    return " ".join("(" + ", ".join(rat_render(v) for v in pt) + ")" for pt in path)


def _cmd_check(args, opts, out):
    lp = read_lp(_read(args.file))
    if args.method == "asm":
        run = asm_solve(build_dictionary(lp), opts)
    else:
        run = oracle_solve(lp, opts)
    return _emit(lp, run, args, out)


def _cmd_dual(args, opts, out):
    lp = read_lp(_read(args.file))
    return _emit(lp, asmd_solve(build_dictionary(lp), opts), args, out)


def _cmd_compare(args, opts, out):
    lp = read_lp(_read(args.file))
    oracle = oracle_solve(lp, opts)
    if args.path:
        report = compare_paths(oracle.trace, CornerPath(read_corner_path(_read(args.path))))
        names = ("simplex", "stored")
    else:
        report = compare_paths(asm_solve(build_dictionary(lp), opts).trace, oracle.trace)
        names = ("asm", "simplex")
    out.write(f"{names[0]:8} {_points(report.corners_a)}\n")
    out.write(f"{names[1]:8} {_points(report.corners_b)}\n")
    if report.equal:
        out.write("paths equal\n")
        return EXIT_OK
    out.write(f"paths diverge at {report.first_divergence}\n")
    return EXIT_NEGATIVE


def _cmd_random(args, opts, out):
    if min(args.rows, args.cols, args.count) < 1:
        raise ValueError("--rows, --cols and --count must be positive")
    rng = random.Random(args.seed)
    failures = 0
    for k in range(args.count):
        seed = rng.getrandbits(63)
        lp = gen_random_lp(seed, args.rows, args.cols, feasible_bias=args.feasible)
        asm = asm_solve(build_dictionary(lp), opts)
        oracle = oracle_solve(lp, opts)
        report = compare_paths(asm.trace, oracle.trace)
        capped = Outcome.ITERATION_CAP in (asm.outcome, oracle.outcome)
        ok = capped or (report.equal and asm.outcome == oracle.outcome)
        failures += not ok
        status = "capped" if capped else ("equal" if ok else "MISMATCH")
        out.write(f"{k:4d} seed={seed} asm={asm.outcome.value} simplex={oracle.outcome.value} "
                  f"pivots={len(asm.trace)} {status}\n")
    out.write(f"{args.count - failures}/{args.count} instances agree\n")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


_COMMANDS = {"check": _cmd_check, "dual": _cmd_dual, "compare": _cmd_compare,
             "random": _cmd_random}


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"afsimplex: error: {exc}\n")
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return exc.code or 0
    if getattr(args, "max_iters", 1) < 0:
        err.write("afsimplex: error: --max-iters must be nonnegative\n")
        return EXIT_ERROR
    opts = SolverOptions(max_iters=args.max_iters, bland=args.bland)
    try:
        return _COMMANDS[args.command](args, opts, out)
    except (OSError, LPSyntaxError, ValueError) as exc:
        err.write(f"afsimplex: error: {exc}\n")
        return EXIT_ERROR


def main():
    sys.exit(run_cli())
