"""
Command-line interface: solve, gen, verify and bench

Exit codes: 0 success, 2 usage or input errors, 3 unsupported graph
classes, parameter errors and invariant failures. Diagnostics go to
stderr as "error: <ExceptionName>: <message>".
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from src.generators.graph_generator import FAMILIES, GenSpec, generate, parse_weight_scheme
from src.graph.io import format_graph, read_graph, read_tree, write_graph
from src.monitoring.solver_metrics import render_metrics
from src.oracle.exact import optimal_internal_spanning_tree
from src.pipelines.benchmark import fit_loglog_slope, run_benchmark
from src.solvers.clawfree import approx_clawfree, approx_clawfree_dfs, solve_clawfree, solve_clawfree_dfs
from src.solvers.cubic import approx_cubic, solve_cubic
from src.solvers.solution import SpanningTreeSolution, format_dot, format_solution
from src.utils.config import get_generator_config, get_logging_config
from src.utils.errors import GraphValidationError, MaxwistError
from src.utils.logger import log_solve_result
from src.verify.trace import Trace
from src.verify.verifier import KINDS, audit_invariants, render, verify_solution

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

ALGOS = ("cubic", "clawfree", "clawfree-dfs", "exact")
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _sizes(text: str) -> List[int]:
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not sizes:
        raise argparse.ArgumentTypeError("at least one size is required")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxwist",
        description="Approximate maximum weight internal spanning trees on cubic and claw-free graphs",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    verbosity.add_argument("--quiet", action="store_true", help="Log warnings and errors only")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_solve = subparsers.add_parser("solve", help="Compute a spanning tree with many heavy internal vertices")
    p_solve.add_argument("--algo", choices=ALGOS, required=True, help="Solver to run")
    p_solve.add_argument("--input", required=True, help="Graph file")
    p_solve.add_argument("--epsilon", help="Run the (bound - epsilon) wrapper, exact on small n")
    p_solve.add_argument("--trace", help="Write the solver trace to this file")
    p_solve.add_argument("--output", help="Write the result here instead of stdout")
    p_solve.add_argument("--dot", help="Also write the tree in DOT format")
    p_solve.add_argument("--log-csv", help="Append a row to this run log CSV")
    p_solve.add_argument("--weight-scale", type=int, help="Read decimal weights scaled by this factor")
    p_solve.add_argument("--cap", type=int, help="Largest n the exact solver accepts")

    p_gen = subparsers.add_parser("gen", help="Generate a seeded test graph")
    p_gen.add_argument("--family", choices=FAMILIES, required=True, help="Graph family")
    p_gen.add_argument("--n", type=int, default=0, help="Vertex count (base graph for line graphs)")
    p_gen.add_argument("--weights", default="unit", help="unit, uniform[:MAX] or zero-one[:P]")
    p_gen.add_argument("--seed", type=int, help="Random seed")
    p_gen.add_argument("--out", help="Write the graph here instead of stdout")

    p_verify = subparsers.add_parser("verify", help="Check a tree against its graph")
    p_verify.add_argument("--input", required=True, help="Graph file")
    p_verify.add_argument("--tree", required=True, help="Tree file (solve output or u v lines)")
    p_verify.add_argument("--kind", choices=KINDS, default="none", help="Which guarantee to check")
    p_verify.add_argument("--trace", help="Also audit this solver trace")
    p_verify.add_argument("--weight-scale", type=int, help="Read decimal weights scaled by this factor")

    p_bench = subparsers.add_parser("bench", help="Time a solver over growing seeded instances")
    p_bench.add_argument("--family", choices=("cubic-random", "line-graph-of-cubic-random"), help="Instance family")
    p_bench.add_argument("--algo", choices=("cubic", "clawfree", "clawfree-dfs"), default="cubic", help="Solver")
    p_bench.add_argument("--sizes", type=_sizes, default=[1000, 2000, 4000, 8000, 16000], help="Comma-separated n values")
    p_bench.add_argument("--seed", type=int, help="Random seed")
    p_bench.add_argument("--weights", default="uniform", help="Weight scheme of the instances")
    p_bench.add_argument("--metrics-out", help="Write the prometheus exposition here")

    return parser


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def _solve(g, args: argparse.Namespace, trace: Optional[Trace]) -> SpanningTreeSolution:
    eps = args.epsilon
    if args.algo == "cubic":
        return approx_cubic(g, eps, args.cap, trace) if eps is not None else solve_cubic(g, trace=trace)
    if args.algo == "clawfree":
        return approx_clawfree(g, eps, args.cap, trace) if eps is not None else solve_clawfree(g, trace=trace)
    if args.algo == "clawfree-dfs":
        if eps is not None:
            return approx_clawfree_dfs(g, eps, args.cap, trace)
        return solve_clawfree_dfs(g, trace=trace)
    result = optimal_internal_spanning_tree(g, args.cap)
    return SpanningTreeSolution(
        tuple(result.best_tree), result.opt_internal_weight, g.total_weight(), Fraction(0), "exact", g.n, g.m
    )


def cmd_solve(args: argparse.Namespace) -> int:
    g = read_graph(args.input, weight_scale=args.weight_scale)
    trace = Trace() if args.trace else None
    solution = _solve(g, args, trace)

    _emit(format_solution(solution), args.output)
    if trace is not None:
        trace.write(args.trace)
        logger.info(f"✅ Trace with {len(trace)} events written to {args.trace}")
    if args.dot:
        _emit(format_dot(solution), args.dot)
    if args.log_csv:
        log_solve_result(solution, Path(args.input).stem, args.log_csv)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    seed = get_generator_config()['default_seed'] if args.seed is None else args.seed
    spec = GenSpec(args.family, args.n, parse_weight_scheme(args.weights), seed)
    g = generate(spec)
    if args.out:
        write_graph(g, args.out)
    else:
        sys.stdout.write(format_graph(g))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.input, weight_scale=args.weight_scale)
    report = verify_solution(g, read_tree(args.tree), args.kind)
    sys.stdout.write(render(report))
    passed = report.passed
    if args.trace:
        audit = audit_invariants(g, Trace.read(args.trace))
        sys.stdout.write("# trace audit\n")
        sys.stdout.write(render(audit))
        passed = passed and not audit.violations
    return EXIT_OK if passed else EXIT_DOMAIN


def cmd_bench(args: argparse.Namespace) -> int:
    seed = get_generator_config()['default_seed'] if args.seed is None else args.seed
    frame = run_benchmark(args.sizes, seed, args.algo, args.family, parse_weight_scheme(args.weights))
    sys.stdout.write(frame.to_csv(index=False, lineterminator="\n"))
    if len(frame) >= 2:
        try:
            print(f"slope {fit_loglog_slope(frame):.3f}", file=sys.stderr)
        except ValueError as e:
            logger.warning(f"⚠️ No slope: {e}")
    if args.metrics_out:
        _emit(render_metrics(), args.metrics_out)
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)
    else:
        logging.getLogger().setLevel(get_logging_config()['level'].upper())

    try:
        return COMMANDS[args.command](args)
    except (GraphValidationError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MaxwistError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
