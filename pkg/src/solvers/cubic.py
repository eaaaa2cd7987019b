"""
Greedy-ratio DFS solver for cubic graphs

The DFS starts at the vertex with the lightest closed neighborhood and
always descends into the neighbor maximizing w(x)/u(x). Its tree is
returned as is; the internal weight is at least (3/4 - 3/n) * w(V).
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.dfs.greedy_dfs import BranchCriterion, DfsTree, run_greedy_dfs, unvisited_count_at
from src.graph.core import VertexWeightedGraph, closed_neighborhood_weight, is_cubic
from src.monitoring.solver_metrics import with_metrics
from src.oracle.exact import optimal_internal_spanning_tree
from src.solvers.solution import (
    SpanningTreeSolution,
    as_epsilon,
    bound_holds,
    cubic_bound,
    emit_dfs_tree,
    internal_weight_of,
)
from src.utils.config import get_solver_config
from src.utils.errors import InvalidEpsilon, InvariantViolation, NotCubic
from src.verify.trace import Trace

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@dataclass
class PathLemmaReport:
    """Per-leaf alternating paths and the sums checked against w(leaf)"""
    leaves_checked: int = 0
    paths: Dict[int, Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=dict)
    sums: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    shared_vertex: Optional[int] = None


def _require_cubic(g: VertexWeightedGraph) -> None:
    if not is_cubic(g):
        bad = next(v for v in range(g.n) if g.degree(v) != 3)
        raise NotCubic(f"vertex {bad} has degree {g.degree(bad)}")


def select_root_cubic(g: VertexWeightedGraph) -> int:
    """Vertex with minimum w(N(v)), smallest index on ties"""
    _require_cubic(g)
    root = min(range(g.n), key=lambda v: (closed_neighborhood_weight(g, v), v))
    if closed_neighborhood_weight(g, root) * g.n > 4 * g.total_weight():
        raise InvariantViolation("root-choice", "w(N(r)) exceeds 4 w(V) / n", root)
    return root


@with_metrics("cubic")
def solve_cubic(
    g: VertexWeightedGraph,
    trace: Optional[Trace] = None,
    strict: Optional[bool] = None,
) -> SpanningTreeSolution:
    """
    Run the greedy-ratio DFS and return its tree.

    strict defaults to SOLVER_CONFIG strict_checks and enables the
    per-leaf path check.

    Raises:
        NotCubic: if some vertex does not have degree 3
        InvariantViolation: if a proven property fails (implementation bug)
    """
    try:
        root = select_root_cubic(g)
        tree = run_greedy_dfs(g, root, BranchCriterion.RATIO)
        edges = tuple(tree.tree_edges())
        internal = internal_weight_of(g.weights, edges)
        total = g.total_weight()
        guarantee = cubic_bound(g.n) if total > 0 else Fraction(0)

        if trace is not None:
            trace.emit("run", algo="cubic", n=g.n, m=g.m, root=root)
            emit_dfs_tree(trace, tree)
            trace.emit("final", internal=internal, total=total)

        strict = get_solver_config()['strict_checks'] if strict is None else strict
        if strict:
            check_path_lemma(g, tree)
        if not bound_holds(internal, total, guarantee):
            raise InvariantViolation("ratio", f"internal {internal} of {total} is below {guarantee}")

        logger.info(f"✅ Cubic solve: n={g.n}, internal={internal}/{total}, bound={guarantee}")
        return SpanningTreeSolution(edges, internal, total, guarantee, "cubic", g.n, g.m)
    except Exception as e:
        logger.error(f"❌ Cubic solve failed: {e}")
        raise


def approx_cubic(
    g: VertexWeightedGraph,
    epsilon,
    cap: Optional[int] = None,
    trace: Optional[Trace] = None,
) -> SpanningTreeSolution:
    """
    (3/4 - epsilon)-approximation: exact when n <= 3/epsilon, greedy otherwise.

    Raises InvalidEpsilon unless 0 < epsilon < 3/4, checked before the
    n <= 3/epsilon test.
    """
    eps = as_epsilon(epsilon)
    if not Fraction(0) < eps < Fraction(3, 4):
        raise InvalidEpsilon(f"epsilon must lie in (0, 3/4), got {eps}")
    _require_cubic(g)

    if g.n * eps <= 3:
        logger.warning(f"⚠️ n={g.n} <= 3/epsilon, solving exactly")
        result = optimal_internal_spanning_tree(g, cap)
        total = g.total_weight()
        guarantee = cubic_bound(g.n) if total > 0 else Fraction(0)
        return SpanningTreeSolution(
            tuple(result.best_tree), result.opt_internal_weight, total, guarantee, "exact", g.n, g.m
        )
    return solve_cubic(g, trace=trace)


def _alternating_path(g: VertexWeightedGraph, tree: DfsTree, leaf: int, start: int) -> Tuple[List[int], List[int]]:
    """
    Lower vertices x_1..x_k and upper vertices x'_1..x'_k of the path that
    starts with the backward edge (leaf, start).
    """
    lowers: List[int] = []
    uppers: List[int] = []
    upper = start
    for _ in range(g.n):
        lower = tree.child_toward(upper, leaf)
        lowers.append(lower)
        uppers.append(upper)
        if unvisited_count_at(tree, g, lower, upper) >= 2:
            return lowers, uppers
        above = tree.uppers_of(lower)
        if not above:
            raise InvariantViolation("path-lemma", "path ends without a backward edge", lower)
        upper = above[0]
    raise InvariantViolation("path-lemma", "alternating path does not terminate", leaf)


def check_path_lemma(g: VertexWeightedGraph, tree: DfsTree) -> PathLemmaReport:
    """
    Verify the per-leaf weight argument behind the cubic bound.

    For every leaf a with backward edges to b'_1 (deeper) and c'_1, the
    alternating paths must collect weight at least 2w(a)/u(a) each, and
    3w(a) together. Path vertices other than the last upper one have tree
    degree 2, and the collected sets are pairwise disjoint except at the
    root's only child when the root closes two backward edges.
    """
    report = PathLemmaReport()
    occurrences: Counter = Counter()

    for a in tree.leaves():
        ups = tree.uppers_of(a)
        if len(ups) != 2:
            raise InvariantViolation("path-lemma", f"leaf has {len(ups)} backward edges", a)

        sets = []
        for start in ups:
            u_leaf = unvisited_count_at(tree, g, a, start)
            if u_leaf not in (1, 2):
                raise InvariantViolation("path-lemma", f"u(leaf)={u_leaf} while processing {start}", a)
            lowers, uppers = _alternating_path(g, tree, a, start)
            collected = g.weight_of(lowers)
            if u_leaf * collected < 2 * g.weights[a]:
                raise InvariantViolation(
                    "path-lemma", f"path from {start} collects {collected} < 2w/{u_leaf}", a
                )
            for x in lowers[:-1] + uppers[:-1]:
                if tree.tree_degree(x) != 2:
                    raise InvariantViolation("path-lemma", f"path vertex {x} has tree degree {tree.tree_degree(x)}", a)
            last = uppers[-1]
            if last != tree.root and tree.tree_degree(last) != 2:
                raise InvariantViolation("path-lemma", f"path top {last} has tree degree {tree.tree_degree(last)}", a)
            sets.append(tuple(lowers))
            occurrences.update(lowers)

        b_sum, c_sum = g.weight_of(sets[0]), g.weight_of(sets[1])
        if b_sum + c_sum < 3 * g.weights[a]:
            raise InvariantViolation("path-lemma", f"paths collect {b_sum + c_sum} < 3w", a)
        report.paths[a] = (sets[0], sets[1])
        report.sums[a] = (b_sum, c_sum)
        report.leaves_checked += 1

    root_backs = sum(1 for _, upper in tree.backward_edges if upper == tree.root)
    for x, count in occurrences.items():
        if count == 1:
            continue
        shareable = root_backs == 2 and tree.parent[x] == tree.root and count <= 2
        if not shareable:
            raise InvariantViolation("path-lemma", f"vertex lies on {count} leaf paths", x)
        report.shared_vertex = x

    logger.debug(f"🔍 Path check passed for {report.leaves_checked} leaves")
    return report
