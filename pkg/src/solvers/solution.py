"""
Spanning tree solutions and exact bound arithmetic
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from src.dfs.greedy_dfs import DfsTree
from src.graph.core import Edge
from src.utils.errors import InvalidEpsilon
from src.verify.trace import Trace


@dataclass(frozen=True)
class SpanningTreeSolution:
    """
    Output of every solver.

    total_weight is the total the guarantee refers to; for the claw-free
    solvers that is the degree-1-zeroed total.
    """
    tree_edges: Tuple[Edge, ...]
    internal_weight: int
    total_weight: int
    guarantee: Fraction
    algorithm_tag: str
    n: int
    m: int

    @property
    def ratio(self) -> Optional[Fraction]:
        if self.total_weight == 0:
            return None
        return Fraction(self.internal_weight, self.total_weight)

    def meets_guarantee(self) -> bool:
        return bound_holds(self.internal_weight, self.total_weight, self.guarantee)


def tree_degrees(n: int, edges: Iterable[Edge]) -> List[int]:
    degrees = [0] * n
    for u, v in edges:
        degrees[u] += 1
        degrees[v] += 1
    return degrees


def internal_weight_of(weights: Sequence[int], edges: Iterable[Edge]) -> int:
    """Sum of weights over vertices with tree degree >= 2"""
    degrees = tree_degrees(len(weights), edges)
    return sum(w for w, d in zip(weights, degrees) if d >= 2)


def clamp_bound(bound: Fraction) -> Fraction:
    return bound if bound > 0 else Fraction(0)


def cubic_bound(n: int) -> Fraction:
    """max(0, 3/4 - 3/n)"""
    return clamp_bound(Fraction(3, 4) - Fraction(3, n))


def clawfree_bound(n: int) -> Fraction:
    """max(0, 3/5 - 3/(5n))"""
    return clamp_bound(Fraction(3, 5) - Fraction(3, 5 * n))


def clawfree_interim_bound(n: int) -> Fraction:
    """max(0, 1/2 - 1/n), what the max-weight DFS tree alone achieves"""
    return clamp_bound(Fraction(1, 2) - Fraction(1, n))


def bound_holds(internal: int, total: int, bound: Fraction) -> bool:
    """internal >= bound * total, cross-multiplied"""
    return internal * bound.denominator >= bound.numerator * total


def as_epsilon(value) -> Fraction:
    """Exact rational from a Fraction, int or decimal text"""
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidEpsilon(f"not a decimal number: {value!r}")


def emit_dfs_tree(trace: Optional[Trace], tree: DfsTree) -> None:
    """Record tree edges in discovery order followed by the backward edges"""
    if trace is None:
        return
    for v in tree.order:
        p = tree.parent[v]
        if p is not None:
            trace.emit("tree", parent=p, child=v)
    for lower, upper in tree.backward_edges:
        trace.emit("back", lower=lower, upper=upper)


def format_solution(solution: SpanningTreeSolution) -> str:
    """Header line followed by one "u v" line per tree edge"""
    g = solution.guarantee
    lines = [
        f"internal {solution.internal_weight} total {solution.total_weight} "
        f"bound {g.numerator}/{g.denominator} n {solution.n} m {solution.m} "
        f"algo {solution.algorithm_tag}"
    ]
    lines.extend(f"{u} {v}" for u, v in sorted(solution.tree_edges))
    return "\n".join(lines) + "\n"


def format_dot(solution: SpanningTreeSolution) -> str:
    """Graphviz text for the tree; internal vertices are boxes"""
    degrees = tree_degrees(solution.n, solution.tree_edges)
    lines = ["graph T {"]
    for v, d in enumerate(degrees):
        shape = "box" if d >= 2 else "ellipse"
        lines.append(f"  {v} [shape={shape}];")
    lines.extend(f"  {u} -- {v};" for u, v in sorted(solution.tree_edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
