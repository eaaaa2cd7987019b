"""
Exact MaxwIST oracle for small graphs

Enumerates spanning trees by include/exclude branching over the
lexicographically sorted edge list, with a rollback union-find. Branches
are cut when the optimistic bound (every vertex internal except those
forced to be leaves, and at least two leaves overall) cannot beat the
best tree found. Including before excluding visits trees in
lexicographic order, so the first optimum found is the smallest one.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.graph.core import Edge, VertexWeightedGraph
from src.utils.config import get_solver_config
from src.utils.errors import ExactSolveTooLarge, InvariantViolation

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    best_tree: Tuple[Edge, ...]
    opt_internal_weight: int
    trees_explored: int


class _RollbackUnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: List[Tuple[int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))
        return True

    def rollback(self) -> None:
        ra, rb = self.history.pop()
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]


class _Search:
    def __init__(self, g: VertexWeightedGraph):
        self.g = g
        self.edges = g.edges()
        self.total = g.total_weight()
        self.dsu = _RollbackUnionFind(g.n)
        self.tree_degree = [0] * g.n
        self.remaining = [g.degree(v) for v in range(g.n)]
        self.included: List[Edge] = []
        self.best_weight = -1
        self.best_tree: Tuple[Edge, ...] = ()
        self.explored = 0
        ordered = sorted(g.weights)
        self.ceiling = self.total - sum(ordered[:2]) if g.n >= 2 else 0

    def upper_bound(self) -> int:
        forced = [v for v in range(self.g.n) if self.tree_degree[v] + self.remaining[v] <= 1]
        bound = self.total - self.g.weight_of(forced)
        missing = 2 - len(forced)
        if missing > 0:
            forced_set = set(forced)
            others = sorted(w for v, w in enumerate(self.g.weights) if v not in forced_set)
            bound -= sum(others[:missing])
        return bound

    def still_connected_without(self, i: int) -> bool:
        """Included edges plus edges after position i still span the graph"""
        n = self.g.n
        comp = [self.dsu.find(v) for v in range(n)]
        probe = _RollbackUnionFind(n)
        merged = 0
        for v in range(n):
            if comp[v] != v and probe.union(v, comp[v]):
                merged += 1
        for u, v in self.edges[i + 1:]:
            if probe.union(u, v):
                merged += 1
        return merged == n - 1

    def evaluate(self) -> None:
        self.explored += 1
        internal = sum(w for w, d in zip(self.g.weights, self.tree_degree) if d >= 2)
        if internal > self.best_weight:
            self.best_weight = internal
            self.best_tree = tuple(self.included)

    def run(self, i: int) -> None:
        if self.best_weight >= self.ceiling:
            return
        needed = self.g.n - 1 - len(self.included)
        if needed == 0:
            self.evaluate()
            return
        if len(self.edges) - i < needed or self.upper_bound() <= self.best_weight:
            return

        u, v = self.edges[i]
        self.remaining[u] -= 1
        self.remaining[v] -= 1

        if self.dsu.union(u, v):
            self.tree_degree[u] += 1
            self.tree_degree[v] += 1
            self.included.append((u, v))
            self.run(i + 1)
            self.included.pop()
            self.tree_degree[u] -= 1
            self.tree_degree[v] -= 1
            self.dsu.rollback()

        if self.still_connected_without(i):
            self.run(i + 1)

        self.remaining[u] += 1
        self.remaining[v] += 1


def optimal_internal_spanning_tree(g: VertexWeightedGraph, cap: Optional[int] = None) -> OracleResult:
    """
    Exact optimum by spanning tree enumeration.

    Args:
        g: connected vertex-weighted graph
        cap: largest accepted vertex count; defaults to SOLVER_CONFIG oracle_cap

    Raises:
        ExactSolveTooLarge: if g.n exceeds cap
    """
    cap = get_solver_config()['oracle_cap'] if cap is None else cap
    if g.n > cap:
        raise ExactSolveTooLarge(f"n={g.n} exceeds the exact solver cap {cap}")

    if g.n == 1:
        return OracleResult((), 0, 1)

    search = _Search(g)
    search.run(0)
    if search.best_weight > search.ceiling:
        raise InvariantViolation("oracle", f"optimum {search.best_weight} above w(V) minus two lightest")

    logger.debug(
        f"📊 Exact solve n={g.n}: OPT={search.best_weight}, {search.explored} trees evaluated"
    )
    return OracleResult(search.best_tree, search.best_weight, search.explored)
