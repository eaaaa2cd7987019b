"""
Vertex-weighted graph representation

Immutable simple undirected connected graphs with non-negative integer
vertex weights, plus the class-recognition predicates the solvers need.
Vertex identity is the 0-based input index; every tie-break in the
package falls back to this index.
"""

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from src.utils.errors import (
    Disconnected,
    DuplicateEdge,
    IndexOutOfRange,
    NegativeWeight,
    SelfLoop,
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class VertexWeightedGraph:
    """Validated graph; build instances through build_graph"""
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    weights: Tuple[int, ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        # adjacency lists are sorted and short for the graph classes we target
        return v in self.adjacency[u]

    def edges(self) -> List[Edge]:
        """All edges as (u, v) with u < v, lexicographically sorted"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def total_weight(self) -> int:
        return sum(self.weights)

    def weight_of(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)

    def with_weights(self, weights: Sequence[int]) -> "VertexWeightedGraph":
        """Same topology, different weights"""
        if len(weights) != self.n:
            raise IndexOutOfRange(f"expected {self.n} weights, got {len(weights)}")
        for v, w in enumerate(weights):
            if w < 0:
                raise NegativeWeight(f"vertex {v} has weight {w}")
        return VertexWeightedGraph(self.n, self.adjacency, tuple(int(w) for w in weights), self.m)


def build_graph(n: int, weights: Sequence[int], edges: Iterable[Edge]) -> VertexWeightedGraph:
    """
    Validate and build a vertex-weighted graph.

    Args:
        n: vertex count
        weights: one non-negative integer per vertex
        edges: undirected vertex pairs, each listed once

    Raises:
        IndexOutOfRange, NegativeWeight, SelfLoop, DuplicateEdge, Disconnected
    """
    if n < 1:
        raise IndexOutOfRange(f"graph needs at least one vertex, got n={n}")
    if len(weights) != n:
        raise IndexOutOfRange(f"expected {n} weights, got {len(weights)}")
    for v, w in enumerate(weights):
        if w < 0:
            raise NegativeWeight(f"vertex {v} has weight {w}")

    neighbor_sets: List[set] = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if v in neighbor_sets[u]:
            raise DuplicateEdge(f"edge ({min(u, v)}, {max(u, v)}) listed twice")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
        m += 1

    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    if not _is_connected(n, adjacency):
        raise Disconnected(f"graph with n={n}, m={m} is not connected")

    return VertexWeightedGraph(n, adjacency, tuple(int(w) for w in weights), m)


def _is_connected(n: int, adjacency: Sequence[Sequence[int]]) -> bool:
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for x in adjacency[v]:
            if not seen[x]:
                seen[x] = True
                reached += 1
                queue.append(x)
    return reached == n


def edges_span(n: int, edges: Iterable[Edge]) -> bool:
    """True iff edges form a spanning tree on n vertices"""
    edges = list(edges)
    if len(edges) != n - 1:
        return False
    adjacency: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return _is_connected(n, adjacency)


def is_cubic(g: VertexWeightedGraph) -> bool:
    """True iff every vertex has degree exactly 3"""
    return all(len(nbrs) == 3 for nbrs in g.adjacency)


def is_claw_free(g: VertexWeightedGraph) -> bool:
    """
    True iff no vertex has three pairwise non-adjacent neighbors.

    Scans every neighbor triple of every vertex, O(sum of deg^3).
    """
    claw = find_claw(g)
    if claw is not None:
        logger.debug(f"claw centred at {claw[0]}: leaves {claw[1:]}")
    return claw is None


def find_claw(g: VertexWeightedGraph):
    """Return (center, x, y, z) of some induced K_{1,3}, or None"""
    neighbor_sets = [set(nbrs) for nbrs in g.adjacency]
    for v in range(g.n):
        for x, y, z in combinations(g.adjacency[v], 3):
            if y not in neighbor_sets[x] and z not in neighbor_sets[x] and z not in neighbor_sets[y]:
                return v, x, y, z
    return None


def min_degree(g: VertexWeightedGraph) -> int:
    return min(len(nbrs) for nbrs in g.adjacency)


def closed_neighborhood_weight(g: VertexWeightedGraph, v: int) -> int:
    """w(N(v)): weight of v plus the weights of all its neighbors"""
    return g.weights[v] + sum(g.weights[x] for x in g.adjacency[v])


def degree_one_zeroed_weights(g: VertexWeightedGraph) -> Tuple[int, ...]:
    """Weights with every degree-1 vertex set to 0 (such vertices are leaves of every spanning tree)"""
    return tuple(0 if len(g.adjacency[v]) == 1 else g.weights[v] for v in range(g.n))
