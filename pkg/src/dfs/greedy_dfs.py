"""
Greedy depth-first search

Builds a rooted DFS tree where every branching step picks the unvisited
neighbor that is best under a BranchCriterion. Non-tree edges are
returned as backward edges (lower, upper) with upper an ancestor of lower.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from src.graph.core import Edge, VertexWeightedGraph
from src.utils.errors import InvariantViolation

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class BranchCriterion(Enum):
    """How the next vertex is chosen among the current vertex's unvisited neighbors"""
    RATIO = "ratio"            # max w(x)/u(x), u(x) = 0 ranks first
    MAX_WEIGHT = "max-weight"  # max w(x)


@dataclass(frozen=True)
class DfsTree:
    root: int
    parent: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    disc: Tuple[int, ...]
    order: Tuple[int, ...]
    backward_edges: Tuple[Edge, ...]
    size: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.disc)

    def tree_edges(self) -> List[Edge]:
        """Tree edges as (u, v) with u < v, sorted"""
        return sorted(
            (min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None
        )

    def tree_degree(self, v: int) -> int:
        return len(self.children[v]) + (0 if v == self.root else 1)

    def is_leaf(self, v: int) -> bool:
        # the root is never a leaf, even with a single child
        return v != self.root and not self.children[v]

    def leaves(self) -> List[int]:
        """Non-root childless vertices in discovery order"""
        return [v for v in self.order if self.is_leaf(v)]

    def is_ancestor(self, u: int, v: int) -> bool:
        return is_ancestor(self, u, v)

    def child_toward(self, u: int, v: int) -> int:
        """The child of u on the tree path from u down to its strict descendant v"""
        for c in self.children[u]:
            if is_ancestor(self, c, v):
                return c
        raise InvariantViolation("ancestor", f"{v} is not a strict descendant of {u}", u)

    def uppers_of(self, v: int) -> List[int]:
        """Upper endpoints of v's backward edges where v is the lower end, deepest first"""
        return self._uppers_by_lower().get(v, [])

    def _uppers_by_lower(self) -> Dict[int, List[int]]:
        cache = self.__dict__.get("_uppers_cache")
        if cache is None:
            cache: Dict[int, List[int]] = {}
            for lower, upper in self.backward_edges:
                cache.setdefault(lower, []).append(upper)
            for ups in cache.values():
                ups.sort(key=lambda x: -self.disc[x])
            object.__setattr__(self, "_uppers_cache", cache)
        return cache


def is_ancestor(t: DfsTree, u: int, v: int) -> bool:
    """True iff u lies on the tree path from the root to v (u == v included)"""
    return t.disc[u] <= t.disc[v] < t.disc[u] + t.size[u]


def unvisited_count_at(t: DfsTree, g: VertexWeightedGraph, x: int, probe: int) -> int:
    """u(x) right after probe was visited, rebuilt from discovery indices"""
    cutoff = t.disc[probe]
    return sum(1 for y in g.adjacency[x] if t.disc[y] > cutoff)


def _better(criterion: BranchCriterion, g: VertexWeightedGraph, unvisited: List[int], y: int, best: int) -> bool:
    wy, wb = g.weights[y], g.weights[best]
    if criterion is BranchCriterion.MAX_WEIGHT:
        return wy > wb
    uy, ub = unvisited[y], unvisited[best]
    if uy == 0 or ub == 0:
        return uy == 0 and ub != 0
    # w(y)/u(y) > w(best)/u(best), cross-multiplied
    return wy * ub > wb * uy


def run_greedy_dfs(g: VertexWeightedGraph, root: int, criterion: BranchCriterion) -> DfsTree:
    """
    Greedy DFS from root.

    At each step the current vertex's unvisited neighbors are rescanned and
    the best one under criterion is visited next; ties go to the smallest
    index because adjacency lists are sorted and only strict improvements
    replace the running best.
    """
    n = g.n
    disc = [-1] * n
    parent: List[Optional[int]] = [None] * n
    children: List[List[int]] = [[] for _ in range(n)]
    unvisited = [len(nbrs) for nbrs in g.adjacency]
    order: List[int] = []

    def visit(v: int) -> None:
        disc[v] = len(order)
        order.append(v)
        for y in g.adjacency[v]:
            unvisited[y] -= 1

    visit(root)
    stack = [root]
    while stack:
        x = stack[-1]
        best = -1
        for y in g.adjacency[x]:
            if disc[y] >= 0:
                continue
            if best < 0 or _better(criterion, g, unvisited, y, best):
                best = y
        if best < 0:
            stack.pop()
            continue
        parent[best] = x
        children[x].append(best)
        visit(best)
        stack.append(best)

    tree = _assemble(g, root, parent, children, order)
    logger.debug(
        f"🌳 {criterion.value} DFS from {root}: {n} vertices, "
        f"{len(tree.backward_edges)} backward edges, {len(tree.leaves())} leaves"
    )
    return tree


def check_backward_edges(t: DfsTree) -> None:
    """Every non-tree edge must join a vertex to one of its ancestors"""
    for lower, upper in t.backward_edges:
        if not is_ancestor(t, upper, lower):
            raise InvariantViolation("ancestor", f"edge ({lower}, {upper}) is a cross edge", lower)


def check_binary(t: DfsTree) -> None:
    """Max-weight DFS on a claw-free graph gives every node at most two children"""
    for v in t.order:
        if len(t.children[v]) > 2:
            raise InvariantViolation(
                "binary-tree", f"node has {len(t.children[v])} children {t.children[v]}", v
            )


def _assemble(
    g: VertexWeightedGraph,
    root: int,
    parent: List[Optional[int]],
    children: List[List[int]],
    order: List[int],
) -> DfsTree:
    n = g.n
    disc = [-1] * n
    for i, v in enumerate(order):
        disc[v] = i
    size = [1] * n
    for v in reversed(order):
        p = parent[v]
        if p is not None:
            size[p] += size[v]

    backward: List[Edge] = []
    for u, v in g.edges():
        if parent[u] == v or parent[v] == u:
            continue
        lower, upper = (u, v) if disc[u] > disc[v] else (v, u)
        backward.append((lower, upper))

    tree = DfsTree(
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        disc=tuple(disc),
        order=tuple(order),
        backward_edges=tuple(sorted(backward, key=lambda e: (disc[e[0]], disc[e[1]]))),
        size=tuple(size),
    )
    check_backward_edges(tree)
    return tree


def tree_from_children(g: VertexWeightedGraph, root: int, children: Dict[int, Sequence[int]]) -> DfsTree:
    """
    DfsTree for a given rooted spanning tree of g, children visited in
    the listed order. Raises InvariantViolation when some non-tree edge
    is not an ancestor edge.
    """
    parent: List[Optional[int]] = [None] * g.n
    child_lists: List[List[int]] = [list(children.get(v, ())) for v in range(g.n)]
    for v, kids in enumerate(child_lists):
        for c in kids:
            if not g.has_edge(v, c):
                raise InvariantViolation("spanning", f"tree edge ({v}, {c}) is not in the graph", v)
            parent[c] = v

    order: List[int] = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(child_lists[v]))
    if len(order) != g.n:
        raise InvariantViolation("spanning", f"tree reaches {len(order)} of {g.n} vertices", root)
    return _assemble(g, root, parent, child_lists, order)
