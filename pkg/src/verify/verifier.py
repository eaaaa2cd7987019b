"""
Solver-independent checking of spanning tree solutions and solver traces

verify_solution recomputes everything from the graph and an edge list.
audit_invariants replays a trace event by event: the DFS tree, every
charge move and every tree edit, reporting each broken property with
the index of the event where it first shows.

Nothing here imports solver code; bounds and tree arithmetic are
recomputed locally.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Set, Tuple

from src.graph.core import Edge, VertexWeightedGraph, degree_one_zeroed_weights
from src.verify.trace import Trace, TraceEvent

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

KINDS = ("cubic", "clawfree", "clawfree-dfs", "none")
FREE = -1

AUDIT_LABELS = (
    "ancestor",
    "binary-tree",
    "leaf-adjacency",
    "conservation",
    "double-removal",
    "double-add",
    "removed-edge-origin",
    "spanning",
    "rule-charge",
    "leaf-charge",
)


@dataclass(frozen=True)
class Violation:
    label: str
    message: str
    event: Optional[int] = None

    def __str__(self) -> str:
        where = f" (event {self.event})" if self.event is not None else ""
        return f"[{self.label}]{where} {self.message}"


@dataclass
class VerificationReport:
    """
    Recomputed facts about one tree.

    total_weight is the total the bound refers to (degree-1-zeroed for the
    claw-free kinds); raw_total_weight always uses the input weights.
    """
    kind: str = "none"
    is_spanning: bool = False
    internal_weight: int = 0
    total_weight: int = 0
    raw_total_weight: int = 0
    bound: Fraction = Fraction(0)
    bound_satisfied: bool = False
    violations: List[Violation] = field(default_factory=list)

    @property
    def ratio(self) -> Optional[Fraction]:
        return Fraction(self.internal_weight, self.total_weight) if self.total_weight else None

    @property
    def raw_ratio(self) -> Optional[Fraction]:
        return Fraction(self.internal_weight, self.raw_total_weight) if self.raw_total_weight else None

    @property
    def passed(self) -> bool:
        return self.is_spanning and self.bound_satisfied and not self.violations

    def labels(self) -> List[str]:
        return [v.label for v in self.violations]

    def add(self, label: str, message: str, event: Optional[int] = None) -> None:
        violation = Violation(label, message, event)
        if not self.violations:
            logger.warning(f"⚠️ First violation: {violation}")
        self.violations.append(violation)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _fmt(value: Optional[Fraction]) -> str:
    if value is None:
        return "none"
    return f"{value.numerator}/{value.denominator}"


def bound_for(kind: str, n: int) -> Fraction:
    """Clamped guarantee of a solver kind on n vertices"""
    if kind == "cubic":
        bound = Fraction(3, 4) - Fraction(3, n)
    elif kind == "clawfree":
        bound = Fraction(3, 5) - Fraction(3, 5 * n)
    elif kind == "clawfree-dfs":
        bound = Fraction(1, 2) - Fraction(1, n)
    elif kind == "none":
        bound = Fraction(0)
    else:
        raise ValueError(f"unknown verification kind {kind!r}; choose from {', '.join(KINDS)}")
    return max(bound, Fraction(0))


def _reference_weights(g: VertexWeightedGraph, kind: str) -> Tuple[int, ...]:
    return degree_one_zeroed_weights(g) if kind.startswith("clawfree") else g.weights


def _spanning_problems(g: VertexWeightedGraph, edges: List[Edge]) -> List[str]:
    problems = []
    dsu = _UnionFind(g.n)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            problems.append(f"edge ({u}, {v}) has an endpoint outside 0..{g.n - 1}")
            continue
        if not g.has_edge(u, v):
            problems.append(f"({u}, {v}) is not an edge of the graph")
        if not dsu.union(u, v):
            problems.append(f"edge ({u}, {v}) closes a cycle")
    if len(edges) != g.n - 1:
        problems.append(f"{len(edges)} edges, a spanning tree on {g.n} vertices has {g.n - 1}")
    elif not problems and len({dsu.find(v) for v in range(g.n)}) != 1:
        problems.append("edges do not connect every vertex")
    return problems


def _internal_weight(g: VertexWeightedGraph, edges: Iterable[Edge]) -> int:
    degree = [0] * g.n
    for u, v in edges:
        if 0 <= u < g.n and 0 <= v < g.n:
            degree[u] += 1
            degree[v] += 1
    return sum(w for w, d in zip(g.weights, degree) if d >= 2)


def _fill_totals(report: VerificationReport, g: VertexWeightedGraph, edges: List[Edge]) -> None:
    reference = _reference_weights(g, report.kind)
    report.internal_weight = _internal_weight(g, edges)
    report.total_weight = sum(reference)
    report.raw_total_weight = g.total_weight()
    report.bound = bound_for(report.kind, g.n) if report.total_weight > 0 else Fraction(0)
    report.bound_satisfied = (
        report.internal_weight * report.bound.denominator >= report.bound.numerator * report.total_weight
    )


def verify_solution(g: VertexWeightedGraph, solution, kind: str = "none") -> VerificationReport:
    """
    Check a tree against g from scratch.

    Args:
        g: the input graph
        solution: a SpanningTreeSolution or a plain sequence of (u, v) edges;
            only the edges are read
        kind: cubic, clawfree, clawfree-dfs or none, selecting the bound
    """
    bound_for(kind, max(g.n, 1))
    edges = [_norm(int(u), int(v)) for u, v in getattr(solution, "tree_edges", solution)]
    report = VerificationReport(kind=kind)
    for problem in _spanning_problems(g, edges):
        report.add("spanning", problem)
    report.is_spanning = not report.violations
    _fill_totals(report, g, edges)
    if not report.bound_satisfied:
        report.add("ratio", f"internal {report.internal_weight} below {_fmt(report.bound)} of {report.total_weight}")

    claimed = getattr(solution, "internal_weight", None)
    if claimed is not None and claimed != report.internal_weight:
        report.add("internal-weight", f"solution claims {claimed}, recomputed {report.internal_weight}")
    logger.debug(f"🔍 verify {kind}: {render(report)!r}")
    return report


# ---- Trace audit ----

class _Replay:
    """Mutable state rebuilt while walking a trace"""

    def __init__(self, g: VertexWeightedGraph, report: VerificationReport):
        self.g = g
        self.report = report
        self.algo = "none"
        self.root: Optional[int] = None
        self.parent: Dict[int, int] = {}
        self.children: Dict[int, List[int]] = defaultdict(list)
        self.backward: List[Tuple[int, int, int]] = []
        self.weights: Tuple[int, ...] = g.weights
        self.parcels: Dict[Tuple[int, int], int] = {}
        self.held: Dict[int, int] = defaultdict(int)
        self.initialized: Set[int] = set()
        self.rule_leaves: Dict[int, Set[int]] = defaultdict(set)
        self.edges: Set[Edge] = set()
        self.removed: Set[Edge] = set()
        self.added: Set[Edge] = set()
        self.allowed_cuts: Set[Edge] = set()
        self.branch_edges: Set[Edge] = set()
        self.tree_ready = False

    @property
    def charged(self) -> bool:
        return self.algo.startswith("clawfree")

    def add(self, label: str, message: str, index: int) -> None:
        self.report.add(label, message, index)

    # -- tree --

    def finish_tree(self, index: int) -> None:
        """Ancestor and binary checks once the whole DFS tree is known"""
        if self.tree_ready:
            return
        self.tree_ready = True
        if self.root is None:
            self.add("spanning", "trace has no run event", index)
            return

        disc: Dict[int, int] = {}
        size: Dict[int, int] = {}
        order: List[int] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            disc[v] = len(order)
            order.append(v)
            stack.extend(reversed(self.children[v]))
        for v in reversed(order):
            size[v] = 1 + sum(size[c] for c in self.children[v])

        def is_strict_ancestor(u: int, v: int) -> bool:
            return u in disc and v in disc and disc[u] < disc[v] < disc[u] + size[u]

        for lower, upper, at in self.backward:
            if not self.g.has_edge(lower, upper):
                self.add("ancestor", f"backward edge ({lower}, {upper}) is not in the graph", at)
            elif not is_strict_ancestor(upper, lower):
                self.add("ancestor", f"edge ({lower}, {upper}) joins no ancestor pair", at)

        if self.charged:
            for v in order:
                if len(self.children[v]) > 2:
                    self.add("binary-tree", f"vertex {v} has {len(self.children[v])} children", index)

        degree = {v: len(self.children[v]) + (0 if v == self.root else 1) for v in order}
        for leaf in order:
            if leaf == self.root or self.children[leaf]:
                continue
            v = leaf
            while v != self.root and degree[v] != 3:
                self.branch_edges.add(_norm(v, self.parent[v]))
                v = self.parent[v]

    def spanning_checkpoint(self, index: int, where: str) -> None:
        problems = _spanning_problems(self.g, sorted(self.edges))
        if problems:
            self.add("spanning", f"{where}: {problems[0]}", index)

    # -- charge --

    def init(self, source: int, amount: int, index: int) -> None:
        expected = 2 * self.weights[source]
        if amount != expected:
            self.add("conservation", f"vertex {source} starts with {amount}, expected {expected}", index)
        if source in self.initialized:
            self.add("conservation", f"vertex {source} initialized twice", index)
        self.initialized.add(source)
        self.parcels[(source, source)] = self.parcels.get((source, source), 0) + amount
        self.held[source] += amount

    def move(self, source: int, amount: int, frm: int, to: int, index: int) -> None:
        available = self.parcels.get((source, frm), 0)
        if amount <= 0 or amount > available:
            where = "free" if frm == FREE else frm
            self.add("conservation", f"move of {amount} units of {source} from {where} holding {available}", index)
            return
        self.parcels[(source, frm)] = available - amount
        self.parcels[(source, to)] = self.parcels.get((source, to), 0) + amount
        if frm != FREE:
            self.held[frm] -= amount
        if to != FREE:
            self.held[to] += amount

    def check_totals(self, index: int) -> None:
        per_source: Dict[int, int] = defaultdict(int)
        for (source, _), amount in self.parcels.items():
            per_source[source] += amount
        for v, w in enumerate(self.weights):
            if per_source.get(v, 0) != 2 * w:
                self.add("conservation", f"charge of {v} sums to {per_source.get(v, 0)}, expected {2 * w}", index)

    # -- tree edits --

    def remove(self, e: Edge, index: int) -> None:
        if e in self.removed:
            self.add("double-removal", f"edge {e} removed a second time", index)
            return
        if e not in self.edges:
            self.add("removed-edge-origin", f"edge {e} is not in the working tree", index)
            return
        if e not in self.branch_edges and e not in self.allowed_cuts:
            self.add("removed-edge-origin", f"edge {e} is neither in E nor on a leaf-branch", index)
        self.edges.discard(e)
        self.removed.add(e)

    def insert(self, e: Edge, index: int) -> None:
        if e in self.added or e in self.edges:
            self.add("double-add", f"edge {e} added while already present", index)
            return
        if not self.g.has_edge(*e):
            self.add("double-add", f"added edge {e} is not in the graph", index)
            return
        self.edges.add(e)
        self.added.add(e)

    def leaves_now(self) -> List[int]:
        degree: Dict[int, int] = defaultdict(int)
        for u, v in self.edges:
            degree[u] += 1
            degree[v] += 1
        return [v for v in range(self.g.n) if v != self.root and degree[v] == 1]


def _replay_event(state: _Replay, event: TraceEvent, index: int) -> None:
    kind = event.kind
    if kind == "run":
        state.algo = event.get("algo", "none")
        state.root = event.get_int("root")
        if state.charged:
            state.weights = degree_one_zeroed_weights(state.g)
        return
    if kind == "tree":
        p, c = event.get_int("parent"), event.get_int("child")
        state.parent[c] = p
        state.children[p].append(c)
        e = _norm(p, c)
        if not state.g.has_edge(*e):
            state.add("spanning", f"tree edge {e} is not in the graph", index)
        state.edges.add(e)
        return
    if kind == "back":
        state.backward.append((event.get_int("lower"), event.get_int("upper"), index))
        return
    if kind == "init":
        state.init(event.get_int("source"), event.get_int("amount"), index)
        return

    state.finish_tree(index)
    if kind == "move":
        state.move(
            event.get_int("source"), event.get_int("amount"),
            event.get_int("from"), event.get_int("to"), index,
        )
    elif kind == "rule":
        if event.get("share") != "reclaim":
            q = event.get_int("q")
            state.rule_leaves[q].add(event.get_int("leaf"))
            if len(state.rule_leaves[q]) > 2:
                state.add("leaf-adjacency", f"vertex {q} serves leaves {sorted(state.rule_leaves[q])}", index)
    elif kind == "classify":
        leaf = event.get_int("leaf")
        if state.held[leaf] < 4 * state.weights[leaf]:
            state.add("rule-charge", f"leaf {leaf} holds {state.held[leaf]} < {4 * state.weights[leaf]}", index)
    elif kind == "eset":
        state.allowed_cuts.add(_norm(event.get_int("u"), event.get_int("v")))
    elif kind in ("case", "bad"):
        state.spanning_checkpoint(index, f"before {kind} {event.get('name') or event.get('resolution')}")
        cut = event.get("cut")
        if cut:
            u, v = (int(x) for x in cut.split(","))
            state.allowed_cuts.add(_norm(u, v))
    elif kind == "remove":
        state.remove(_norm(event.get_int("u"), event.get_int("v")), index)
    elif kind == "add":
        state.insert(_norm(event.get_int("u"), event.get_int("v")), index)
    elif kind == "final":
        state.spanning_checkpoint(index, "final tree")
        if state.charged:
            state.check_totals(index)
        if state.algo == "clawfree":
            for v in state.leaves_now():
                if state.held[v] < 5 * state.weights[v]:
                    state.add("leaf-charge", f"final leaf {v} holds {state.held[v]} < {5 * state.weights[v]}", index)


def audit_invariants(g: VertexWeightedGraph, trace: Trace) -> VerificationReport:
    """
    Replay a solver trace against g and report every broken invariant.

    The report's tree facts describe the final working tree. Violations
    carry the index of the offending event.
    """
    report = VerificationReport()
    state = _Replay(g, report)
    events = list(trace)
    for index, event in enumerate(events):
        try:
            _replay_event(state, event, index)
        except (KeyError, ValueError, IndexError) as e:
            report.add("trace", f"unreadable {event.kind} event: {e}", index)
    state.finish_tree(len(events))

    report.kind = state.algo if state.algo in KINDS else "none"
    edges = sorted(state.edges)
    report.is_spanning = not _spanning_problems(g, edges)
    _fill_totals(report, g, edges)

    if report.violations:
        logger.warning(f"⚠️ Audit found {len(report.violations)} violations, first: {report.violations[0]}")
    else:
        logger.info(f"🔍 Audit passed: {len(events)} events, algo={state.algo}")
    return report


def render(report: VerificationReport) -> str:
    """Stable key-value lines, one fact per line"""
    lines = [
        f"kind {report.kind}",
        f"is_spanning {str(report.is_spanning).lower()}",
        f"internal_weight {report.internal_weight}",
        f"total_weight {report.total_weight}",
        f"raw_total_weight {report.raw_total_weight}",
        f"bound {_fmt(report.bound)}",
        f"bound_satisfied {str(report.bound_satisfied).lower()}",
        f"ratio {_fmt(report.ratio)}",
        f"raw_ratio {_fmt(report.raw_ratio)}",
        f"violations {len(report.violations)}",
    ]
    lines.extend(f"violation {v}" for v in report.violations)
    return "\n".join(lines) + "\n"
