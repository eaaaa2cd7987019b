"""
Max-weight DFS solver for claw-free graphs without degree-2 vertices

Pipeline:
    1. max-weight greedy DFS from a minimum-weight root gives a binary tree T
    2. every vertex gets a charge equal to its weight; internal vertices
       hand whole or half charges to the leaves whose backward edges end
       at their parents
    3. leaves holding at least 2.5 w are good; the others are bad
    4. tree edges (a_1, a_2) above a leaf's branching vertex are collected
       and processed one by one, rewiring a copy T' of T and moving charge
    5. the remaining bad leaves borrow a released half-charge
Afterwards every non-root leaf of T' holds at least 2.5 times its weight,
so w(internal) >= (3/5 - 3/(5n)) w(V).

Degree-1 vertices are leaves of every spanning tree; they run with
weight 0 and their leaves are skipped. All charge arithmetic is in
half-weight units (see ChargeLedger).
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from src.charge.ledger import FREE, HALF, WHOLE, ChargeLedger
from src.dfs.greedy_dfs import BranchCriterion, DfsTree, check_binary, is_ancestor, run_greedy_dfs
from src.graph.core import Edge, VertexWeightedGraph, degree_one_zeroed_weights, edges_span, find_claw
from src.monitoring.solver_metrics import with_metrics
from src.oracle.exact import optimal_internal_spanning_tree
from src.solvers.solution import (
    SpanningTreeSolution,
    as_epsilon,
    bound_holds,
    clawfree_bound,
    clawfree_interim_bound,
    emit_dfs_tree,
    internal_weight_of,
)
from src.utils.config import get_solver_config
from src.utils.errors import HasDegreeTwoVertex, InvalidEpsilon, InvariantViolation, NotClawFree
from src.verify.trace import Trace

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

GOOD = "good"
BAD = "bad"


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LeafAnnotation:
    """
    Where a leaf's backward edges land and where its branch starts.

    a_list holds the upper endpoints deepest first, a_prime_list the child
    of each toward the leaf. a_star is the nearest tree-degree-3 ancestor
    (the root when there is none) and a_prime_star its child toward the
    leaf. The branch is short when the leaf hangs directly off a_star.
    """
    leaf: int
    a_list: Tuple[int, ...]
    a_prime_list: Tuple[int, ...]
    a_star: int
    a_prime_star: int
    short: bool

    @property
    def processed(self) -> bool:
        return len(self.a_list) >= 2

    @property
    def a1(self) -> int:
        return self.a_list[0]

    @property
    def a2(self) -> int:
        return self.a_list[1]

    @property
    def a1p(self) -> int:
        return self.a_prime_list[0]

    @property
    def a2p(self) -> int:
        return self.a_prime_list[1]


@dataclass(frozen=True)
class EEntry:
    a1: int
    a2: int
    leaf: int

    @property
    def key(self) -> Edge:
        return _edge(self.a1, self.a2)


@dataclass
class RewriteState:
    """Everything one claw-free run mutates"""
    g: VertexWeightedGraph
    tree: DfsTree
    annotations: Dict[int, LeafAnnotation]
    ledger: ChargeLedger
    trace: Optional[Trace] = None
    strict: bool = True
    edges: Set[Edge] = field(default_factory=set)
    degree: List[int] = field(default_factory=list)
    E: List[EEntry] = field(default_factory=list)
    E_keys: Set[Edge] = field(default_factory=set)
    saturated: Dict[int, int] = field(default_factory=dict)
    removed: Set[Edge] = field(default_factory=set)
    added: Set[Edge] = field(default_factory=set)
    status: Dict[int, str] = field(default_factory=dict)
    introducers: Set[int] = field(default_factory=set)
    prime_owners: Dict[int, List[Tuple[int, int]]] = field(default_factory=dict)
    star_count: Counter = field(default_factory=Counter)

    @classmethod
    def start(
        cls,
        g: VertexWeightedGraph,
        tree: DfsTree,
        annotations: List[LeafAnnotation],
        trace: Optional[Trace] = None,
        strict: bool = True,
    ) -> "RewriteState":
        ledger = ChargeLedger(g.weights, on_move=trace.move_hook if trace is not None else None)
        state = cls(g, tree, {ann.leaf: ann for ann in annotations}, ledger, trace, strict)
        state.edges = set(tree.tree_edges())
        state.degree = [tree.tree_degree(v) for v in range(g.n)]
        for ann in annotations:
            state.star_count[ann.a_star] += 1
            if ann.processed:
                for j in (0, 1):
                    state.prime_owners.setdefault(ann.a_prime_list[j], []).append((ann.leaf, j))
        return state

    def emit(self, kind: str, **fields) -> None:
        if self.trace is not None:
            self.trace.emit(kind, **fields)

    def w(self, v: int) -> int:
        return self.g.weights[v]

    def processed_leaves(self) -> List[LeafAnnotation]:
        return [self.annotations[v] for v in self.tree.order if v in self.annotations and self.annotations[v].processed]

    def is_deep(self, x: int) -> bool:
        return self.tree.tree_degree(x) == 3 and self.star_count[x] == 2

    def is_leaf_now(self, v: int) -> bool:
        return v != self.tree.root and self.degree[v] == 1

    def remove_edge(self, u: int, v: int) -> None:
        e = _edge(u, v)
        if e in self.removed:
            raise InvariantViolation("double-removal", f"edge {e} removed twice", u)
        if e not in self.edges:
            raise InvariantViolation("removed-edge-origin", f"edge {e} is not in the working tree", u)
        self.edges.discard(e)
        self.degree[u] -= 1
        self.degree[v] -= 1
        self.removed.add(e)
        self.emit("remove", u=e[0], v=e[1])
        logger.debug(f"🌳 remove {e}")

    def add_edge(self, u: int, v: int) -> None:
        e = _edge(u, v)
        if e in self.added or e in self.edges:
            raise InvariantViolation("double-add", f"edge {e} added twice", u)
        if not self.g.has_edge(u, v):
            raise InvariantViolation("double-add", f"edge {e} is not in the graph", u)
        self.edges.add(e)
        self.degree[u] += 1
        self.degree[v] += 1
        self.added.add(e)
        self.emit("add", u=e[0], v=e[1])
        logger.debug(f"🌳 add {e}")

    def check_spanning(self) -> None:
        if not edges_span(self.g.n, self.edges):
            raise InvariantViolation("spanning", f"working tree with {len(self.edges)} edges is not spanning")

    def require_charge(self, v: int, where: str) -> None:
        """Leaf v must hold at least 2.5 w(v), i.e. 5 w(v) half-units"""
        held = self.ledger.held(v)
        if held < 5 * self.w(v):
            raise InvariantViolation("leaf-charge", f"{where}: holds {held} < {5 * self.w(v)} half-units", v)


# ---- Preconditions and the DFS tree ----

def _require_clawfree(g: VertexWeightedGraph) -> None:
    for v in range(g.n):
        if g.degree(v) == 2:
            raise HasDegreeTwoVertex(f"vertex {v} has degree 2")
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFree(f"vertex {claw[0]} is the center of a claw with leaves {claw[1:]}")


def select_root_clawfree(g: VertexWeightedGraph) -> int:
    """Minimum-weight vertex, smallest index on ties"""
    return min(range(g.n), key=lambda v: (g.weights[v], v))


def _max_weight_tree(g: VertexWeightedGraph) -> Tuple[VertexWeightedGraph, DfsTree]:
    _require_clawfree(g)
    work = g.with_weights(degree_one_zeroed_weights(g))
    tree = run_greedy_dfs(work, select_root_clawfree(work), BranchCriterion.MAX_WEIGHT)
    check_binary(tree)
    return work, tree


def annotate_leaves(tree: DfsTree, g: VertexWeightedGraph) -> List[LeafAnnotation]:
    """One annotation per leaf of T, in discovery order"""
    annotations = []
    for a in tree.leaves():
        a_list = tuple(tree.uppers_of(a))
        a_prime_list = tuple(tree.child_toward(q, a) for q in a_list)
        for q, qp in zip(a_list, a_prime_list):
            if g.weights[qp] < g.weights[a]:
                raise InvariantViolation("greedy-weight", f"child {qp} of {q} is lighter than the leaf", a)

        star = tree.parent[a]
        while star != tree.root and tree.tree_degree(star) != 3:
            star = tree.parent[star]
        annotations.append(LeafAnnotation(
            leaf=a,
            a_list=a_list,
            a_prime_list=a_prime_list,
            a_star=star,
            a_prime_star=tree.child_toward(star, a),
            short=tree.parent[a] == star,
        ))
    return annotations


# ---- Charge rules ----

def distribute_rules(state: RewriteState) -> None:
    """
    Hand each internal q's child charges to the leaves with q in {a_1, a_2}.

    One such leaf takes the whole charge of its a'_i, two leaves take half
    each. Afterwards every processed leaf holds at least 2 w.
    """
    claims: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for ann in state.processed_leaves():
        for j in (0, 1):
            claims[ann.a_list[j]].append((ann.leaf, j))

    for q in sorted(claims, key=lambda x: state.tree.disc[x]):
        leaves = claims[q]
        if len(leaves) > 2:
            raise InvariantViolation("leaf-adjacency", f"adjacent to leaves {[a for a, _ in leaves]}", q)
        share = WHOLE if len(leaves) == 1 else HALF
        for a, j in leaves:
            source = state.annotations[a].a_prime_list[j]
            state.emit("rule", q=q, leaf=a, source=source, share=share)
            state.ledger.transfer(source, share, source, a)

    for ann in state.processed_leaves():
        held = state.ledger.held(ann.leaf)
        if held < 4 * state.w(ann.leaf):
            raise InvariantViolation("rule-charge", f"holds {held} < {4 * state.w(ann.leaf)} after the rules", ann.leaf)


def reclaim_split_halves(state: RewriteState) -> None:
    """
    Give a would-be-bad leaf the halves that a split rule left unused.

    When the rule at q split between two different children, each child
    kept half of its own charge. A leaf whose a'_1 starts its own branch
    (a_1 = a_star) can take the rest of a'_1, and a leaf whose a'_2 serves
    no other leaf can take the rest of a'_2. Nothing later draws on
    either half.
    """
    for ann in state.processed_leaves():
        a = ann.leaf
        if state.ledger.held(a) >= 5 * state.w(a):
            continue
        candidates = []
        if ann.a1 == ann.a_star:
            candidates.append(ann.a1p)
        if all(owner == a for owner, _ in state.prime_owners.get(ann.a2p, [])):
            candidates.append(ann.a2p)
        for source in candidates:
            if state.ledger.held(a) >= 5 * state.w(a):
                break
            spare = state.ledger.amount_at(source, source)
            if spare:
                state.emit("rule", q=state.tree.parent[source], leaf=a, source=source, share="reclaim")
                state.ledger.move(source, spare, source, a)


def classify_leaf(state: RewriteState, a: int) -> str:
    """
    good iff the leaf holds at least 2.5 w(a).

    A bad leaf must have a_1 strictly above a_star and share a'_2 with
    another leaf.
    """
    ann = state.annotations[a]
    held = state.ledger.held(a)
    status = GOOD if held >= 5 * state.w(a) else BAD
    state.status[a] = status
    state.emit("classify", leaf=a, held=held, status=status)

    if status == BAD:
        if ann.a1 == ann.a_star or not is_ancestor(state.tree, ann.a1, ann.a_star):
            raise InvariantViolation("bad-leaf", f"a_1={ann.a1} is not strictly above a_star={ann.a_star}", a)
        if not any(owner != a for owner, _ in state.prime_owners.get(ann.a2p, [])):
            raise InvariantViolation("bad-leaf", f"a'_2={ann.a2p} serves no other leaf", a)
    return status


def build_E(state: RewriteState) -> None:
    """
    Collect tree edges (a_1, a_2) with both ends strictly above a_star.

    Duplicates keep the introducer discovered first; entries come out in
    discovery order of their introducers.
    """
    tree = state.tree
    for ann in state.processed_leaves():
        if ann.a_star in (ann.a1, ann.a2):
            continue
        if not (is_ancestor(tree, ann.a1, ann.a_star) and is_ancestor(tree, ann.a2, ann.a_star)):
            continue
        if tree.parent[ann.a1] != ann.a2:
            continue
        entry = EEntry(ann.a1, ann.a2, ann.leaf)
        if entry.key in state.E_keys:
            continue
        state.E_keys.add(entry.key)
        state.E.append(entry)
        state.introducers.add(ann.leaf)
        state.emit("eset", u=entry.a1, v=entry.a2, leaf=ann.leaf)


# ---- Rewiring ----

def _reattach_leaf(state: RewriteState, ann: LeafAnnotation, cut: Edge) -> None:
    """Remove (a_1, a_2) and cut, then hang the leaf between a_1 and a_2"""
    state.remove_edge(ann.a1, ann.a2)
    state.remove_edge(*cut)
    state.add_edge(ann.leaf, ann.a1)
    state.add_edge(ann.leaf, ann.a2)


def process_E_edge(state: RewriteState, entry: EEntry) -> str:
    """Apply the one case that fits entry's introducer; returns the case name"""
    ann = state.annotations[entry.leaf]
    a, star, star_child = ann.leaf, ann.a_star, ann.a_prime_star
    ledger = state.ledger
    tree = state.tree

    if star not in state.saturated:
        if ann.short:
            name = "1.1"
            state.emit("case", name=name, leaf=a)
            _reattach_leaf(state, ann, (a, star))
            ledger.release_all(ann.a1p, a)
            ledger.release_all(ann.a2p, a)
            if state.is_deep(star):
                state.saturated[star] = a
                state.emit("saturate", vertex=star, leaf=a)
            created: List[int] = []
        else:
            parent = tree.parent[a]
            if state.w(parent) >= state.w(a):
                name = "1.2-keep"
                state.emit("case", name=name, leaf=a)
                ledger.transfer(parent, WHOLE, parent, a)
                ledger.release(ann.a2p, HALF, a)
                created = []
            else:
                name = "1.2-rewire"
                state.emit("case", name=name, leaf=a)
                _reattach_leaf(state, ann, (a, parent))
                ledger.transfer(a, WHOLE, a, parent)
                ledger.transfer(ann.a1p, HALF, a, parent)
                ledger.release(ann.a2p, HALF, a)
                created = [parent]
    elif ann.a1 == tree.parent[star]:
        name = "2"
        state.emit("case", name=name, leaf=a)
        ledger.claim_free(star, a, 2 * state.w(star) - ledger.amount_at(star, a))
        created = []
    elif ann.short:
        if state.w(star) >= state.w(a):
            name = "3.1-keep"
            state.emit("case", name=name, leaf=a)
            ledger.claim_free(star, a, 2 * state.w(star))
            ledger.release(ann.a2p, HALF, a)
            created = []
        else:
            name = "3.1-rewire"
            state.emit("case", name=name, leaf=a)
            _reattach_leaf(state, ann, (a, star))
            ledger.claim_free(star, star, 2 * state.w(star) - ledger.amount_at(star, star))
            ledger.transfer(a, WHOLE, a, star)
            ledger.transfer(ann.a1p, HALF, a, star)
            ledger.release(ann.a2p, HALF, a)
            created = [star]
    else:
        if state.w(star) + state.w(star_child) >= state.w(a):
            name = "3.2-keep"
            state.emit("case", name=name, leaf=a)
            ledger.claim_free(star, a, 2 * state.w(star))
            ledger.transfer(star_child, WHOLE, star_child, a)
            ledger.release(ann.a2p, HALF, a)
            created = []
        else:
            name = "3.2-rewire"
            state.emit("case", name=name, leaf=a)
            _reattach_leaf(state, ann, (star, star_child))
            ledger.claim_free(star, star, 2 * state.w(star) - ledger.amount_at(star, star))
            ledger.split_transfer_to_two(
                [(a, ledger.amount_at(a, a)), (ann.a1p, state.w(ann.a1p))],
                a,
                star, 3 * state.w(star),
                star_child, 3 * state.w(star_child),
            )
            ledger.release(ann.a2p, HALF, a)
            created = [star, star_child]

    if state.is_leaf_now(a):
        state.require_charge(a, f"introducer after case {name}")
    for v in created:
        state.require_charge(v, f"new leaf from case {name}")
    if state.strict:
        state.check_spanning()
    logger.debug(f"case {name} for leaf {a} on E edge {entry.key}")
    return name


def _claim_for_bad_leaf(state: RewriteState, ann: LeafAnnotation, reserved: Set[int]) -> None:
    """
    Claim the free half of a'_2, then cover any shortfall from free pools.

    The partner of a'_2 keeps its half when its E entry went through
    case 2, so the half of a'_2 can be missing. The rest then comes from
    the free pools of a'_1 and a_star; w(a'_1) >= w(a) makes one free
    half of a'_1 enough. Vertices in reserved are the a'_2 of bad leaves
    still waiting and are left alone.
    """
    a, source = ann.leaf, ann.a2p
    ledger = state.ledger
    available = ledger.free_of(source) + ledger.amount_at(source, source)
    if available:
        ledger.claim_free(source, a, min(state.w(source), available))

    need = 5 * state.w(a) - ledger.held(a)
    for v in (ann.a1p, ann.a_star):
        if need <= 0:
            break
        if v == source or v in reserved:
            continue
        take = min(need, ledger.free_of(v))
        if take:
            logger.debug(f"bad leaf {a} takes {take} free units of {v} in place of a'_2={source}")
            ledger.move(v, take, FREE, a)
            need -= take


def handle_bad_leaf(state: RewriteState, a: int, reserved: Optional[Set[int]] = None) -> str:
    """
    Top up a bad leaf that introduced nothing with a free half of a'_2.

    Returns the resolution used: i, ii, iii or iv.
    """
    ann = state.annotations[a]
    ledger = state.ledger
    source = ann.a2p

    if ann.a1 == source:
        resolution, cut = "i", None
    else:
        partners = [
            (b, j) for b, j in state.prime_owners.get(source, [])
            if b != a and state.g.has_edge(b, state.annotations[b].a_prime_list[j])
        ]
        if len(partners) != 1:
            raise InvariantViolation("bad-leaf", f"expected one partner leaf for a'_2={source}, found {partners}", a)
        b, j = partners[0]
        b_ann = state.annotations[b]
        if j == 1:
            resolution, cut = "ii", None
        elif _edge(b_ann.a1, b_ann.a2) in state.E_keys:
            resolution, cut = "iii", None
        else:
            resolution, cut = "iv", (b_ann.a_star, b_ann.a1)

    if cut is None:
        state.emit("bad", leaf=a, resolution=resolution)
        _claim_for_bad_leaf(state, ann, reserved or set())
    else:
        state.emit("bad", leaf=a, resolution=resolution, cut=list(_edge(*cut)))
        state.remove_edge(*cut)
        state.add_edge(b, b_ann.a1)
        ledger.transfer(source, HALF, b, a)

    state.require_charge(a, f"bad leaf after resolution {resolution}")
    if state.strict:
        state.check_spanning()
    logger.debug(f"bad leaf {a} resolved by ({resolution})")
    return resolution


def rewire(state: RewriteState) -> Tuple[Counter, Counter]:
    """
    Turn the charged DFS tree into T' in place.

    Returns the counts of E cases and of bad-leaf resolutions applied.
    Afterwards every non-root leaf of T' holds at least 2.5 times its
    weight.
    """
    reclaim_split_halves(state)
    leaves = state.processed_leaves()
    for ann in leaves:
        classify_leaf(state, ann.leaf)
    build_E(state)

    cases = Counter(process_E_edge(state, entry) for entry in state.E)

    waiting = [ann for ann in leaves if state.status[ann.leaf] == BAD and ann.leaf not in state.introducers]
    resolutions = Counter()
    for i, ann in enumerate(waiting):
        a = ann.leaf
        if not state.is_leaf_now(a) or state.ledger.held(a) >= 5 * state.w(a):
            continue
        reserved = {later.a2p for later in waiting[i + 1:]}
        resolutions[handle_bad_leaf(state, a, reserved)] += 1

    state.check_spanning()
    for v in range(state.g.n):
        if state.is_leaf_now(v):
            state.require_charge(v, "final tree")
    if state.strict:
        state.ledger.check_conservation()
    return cases, resolutions


# ---- Entry points ----

def _charged_state(
    g: VertexWeightedGraph, trace: Optional[Trace], strict: bool, algo: str
) -> RewriteState:
    """Build T, annotate it and apply the charge rules"""
    work, tree = _max_weight_tree(g)
    if trace is not None:
        trace.emit("run", algo=algo, n=g.n, m=g.m, root=tree.root)
        for v, w in enumerate(work.weights):
            if w > 0:
                trace.emit("init", source=v, amount=2 * w)
        emit_dfs_tree(trace, tree)

    state = RewriteState.start(work, tree, annotate_leaves(tree, work), trace, strict)
    distribute_rules(state)

    interim = internal_weight_of(work.weights, state.edges)
    total = work.total_weight()
    if not bound_holds(interim, total, clawfree_interim_bound(g.n)):
        raise InvariantViolation("ratio", f"DFS tree keeps only {interim} of {total}")
    return state


def _solution(g: VertexWeightedGraph, work_total: int, edges, guarantee: Fraction, tag: str) -> SpanningTreeSolution:
    ordered = tuple(sorted(edges))
    internal = internal_weight_of(g.weights, ordered)
    if not bound_holds(internal, work_total, guarantee):
        raise InvariantViolation("ratio", f"internal {internal} of {work_total} is below {guarantee}")
    return SpanningTreeSolution(ordered, internal, work_total, guarantee, tag, g.n, g.m)


@with_metrics("clawfree")
def solve_clawfree(
    g: VertexWeightedGraph,
    trace: Optional[Trace] = None,
    strict: Optional[bool] = None,
) -> SpanningTreeSolution:
    """
    Rewired max-weight DFS tree with internal weight >= (3/5 - 3/(5n)) w'(V).

    w' zeroes the weight of every degree-1 vertex; the returned
    total_weight is w'(V).

    Raises:
        NotClawFree, HasDegreeTwoVertex: input outside the supported class
        InvariantViolation: if a proven property fails (implementation bug)
    """
    strict = get_solver_config()['strict_checks'] if strict is None else strict
    try:
        state = _charged_state(g, trace, strict, "clawfree")
        cases, resolutions = rewire(state)

        total = state.g.total_weight()
        guarantee = clawfree_bound(g.n) if total > 0 else Fraction(0)
        solution = _solution(g, total, state.edges, guarantee, "clawfree")
        state.emit("final", internal=solution.internal_weight, total=total)

        bad = sum(1 for s in state.status.values() if s == BAD)
        logger.info(
            f"✅ Claw-free solve: n={g.n}, internal={solution.internal_weight}/{total}, "
            f"bound={guarantee}, |E|={len(state.E)}, bad leaves={bad}, "
            f"cases={dict(cases)}, bad-leaf fixes={dict(resolutions)}"
        )
        return solution
    except Exception as e:
        logger.error(f"❌ Claw-free solve failed: {e}")
        raise


@with_metrics("clawfree-dfs")
def solve_clawfree_dfs(
    g: VertexWeightedGraph,
    trace: Optional[Trace] = None,
    strict: Optional[bool] = None,
) -> SpanningTreeSolution:
    """The max-weight DFS tree itself, internal weight >= (1/2 - 1/n) w'(V)"""
    strict = get_solver_config()['strict_checks'] if strict is None else strict
    try:
        state = _charged_state(g, trace, strict, "clawfree-dfs")
        total = state.g.total_weight()
        guarantee = clawfree_interim_bound(g.n) if total > 0 else Fraction(0)
        solution = _solution(g, total, state.edges, guarantee, "clawfree-dfs")
        state.emit("final", internal=solution.internal_weight, total=total)
        logger.info(f"✅ Claw-free DFS: n={g.n}, internal={solution.internal_weight}/{total}, bound={guarantee}")
        return solution
    except Exception as e:
        logger.error(f"❌ Claw-free DFS failed: {e}")
        raise


def _exact_clawfree(g: VertexWeightedGraph, cap: Optional[int], guarantee_of) -> SpanningTreeSolution:
    logger.warning(f"⚠️ n={g.n} below 1/epsilon, solving exactly")
    result = optimal_internal_spanning_tree(g, cap)
    total = sum(degree_one_zeroed_weights(g))
    guarantee = guarantee_of(g.n) if total > 0 else Fraction(0)
    return SpanningTreeSolution(
        tuple(result.best_tree), result.opt_internal_weight, total, guarantee, "exact", g.n, g.m
    )


def approx_clawfree(
    g: VertexWeightedGraph,
    epsilon,
    cap: Optional[int] = None,
    trace: Optional[Trace] = None,
) -> SpanningTreeSolution:
    """(3/5 - epsilon)-approximation: exact when n < 1/epsilon, rewired DFS otherwise"""
    eps = as_epsilon(epsilon)
    if not Fraction(0) < eps < Fraction(3, 5):
        raise InvalidEpsilon(f"epsilon must lie in (0, 3/5), got {eps}")
    _require_clawfree(g)
    if g.n * eps < 1:
        return _exact_clawfree(g, cap, clawfree_bound)
    return solve_clawfree(g, trace=trace)


def approx_clawfree_dfs(
    g: VertexWeightedGraph,
    epsilon,
    cap: Optional[int] = None,
    trace: Optional[Trace] = None,
) -> SpanningTreeSolution:
    """(1/2 - epsilon)-approximation from the unmodified max-weight DFS tree"""
    eps = as_epsilon(epsilon)
    if not Fraction(0) < eps < Fraction(1, 2):
        raise InvalidEpsilon(f"epsilon must lie in (0, 1/2), got {eps}")
    _require_clawfree(g)
    if g.n * eps < 1:
        return _exact_clawfree(g, cap, clawfree_interim_bound)
    return solve_clawfree_dfs(g, trace=trace)
