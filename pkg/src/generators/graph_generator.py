"""
Seeded graph families for tests, benchmarks and the CLI

Randomness comes from numpy's PCG64 bit generator seeded through
SeedSequence([seed, stream]), so a (family, n, weights, seed) tuple gives
the same graph on every platform. Stream 0 drives topology, stream 1
drives weights.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from src.graph.core import VertexWeightedGraph, build_graph, is_claw_free, is_cubic
from src.utils.config import get_generator_config
from src.utils.errors import (
    Disconnected,
    InvalidN,
    InvariantViolation,
    ResultHasDegreeTwo,
    UnknownFamily,
)

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

FAMILIES = ("cubic-random", "line-graph-of-cubic-random", "complete", "prism", "k13", "petersen")
TOPOLOGY_STREAM = 0
WEIGHT_STREAM = 1


@dataclass(frozen=True)
class WeightScheme:
    kind: str               # unit | uniform | zero-one
    max_weight: int = 100   # uniform: weights drawn from [0, max_weight]
    p: float = 0.5          # zero-one: probability of weight 1

    def __str__(self) -> str:
        if self.kind == "uniform":
            return f"uniform:{self.max_weight}"
        if self.kind == "zero-one":
            return f"zero-one:{self.p}"
        return self.kind


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    weights: WeightScheme = WeightScheme("unit")
    seed: int = 0


def make_rng(seed: int, stream: int = TOPOLOGY_STREAM) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, stream])))


def parse_weight_scheme(text: str) -> WeightScheme:
    """Parse "unit", "uniform[:MAX]" or "zero-one[:P]" """
    kind, _, param = text.strip().partition(":")
    try:
        if kind == "unit" and not param:
            return WeightScheme("unit")
        if kind == "uniform":
            max_weight = int(param) if param else get_generator_config()['uniform_max']
            if max_weight < 0:
                raise ValueError(max_weight)
            return WeightScheme("uniform", max_weight=max_weight)
        if kind == "zero-one":
            p = float(param) if param else 0.5
            if not 0.0 <= p <= 1.0:
                raise ValueError(p)
            return WeightScheme("zero-one", p=p)
    except ValueError:
        raise UnknownFamily(f"bad parameter in weight scheme {text!r}")
    raise UnknownFamily(f"unknown weight scheme {text!r}")


def assign_weights(g: VertexWeightedGraph, scheme: WeightScheme, seed: int = 0) -> VertexWeightedGraph:
    """Same topology with weights drawn from scheme"""
    if scheme.kind == "unit":
        return g.with_weights([1] * g.n)
    rng = make_rng(seed, WEIGHT_STREAM)
    if scheme.kind == "uniform":
        weights = rng.integers(0, scheme.max_weight, size=g.n, endpoint=True)
    elif scheme.kind == "zero-one":
        weights = (rng.random(g.n) < scheme.p).astype(np.int64)
    else:
        raise UnknownFamily(f"unknown weight scheme {scheme.kind!r}")
    return g.with_weights([int(w) for w in weights])


def _pair_stubs(n: int, rng: np.random.Generator) -> Optional[np.ndarray]:
    """One configuration-model pairing of 3n stubs, None if not simple"""
    stubs = np.repeat(np.arange(n, dtype=np.int64), 3)
    rng.shuffle(stubs)
    pairs = stubs.reshape(-1, 2)
    lo = pairs.min(axis=1)
    hi = pairs.max(axis=1)
    if np.any(lo == hi):
        return None
    keys = lo * n + hi
    if np.unique(keys).size != keys.size:
        return None
    return np.stack([lo, hi], axis=1)


def gen_cubic_random(n: int, seed: int = 0, max_retries: Optional[int] = None) -> VertexWeightedGraph:
    """
    Connected simple cubic graph on n vertices (unit weights).

    Stub pairings with a self-loop, a repeated pair or more than one
    component are rejected and redrawn.
    """
    if n < 4 or n % 2:
        raise InvalidN(f"cubic graphs need an even n >= 4, got {n}")
    max_retries = max_retries or get_generator_config()['max_retries']
    rng = make_rng(seed)

    for attempt in range(1, max_retries + 1):
        pairs = _pair_stubs(n, rng)
        if pairs is None:
            continue
        try:
            g = build_graph(n, [1] * n, [(int(u), int(v)) for u, v in pairs])
        except Disconnected:
            continue
        logger.debug(f"cubic n={n} seed={seed}: accepted after {attempt} attempts")
        return g

    raise InvariantViolation("generator", f"no simple connected cubic pairing in {max_retries} attempts")


def from_networkx(graph: nx.Graph, weights: Optional[Sequence[int]] = None) -> VertexWeightedGraph:
    """Relabel nodes 0..n-1 in sorted order and build a validated graph"""
    nodes = sorted(graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = sorted(
        (min(index[u], index[v]), max(index[u], index[v])) for u, v in graph.edges()
    )
    weights = list(weights) if weights is not None else [1] * len(nodes)
    return build_graph(len(nodes), weights, edges)


def to_networkx(g: VertexWeightedGraph) -> nx.Graph:
    graph = nx.Graph()
    for v, w in enumerate(g.weights):
        graph.add_node(v, weight=w)
    graph.add_edges_from(g.edges())
    return graph


def gen_line_graph(
    base: VertexWeightedGraph,
    seed: int = 0,
    scheme: WeightScheme = WeightScheme("unit"),
    strict: bool = True,
) -> VertexWeightedGraph:
    """
    Line graph of base: one vertex per base edge, in base.edges() order.

    Raises:
        ResultHasDegreeTwo: strict mode and some base edge (u, v) has
            deg(u) + deg(v) - 2 < 3
    """
    base_edges = base.edges()
    if strict:
        for u, v in base_edges:
            if base.degree(u) + base.degree(v) - 2 < 3:
                raise ResultHasDegreeTwo(
                    f"base edge ({u}, {v}) gives a line graph vertex of degree "
                    f"{base.degree(u) + base.degree(v) - 2}"
                )

    line = nx.line_graph(to_networkx(base))
    index = {e: i for i, e in enumerate(base_edges)}
    edges = sorted(
        tuple(sorted((index[tuple(sorted(a))], index[tuple(sorted(b))]))) for a, b in line.edges()
    )
    g = build_graph(len(base_edges), [1] * len(base_edges), edges)
    if not is_claw_free(g):
        raise InvariantViolation("generator", "line graph contains a claw")
    return assign_weights(g, scheme, seed)


def gen_named(family: str, n: int = 0) -> VertexWeightedGraph:
    """complete (K_n), prism, k13 (star, center 0) or petersen, unit weights"""
    if family == "complete":
        if n < 1:
            raise InvalidN(f"complete graph needs n >= 1, got {n}")
        return from_networkx(nx.complete_graph(n))
    if family == "prism":
        return from_networkx(nx.circular_ladder_graph(3))
    if family == "k13":
        return from_networkx(nx.star_graph(3))
    if family == "petersen":
        return from_networkx(nx.petersen_graph())
    raise UnknownFamily(f"unknown graph family {family!r}")


def generate(spec: GenSpec) -> VertexWeightedGraph:
    """Build the graph a GenSpec describes, weights included"""
    if spec.family == "cubic-random":
        g = gen_cubic_random(spec.n, spec.seed)
    elif spec.family == "line-graph-of-cubic-random":
        return gen_line_graph(gen_cubic_random(spec.n, spec.seed), spec.seed, spec.weights)
    elif spec.family in FAMILIES:
        g = gen_named(spec.family, spec.n)
    else:
        raise UnknownFamily(f"unknown graph family {spec.family!r}; choose from {', '.join(FAMILIES)}")
    if spec.family == "cubic-random" and not is_cubic(g):
        raise InvariantViolation("generator", "configuration model produced a non-cubic graph")
    return assign_weights(g, spec.weights, spec.seed)

