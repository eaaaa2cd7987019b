"""
Timing harness for the linear-time claim

Each size gets one seeded instance; the solver runs with strict checks off
so only the algorithm itself is timed. The log-log least-squares slope of
millis against n should stay close to 1.
"""

import logging
import time
from typing import Callable, Dict, Iterable, Optional

import numpy as np
import pandas as pd

from src.generators.graph_generator import WeightScheme, assign_weights, gen_cubic_random, gen_line_graph
from src.graph.core import VertexWeightedGraph
from src.solvers.clawfree import solve_clawfree, solve_clawfree_dfs
from src.solvers.cubic import solve_cubic
from src.utils.errors import UnknownFamily

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

SOLVERS: Dict[str, Callable] = {
    "cubic": solve_cubic,
    "clawfree": solve_clawfree,
    "clawfree-dfs": solve_clawfree_dfs,
}
DEFAULT_FAMILY = {
    "cubic": "cubic-random",
    "clawfree": "line-graph-of-cubic-random",
    "clawfree-dfs": "line-graph-of-cubic-random",
}


def benchmark_instance(family: str, n: int, seed: int, scheme: WeightScheme) -> VertexWeightedGraph:
    """cubic-random on n vertices, or the line graph of one (3n/2 vertices)"""
    if family == "cubic-random":
        return assign_weights(gen_cubic_random(n, seed), scheme, seed)
    if family == "line-graph-of-cubic-random":
        return gen_line_graph(gen_cubic_random(n, seed), seed, scheme)
    raise UnknownFamily(f"bench supports cubic-random and line-graph-of-cubic-random, got {family!r}")


def run_benchmark(
    sizes: Iterable[int],
    seed: int = 0,
    algo: str = "cubic",
    family: Optional[str] = None,
    scheme: WeightScheme = WeightScheme("uniform"),
) -> pd.DataFrame:
    """
    Time one solve per size.

    Returns:
        DataFrame with columns n (vertices of the solved graph) and millis
    """
    if algo not in SOLVERS:
        raise UnknownFamily(f"unknown algorithm {algo!r}; choose from {', '.join(SOLVERS)}")
    solver = SOLVERS[algo]
    family = family or DEFAULT_FAMILY[algo]

    logger.info(f"🚀 Benchmark {algo} on {family}, seed {seed}")
    rows = []
    for size in sizes:
        g = benchmark_instance(family, size, seed, scheme)
        start = time.perf_counter()
        solver(g, strict=False)
        millis = (time.perf_counter() - start) * 1000.0
        rows.append({"n": g.n, "millis": round(millis, 3)})
        logger.info(f"📊 n={g.n}: {millis:.1f} ms")
    return pd.DataFrame(rows, columns=["n", "millis"])


def fit_loglog_slope(frame: pd.DataFrame) -> float:
    """Least-squares slope of log(millis) against log(n)"""
    usable = frame[(frame["n"] > 0) & (frame["millis"] > 0)]
    if len(usable) < 2:
        raise ValueError("need at least two positive timings to fit a slope")
    slope, _ = np.polyfit(np.log(usable["n"].to_numpy(dtype=float)), np.log(usable["millis"].to_numpy(dtype=float)), 1)
    return float(slope)
