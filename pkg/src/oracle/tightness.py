"""
Search for cubic instances where even the optimum is far from w(V)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.generators.graph_generator import WeightScheme, assign_weights, gen_cubic_random
from src.graph.core import VertexWeightedGraph
from src.oracle.exact import optimal_internal_spanning_tree

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TightInstance:
    graph: VertexWeightedGraph
    opt: int
    ratio: Fraction
    seed: int


def tightness_search(
    max_n: int = 14,
    threshold: Fraction = Fraction(4, 5),
    seed: int = 0,
    attempts: int = 200,
    min_n: int = 4,
) -> Optional[TightInstance]:
    """
    First seeded cubic instance with OPT / w(V) <= threshold.

    Sizes cycle through min_n, min_n + 2, ..., max_n; each attempt tries zero-one
    weights (p = 1/2) and falls back to unit weights.
    """
    sizes = list(range(max(4, min_n + min_n % 2), max_n + 1, 2))
    schemes = (WeightScheme("zero-one", p=0.5), WeightScheme("unit"))
    for attempt in range(attempts):
        n = sizes[attempt % len(sizes)]
        instance_seed = seed + attempt
        topology = gen_cubic_random(n, instance_seed)
        for scheme in schemes:
            g = assign_weights(topology, scheme, instance_seed)
            total = g.total_weight()
            if total == 0:
                continue
            opt = optimal_internal_spanning_tree(g, cap=max(max_n, g.n)).opt_internal_weight
            ratio = Fraction(opt, total)
            if ratio <= threshold:
                logger.info(f"📊 Tight instance: n={n}, seed={instance_seed}, {scheme}, OPT/w(V)={ratio}")
                return TightInstance(g, opt, ratio, instance_seed)
    logger.warning(f"⚠️ No instance with OPT/w(V) <= {threshold} in {attempts} attempts")
    return None
