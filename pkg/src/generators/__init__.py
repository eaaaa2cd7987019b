"""
Seeded test graph families
"""

from .graph_generator import (
    FAMILIES,
    GenSpec,
    WeightScheme,
    assign_weights,
    gen_cubic_random,
    gen_line_graph,
    gen_named,
    generate,
    parse_weight_scheme,
)

__all__ = [
    'FAMILIES',
    'GenSpec',
    'WeightScheme',
    'assign_weights',
    'gen_cubic_random',
    'gen_line_graph',
    'gen_named',
    'generate',
    'parse_weight_scheme',
]
