"""
Vertex-weighted graphs and their text formats
"""

from .core import (
    Edge,
    VertexWeightedGraph,
    build_graph,
    closed_neighborhood_weight,
    degree_one_zeroed_weights,
    edges_span,
    find_claw,
    is_claw_free,
    is_cubic,
    min_degree,
)
from .io import format_graph, parse_graph, read_graph, write_graph

__all__ = [
    'Edge',
    'VertexWeightedGraph',
    'build_graph',
    'closed_neighborhood_weight',
    'degree_one_zeroed_weights',
    'edges_span',
    'find_claw',
    'is_claw_free',
    'is_cubic',
    'min_degree',
    'format_graph',
    'parse_graph',
    'read_graph',
    'write_graph',
]
