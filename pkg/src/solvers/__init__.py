"""
MaxwIST solvers for cubic and claw-free graphs
"""

from .clawfree import (
    LeafAnnotation,
    RewriteState,
    annotate_leaves,
    approx_clawfree,
    approx_clawfree_dfs,
    distribute_rules,
    rewire,
    solve_clawfree,
    solve_clawfree_dfs,
)
from .cubic import approx_cubic, check_path_lemma, select_root_cubic, solve_cubic
from .solution import SpanningTreeSolution, format_dot, format_solution

__all__ = [
    'LeafAnnotation',
    'RewriteState',
    'annotate_leaves',
    'approx_clawfree',
    'approx_clawfree_dfs',
    'distribute_rules',
    'rewire',
    'solve_clawfree',
    'solve_clawfree_dfs',
    'approx_cubic',
    'check_path_lemma',
    'select_root_cubic',
    'solve_cubic',
    'SpanningTreeSolution',
    'format_dot',
    'format_solution',
]
