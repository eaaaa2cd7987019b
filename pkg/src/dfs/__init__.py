"""
Greedy DFS engine
"""

from .greedy_dfs import (
    BranchCriterion,
    DfsTree,
    check_backward_edges,
    check_binary,
    is_ancestor,
    run_greedy_dfs,
    tree_from_children,
    unvisited_count_at,
)

__all__ = [
    'BranchCriterion',
    'DfsTree',
    'check_backward_edges',
    'check_binary',
    'is_ancestor',
    'run_greedy_dfs',
    'tree_from_children',
    'unvisited_count_at',
]
