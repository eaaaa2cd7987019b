"""
Exact solving for small instances
"""

from .exact import OracleResult, optimal_internal_spanning_tree
from .tightness import TightInstance, tightness_search

__all__ = ['OracleResult', 'optimal_internal_spanning_tree', 'TightInstance', 'tightness_search']
