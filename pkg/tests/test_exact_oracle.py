from fractions import Fraction

import networkx as nx
import pytest
from networkx.algorithms.tree.mst import SpanningTreeIterator

from src.generators.graph_generator import WeightScheme, assign_weights, from_networkx, gen_cubic_random, gen_named
from src.graph.core import build_graph
from src.oracle.exact import optimal_internal_spanning_tree
from src.oracle.tightness import tightness_search
from src.solvers.solution import internal_weight_of
from src.utils.errors import ExactSolveTooLarge


def brute_force_optimum(g):
    """Best internal weight over every spanning tree, via networkx"""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return max(internal_weight_of(g.weights, tree.edges()) for tree in SpanningTreeIterator(graph))


class TestOracle:
    """Exact optimum on small graphs"""

    def test_k4(self):
        result = optimal_internal_spanning_tree(gen_named("complete", 4))
        assert result.opt_internal_weight == 2
        assert result.best_tree == ((0, 1), (0, 2), (1, 3))
        assert result.trees_explored >= 1

    def test_star(self):
        assert optimal_internal_spanning_tree(gen_named("k13")).opt_internal_weight == 1

    def test_prism(self):
        assert optimal_internal_spanning_tree(gen_named("prism")).opt_internal_weight == 4

    def test_path_keeps_its_middle(self):
        g = build_graph(3, [1, 5, 1], [(0, 1), (1, 2)])
        result = optimal_internal_spanning_tree(g)
        assert result.opt_internal_weight == 5
        assert result.best_tree == ((0, 1), (1, 2))

    def test_single_vertex(self):
        result = optimal_internal_spanning_tree(build_graph(1, [4], []))
        assert result.opt_internal_weight == 0
        assert result.best_tree == ()

    def test_cap(self):
        with pytest.raises(ExactSolveTooLarge):
            optimal_internal_spanning_tree(gen_cubic_random(12, 0), cap=10)

    def test_best_tree_is_spanning_and_optimal(self):
        g = assign_weights(gen_cubic_random(10, 3), WeightScheme("uniform"), 3)
        result = optimal_internal_spanning_tree(g)
        assert len(result.best_tree) == g.n - 1
        assert internal_weight_of(g.weights, result.best_tree) == result.opt_internal_weight


def test_matches_spanning_tree_enumeration():
    """Branch and bound agrees with plain enumeration on random small graphs"""
    checked = 0
    for seed in range(40):
        graph = nx.gnp_random_graph(7, 0.45, seed=seed)
        if not nx.is_connected(graph):
            continue
        g = assign_weights(from_networkx(graph), WeightScheme("uniform", max_weight=9), seed)
        assert optimal_internal_spanning_tree(g).opt_internal_weight == brute_force_optimum(g)
        checked += 1
    assert checked > 5


class TestTightness:
    """Cubic instances where even the optimum misses a fifth of w(V)"""

    def test_finds_instance(self):
        found = tightness_search(max_n=10)
        assert found is not None
        assert found.ratio <= Fraction(4, 5)
        assert found.opt == optimal_internal_spanning_tree(found.graph).opt_internal_weight
        assert found.ratio == Fraction(found.opt, found.graph.total_weight())

    def test_starting_above_k4(self):
        found = tightness_search(max_n=10, min_n=6)
        assert found is not None
        assert found.graph.n >= 6

    def test_unreachable_threshold(self):
        assert tightness_search(max_n=6, threshold=Fraction(0), attempts=3) is None


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
