import networkx as nx
import pytest

from src.dfs.greedy_dfs import (
    BranchCriterion,
    check_binary,
    is_ancestor,
    run_greedy_dfs,
    tree_from_children,
    unvisited_count_at,
)
from src.generators.graph_generator import WeightScheme, assign_weights, gen_cubic_random, gen_line_graph, gen_named
from src.graph.core import build_graph
from src.utils.errors import InvariantViolation


def _is_spanning_tree(n, edges):
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return nx.is_tree(graph)


class TestRatioDfs:
    """Greedy DFS by w(x)/u(x)"""

    def test_k4_is_a_path(self):
        g = gen_named("complete", 4)
        t = run_greedy_dfs(g, 0, BranchCriterion.RATIO)
        assert t.tree_edges() == [(0, 1), (1, 2), (2, 3)]
        assert t.order == (0, 1, 2, 3)
        assert t.backward_edges == ((2, 0), (3, 0), (3, 1))

    def test_leaves_and_uppers(self):
        g = gen_named("complete", 4)
        t = run_greedy_dfs(g, 0, BranchCriterion.RATIO)
        assert t.leaves() == [3]
        assert not t.is_leaf(0)
        assert t.uppers_of(3) == [1, 0]
        assert t.tree_degree(0) == 1
        assert t.tree_degree(1) == 2

    def test_child_toward(self):
        t = run_greedy_dfs(gen_named("complete", 4), 0, BranchCriterion.RATIO)
        assert t.child_toward(0, 3) == 1
        assert t.child_toward(1, 3) == 2
        with pytest.raises(InvariantViolation):
            t.child_toward(3, 0)

    def test_unvisited_count_replay(self):
        g = gen_named("complete", 4)
        t = run_greedy_dfs(g, 0, BranchCriterion.RATIO)
        assert unvisited_count_at(t, g, 2, 1) == 1
        assert unvisited_count_at(t, g, 1, 0) == 2

    def test_zero_unvisited_ranks_first(self):
        """A neighbor with no unvisited neighbors beats any finite ratio"""
        g = build_graph(4, [1, 1, 100, 1], [(0, 1), (0, 2), (2, 3)])
        ratio = run_greedy_dfs(g, 0, BranchCriterion.RATIO)
        heavy = run_greedy_dfs(g, 0, BranchCriterion.MAX_WEIGHT)
        assert ratio.children[0][0] == 1
        assert heavy.children[0][0] == 2

    def test_prism_is_hamiltonian_path(self):
        t = run_greedy_dfs(gen_named("prism"), 0, BranchCriterion.RATIO)
        assert t.order == (0, 1, 2, 5, 3, 4)
        assert t.leaves() == [4]

    def test_ancestor_property_on_cubic_corpus(self):
        for seed in range(40):
            g = assign_weights(gen_cubic_random(16, seed), WeightScheme("uniform"), seed)
            t = run_greedy_dfs(g, seed % g.n, BranchCriterion.RATIO)
            assert _is_spanning_tree(g.n, t.tree_edges())
            assert len(t.backward_edges) == g.m - (g.n - 1)
            for lower, upper in t.backward_edges:
                assert is_ancestor(t, upper, lower) and upper != lower


class TestMaxWeightDfs:
    """Greedy DFS by weight on claw-free graphs"""

    def test_binary_on_line_graphs(self):
        for seed in range(20):
            g = gen_line_graph(gen_cubic_random(12, seed), seed, WeightScheme("uniform"))
            t = run_greedy_dfs(g, 0, BranchCriterion.MAX_WEIGHT)
            check_binary(t)
            assert _is_spanning_tree(g.n, t.tree_edges())

    def test_claw_center_breaks_binary(self):
        t = run_greedy_dfs(gen_named("k13"), 0, BranchCriterion.MAX_WEIGHT)
        with pytest.raises(InvariantViolation) as info:
            check_binary(t)
        assert info.value.label == "binary-tree"

    def test_heaviest_neighbor_first(self):
        g = gen_named("complete", 4).with_weights([0, 1, 5, 3])
        t = run_greedy_dfs(g, 0, BranchCriterion.MAX_WEIGHT)
        assert t.order == (0, 2, 3, 1)


class TestTreeFromChildren:
    """DfsTree from an explicit rooted tree"""

    def test_matches_dfs(self):
        g = gen_named("complete", 4)
        t = tree_from_children(g, 0, {0: [1], 1: [2], 2: [3]})
        assert t == run_greedy_dfs(g, 0, BranchCriterion.RATIO)

    def test_cross_edge_rejected(self):
        g = build_graph(3, [1, 1, 1], [(0, 1), (0, 2), (1, 2)])
        with pytest.raises(InvariantViolation) as info:
            tree_from_children(g, 0, {0: [1, 2]})
        assert info.value.label == "ancestor"

    def test_partial_tree_rejected(self):
        g = gen_named("complete", 4)
        with pytest.raises(InvariantViolation):
            tree_from_children(g, 0, {0: [1], 1: [2]})

    def test_non_edge_rejected(self):
        g = build_graph(3, [1, 1, 1], [(0, 1), (1, 2)])
        with pytest.raises(InvariantViolation):
            tree_from_children(g, 0, {0: [2], 2: [1]})


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
