import itertools

import networkx as nx
import pytest

from src.generators.graph_generator import from_networkx, gen_cubic_random, gen_named
from src.graph.core import (
    build_graph,
    closed_neighborhood_weight,
    degree_one_zeroed_weights,
    edges_span,
    find_claw,
    is_claw_free,
    is_cubic,
    min_degree,
)
from src.graph.io import (
    format_graph,
    normalize_edges,
    parse_graph,
    parse_tree_edges,
    read_graph,
    write_graph,
)
from src.utils.errors import (
    Disconnected,
    DuplicateEdge,
    GraphFormatError,
    IndexOutOfRange,
    NegativeWeight,
    SelfLoop,
)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


class TestBuildGraph:
    """Validation in build_graph"""

    def test_complete_graph(self):
        """K4 with unit weights is valid with six edges"""
        g = build_graph(4, [1, 1, 1, 1], K4_EDGES)
        assert g.n == 4
        assert g.m == 6
        assert g.adjacency[0] == (1, 2, 3)
        assert g.total_weight() == 4

    def test_no_edges_is_disconnected(self):
        with pytest.raises(Disconnected):
            build_graph(2, [0, 0], [])

    def test_repeated_pair(self):
        with pytest.raises(DuplicateEdge):
            build_graph(3, [1, 2, 3], [(0, 1), (0, 1), (1, 2)])

    def test_reversed_pair_is_a_duplicate(self):
        with pytest.raises(DuplicateEdge):
            build_graph(3, [1, 2, 3], [(0, 1), (1, 0), (1, 2)])

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            build_graph(2, [1, 1], [(0, 1), (1, 1)])

    def test_negative_weight(self):
        with pytest.raises(NegativeWeight):
            build_graph(2, [1, -1], [(0, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            build_graph(2, [1, 1], [(0, 2)])

    def test_weight_count_mismatch(self):
        with pytest.raises(IndexOutOfRange):
            build_graph(3, [1, 1], [(0, 1), (1, 2)])

    def test_single_vertex(self):
        g = build_graph(1, [5], [])
        assert g.m == 0
        assert g.edges() == []

    def test_validation_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            build_graph(2, [0, 0], [])

    def test_degree_sum_is_twice_m(self):
        for seed in range(5):
            g = gen_cubic_random(12, seed)
            assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m

    def test_with_weights_keeps_topology(self):
        g = build_graph(4, [1, 1, 1, 1], K4_EDGES)
        h = g.with_weights([1, 2, 3, 4])
        assert h.adjacency == g.adjacency
        assert h.weights == (1, 2, 3, 4)
        with pytest.raises(NegativeWeight):
            g.with_weights([1, 2, 3, -4])


class TestPredicates:
    """Class recognition and neighborhood weights"""

    def test_cubic(self):
        assert is_cubic(gen_named("complete", 4))
        assert is_cubic(gen_named("prism"))
        assert not is_cubic(build_graph(3, [1, 1, 1], [(0, 1), (1, 2)]))

    def test_prism_shape(self):
        g = gen_named("prism")
        assert (g.n, g.m) == (6, 9)

    def test_claw_free(self):
        assert not is_claw_free(gen_named("k13"))
        assert is_claw_free(gen_named("complete", 5))
        assert not is_claw_free(gen_named("petersen"))

    def test_find_claw_returns_independent_leaves(self):
        center, x, y, z = find_claw(gen_named("k13"))
        assert center == 0
        assert {x, y, z} == {1, 2, 3}

    def test_min_degree(self):
        assert min_degree(gen_named("complete", 5)) == 4
        assert min_degree(gen_named("k13")) == 1

    def test_closed_neighborhood_weight(self):
        k4 = gen_named("complete", 4)
        assert closed_neighborhood_weight(k4, 0) == 4
        weighted = k4.with_weights([1, 2, 3, 4])
        assert all(closed_neighborhood_weight(weighted, v) == 10 for v in range(4))
        prism = gen_named("prism")
        assert all(closed_neighborhood_weight(prism, v) == 4 for v in range(6))

    def test_closed_neighborhood_at_most_total(self):
        g = gen_cubic_random(20, 3).with_weights(list(range(20)))
        assert all(closed_neighborhood_weight(g, v) <= g.total_weight() for v in range(g.n))

    def test_degree_one_zeroed(self):
        g = build_graph(3, [5, 6, 7], [(0, 1), (1, 2)])
        assert degree_one_zeroed_weights(g) == (0, 6, 0)

    def test_edges_span(self):
        assert edges_span(4, [(0, 1), (1, 2), (1, 3)])
        assert not edges_span(4, [(0, 1), (1, 2)])
        assert not edges_span(4, [(0, 1), (0, 2), (1, 2)])
        assert edges_span(1, [])


def _claw_free_brute_force(graph: nx.Graph) -> bool:
    for quad in itertools.combinations(graph.nodes(), 4):
        sub = graph.subgraph(quad)
        degrees = sorted(d for _, d in sub.degree())
        if sub.number_of_edges() == 3 and degrees == [1, 1, 1, 3]:
            return False
    return True


def test_claw_free_matches_induced_subgraph_scan():
    """is_claw_free agrees with a scan over all 4-vertex induced subgraphs"""
    checked = 0
    for seed in range(60):
        graph = nx.gnp_random_graph(8, 0.5, seed=seed)
        if not nx.is_connected(graph):
            continue
        g = from_networkx(graph)
        assert is_claw_free(g) == _claw_free_brute_force(graph)
        checked += 1
    assert checked > 10


class TestGraphText:
    """Graph and tree file formats"""

    def test_parse_with_comments(self):
        text = "# K3\n3 3\n\n1 2 3\n0 1\n# edges\n0 2\n1 2\n"
        g = parse_graph(text)
        assert g.weights == (1, 2, 3)
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_canonical_round_trip(self):
        g = gen_cubic_random(10, 4).with_weights(list(range(10)))
        text = format_graph(g)
        assert format_graph(parse_graph(text)) == text

    def test_file_round_trip(self, tmp_path):
        g = gen_named("prism")
        path = tmp_path / "graphs" / "prism.txt"
        write_graph(g, path)
        assert path.read_text(encoding="utf-8") == "6 9\n1 1 1 1 1 1\n0 1\n0 2\n0 3\n1 2\n1 4\n2 5\n3 4\n3 5\n4 5\n"
        assert read_graph(path) == g

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError):
            parse_graph("3 3\n1 1 1\n0 1\n1 2\n")

    def test_unordered_edge_line(self):
        with pytest.raises(GraphFormatError):
            parse_graph("2 1\n1 1\n1 0\n")

    def test_non_integer_token(self):
        with pytest.raises(GraphFormatError):
            parse_graph("2 1\n1 x\n0 1\n")

    def test_decimal_weights_with_scale(self):
        g = parse_graph("2 1\n0.5 1.25\n0 1\n", weight_scale=100)
        assert g.weights == (50, 125)

    def test_decimal_weights_must_land_on_integers(self):
        with pytest.raises(GraphFormatError):
            parse_graph("2 1\n0.125 1\n0 1\n", weight_scale=10)

    def test_tree_edges_skip_solve_header(self):
        text = "internal 2 total 4 bound 0/1 n 4 m 6 algo cubic\n0 1\n1 2\n2 3\n"
        assert parse_tree_edges(text) == [(0, 1), (1, 2), (2, 3)]

    def test_normalize_edges(self):
        assert normalize_edges([(3, 2), (1, 0), (0, 2)]) == [(0, 1), (0, 2), (2, 3)]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
