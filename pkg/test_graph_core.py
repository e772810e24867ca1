"""
Roman Domination Engine
Tests for the graph core: construction, recognizers and file formats
"""

from itertools import combinations

import numpy as np
import pytest

from roman_domination_core.exceptions import EmptyGraph, GraphFormatError
from roman_domination_core.generators import gen_erdos, spawn_seeds
from roman_domination_core.graph import (ComponentProfile, Graph, complement, complete_bipartite_graph,
                                         complete_graph, components, cycle_graph, degree_stats,
                                         disjoint_union, empty_graph, find_chordless_cycle, graph_from_dict,
                                         graph_to_dict, induced_subgraph, is_bipartite, is_chordal_bipartite,
                                         is_connected, is_split, join, load_graph, parse_edgelist,
                                         path_graph, petersen_graph, save_graph, special_vertices,
                                         star_graph)


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, [(0, 3)])


def test_from_edges_merges_duplicates_when_lenient():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)], strict=False)
    assert g.m == 2
    assert g.edges() == [(0, 1), (1, 2)]


def test_basic_queries_on_path():
    g = path_graph(4)
    assert g.neighbors(1) == frozenset({0, 2})
    assert g.closed_neighborhood(0) == frozenset({0, 1})
    assert g.degree(3) == 1
    assert g.has_edge(2, 3) and not g.has_edge(0, 3)


def test_complement_of_c4_is_two_edges():
    co = complement(cycle_graph(4))
    parts, profile = components(co)
    assert parts == [[0, 2], [1, 3]]
    assert profile == ComponentProfile(0, 2, 0)
    assert complement(co) == cycle_graph(4)


def test_components_profile_mixes_orders():
    g = disjoint_union(path_graph(3), complete_graph(1))
    parts, profile = components(g)
    assert parts == [[0, 1, 2], [3]]
    assert profile == ComponentProfile(1, 0, 1)
    assert not is_connected(g)
    assert is_connected(path_graph(3))


def test_degree_stats():
    assert degree_stats(petersen_graph()).regular == 3
    stats = degree_stats(star_graph(4))
    assert (stats.min_degree, stats.max_degree, stats.regular) == (1, 4, None)
    with pytest.raises(EmptyGraph):
        degree_stats(empty_graph(0))


def test_is_bipartite():
    left, right = is_bipartite(cycle_graph(6))
    assert left == frozenset({0, 2, 4}) and right == frozenset({1, 3, 5})
    assert is_bipartite(cycle_graph(5)) is None
    assert is_bipartite(empty_graph(3)) is not None


def test_is_split():
    clique, independent = is_split(star_graph(3))
    assert clique == frozenset({0, 1}) or clique == frozenset({0})
    assert 0 in clique
    assert is_split(cycle_graph(4)) is None
    assert is_split(cycle_graph(5)) is None
    assert is_split(complete_graph(5))[1] <= frozenset(range(5))


def test_special_vertices_of_star():
    universal, twins = special_vertices(star_graph(3))
    assert universal == [0]
    assert twins == [[0], [1, 2, 3]]


def test_chordless_cycle_search():
    c6 = cycle_graph(6)
    assert sorted(find_chordless_cycle(c6, 6)) == list(range(6))
    chorded = Graph.from_edges(6, c6.edges() + [(0, 3)])
    assert find_chordless_cycle(chorded, 6) is None
    assert find_chordless_cycle(chorded, 4) is not None
    assert not is_chordal_bipartite(c6)
    assert is_chordal_bipartite(cycle_graph(4))
    assert is_chordal_bipartite(complete_bipartite_graph(3, 3))
    assert not is_chordal_bipartite(cycle_graph(5))


def test_join_and_union_constructors():
    p3 = join(complete_graph(1), empty_graph(2))
    assert p3.edges() == [(0, 1), (0, 2)]
    assert join(empty_graph(2), empty_graph(2)).same_edges(Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]))
    assert disjoint_union(complete_graph(2), complete_graph(2)).edges() == [(0, 1), (2, 3)]


def test_induced_subgraph_relabels_in_order():
    sub = induced_subgraph(cycle_graph(5), [4, 0, 1])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_parse_edgelist_with_comments():
    g = parse_edgelist("# a path\n3 2\n0 1  # first edge\n1 2\n")
    assert g == path_graph(3)


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "2 1\n0 1 1\n", "x y\n"])
def test_parse_edgelist_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_edgelist(text)


def test_files_and_json(tmp_path):
    g = petersen_graph()
    save_graph(g, tmp_path / "p.txt")
    assert load_graph(tmp_path / "p.txt") == g
    named = Graph.from_edges(2, [(0, 1)], labels=["a", "b"])
    data = graph_to_dict(named)
    assert data["names"] == ["a", "b"]
    restored = graph_from_dict(data)
    assert restored == named and restored.label(1) == "b"
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(GraphFormatError):
        load_graph(tmp_path / "bad.json", fmt="json")


def _random_graphs(seed, count, max_n=10):
    densities = [0.2, 0.5, 0.8]
    for i, child in enumerate(spawn_seeds(seed, count)):
        yield gen_erdos(1 + child % max_n, densities[i % 3], child)


def _split_partition_exists(g):
    for clique_mask in range(1 << g.n):
        clique = [u for u in range(g.n) if clique_mask >> u & 1]
        rest = [u for u in range(g.n) if not clique_mask >> u & 1]
        if all(g.has_edge(u, v) for u, v in combinations(clique, 2)) and \
                not any(g.has_edge(u, v) for u, v in combinations(rest, 2)):
            return True
    return False


def _planted_split_graph(n, seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(0, n + 1))
    edges = list(combinations(range(k), 2))
    edges += [(u, v) for u in range(k) for v in range(k, n) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)


def test_is_split_agrees_with_partition_search():
    graphs = list(_random_graphs(11, 150))
    graphs += [_planted_split_graph(2 + seed % 9, seed) for seed in spawn_seeds(12, 50)]
    positives = 0
    for g in graphs:
        found = is_split(g)
        assert (found is not None) == _split_partition_exists(g), graph_to_dict(g)
        if found is not None:
            positives += 1
            clique, independent = found
            assert clique | independent == frozenset(range(g.n)) and not clique & independent
            assert all(g.has_edge(u, v) for u, v in combinations(sorted(clique), 2))
            assert not any(g.has_edge(u, v) for u, v in combinations(sorted(independent), 2))
    assert positives >= 50


def _two_colourable(g):
    return any(all((mask >> u & 1) != (mask >> v & 1) for u, v in g.edges()) for mask in range(1 << g.n))


def test_is_bipartite_colouring_is_proper():
    for g in _random_graphs(13, 150):
        found = is_bipartite(g)
        assert (found is not None) == _two_colourable(g), graph_to_dict(g)
        if found is not None:
            left, right = found
            assert left | right == frozenset(range(g.n)) and not left & right
            assert all((u in left) != (v in left) for u, v in g.edges())


def test_complement_is_an_involution_and_splits_degrees():
    for g in _random_graphs(14, 100, max_n=12):
        co = complement(g)
        assert complement(co) == g
        assert co.m + g.m == g.n * (g.n - 1) // 2
        assert all(g.degree(u) + co.degree(u) == g.n - 1 for u in range(g.n))
