"""
Roman Domination Engine
Tests for cotree recognition and the cotree gamma_R / gamma_gR evaluation
"""

import json

import pytest

from roman_domination_core.cograph import (CoTree, NodeKind, annotate, build_cotree, cograph_values,
                                           cotree_from_dict, cotree_to_dict, expand, gamma_gr_cograph,
                                           gamma_r_connected)
from roman_domination_core.exceptions import GraphFormatError, NotACograph
from roman_domination_core.generators import gen_cograph, gen_threshold, spawn_seeds
from roman_domination_core.graph import (complement, complete_bipartite_graph, complete_graph, cycle_graph,
                                         disjoint_union, empty_graph, induced_subgraph, path_graph,
                                         star_graph)
from roman_domination_core.labeling import Mode, check_grdf
from roman_domination_core.solver import brute_force_optimum, solve_exact


def test_p4_is_rejected():
    with pytest.raises(NotACograph):
        build_cotree(path_graph(4))
    with pytest.raises(NotACograph):
        build_cotree(cycle_graph(5))
    with pytest.raises(GraphFormatError):
        build_cotree(empty_graph(0))


def test_empty_graph_values_are_zero():
    assert cograph_values(empty_graph(0)).to_dict() == {
        "gamma_r": 0, "gamma_r_complement": 0, "gamma_gr": 0, "gamma_gr_complement": 0}
    value, witness = gamma_gr_cograph(empty_graph(0), witness=True)
    assert value == 0 and witness.values == ()
    assert gamma_gr_cograph(empty_graph(0)) == (0, None)


def test_c4_cotree_shape():
    tree = build_cotree(cycle_graph(4))
    assert tree.kind == NodeKind.JOIN
    assert [child.kind for child in tree.children] == [NodeKind.UNION, NodeKind.UNION]
    assert [child.leaves() for child in tree.children] == [[0, 2], [1, 3]]
    assert build_cotree(complete_graph(1)) == CoTree.leaf(0)


@pytest.mark.parametrize("g", [cycle_graph(4), star_graph(3), complete_bipartite_graph(2, 3),
                               disjoint_union(complete_graph(3), empty_graph(2))])
def test_expand_inverts_build(g):
    assert expand(build_cotree(g)) == g


@pytest.mark.parametrize("n, max_degree, expected", [(1, 0, 1), (5, 4, 2), (4, 2, 3), (6, 3, 4)])
def test_gamma_r_connected(n, max_degree, expected):
    assert gamma_r_connected(n, max_degree) == expected


@pytest.mark.parametrize("g, gamma_r, gamma_gr", [
    (complete_graph(6), 2, 6),
    (disjoint_union(complete_graph(2), complete_graph(2)), 4, 4),
    (disjoint_union(path_graph(3), complete_graph(1)), 3, 4),
    (disjoint_union(complete_bipartite_graph(3, 3), complete_graph(1)), 5, 5),
    (disjoint_union(complete_graph(2), complete_graph(1)), 3, 3),
    (cycle_graph(4), 3, 4),
    (path_graph(3), 2, 3),
    (star_graph(4), 2, 4),
])
def test_cotree_values(g, gamma_r, gamma_gr):
    values = cograph_values(g)
    assert (values.gamma_r, values.gamma_gr) == (gamma_r, gamma_gr)
    assert values.gamma_gr_co == gamma_gr
    assert values.gamma_r_co == solve_exact(complement(g), Mode.RD).optimum


def test_witness_is_certified():
    value, f = gamma_gr_cograph(cycle_graph(4), witness=True)
    assert value == 4 == f.weight
    assert check_grdf(cycle_graph(4), f).valid
    value, f = gamma_gr_cograph(complete_graph(10), witness=True)
    assert value == 10 and f.values == (1,) * 10


def test_witness_cap_skips_the_search():
    value, f = gamma_gr_cograph(complete_graph(6), witness=True, witness_cap=5)
    assert value == 6 and f is None


def _cographs(count, seed, max_n):
    for i, child in enumerate(spawn_seeds(seed, count)):
        yield gen_cograph(1 + i % max_n, child)


def test_cotree_agrees_with_oracle():
    for g in _cographs(50, seed=3, max_n=8):
        values = cograph_values(g)
        assert values.gamma_r == brute_force_optimum(g, Mode.RD), repr(g)
        assert values.gamma_gr == brute_force_optimum(g, Mode.GRD), repr(g)


@pytest.mark.slow
def test_cotree_agrees_with_oracle_wide():
    for g in _cographs(200, seed=17, max_n=11):
        values = cograph_values(g)
        assert values.gamma_r == solve_exact(g, Mode.RD).optimum, repr(g)
        assert values.gamma_gr == solve_exact(g, Mode.GRD).optimum, repr(g)
        assert values.gamma_r_co == solve_exact(complement(g), Mode.RD).optimum, repr(g)


def test_threshold_graphs_are_cographs():
    for child in spawn_seeds(8, 10):
        g = gen_threshold(7, child)
        assert cograph_values(g).gamma_gr == solve_exact(g, Mode.GRD).optimum


def test_every_node_annotation_matches_its_subgraph():
    for g in _cographs(12, seed=21, max_n=7):
        for node in annotate(build_cotree(g)).walk():
            sub = induced_subgraph(g, sorted(node.leaves()))
            notes = node.notes
            degrees = [sub.degree(u) for u in range(sub.n)]
            assert (notes.n, notes.max_degree, notes.min_degree) == (sub.n, max(degrees), min(degrees))
            assert notes.gamma_r == solve_exact(sub, Mode.RD).optimum
            assert notes.gamma_r_co == solve_exact(complement(sub), Mode.RD).optimum
            assert notes.gamma_gr == solve_exact(sub, Mode.GRD).optimum


def test_json_round_trip():
    tree = annotate(build_cotree(complete_bipartite_graph(2, 3)))
    data = json.loads(json.dumps(cotree_to_dict(tree)))
    assert data["annotations"]["gamma_gr"] == tree.notes.gamma_gr
    assert annotate(cotree_from_dict(data)) == tree
    assert "annotations" not in cotree_to_dict(tree, annotations=False)


@pytest.mark.parametrize("data", [
    {"kind": "union", "children": [{"kind": "leaf", "vertex": 0}]},
    {"kind": "union", "children": [{"kind": "leaf", "vertex": 0},
                                   {"kind": "union", "children": [{"kind": "leaf", "vertex": 1},
                                                                  {"kind": "leaf", "vertex": 2}]}]},
    {"kind": "tree"},
    {"kind": "join"},
])
def test_malformed_cotrees(data):
    with pytest.raises(GraphFormatError):
        annotate(cotree_from_dict(data))


@pytest.mark.parametrize("leaves", [[0, 0], [0, 1, 1], [1, 2]])
def test_annotate_needs_each_vertex_once(leaves):
    data = {"kind": "join", "children": [{"kind": "leaf", "vertex": v} for v in leaves]}
    with pytest.raises(GraphFormatError):
        annotate(cotree_from_dict(data))


def test_expand_needs_contiguous_ids():
    tree = CoTree(NodeKind.JOIN, children=(CoTree.leaf(0), CoTree.leaf(2)))
    with pytest.raises(GraphFormatError):
        expand(tree)
