"""
Roman Domination Engine
Tests for the five reductions: sizes, forward labelings and extraction
"""

import pytest

from roman_domination_core import catalogue
from roman_domination_core.exceptions import ExtractionFailed, InvalidCover, NotCubic, NotDominating, ParameterError
from roman_domination_core.generators import gen_exact_cover, spawn_seeds
from roman_domination_core.graph import (complete_bipartite_graph, complete_graph, cycle_graph, is_bipartite,
                                         is_chordal_bipartite, is_split, path_graph, petersen_graph,
                                         special_vertices)
from roman_domination_core.labeling import Mode, RomanLabeling, check, is_dominating_set
from roman_domination_core.reductions import (Role, classF_canonical_rdf, classF_labeling_from_ds,
                                              classF_structured_optimum, classG_canonical_grdf,
                                              classG_canonical_rdf, cover_from_grdf_split, ds3reg_to_classF,
                                              ds_from_grdf_classF, ds_from_grdf_treegadget, ds_to_treegadget,
                                              reduction_to_dict, split_labeling_from_cover,
                                              treegadget_labeling_from_ds, x3c_cover_from_x4c, x3c_to_split,
                                              x3c_to_x4c, x4c_cover_from_x3c, x4c_to_classG)
from roman_domination_core.solver import SetCoverInstance, decide, solve_ds, solve_exact, solve_exact_cover


def test_role_names():
    assert str(Role("u")) == "u"
    assert str(Role("S", (3, 1))) == "S(3,1)"


# =============================================================================
# Exact 3-Cover -> Exact 4-Cover
# =============================================================================

def test_x3c_to_x4c_shape():
    inst = catalogue.SPLIT_YES_X3C
    out = x3c_to_x4c(inst)
    assert (out.ell, out.q, out.t) == (4, inst.q, inst.t * inst.q)
    assert out.sets[1] == (0, 1, 3, 7)


def test_x3c_to_x4c_lifts_covers_both_ways():
    inst = catalogue.SPLIT_YES_X3C
    out = x3c_to_x4c(inst)
    cover4 = x4c_cover_from_x3c(inst, catalogue.SPLIT_YES_COVER)
    assert cover4 == (0, 5)
    assert x3c_cover_from_x4c(inst, cover4) == catalogue.SPLIT_YES_COVER
    assert solve_exact_cover(out).answer
    with pytest.raises(ExtractionFailed):
        x3c_cover_from_x4c(inst, (0, 1))


def test_x3c_to_x4c_needs_three_sets():
    with pytest.raises(ParameterError):
        x3c_to_x4c(catalogue.GADGET_YES_X4C)
    assert not solve_exact_cover(x3c_to_x4c(SetCoverInstance.create(3, 1, []))).answer


def test_x3c_to_x4c_preserves_answers():
    seeds = spawn_seeds(4, 40)
    for i, seed in enumerate(seeds):
        inst = gen_exact_cover(3, 1 + i % 2, 2 + i % 4, seed, planted=i % 2 == 0)
        assert solve_exact_cover(inst).answer == solve_exact_cover(x3c_to_x4c(inst)).answer


# =============================================================================
# DS on cubic graphs -> the three-copy class
# =============================================================================

def test_three_copy_shape_for_k4():
    out = ds3reg_to_classF(complete_graph(4), 1)
    assert out.graph.n == 15 and out.budget == 4
    assert out.graph.degree(out.vertex("v1")) == 12
    assert classF_canonical_rdf(out).weight == 4


def test_three_copy_twins_for_petersen():
    out = ds3reg_to_classF(petersen_graph(), 3)
    universal, twins = special_vertices(out.graph)
    assert universal == []
    assert twins == [[u, u + 10, u + 20] for u in range(10)] + [[30, 31, 32]]
    assert out.graph.degree(out.vertex("copy", 2, 4)) == 21


def test_three_copy_needs_cubic_source():
    with pytest.raises(NotCubic):
        ds3reg_to_classF(cycle_graph(4), 2)


def test_three_copy_forward_and_back():
    g = petersen_graph()
    ds = solve_ds(g).witness
    out = ds3reg_to_classF(g, len(ds))
    f = classF_labeling_from_ds(out, ds)
    assert f.weight == out.budget == 8
    assert ds_from_grdf_classF(out, f) == ds
    with pytest.raises(NotDominating):
        classF_labeling_from_ds(out, [0])
    with pytest.raises(ParameterError):
        ds_from_grdf_classF(out, RomanLabeling.all_ones(out.graph.n))


@pytest.mark.parametrize("name", ["K4", "K3,3", "Petersen"])
def test_three_copy_decision_matches_domination(name):
    g = catalogue.cubic_sources()[name]
    gamma = solve_ds(g).optimum
    out = ds3reg_to_classF(g, gamma)
    result = decide(out.graph, Mode.GRD, out.budget)
    assert result.answer
    s = ds_from_grdf_classF(out, result.witness)
    assert is_dominating_set(g, s) and len(s) <= gamma
    assert not decide(out.graph, Mode.GRD, out.budget - 2).answer
    assert solve_exact(out.graph, Mode.RD).optimum == 4


@pytest.mark.parametrize("name", ["K4", "K3,3"])
def test_three_copy_structured_optimum(name):
    g = catalogue.cubic_sources()[name]
    out = ds3reg_to_classF(g, 1)
    weight, f = classF_structured_optimum(out)
    assert weight == f.weight == 2 * solve_ds(g).optimum + 2
    assert check(out.graph, f, Mode.GRD).valid


# =============================================================================
# Exact 4-Cover -> the gadget class
# =============================================================================

def test_gadget_sizes(gadget_unit, gadget_yes):
    assert (gadget_unit.graph.n, gadget_unit.budget) == (35, 12)
    assert (gadget_yes.graph.n, gadget_yes.budget) == (68, 22)
    counts = gadget_yes.role_counts()
    assert counts["Q1"] + counts["Q2"] == 16
    assert (counts["S"], counts["R"], counts["A"]) == (24, 4, 4)
    assert gadget_yes.graph.degree(gadget_yes.vertex("u")) == 3


def test_gadget_canonical_labelings(gadget_unit, gadget_yes, gadget_no):
    assert classG_canonical_rdf(gadget_unit, catalogue.GADGET_UNIT_COVER).weight == 11
    assert classG_canonical_rdf(gadget_yes, catalogue.GADGET_YES_COVER).weight == 21
    assert classG_canonical_grdf(gadget_unit, catalogue.GADGET_UNIT_COVER).weight == 12
    assert classG_canonical_grdf(gadget_yes, catalogue.GADGET_YES_COVER).weight == 22
    assert classG_canonical_grdf(gadget_no).weight == 22


def test_gadget_rejects_bad_input(gadget_yes):
    with pytest.raises(InvalidCover):
        classG_canonical_rdf(gadget_yes, (0, 1))
    with pytest.raises(ParameterError):
        x4c_to_classG(SetCoverInstance.create(4, 1, []))
    with pytest.raises(ParameterError):
        x4c_to_classG(catalogue.SPLIT_YES_X3C)
    with pytest.raises(ParameterError):
        classG_canonical_rdf(ds_to_treegadget(cycle_graph(4), 2), (0,))


# =============================================================================
# Exact 3-Cover -> split graphs
# =============================================================================

def test_split_shape(split_yes):
    assert (split_yes.graph.n, split_yes.budget) == (16, 9)
    clique, _ = is_split(split_yes.graph)
    assert clique == frozenset(split_yes.tagged("A"))


def test_split_forward_and_back(split_yes):
    f = split_labeling_from_cover(split_yes, catalogue.SPLIT_YES_COVER)
    assert f.weight == 9
    assert cover_from_grdf_split(split_yes, f) == catalogue.SPLIT_YES_COVER
    with pytest.raises(ParameterError):
        cover_from_grdf_split(split_yes, RomanLabeling.all_ones(16))


def test_split_decision(split_yes, split_no):
    result = decide(split_yes.graph, Mode.GRD, 9)
    assert result.answer
    assert cover_from_grdf_split(split_yes, result.witness) == catalogue.SPLIT_YES_COVER
    assert not decide(split_yes.graph, Mode.GRD, 8).answer
    assert not decide(split_no.graph, Mode.GRD, split_no.budget).answer


# =============================================================================
# DS -> pendant-tree gadget
# =============================================================================

def test_treegadget_shape(c4_tree):
    assert (c4_tree.graph.n, c4_tree.budget) == (24, 14)
    g = c4_tree.graph
    assert g.degree(c4_tree.vertex("original", 1)) == 4
    assert [g.degree(c4_tree.vertex(tag, 2)) for tag in ("a", "b", "c", "d", "e")] == [2, 3, 1, 1, 1]
    assert is_bipartite(g) is not None and is_chordal_bipartite(g)


def test_treegadget_keeps_non_bipartite_sources_out():
    out = ds_to_treegadget(cycle_graph(5), 3)
    assert is_bipartite(out.graph) is None
    assert not is_chordal_bipartite(ds_to_treegadget(cycle_graph(6), 2).graph)
    assert is_chordal_bipartite(ds_to_treegadget(complete_bipartite_graph(2, 3), 2).graph)


def test_treegadget_forward_and_back(c4_tree):
    f = treegadget_labeling_from_ds(c4_tree, [0, 2])
    assert f.weight == 14
    assert ds_from_grdf_treegadget(c4_tree, f) == frozenset({0, 2})
    with pytest.raises(NotDominating):
        treegadget_labeling_from_ds(c4_tree, [0])
    with pytest.raises(ParameterError):
        treegadget_labeling_from_ds(ds_to_treegadget(complete_graph(1), 1), [0])


def test_treegadget_decision(c4_tree):
    result = decide(c4_tree.graph, Mode.GRD, 14)
    assert result.answer
    s = ds_from_grdf_treegadget(c4_tree, result.witness)
    assert is_dominating_set(cycle_graph(4), s) and len(s) <= 2
    assert not decide(c4_tree.graph, Mode.GRD, 13).answer


@pytest.mark.slow
def test_treegadget_decision_on_p5():
    out = ds_to_treegadget(path_graph(5), 2)
    result = decide(out.graph, Mode.GRD, out.budget)
    assert result.answer
    assert is_dominating_set(path_graph(5), ds_from_grdf_treegadget(out, result.witness))
    assert not decide(out.graph, Mode.GRD, out.budget - 1).answer


# =============================================================================
# Serialization
# =============================================================================

def test_digest_is_stable(split_yes, split_no):
    again = x3c_to_split(catalogue.SPLIT_YES_X3C)
    assert len(split_yes.source.digest) == 64
    assert split_yes.source.digest == again.source.digest != split_no.source.digest


def test_reduction_to_dict(split_yes):
    data = reduction_to_dict(split_yes)
    assert data["budget"] == 9
    assert data["roles"][:2] == ["A(1)", "A(2)"]
    assert data["source"]["params"] == {"q": 2, "t": 4}
    assert data["graph"]["n"] == 16
