import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from epg import graphclass as gc
from epg import groups as gr
from epg.graphs import SimpleGraph, build_epg, oracle_graph
from epg.perms import parse_cycles

from conftest import naive_has_pattern, naive_is_chordal, naive_longest_hole, random_graph


def path_graph(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


TWO_K2 = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])


# --- split ------------------------------------------------------------------

def test_split_rejects_2k2_itself():
    v = gc.is_split(TWO_K2)
    assert not v.member and v.witness.pattern == "2K2"
    assert gc.verify_witness(TWO_K2, v.witness)


def test_split_dihedral_partition():
    G = gr.dihedral(6)
    v = gc.is_split(build_epg(G))
    assert v.member
    # clique side is the rotation subgroup, independent side the reflections
    assert v.certificate["clique"] == list(range(6))
    assert v.certificate["independent"] == list(range(6, 12))


def test_split_z2_z4_witness_uses_order_four_elements():
    G = gr.direct_product(gr.cyclic(2), gr.cyclic(4))
    g = build_epg(G)
    v = gc.is_split(g)
    assert not v.member and v.witness.pattern == "2K2"
    assert all(int(G.elem_order[x]) == 4 for x in v.witness.vertices)
    assert gc.verify_witness(g, v.witness)


def test_split_p4_is_split():
    assert gc.is_split(path_graph(4)).member


# --- threshold ----------------------------------------------------------------

def test_threshold_star():
    g = SimpleGraph.from_edges(6, [(0, i) for i in range(1, 6)])
    v = gc.is_threshold(g)
    assert v.member
    assert gc.validate_certificate(g, v)


def test_threshold_p4_witness():
    v = gc.is_threshold(path_graph(4))
    assert not v.member and v.witness.pattern == "P4"


def test_threshold_q8_witness():
    G = gr.generalized_quaternion(2)
    g = build_epg(G)
    v = gc.is_threshold(g)
    assert not v.member and v.witness.pattern == "2K2"
    assert all(int(G.elem_order[x]) == 4 for x in v.witness.vertices)


# --- chordal --------------------------------------------------------------------

def test_chordal_c4_witness():
    v = gc.is_chordal(cycle_graph(4))
    assert not v.member and v.witness.pattern == "C4"


def test_chordal_trees_and_complete():
    assert gc.is_chordal(path_graph(7)).member
    assert gc.is_chordal(complete_graph(6)).member


def test_chordal_z6z6_hole():
    G = gr.direct_product(gr.cyclic(6), gr.cyclic(6))
    g = build_epg(G)
    v = gc.is_chordal(g)
    assert not v.member
    assert int(v.witness.pattern[1:]) >= 4
    assert gc.verify_witness(g, v.witness)


def test_peo_certificate_validates():
    g = build_epg(gr.dihedral(9))
    v = gc.is_chordal(g)
    assert v.member and gc.is_peo(g, v.certificate["peo"])


# --- cograph ---------------------------------------------------------------------

def test_cograph_complete_and_empty():
    assert gc.is_cograph(complete_graph(5)).member
    assert gc.is_cograph(SimpleGraph(5, [0] * 5)).member


def test_cograph_p4_witness():
    v = gc.is_cograph(path_graph(4))
    assert not v.member and v.witness.vertices == (0, 1, 2, 3)


def test_cograph_s6_with_explicit_path():
    G = gr.symmetric(6)
    g = build_epg(G)
    v = gc.is_cograph(g)
    assert not v.member
    assert gc.verify_witness(g, v.witness)
    idxs = tuple(gr.element_index(G, parse_cycles(c, 6))
                 for c in ("(1 2)", "(3 4 5)", "(1 6)", "(2 3 4)"))
    assert gc.verify_witness(g, gc.Witness("P4", idxs))


def test_cotree_certificate_validates():
    g = build_epg(gr.generalized_quaternion(3))
    v = gc.is_cograph(g)
    assert v.member
    assert gc.validate_cotree(g, v.certificate["cotree"])
    # a wrong tree must not validate
    bad = {"op": "union", "children": [{"leaf": i} for i in range(g.n)]}
    assert not gc.validate_cotree(g, bad)


# --- find_induced ------------------------------------------------------------------

def test_find_induced_absent_in_complete():
    g = complete_graph(8)
    for pat in ("P4", "C4", "C5", "2K2"):
        assert gc.find_induced(g, pat) is None


def test_find_induced_first_is_deterministic():
    g = SimpleGraph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    w1 = gc.find_induced(g, "2K2")
    w2 = gc.find_induced(g, "2K2")
    assert w1 == w2 == gc.Witness("2K2", (0, 1, 2, 3))


def test_find_induced_unknown_pattern():
    with pytest.raises(Exception):
        gc.find_induced(complete_graph(3), "K5")


def test_find_induced_matches_naive_enumeration():
    rng = random.Random(99)
    for i in range(300):
        n = 4 + i % 5
        g = random_graph(rng, n, 0.15 + 0.1 * (i % 8))
        for pat in ("P4", "C4", "C5", "2K2"):
            got = gc.find_induced(g, pat)
            assert (got is not None) == naive_has_pattern(g, pat), (i, pat)
            if got is not None:
                assert gc.verify_witness(g, got)


# --- find_induced_cycle_at_least -----------------------------------------------------

def test_cycle_search_whole_c6():
    w = gc.find_induced_cycle_at_least(cycle_graph(6), 6)
    assert w is not None and w.pattern == "C6"


def test_cycle_search_absent_in_chordal():
    assert gc.find_induced_cycle_at_least(complete_graph(6), 4) is None
    assert gc.find_induced_cycle_at_least(path_graph(8), 4) is None


def test_cycle_search_k_validation():
    with pytest.raises(Exception):
        gc.find_induced_cycle_at_least(cycle_graph(5), 3)


def test_cycle_search_long_cycle_beyond_short_ones():
    # a C4 and a C7 sharing nothing: k=5 must find the C7 despite the C4
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    edges += [(4 + i, 4 + (i + 1) % 7) for i in range(7)]
    g = SimpleGraph.from_edges(11, edges)
    w = gc.find_induced_cycle_at_least(g, 5)
    assert w is not None and w.pattern == "C7"
    assert gc.verify_witness(g, w)


def test_cycle_search_matches_naive():
    rng = random.Random(7)
    for i in range(200):
        n = 5 + i % 5
        g = random_graph(rng, n, 0.2 + 0.1 * (i % 7))
        longest = naive_longest_hole(g)
        for k in (4, 5, 6):
            got = gc.find_induced_cycle_at_least(g, k)
            assert (got is not None) == (longest >= k), (i, k)
            if got is not None:
                assert gc.verify_witness(g, got)
                assert len(got.vertices) >= k


# --- verify_witness ------------------------------------------------------------------

def test_verify_witness_examples():
    c4 = cycle_graph(4)
    assert gc.verify_witness(c4, gc.Witness("C4", (0, 1, 2, 3)))
    assert not gc.verify_witness(complete_graph(4), gc.Witness("P4", (0, 1, 2, 3)))
    assert not gc.verify_witness(c4, gc.Witness("C4", (0, 1, 2, 2)))
    assert not gc.verify_witness(c4, gc.Witness("C5", (0, 1, 2, 3)))
    assert not gc.verify_witness(c4, gc.Witness("C4", (0, 2, 1, 3)))


def test_verify_witness_a7_path_via_oracle():
    perms = [parse_cycles(c, 7)
             for c in ("(1 2)(3 4)", "(5 6 7)", "(1 3)(2 4)", "(1 2 3 4)(5 6)")]
    og = oracle_graph("A", 7, perms)
    assert gc.verify_witness(og, gc.Witness("P4", (0, 1, 2, 3)))


# --- randomized recognizer/oracle agreement -------------------------------------------

@settings(max_examples=300, deadline=None)
@given(hs.integers(1, 10), hs.integers(0, 10 ** 9))
def test_recognizers_agree_with_oracles(n, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, rng.choice([0.1, 0.3, 0.5, 0.7, 0.9]))
    sp, th = gc.is_split(g), gc.is_threshold(g)
    ch, co = gc.is_chordal(g), gc.is_cograph(g)
    assert sp.member == all(gc.find_induced(g, p) is None for p in ("C4", "C5", "2K2"))
    assert th.member == all(gc.find_induced(g, p) is None for p in ("P4", "C4", "2K2"))
    assert co.member == (gc.find_induced(g, "P4") is None)
    assert ch.member == naive_is_chordal(g)
    for v in (sp, th, ch, co):
        assert gc.validate_certificate(g, v)
    if th.member:
        assert sp.member and co.member
    if sp.member:
        assert ch.member
    assert gc.is_cograph(g.complement()).member == co.member
