import math
from collections import Counter

import numpy as np
import pytest

from epg import groups as gr
from epg.errors import ActionError, NormalityError, SizeLimitError, SpecError
from epg.perms import MatrixModP, Permutation, perm_from_cycles


def order_multiset(G):
    return Counter(int(o) for o in G.elem_order)


# --- generator closure ------------------------------------------------------

def test_closure_s3():
    t = perm_from_cycles([[0, 1]], 3)
    c = perm_from_cycles([[0, 1, 2]], 3)
    G = gr.closure([t, c])
    assert G.order == 6
    G.validate()


def test_closure_cyclic7():
    c = perm_from_cycles([list(range(7))], 7)
    G = gr.closure([c])
    assert G.order == 7
    assert all(int(o) == 7 for o in G.elem_order[1:])


def test_closure_sl23_matches_formula():
    g1 = MatrixModP.make([[1, 1], [0, 1]], 3)
    g2 = MatrixModP.make([[0, -1], [1, 0]], 3)
    G = gr.closure([g1, g2])
    assert G.order == 24 == 3 * (3 * 3 - 1)
    G.validate()


def test_closure_identity_is_index_zero():
    G = gr.symmetric(4)
    assert G.carrier[0] == Permutation.identity(4)
    assert int(G.elem_order[0]) == 1


def test_closure_cap():
    with pytest.raises(SizeLimitError):
        gr.symmetric(8)  # 40320 > 5040
    G = gr.symmetric(7)  # exactly the default cap
    assert G.order == 5040


# --- named constructors -----------------------------------------------------

def test_dihedral6_order_multiset():
    G = gr.dihedral(6)
    assert G.order == 12
    assert order_multiset(G) == {1: 1, 2: 7, 3: 2, 6: 2}
    G.validate()


def test_q8_unique_involution():
    G = gr.generalized_quaternion(2)
    assert order_multiset(G)[2] == 1
    # the involution is x^m at index m
    assert int(G.elem_order[2]) == 2


def test_elementary_abelian_exponent_two():
    G = gr.elementary_abelian(2, 3)
    assert G.order == 8
    assert all(int(o) == 2 for o in G.elem_order[1:])


@pytest.mark.parametrize("bad", [
    lambda: gr.elementary_abelian(4, 2),
    lambda: gr.generalized_quaternion(1),
    lambda: gr.dihedral(0),
    lambda: gr.sl2(6),
])
def test_constructor_parameter_errors(bad):
    with pytest.raises(SpecError):
        bad()


def test_symmetric_alternating_orders():
    for n in range(2, 7):
        assert gr.symmetric(n).order == math.factorial(n)
    for n in range(3, 8):
        assert gr.alternating(n).order == math.factorial(n) // 2


# --- products ---------------------------------------------------------------

def test_direct_product_z2_z3_is_cyclic6():
    G = gr.direct_product(gr.cyclic(2), gr.cyclic(3))
    assert G.order == 6
    assert 6 in set(int(o) for o in G.elem_order)


def test_direct_product_z6_z6_orders():
    G = gr.direct_product(gr.cyclic(6), gr.cyclic(6))
    assert G.order == 36
    assert set(int(o) for o in G.elem_order) == {1, 2, 3, 6}


def test_direct_product_q12_z2():
    G = gr.direct_product(gr.generalized_quaternion(3), gr.cyclic(2))
    assert G.order == 24
    G.validate()


@pytest.mark.parametrize("G,H", [
    (gr.cyclic(8), gr.cyclic(9)),
    (gr.cyclic(4), gr.cyclic(25)),
    (gr.cyclic(16), gr.cyclic(9)),
    (gr.symmetric(4), gr.cyclic(5)),
    (gr.generalized_quaternion(2), gr.cyclic(9)),
    (gr.dihedral(10), gr.cyclic(21)),
    (gr.sl2(3), gr.cyclic(7)),
], ids=lambda x: x.name)
def test_direct_product_coprime_element_orders(G, H):
    assert math.gcd(G.order, H.order) == 1 and G.order * H.order <= 500
    P = gr.direct_product(G, H)
    for g in range(G.order):
        for h in range(H.order):
            want = math.lcm(int(G.elem_order[g]), int(H.elem_order[h]))
            assert int(P.elem_order[g * H.order + h]) == want


def test_direct_product_cap():
    with pytest.raises(SizeLimitError):
        gr.direct_product(gr.cyclic(100), gr.cyclic(100), max_order=5040)


# --- semidirect products ----------------------------------------------------

def inversion(n):
    return [0] + [n - i for i in range(1, n)]


def test_semidirect_inversion_matches_dihedral():
    sd = gr.semidirect_product(gr.cyclic(6), gr.cyclic(2),
                               [list(range(6)), inversion(6)])
    assert order_multiset(sd) == order_multiset(gr.dihedral(6))


def test_semidirect_trivial_action_is_direct_product():
    sd = gr.semidirect_product(gr.cyclic(6), gr.cyclic(2), [list(range(6))] * 2)
    dp = gr.direct_product(gr.cyclic(6), gr.cyclic(2))
    assert np.array_equal(sd.table, dp.table)


def test_semidirect_q8_z3_matches_sl23():
    from epg.specs import ACTION_PRESETS
    sd = gr.semidirect_product(gr.generalized_quaternion(2), gr.cyclic(3),
                               ACTION_PRESETS["q8_cycle_ijk"])
    assert sd.order == 24
    assert set(int(o) for o in sd.elem_order) == {1, 2, 3, 4, 6}
    assert order_multiset(sd) == order_multiset(gr.sl2(3))


def test_semidirect_rejects_bad_action():
    # transposing two non-identity elements of Z_6 is not an automorphism
    bad = [0, 2, 1, 3, 4, 5]
    with pytest.raises(ActionError):
        gr.semidirect_product(gr.cyclic(6), gr.cyclic(2), [list(range(6)), bad])
    # valid permutations that fail the homomorphism law
    with pytest.raises(ActionError):
        gr.semidirect_product(gr.cyclic(6), gr.cyclic(3),
                              [list(range(6)), inversion(6), list(range(6))])


# --- quotients --------------------------------------------------------------

def test_quotient_z6_by_order3():
    Z6 = gr.cyclic(6)
    N = gr.subgroup_closure(Z6, [2])
    assert len(N) == 3
    assert gr.quotient(Z6, N).order == 2


def test_quotient_q8_by_center_has_exponent_two():
    Q8 = gr.generalized_quaternion(2)
    q = gr.quotient(Q8, gr.center(Q8))
    assert q.order == 4
    assert all(int(o) <= 2 for o in q.elem_order)


def test_quotient_sl25_center_is_psl25():
    G = gr.sl2(5)
    q = gr.quotient(G, gr.center(G))
    assert q.order == 60
    assert set(int(o) for o in q.elem_order) == {1, 2, 3, 5}


def test_quotient_requires_normal_subgroup():
    S3 = gr.symmetric(3)
    refl = next(i for i in range(6) if int(S3.elem_order[i]) == 2)
    sub = gr.subgroup_closure(S3, [refl])
    with pytest.raises(NormalityError):
        gr.quotient(S3, sub)
    with pytest.raises(NormalityError):
        gr.quotient(S3, frozenset({0, 1}))  # not even a subgroup in general


def test_quotient_by_trivial_is_identity_map():
    G = gr.dihedral(5)
    q = gr.quotient(G, frozenset({0}))
    assert np.array_equal(q.table, G.table)


# --- subgroup machinery -----------------------------------------------------

def test_subgroup_closure_identity():
    G = gr.cyclic(5)
    assert gr.subgroup_closure(G, [0]) == {0}


def test_subgroup_closure_dihedral_rotations():
    G = gr.dihedral(6)
    rot = gr.subgroup_closure(G, [1])
    assert rot == frozenset(range(6))


def test_subgroup_closure_s4_generators():
    G = gr.symmetric(4)
    t = gr.element_index(G, perm_from_cycles([[0, 1]], 4))
    c = gr.element_index(G, perm_from_cycles([[0, 1, 2, 3]], 4))
    assert len(gr.subgroup_closure(G, [t, c])) == 24


def test_is_cyclic():
    G = gr.generalized_quaternion(2)
    assert gr.is_cyclic(G, G.cyclic_subgroup(4))  # <y> has order 4
    V4 = gr.elementary_abelian(2, 2)
    assert not gr.is_cyclic(V4, frozenset(range(4)))
    Z9 = gr.cyclic(9)
    assert gr.is_cyclic(Z9, gr.subgroup_closure(Z9, [3]))


def test_element_orders_set():
    assert gr.element_orders_set(gr.cyclic(6)) == {1, 2, 3, 6}
    assert gr.element_orders_set(gr.generalized_quaternion(2)) == {1, 2, 4}


def test_element_orders_a7():
    assert gr.element_orders_set(gr.alternating(7)) == {1, 2, 3, 4, 5, 6, 7}


# --- table validation -------------------------------------------------------

def test_from_table_rejects_non_associative():
    table = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]  # last row breaks the structure
    with pytest.raises(SpecError, match="triple|inverse|identity"):
        gr.from_table(table)


def test_from_table_accepts_z4():
    t = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    G = gr.from_table(t, name="Z4")
    assert G.order == 4


def test_validate_randomized_path():
    G = gr.cyclic(250)
    G.validate()  # order > 200 exercises the sampled-triple branch


def test_table_dtype_is_compact():
    assert gr.symmetric(5).table.dtype == np.uint16
