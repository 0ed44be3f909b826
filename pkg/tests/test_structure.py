import pytest

from epg import groups as gr
from epg import structure as st


# --- maximal cyclic subgroups -----------------------------------------------

def test_mcs_cyclic_is_whole_group():
    G = gr.cyclic(12)
    mcs = st.maximal_cyclic_subgroups(G)
    assert mcs == [frozenset(range(12))]


@pytest.mark.parametrize("n", range(3, 31))
def test_mcs_dihedral_count(n):
    G = gr.dihedral(n)
    mcs = st.maximal_cyclic_subgroups(G)
    assert len(mcs) == n + 1
    assert sorted(len(s) for s in mcs) == [2] * n + [n]


@pytest.mark.parametrize("m", range(2, 16))
def test_mcs_quaternion_count(m):
    G = gr.generalized_quaternion(m)
    mcs = st.maximal_cyclic_subgroups(G)
    assert len(mcs) == m + 1
    assert sorted(len(s) for s in mcs) == [4] * m + [2 * m]


def test_mcs_is_antichain_and_covers():
    G = gr.symmetric(4)
    mcs = st.maximal_cyclic_subgroups(G)
    for i, a in enumerate(mcs):
        for b in mcs[i + 1:]:
            assert not (a <= b or b <= a)
    union = frozenset().union(*mcs)
    assert union == frozenset(range(24))


# --- cyclicizer ---------------------------------------------------------------

def test_cyclicizer_cyclic():
    assert st.cyclicizer(gr.cyclic(9)) == frozenset(range(9))


@pytest.mark.parametrize("n", [3, 5, 8])
def test_cyclicizer_dihedral_trivial(n):
    assert st.cyclicizer(gr.dihedral(n)) == {0}


@pytest.mark.parametrize("m", [2, 3, 5])
def test_cyclicizer_quaternion(m):
    # identity and the unique involution x^m
    assert st.cyclicizer(gr.generalized_quaternion(m)) == {0, m}


def test_cyclicizer_matches_literal_definition_small():
    for G in (gr.dihedral(4), gr.generalized_quaternion(2), gr.cyclic(8),
              gr.symmetric(3), gr.direct_product(gr.cyclic(2), gr.cyclic(4))):
        cyc = st.cyclicizer(G)
        literal = frozenset(
            g for g in range(G.order)
            if all(gr.is_cyclic(G, gr.subgroup_closure(G, (g, x)))
                   for x in range(G.order)))
        assert cyc == literal, G.name


# --- torsion and nilpotency ---------------------------------------------------

def test_p_torsion_z6():
    assert len(st.p_torsion(gr.cyclic(6), 2)) == 2


def test_p_torsion_s3_not_closed():
    S3 = gr.symmetric(3)
    tor = st.p_torsion(S3, 2)
    assert len(tor) == 4
    assert len(gr.subgroup_closure(S3, tor)) == 6  # closure escapes the set


def test_p_torsion_z6z6_subgroup():
    G = gr.direct_product(gr.cyclic(6), gr.cyclic(6))
    tor = st.p_torsion(G, 3)
    assert len(tor) == 9
    assert gr.subgroup_closure(G, tor) == tor


def test_is_nilpotent():
    assert st.is_nilpotent(gr.generalized_quaternion(2))
    assert st.is_nilpotent(gr.elementary_abelian(3, 2))
    assert st.is_nilpotent(gr.cyclic(60))
    assert not st.is_nilpotent(gr.symmetric(3))
    assert not st.is_nilpotent(
        gr.direct_product(gr.generalized_quaternion(3), gr.cyclic(2)))


def test_nilpotent_pgroup_times_coprime_cyclic():
    G = gr.direct_product(gr.generalized_quaternion(2), gr.cyclic(9))
    assert st.is_nilpotent(G)
    G2 = gr.direct_product(gr.elementary_abelian(3, 2), gr.cyclic(4))
    assert st.is_nilpotent(G2)


def test_noncyclic_sylow_count():
    assert st.noncyclic_sylow_count(gr.cyclic(30)) == 0
    assert st.noncyclic_sylow_count(
        gr.direct_product(gr.generalized_quaternion(2), gr.cyclic(3))) == 1
    assert st.noncyclic_sylow_count(
        gr.direct_product(gr.cyclic(6), gr.cyclic(6))) == 2
    with pytest.raises(ValueError):
        st.noncyclic_sylow_count(gr.symmetric(3))


# --- CP / P groups and the prime graph ----------------------------------------

def test_is_cp_group():
    assert st.is_cp_group(gr.alternating(6))
    assert not st.is_cp_group(gr.cyclic(6))
    assert st.is_cp_group(gr.dihedral(9))  # 2 * 3^2


def test_is_p_group_all_prime_orders():
    assert st.is_p_group_all_prime_orders(gr.dihedral(7))
    assert not st.is_p_group_all_prime_orders(gr.cyclic(4))
    assert st.is_p_group_all_prime_orders(gr.elementary_abelian(3, 2))


def test_prime_graph():
    pg = st.prime_graph(gr.cyclic(6))
    assert pg.primes == [2, 3] and pg.edges == [(2, 3)]
    pg = st.prime_graph(gr.alternating(5))
    assert pg.primes == [2, 3, 5] and pg.is_edgeless()
    pg = st.prime_graph(gr.direct_product(gr.cyclic(6), gr.cyclic(6)))
    assert pg.edges == [(2, 3)]


def test_p_group_implies_cp_group():
    for G in (gr.dihedral(7), gr.elementary_abelian(3, 2), gr.elementary_abelian(2, 4)):
        assert st.is_p_group_all_prime_orders(G)
        assert st.is_cp_group(G)


# --- family recognition ---------------------------------------------------------

def test_recognize_constructor_round_trips():
    for n in range(3, 16):
        assert st.recognize_family(gr.dihedral(n)) == st.DIHEDRAL
    for m in range(2, 8):
        assert st.recognize_family(gr.generalized_quaternion(m)) == st.GENERALIZED_QUATERNION
    for k in range(2, 6):
        assert st.recognize_family(gr.elementary_abelian(2, k)) == st.ELEMENTARY_ABELIAN_2
    for n in (1, 2, 7, 36):
        assert st.recognize_family(gr.cyclic(n)) == st.CYCLIC


def test_recognize_priority_overlaps():
    assert st.recognize_family(gr.cyclic(2)) == st.CYCLIC
    assert st.recognize_family(gr.elementary_abelian(2, 1)) == st.CYCLIC
    assert st.recognize_family(gr.elementary_abelian(2, 2)) == st.ELEMENTARY_ABELIAN_2
    assert st.recognize_family(gr.dihedral(1)) == st.CYCLIC
    assert st.recognize_family(gr.dihedral(2)) == st.ELEMENTARY_ABELIAN_2


def test_recognize_semidirect_dihedral():
    act = [list(range(6)), [0, 5, 4, 3, 2, 1]]
    sd = gr.semidirect_product(gr.cyclic(6), gr.cyclic(2), act)
    assert st.recognize_family(sd) == st.DIHEDRAL


def test_recognize_other():
    assert st.recognize_family(gr.symmetric(4)) == st.OTHER
    assert st.recognize_family(gr.direct_product(gr.cyclic(2), gr.cyclic(4))) == st.OTHER


# --- uniform intersections -------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 10])
def test_uniform_intersection_dihedral(n):
    assert st.uniform_mcs_intersection(gr.dihedral(n)) == 1


@pytest.mark.parametrize("m", [2, 3, 6])
def test_uniform_intersection_quaternion(m):
    assert st.uniform_mcs_intersection(gr.generalized_quaternion(m)) == 2


def test_uniform_intersection_absent():
    G = gr.direct_product(gr.cyclic(2), gr.cyclic(4))
    assert st.uniform_mcs_intersection(G) is None
    assert st.uniform_mcs_intersection(gr.cyclic(10)) is None  # single member


def test_uniform_intersection_sl23():
    assert st.uniform_mcs_intersection(gr.sl2(3)) == 2


# --- two-prime sufficient conditions ---------------------------------------------

def test_two_prime_examples():
    a = gr.direct_product(gr.direct_product(gr.cyclic(2), gr.cyclic(2)), gr.symmetric(3))
    assert "a" in st.two_prime_condition(a)
    b = gr.direct_product(gr.cyclic(3), gr.symmetric(3))
    assert "b" in st.two_prime_condition(b)
    c = gr.sl2(3)
    assert "c" in st.two_prime_condition(c)


def test_two_prime_requires_two_primes():
    assert st.two_prime_condition(gr.cyclic(4)) == frozenset()
    assert st.two_prime_condition(gr.cyclic(30)) == frozenset()


def test_two_prime_not_satisfied_by_extremal_groups():
    q12z2 = gr.direct_product(gr.generalized_quaternion(3), gr.cyclic(2))
    assert st.two_prime_condition(q12z2) == frozenset()
    from epg import specs
    z3d8 = specs.build(specs.GROUP_PRESETS["z3_semidirect_d8"])
    assert st.two_prime_condition(z3d8) == frozenset()
