"""Group-theoretic predicates and substructures: maximal cyclic subgroups,
Sylow torsion, nilpotency, CP/P tests, cyclicizer, prime graph, and family
recognition.
"""

from __future__ import annotations

import numpy as np

from .arith import is_prime, is_prime_power, prime_divisors
from .errors import EpgError
from .groups import FiniteGroup, is_cyclic, subgroup_closure

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
GENERALIZED_QUATERNION = "generalized_quaternion"
ELEMENTARY_ABELIAN_2 = "elementary_abelian_2"
OTHER = "other"

SPLIT_FAMILIES = frozenset({CYCLIC, DIHEDRAL, ELEMENTARY_ABELIAN_2})


def maximal_cyclic_subgroups(G: FiniteGroup) -> list[frozenset]:
    """All maximal cyclic subgroups, sorted by (size, sorted member tuple)."""
    distinct = [s for _, s in G.cyclic_subgroups()]
    by_size = sorted(distinct, key=len, reverse=True)
    maximal: list[frozenset] = []
    for s in by_size:
        if not any(len(t) > len(s) and s <= t for t in maximal):
            maximal.append(s)
    return sorted(maximal, key=lambda s: (len(s), tuple(sorted(s))))


def cyclicizer(G: FiniteGroup) -> frozenset:
    """Elements co-cyclic with everything; cross-checked against the
    intersection of all maximal cyclic subgroups.
    """
    from .graphs import build_epg

    g = build_epg(G, build_cap=G.order)
    full = (1 << G.order) - 1
    via_graph = frozenset(v for v in range(G.order) if g.rows[v] | (1 << v) == full)
    mcs = maximal_cyclic_subgroups(G)
    via_mcs = frozenset(range(G.order))
    for s in mcs:
        via_mcs &= s
    if via_graph != via_mcs:
        raise EpgError(
            f"cyclicizer mismatch in {G.name}: universal-vertex set {sorted(via_graph)} "
            f"differs from the intersection of maximal cyclic subgroups {sorted(via_mcs)}")
    return via_graph


def p_torsion(G: FiniteGroup, p: int) -> frozenset:
    """Elements whose order is a power of p (the identity included)."""
    if not is_prime(p):
        raise EpgError(f"{p} is not prime")
    out = []
    for g in range(G.order):
        o = int(G.elem_order[g])
        while o % p == 0:
            o //= p
        if o == 1:
            out.append(g)
    return frozenset(out)


def _is_closed(G: FiniteGroup, S: frozenset) -> bool:
    idx = np.fromiter(sorted(S), dtype=np.int64)
    sub = G.table[np.ix_(idx, idx)]
    return bool(np.isin(sub, idx).all())


def is_nilpotent(G: FiniteGroup) -> bool:
    """True iff every p-torsion set is closed under the product (then each is
    the unique Sylow p-subgroup and the group is their internal direct product).
    """
    return all(_is_closed(G, p_torsion(G, p)) for p in prime_divisors(G.order))


def noncyclic_sylow_count(G: FiniteGroup) -> int:
    """Number of primes whose Sylow subgroup is noncyclic; requires nilpotency."""
    if not is_nilpotent(G):
        raise ValueError(f"{G.name} is not nilpotent; Sylow torsion sets are not subgroups")
    count = 0
    for p in prime_divisors(G.order):
        tor = p_torsion(G, p)
        if not is_cyclic(G, tor):
            count += 1
    return count


def is_cp_group(G: FiniteGroup) -> bool:
    """Every nontrivial element order is a prime power."""
    return all(is_prime_power(int(o)) for o in G.elem_order if int(o) > 1)


def is_p_group_all_prime_orders(G: FiniteGroup) -> bool:
    """Every nontrivial element order is prime."""
    return all(is_prime(int(o)) for o in G.elem_order if int(o) > 1)


def prime_graph(G: FiniteGroup) -> "PrimeGraph":
    """Graph on the prime divisors of |G| with p ~ q iff pq is an element order."""
    primes = prime_divisors(G.order)
    orders = set(int(o) for o in G.elem_order)
    edges = [(p, q) for i, p in enumerate(primes) for q in primes[i + 1:] if p * q in orders]
    pg = PrimeGraph(primes, edges)
    if (len(edges) == 0) != is_cp_group(G):
        raise EpgError(f"prime graph of {G.name} is edgeless but the group is not CP (or vice versa)")
    return pg


class PrimeGraph:
    """Vertices are prime divisors of the group order; edges mark composite element orders."""

    __slots__ = ("primes", "edges")

    def __init__(self, primes: list[int], edges: list[tuple[int, int]]):
        self.primes = list(primes)
        self.edges = [tuple(sorted(e)) for e in edges]

    def is_edgeless(self) -> bool:
        return not self.edges

    def to_json(self) -> dict:
        return {"primes": self.primes, "edges": [list(e) for e in self.edges]}


def recognize_family(G: FiniteGroup) -> str:
    """Classify a group as cyclic / elementary abelian 2 / dihedral /
    generalized quaternion / other, in that priority order.

    Dihedral and quaternion recognition search the table for elements
    satisfying the defining relations, scanning candidates in index order and
    stopping at the first witness.
    """
    n = G.order
    orders = G.elem_order
    if (orders == n).any():
        return CYCLIC
    if int(orders.max()) <= 2:
        return ELEMENTARY_ABELIAN_2
    if n % 2 == 0 and _find_dihedral_witness(G):
        return DIHEDRAL
    if n % 4 == 0 and n >= 8 and _find_quaternion_witness(G):
        return GENERALIZED_QUATERNION
    return OTHER


def _find_dihedral_witness(G: FiniteGroup) -> tuple[int, int] | None:
    n = G.order // 2
    for a in range(G.order):
        if int(G.elem_order[a]) != n:
            continue
        rot = G.cyclic_subgroup(a)
        a_inv = G.inv(a)
        for b in range(G.order):
            if int(G.elem_order[b]) != 2 or b in rot:
                continue
            if G.mul(G.mul(b, a), b) != a_inv:
                continue
            if len(subgroup_closure(G, (a, b))) == G.order:
                return (a, b)
    return None


def _find_quaternion_witness(G: FiniteGroup) -> tuple[int, int] | None:
    m = G.order // 4
    for x in range(G.order):
        if int(G.elem_order[x]) != 2 * m:
            continue
        xs = G.cyclic_subgroup(x)
        xm = G.power(x, m)
        x_inv = G.inv(x)
        for y in range(G.order):
            if y in xs:
                continue
            if G.mul(y, y) != xm:
                continue
            if G.mul(G.mul(G.inv(y), x), y) != x_inv:
                continue
            if len(subgroup_closure(G, (x, y))) == G.order:
                return (x, y)
    return None


def uniform_mcs_intersection(G: FiniteGroup) -> int | None:
    """If every two distinct maximal cyclic subgroups meet in the same number
    of elements, return that number; otherwise None (also None for groups with
    a single maximal cyclic subgroup).

    When the sizes are uniform the intersections must in fact all be one common
    subgroup (cyclic subgroups have one subgroup per divisor); this stronger
    statement is asserted rather than assumed.
    """
    mcs = maximal_cyclic_subgroups(G)
    if len(mcs) < 2:
        return None
    inters = [mcs[i] & mcs[j] for i in range(len(mcs)) for j in range(i + 1, len(mcs))]
    sizes = {len(s) for s in inters}
    if len(sizes) != 1:
        return None
    if len(set(inters)) != 1:
        raise EpgError(
            f"{G.name}: pairwise maximal-cyclic intersections share a cardinality "
            f"but are not a single common subgroup")
    return sizes.pop()


def two_prime_condition(G: FiniteGroup) -> frozenset:
    """Which of the sufficient conditions {a, b, c} hold for a group whose
    order has exactly two prime divisors p < q:

      a: element orders are exactly {1,p,q,pq} and the group has a unique
         subgroup of order p or a unique subgroup of order q;
      b: element orders are exactly {1,p,q,pq} and either there is a unique
         cyclic subgroup of order pq, or the intersection of all of them has
         size p or q;
      c: element orders are exactly {1,p,q,pq,r^2} for r in {p,q}, and either
         there is a unique cyclic subgroup of order pq, or the intersection of
         all of them is generated by an element of the cyclicizer whose order
         is p or q.

    Returns the empty set when the order does not have exactly two prime
    divisors.
    """
    primes = prime_divisors(G.order)
    if len(primes) != 2:
        return frozenset()
    p, q = primes
    pi_e = frozenset(int(o) for o in G.elem_order)
    base = frozenset({1, p, q, p * q})
    satisfied: set[str] = set()

    if pi_e == base:
        if _count_subgroups_of_order(G, p) == 1 or _count_subgroups_of_order(G, q) == 1:
            satisfied.add("a")
        pq_subs = _cyclic_subgroups_of_order(G, p * q)
        if len(pq_subs) == 1:
            satisfied.add("b")
        elif pq_subs:
            inter = frozenset.intersection(*pq_subs)
            if len(inter) in (p, q):
                satisfied.add("b")

    for sq in (p, q):
        if pi_e == base | {sq * sq}:
            pq_subs = _cyclic_subgroups_of_order(G, p * q)
            if len(pq_subs) == 1:
                satisfied.add("c")
            elif pq_subs:
                inter = frozenset.intersection(*pq_subs)
                if len(inter) in (p, q) and is_cyclic(G, inter):
                    cyc = cyclicizer(G)
                    if inter <= cyc:
                        satisfied.add("c")
    return frozenset(satisfied)


def _cyclic_subgroups_of_order(G: FiniteGroup, k: int) -> list[frozenset]:
    return [s for _, s in G.cyclic_subgroups() if len(s) == k]


def _count_subgroups_of_order(G: FiniteGroup, p: int) -> int:
    # subgroups of prime order are exactly the cyclic ones
    return len(_cyclic_subgroups_of_order(G, p))
