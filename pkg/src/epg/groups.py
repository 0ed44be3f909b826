"""Finite groups as Cayley tables, plus the constructions that combine them.

Conventions, fixed for reproducibility:
  - the identity is always element index 0;
  - generator closures index elements in breadth-first discovery order over the
    (deduplicated) generator list, so every construction and every reported
    witness is deterministic;
  - tables are numpy arrays of element indices (uint16 under the default
    order cap, uint32 beyond).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .arith import is_prime
from .errors import ActionError, MembershipError, NormalityError, SizeLimitError, SpecError
from .perms import MatrixModP, Permutation

DEFAULT_MAX_ORDER = 5040

ElementSet = frozenset  # subsets of a group's element indices


def _table_dtype(n: int):
    return np.uint16 if n <= 0xFFFF else np.uint32


class FiniteGroup:
    """Immutable finite group over element indices 0..order-1 with identity 0."""

    __slots__ = ("order", "table", "inverse", "elem_order", "labels", "name", "carrier",
                 "_cyclic_masks")

    def __init__(self, table: np.ndarray, *, labels: list[str] | None = None,
                 name: str = "G", carrier: list | None = None):
        table = np.asarray(table)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise SpecError("Cayley table must be square")
        n = int(table.shape[0])
        if n == 0:
            raise SpecError("group must be nonempty")
        if table.min() < 0 or table.max() >= n:
            raise SpecError("Cayley table entries out of range")
        self.order = n
        self.table = table.astype(_table_dtype(n))
        idx = np.arange(n)
        if not (np.array_equal(self.table[0], idx) and np.array_equal(self.table[:, 0], idx)):
            raise SpecError("element 0 is not a two-sided identity")
        inv = np.argmax(self.table == 0, axis=1).astype(self.table.dtype)
        if not np.array_equal(self.table[idx, inv], np.zeros(n, dtype=self.table.dtype)):
            raise SpecError("some element has no inverse")
        self.inverse = inv
        self.elem_order = _element_orders(self.table)
        if labels is not None and len(labels) != n:
            raise SpecError("label list length does not match group order")
        self.labels = labels
        self.name = name
        self.carrier = carrier
        self._cyclic_masks = None

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def power(self, i: int, k: int) -> int:
        """k-th power of element i (k may be negative)."""
        if k < 0:
            i, k = self.inv(i), -k
        acc, base = 0, i
        while k:
            if k & 1:
                acc = int(self.table[acc, base])
            base = int(self.table[base, base])
            k >>= 1
        return acc

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def cyclic_subgroup(self, g: int) -> frozenset:
        """<g> as a set of element indices."""
        out = [0]
        x = g
        while x != 0:
            out.append(x)
            x = int(self.table[x, g])
        return frozenset(out)

    def cyclic_subgroups(self) -> list[tuple[int, frozenset]]:
        """Distinct <g> over all g, listed by least generator index (cached)."""
        if self._cyclic_masks is None:
            seen: set[frozenset] = set()
            out: list[tuple[int, frozenset]] = []
            for g in range(self.order):
                s = self.cyclic_subgroup(g)
                if s not in seen:
                    seen.add(s)
                    out.append((g, s))
            self._cyclic_masks = out
        return self._cyclic_masks

    def validate(self, *, full: bool | None = None, trials: int = 10_000, seed: int = 0) -> None:
        """Check associativity; exhaustive for order <= 200 (or full=True), else random triples.

        Identity and inverse axioms are already enforced at construction.
        Raises SpecError naming a failing triple.
        """
        bad = associativity_violation(self.table, full=full, trials=trials, seed=seed)
        if bad is not None:
            raise SpecError(f"associativity fails at triple {bad}")


def associativity_violation(table: np.ndarray, *, full: bool | None = None,
                            trials: int = 10_000, seed: int = 0) -> tuple | None:
    """A failing (i, j, k) with (ij)k != i(jk), or None. Exhaustive for
    n <= 200 or full=True; random triples otherwise.
    """
    t = np.asarray(table).astype(np.int32)
    n = t.shape[0]
    if full is None:
        full = n <= 200
    if full:
        # chunk rows so each (chunk, n, n) intermediate stays under ~64 MB
        step = max(1, (64 << 20) // max(1, 4 * n * n))
        for i0 in range(0, n, step):
            chunk = t[i0:i0 + step]
            left = t[chunk, :]                 # (c, n, n): (i*j)*k
            right = chunk[:, t]                # (c, n, n): i*(j*k)
            if not np.array_equal(left, right):
                c, j, k = np.argwhere(left != right)[0]
                return (int(c) + i0, int(j), int(k))
    else:
        rng = np.random.default_rng(seed)
        ijk = rng.integers(0, n, size=(trials, 3))
        i, j, k = ijk[:, 0], ijk[:, 1], ijk[:, 2]
        bad = t[t[i, j], k] != t[i, t[j, k]]
        if bad.any():
            b = int(np.flatnonzero(bad)[0])
            return (int(i[b]), int(j[b]), int(k[b]))
    return None


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    orders[0] = 1
    idx = np.arange(n)
    cur = idx.copy()
    k = 1
    while (orders == 0).any():
        k += 1
        if k > n + 1:
            raise SpecError("element order exceeds group order; table is not a group")
        cur = table[cur, idx].astype(np.int64)
        newly = (orders == 0) & (cur == 0)
        orders[newly] = k
    return orders


# ---------------------------------------------------------------------------
# generator closure

def _carrier_identity(gen):
    if isinstance(gen, Permutation):
        return Permutation.identity(gen.degree)
    if isinstance(gen, MatrixModP):
        return MatrixModP.identity(gen.p)
    raise SpecError(f"unsupported generator type: {type(gen).__name__}")


def _carrier_key(x):
    return x.images if isinstance(x, Permutation) else x.entries


def closure(generators: Sequence[Permutation] | Sequence[MatrixModP], *,
            max_order: int = DEFAULT_MAX_ORDER, name: str = "closure") -> FiniteGroup:
    """Group generated by the given elements, indexed in breadth-first discovery order.

    The Cayley table is filled from the BFS tree: every element x_j (j > 0) was
    discovered as x_p * gen_g with p < j, so column j is the generator-g column
    composed through column p. This costs O(n * #generators) carrier products
    plus O(n^2) integer gathers instead of O(n^2) carrier products.
    """
    gens_in = list(generators)
    if not gens_in:
        raise SpecError("closure requires at least one generator")
    first = gens_in[0]
    ident = _carrier_identity(first)
    gens = []
    seen_keys = {_carrier_key(ident)}
    for g in gens_in:
        if type(g) is not type(first):
            raise SpecError("generators must all be permutations or all matrices")
        if isinstance(g, Permutation) and g.degree != first.degree:
            raise SpecError("permutation generators must share one degree")
        if isinstance(g, MatrixModP) and g.p != first.p:
            raise SpecError("matrix generators must share one modulus")
        k = _carrier_key(g)
        if k not in seen_keys:
            seen_keys.add(k)
            gens.append(g)

    elems = [ident]
    index = {_carrier_key(ident): 0}
    pred: list[tuple[int, int] | None] = [None]
    gen_cols: list[list[int]] = [[] for _ in gens]
    pos = 0
    while pos < len(elems):
        x = elems[pos]
        for gi, g in enumerate(gens):
            y = x * g
            key = _carrier_key(y)
            j = index.get(key)
            if j is None:
                j = len(elems)
                if j >= max_order:
                    raise SizeLimitError(
                        f"closure exceeds the configured maximum order {max_order}",
                        cap=max_order)
                index[key] = j
                elems.append(y)
                pred.append((pos, gi))
            gen_cols[gi].append(j)
        pos += 1

    n = len(elems)
    dtype = _table_dtype(n)
    table = np.empty((n, n), dtype=dtype)
    table[:, 0] = np.arange(n, dtype=dtype)
    cols = [np.asarray(c, dtype=dtype) for c in gen_cols]
    for j in range(1, n):
        p, gi = pred[j]  # type: ignore[misc]
        table[:, j] = cols[gi][table[:, p]]
    labels = [str(x) for x in elems]
    return FiniteGroup(table, labels=labels, name=name, carrier=elems)


def element_index(G: FiniteGroup, x) -> int:
    """Index of a carrier element (permutation/matrix) in a closure-built group."""
    if G.carrier is None:
        raise SpecError(f"group {G.name} has no element carrier")
    key = _carrier_key(x)
    for i, e in enumerate(G.carrier):
        if _carrier_key(e) == key:
            return i
    raise MembershipError(f"element {x} not in group {G.name}")


# ---------------------------------------------------------------------------
# named families

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise SpecError("cyclic group order must be >= 1")
    table = np.add.outer(np.arange(n), np.arange(n)) % n
    return FiniteGroup(table, labels=[str(i) for i in range(n)], name=f"Z({n})")


def dihedral(n: int) -> FiniteGroup:
    """Order-2n group generated by a rotation a of order n and a reflection b.

    Indices 0..n-1 are a^i, indices n..2n-1 are a^i b; relations
    a^n = b^2 = e and b a b = a^(-1).
    """
    if n < 1:
        raise SpecError("dihedral parameter must be >= 1")
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    i = np.arange(n)
    rot, ref = i[:, None], i[None, :]
    table[:n, :n] = (rot + ref) % n
    table[:n, n:] = n + (rot + ref) % n
    table[n:, :n] = n + (rot - ref) % n
    table[n:, n:] = (rot - ref) % n
    labels = _word_labels(n, "a") + [w + "b" if w != "e" else "b" for w in _word_labels(n, "a")]
    return FiniteGroup(table, labels=labels, name=f"D({size})")


def generalized_quaternion(m: int) -> FiniteGroup:
    """Order-4m group with x^m = y^2, x^(2m) = e, y^(-1) x y = x^(-1); m >= 2.

    Indices 0..2m-1 are x^i, indices 2m..4m-1 are x^i y. x^m is the unique
    involution.
    """
    if m < 2:
        raise SpecError("generalized quaternion parameter must be >= 2")
    n = 2 * m
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    i = np.arange(n)
    a, b = i[:, None], i[None, :]
    table[:n, :n] = (a + b) % n
    table[:n, n:] = n + (a + b) % n
    table[n:, :n] = n + (a - b) % n
    table[n:, n:] = (a - b + m) % n
    labels = _word_labels(n, "x") + [w + "y" if w != "e" else "y" for w in _word_labels(n, "x")]
    return FiniteGroup(table, labels=labels, name=f"Q({size})")


def _word_labels(n: int, letter: str) -> list[str]:
    out = ["e"]
    for i in range(1, n):
        out.append(letter if i == 1 else f"{letter}^{i}")
    return out


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """Z_p^k; element index is the base-p digit vector (little-endian)."""
    if not is_prime(p):
        raise SpecError(f"elementary abelian base {p} is not prime")
    if k < 1:
        raise SpecError("elementary abelian exponent must be >= 1")
    n = p ** k
    digits = np.array([[(v // p**j) % p for j in range(k)] for v in range(n)])
    summed = (digits[:, None, :] + digits[None, :, :]) % p
    table = (summed * (p ** np.arange(k))).sum(axis=2)
    labels = ["(" + ",".join(str(d) for d in row) + ")" for row in digits]
    return FiniteGroup(table, labels=labels, name=f"E({p},{k})")


def symmetric(n: int, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise SpecError("symmetric degree must be >= 1")
    if n == 1:
        return closure([Permutation.identity(1)], max_order=max_order, name="S(1)")
    from .perms import perm_from_cycles
    t = perm_from_cycles([[0, 1]], n)
    c = perm_from_cycles([list(range(n))], n)
    return closure([t, c], max_order=max_order, name=f"S({n})")


def alternating(n: int, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    if n < 1:
        raise SpecError("alternating degree must be >= 1")
    from .perms import perm_from_cycles
    if n <= 2:
        return closure([Permutation.identity(n)], max_order=max_order, name=f"A({n})")
    three = perm_from_cycles([[0, 1, 2]], n)
    if n == 3:
        gens = [three]
    elif n % 2 == 1:
        gens = [three, perm_from_cycles([list(range(n))], n)]
    else:
        gens = [three, perm_from_cycles([list(range(1, n))], n)]
    return closure(gens, max_order=max_order, name=f"A({n})")


def sl2(p: int, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """SL(2,p) generated by the standard transvection pair; order p(p^2-1)."""
    if not is_prime(p):
        raise SpecError(f"SL2 modulus {p} is not prime")
    g1 = MatrixModP.make([[1, 1], [0, 1]], p)
    g2 = MatrixModP.make([[0, -1], [1, 0]], p)
    G = closure([g1, g2], max_order=max_order, name=f"SL2({p})")
    expected = p * (p * p - 1)
    if G.order != expected:
        raise SpecError(f"SL2({p}) closure has order {G.order}, expected {expected}")
    return G


def from_table(table: Sequence[Sequence[int]], *, name: str = "table",
               labels: list[str] | None = None, validate_full: bool | None = None) -> FiniteGroup:
    """Group from an explicit Cayley table (row 0 must be the identity); fully validated.

    Associativity is checked before construction so that broken tables are
    rejected with a failing triple rather than a downstream symptom.
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise SpecError("Cayley table must be a nonempty square array")
    if arr.min() < 0 or arr.max() >= arr.shape[0]:
        raise SpecError("Cayley table entries out of range")
    bad = associativity_violation(arr, full=validate_full)
    if bad is not None:
        raise SpecError(f"associativity fails at triple {bad}")
    return FiniteGroup(arr, labels=labels, name=name)


# ---------------------------------------------------------------------------
# product and quotient constructions

def direct_product(G: FiniteGroup, H: FiniteGroup, *,
                   max_order: int = DEFAULT_MAX_ORDER, name: str | None = None) -> FiniteGroup:
    """Componentwise product; (g, h) has index g*|H| + h."""
    n1, n2 = G.order, H.order
    n = n1 * n2
    if n > max_order:
        raise SizeLimitError(
            f"direct product of orders {n1} and {n2} exceeds the maximum order {max_order}",
            cap=max_order)
    tg = G.table.astype(np.int32)
    th = H.table.astype(np.int32)
    table = (tg[:, None, :, None] * np.int32(n2) + th[None, :, None, :]).reshape(n, n)
    labels = [f"({G.label(a)},{H.label(b)})" for a in range(n1) for b in range(n2)]
    return FiniteGroup(table, labels=labels, name=name or f"{G.name} x {H.name}")


def _validate_action(N: FiniteGroup, H: FiniteGroup, action: list[np.ndarray]) -> None:
    n1 = N.order
    idx = np.arange(n1)
    if len(action) != H.order:
        raise ActionError(f"action must map each of the {H.order} elements of H")
    for h, perm in enumerate(action):
        if sorted(perm.tolist()) != list(range(n1)):
            raise ActionError(f"action[{h}] is not a permutation of N's elements")
    if not np.array_equal(action[0], idx):
        raise ActionError("action must send the identity of H to the identity map")
    tn = N.table.astype(np.int64)
    for h, perm in enumerate(action):
        if not np.array_equal(perm[tn], tn[np.ix_(perm, perm)]):
            bad = np.argwhere(perm[tn] != tn[np.ix_(perm, perm)])[0]
            raise ActionError(
                f"action[{h}] is not an automorphism of N "
                f"(fails at pair ({int(bad[0])}, {int(bad[1])}))")
    for h1 in range(H.order):
        for h2 in range(H.order):
            composed = action[h1][action[h2]]
            if not np.array_equal(action[H.mul(h1, h2)], composed):
                raise ActionError(
                    f"action is not a homomorphism (fails at pair ({h1}, {h2}))")


def semidirect_product(N: FiniteGroup, H: FiniteGroup,
                       action: Sequence[Sequence[int]], *,
                       max_order: int = DEFAULT_MAX_ORDER,
                       name: str | None = None) -> FiniteGroup:
    """Group on pairs (n, h) with (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2).

    action[h] is an explicit permutation of N's element indices; it must be an
    automorphism of N for every h, and h -> action[h] must be a homomorphism
    (action[h1 h2] = action[h1] o action[h2], with action[0] the identity map).
    """
    n1, n2 = N.order, H.order
    n = n1 * n2
    if n > max_order:
        raise SizeLimitError(
            f"semidirect product of orders {n1} and {n2} exceeds the maximum order {max_order}",
            cap=max_order)
    act = [np.asarray(a, dtype=np.int64) for a in action]
    _validate_action(N, H, act)
    tn = N.table.astype(np.int64)
    th = H.table.astype(np.int64)
    table = np.empty((n, n), dtype=np.int64)
    a = np.arange(n1)
    for h1 in range(n2):
        # row block for elements (a, h1): product with (b, h2) is (a * act[h1](b), h1 h2)
        twisted = tn[:, act[h1]]          # twisted[a, b] = a * action[h1](b)
        block = twisted[:, :, None] * n2 + th[h1][None, None, :]
        table[a * n2 + h1, :] = block.reshape(n1, n)
    labels = [f"({N.label(x)},{H.label(h)})" for x in range(n1) for h in range(n2)]
    return FiniteGroup(table, labels=labels, name=name or f"{N.name} : {H.name}")


def is_subgroup(G: FiniteGroup, S: Iterable[int]) -> bool:
    s = frozenset(S)
    if 0 not in s:
        return False
    return all(G.mul(a, b) in s for a in s for b in s)


def is_normal(G: FiniteGroup, S: Iterable[int]) -> bool:
    s = frozenset(S)
    if not is_subgroup(G, s):
        return False
    return all(G.mul(G.mul(g, x), G.inv(g)) in s
               for g in range(G.order) for x in s)


def quotient(G: FiniteGroup, N: Iterable[int], *, name: str | None = None) -> FiniteGroup:
    """Quotient G/N by a normal subgroup, cosets indexed in order of least member."""
    ns = frozenset(N)
    if not is_subgroup(G, ns):
        raise NormalityError("quotient requires a subgroup")
    if not is_normal(G, ns):
        raise NormalityError("quotient requires a normal subgroup")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        c = len(reps)
        reps.append(g)
        for x in ns:
            coset_of[G.mul(g, x)] = c
    m = len(reps)
    table = np.empty((m, m), dtype=np.int64)
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            table[a, b] = coset_of[G.mul(ra, rb)]
    labels = [f"[{G.label(r)}]" for r in reps]
    return FiniteGroup(table, labels=labels, name=name or f"{G.name}/N{len(ns)}")


# ---------------------------------------------------------------------------
# subgroup machinery

def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> frozenset:
    """Least subgroup containing the seed set (identity always included)."""
    members = {0}
    frontier = [0]
    for s in seed:
        if s not in members:
            members.add(s)
            frontier.append(s)
    if not frontier:
        raise SpecError("subgroup closure requires a nonempty seed")
    elems = list(members)
    i = 0
    while i < len(elems):
        x = elems[i]
        for y in list(elems):
            for z in (G.mul(x, y), G.mul(y, x)):
                if z not in members:
                    members.add(z)
                    elems.append(z)
        i += 1
    return frozenset(members)


def is_cyclic(G: FiniteGroup, S: Iterable[int]) -> bool:
    """True iff the subgroup S is cyclic (some member has order |S|)."""
    s = frozenset(S)
    size = len(s)
    return any(int(G.elem_order[x]) == size for x in s)


def element_orders_set(G: FiniteGroup) -> frozenset:
    return frozenset(int(o) for o in G.elem_order)


def center(G: FiniteGroup) -> frozenset:
    t = G.table
    central = np.flatnonzero((t == t.T).all(axis=1))
    return frozenset(int(i) for i in central)


def subgroup_as_group(G: FiniteGroup, S: Iterable[int]) -> tuple[FiniteGroup, list[int]]:
    """Reindex a subgroup as a standalone group; returns (group, old-index list).

    The old-index list is sorted ascending, so the identity keeps index 0.
    """
    order = sorted(frozenset(S))
    if not order or order[0] != 0:
        raise SpecError("subgroup must contain the identity")
    pos = {g: i for i, g in enumerate(order)}
    m = len(order)
    table = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            c = G.mul(a, b)
            if c not in pos:
                raise SpecError("subset is not closed under the group operation")
            table[i, j] = pos[c]
    labels = [G.label(g) for g in order]
    return FiniteGroup(table, labels=labels, name=f"{G.name}|{m}"), order
