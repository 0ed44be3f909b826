"""Simple graphs over vertex indices, the enhanced power graph construction,
a pairwise adjacency oracle for symmetric/alternating groups too large to
materialize, closed-twin classes, and maximal-clique enumeration.

Adjacency rows are Python integers used as bitsets; bit v of rows[u] means
u ~ v. This keeps subset tests, neighborhood intersections, and clique
bookkeeping at word speed without leaving exact integer arithmetic.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .errors import MembershipError, SizeLimitError, SpecError
from .groups import FiniteGroup
from .perms import Permutation

DEFAULT_BUILD_CAP = 2520
DEFAULT_CLIQUE_CAP = 360
ORACLE_SUPPORT_CAP = 64


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


class SimpleGraph:
    """Undirected loop-free graph: vertex count, bitset adjacency rows, labels."""

    __slots__ = ("n", "rows", "labels")

    def __init__(self, n: int, rows: Sequence[int], labels: list[str] | None = None):
        if len(rows) != n:
            raise SpecError("adjacency row count does not match vertex count")
        self.n = n
        self.rows = list(rows)
        full = (1 << n) - 1
        for v, r in enumerate(self.rows):
            if r & ~full:
                raise SpecError(f"adjacency row {v} mentions out-of-range vertices")
            if r >> v & 1:
                raise SpecError(f"vertex {v} has a self-loop")
        for v in range(n):
            for u in bits(self.rows[v]):
                if not self.rows[u] >> v & 1:
                    raise SpecError(f"adjacency is not symmetric at ({u}, {v})")
        if labels is not None and len(labels) != n:
            raise SpecError("label list length does not match vertex count")
        self.labels = labels

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]],
                   labels: list[str] | None = None) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise SpecError("self-loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, endpoints increasing, lexicographic order."""
        for u in range(self.n):
            r = self.rows[u] >> (u + 1) << (u + 1)
            for v in bits(r):
                yield (u, v)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        rows = [full & ~r & ~(1 << v) for v, r in enumerate(self.rows)]
        return SimpleGraph(self.n, rows, self.labels)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph on the given vertices, in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise SpecError("induced vertex list has repeats")
        rows = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in bits(self.rows[v]):
                j = pos.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        labels = [self.label(v) for v in vertices] if self.labels else None
        return SimpleGraph(len(vertices), rows, labels)

    def with_flipped_edge(self, u: int, v: int) -> "SimpleGraph":
        """Copy with the u-v adjacency toggled (test instrumentation)."""
        if u == v:
            raise SpecError("cannot flip a loop")
        rows = list(self.rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return SimpleGraph(self.n, rows, self.labels)

    def adjacency_bool(self) -> np.ndarray:
        """Dense boolean adjacency matrix (for vectorized orderings)."""
        nbytes = (self.n + 7) // 8
        buf = b"".join(r.to_bytes(nbytes, "little") for r in self.rows)
        mat = np.unpackbits(np.frombuffer(buf, dtype=np.uint8).reshape(self.n, nbytes),
                            axis=1, bitorder="little")
        return mat[:, :self.n].astype(bool)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimpleGraph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, tuple(self.rows)))


# ---------------------------------------------------------------------------
# enhanced power graph

def build_epg(G: FiniteGroup, *, build_cap: int = DEFAULT_BUILD_CAP) -> SimpleGraph:
    """Enhanced power graph of G: x ~ y (x != y) iff <x, y> is cyclic.

    Built as the union of cliques over the distinct cyclic subgroups <g>:
    two elements generate a cyclic group iff some <g> contains both, so
    marking each <g> as a clique realizes the definition in
    O(sum |<g>|^2 / wordsize) instead of O(n^2) pair closures.
    """
    n = G.order
    if n > build_cap:
        raise SizeLimitError(
            f"group order {n} exceeds the graph build cap {build_cap}; "
            f"use the pairwise adjacency oracle for symmetric/alternating groups",
            cap=build_cap)
    rows = [0] * n
    for _, sub in G.cyclic_subgroups():
        mask = 0
        for v in sub:
            mask |= 1 << v
        for v in sub:
            rows[v] |= mask
    for v in range(n):
        rows[v] &= ~(1 << v)
    labels = list(G.labels) if G.labels else [str(i) for i in range(n)]
    return SimpleGraph(n, rows, labels)


def pair_generates_cyclic(G: FiniteGroup, x: int, y: int) -> bool:
    """Literal adjacency test: close {x, y} under the table and test cyclicity.

    Kept independent of build_epg's union-of-cliques construction so the two
    routes can be cross-checked.
    """
    from .groups import is_cyclic, subgroup_closure

    if G.mul(x, y) != G.mul(y, x):
        return False  # cyclic groups are abelian
    return is_cyclic(G, subgroup_closure(G, (x, y)))


def epg_adjacent(family: str, degree: int, x: Permutation, y: Permutation) -> bool:
    """Adjacency oracle for S_degree ('S') or A_degree ('A') without building the group.

    True iff <x, y> is cyclic, decided by closing {x, y} under composition.
    Non-commuting pairs are rejected immediately (cyclic groups are abelian),
    which bounds the closure by o(x) * o(y) elements.
    """
    if family not in ("S", "A"):
        raise SpecError(f"oracle family must be 'S' or 'A', got {family!r}")
    if degree < 1:
        raise SpecError("degree must be >= 1")
    for p in (x, y):
        if p.degree > degree:
            raise MembershipError(
                f"permutation {p} moves points beyond degree {degree}")
    x = x.extended(degree)
    y = y.extended(degree)
    if family == "A":
        for p in (x, y):
            if not p.is_even():
                raise MembershipError(f"odd permutation {p} is not in A_{degree}")
    if x == y:
        raise SpecError("oracle requires two distinct elements")
    if x * y != y * x:
        return False
    ident = Permutation.identity(degree)
    group = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in (x, y):
                b = a * g
                if b.images not in group:
                    group[b.images] = b
                    nxt.append(b)
        frontier = nxt
    size = len(group)
    return any(p.order() == size for p in group.values())


def oracle_graph(family: str, degree: int, support: Sequence[Permutation],
                 *, support_cap: int = ORACLE_SUPPORT_CAP) -> SimpleGraph:
    """Materialize the induced enhanced power graph on an explicit support set
    of permutations, with adjacency supplied by the pairwise oracle.

    This is how forbidden-subgraph witnesses are checked inside groups beyond
    the full-build cap.
    """
    if len(support) > support_cap:
        raise SizeLimitError(
            f"oracle support set of {len(support)} exceeds the cap {support_cap}",
            cap=support_cap)
    perms = [p.extended(degree) for p in support]
    if len({p.images for p in perms}) != len(perms):
        raise SpecError("oracle support set has repeated permutations")
    n = len(perms)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if epg_adjacent(family, degree, perms[i], perms[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return SimpleGraph(n, rows, [p.cycle_string() for p in perms])


def closed_twin_partition(G: FiniteGroup, *,
                          build_cap: int = DEFAULT_BUILD_CAP) -> list[frozenset]:
    """Partition of the elements by equal closed neighborhoods in the
    enhanced power graph, classes ordered by least member.
    """
    g = build_epg(G, build_cap=build_cap)
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.rows[v] | (1 << v), []).append(v)
    return [frozenset(vs) for vs in sorted(classes.values(), key=lambda vs: vs[0])]


# ---------------------------------------------------------------------------
# maximal cliques (pivoting Bron-Kerbosch on bitsets)

def maximal_cliques(g: SimpleGraph, *, clique_cap: int = DEFAULT_CLIQUE_CAP) -> list[frozenset]:
    """All maximal cliques, sorted by (size, sorted vertex tuple).

    Pivot choice is deterministic: among P u X, the lowest-index vertex with
    the most candidate neighbors. Expansion visits vertices in index order.
    """
    if g.n > clique_cap:
        raise SizeLimitError(
            f"graph on {g.n} vertices exceeds the clique enumeration cap {clique_cap}",
            cap=clique_cap)
    rows = g.rows
    out: list[frozenset] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(frozenset(r))
            return
        pivot, best = -1, -1
        for u in bits(p | x):
            c = (rows[u] & p).bit_count()
            if c > best:
                pivot, best = u, c
        ext = p & ~rows[pivot]
        for v in bits(ext):
            bv = 1 << v
            expand(r + [v], p & rows[v], x & rows[v])
            p &= ~bv
            x |= bv

    expand([], (1 << g.n) - 1 if g.n else 0, 0)
    return sorted(out, key=lambda c: (len(c), tuple(sorted(c))))


# ---------------------------------------------------------------------------
# DOT export

def to_dot(g: SimpleGraph, *, graph_name: str = "epg") -> str:
    """Deterministic DOT rendering: vertices in index order, each edge once
    with endpoints in increasing index order.
    """
    lines = [f"graph {graph_name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{_dot_escape(g.label(v))}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
