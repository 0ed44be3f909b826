"""Recognition of split, threshold, chordal, and cograph membership with
certificates, plus exhaustive forbidden-subgraph search used as the
independent oracle and for witness extraction.

Recognizers are algorithmic (degree sequence, elimination peeling, LexBFS,
recursive decomposition); find_induced and find_induced_cycle_at_least are
exhaustive searches driven directly by the pattern definitions. The two
routes never share machinery, so they can be cross-checked against each
other.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import EpgError, SpecError, SizeLimitError
from .graphs import SimpleGraph, bits

SPLIT = "split"
THRESHOLD = "threshold"
CHORDAL = "chordal"
COGRAPH = "cograph"
ALL_CLASSES = (SPLIT, THRESHOLD, CHORDAL, COGRAPH)

_EXHAUSTIVE_DFS_LIMIT = 40
_DFS_BUDGET = 500_000


@dataclass(frozen=True)
class Witness:
    """An ordered vertex tuple inducing a forbidden pattern.

    Patterns: "P4" (path order), "2K2" (edges v0-v1 and v2-v3), or "C<k>"
    for an induced cycle in cyclic order, k >= 4.
    """

    pattern: str
    vertices: tuple[int, ...]

    def to_json(self, labels: list[str] | None = None) -> dict:
        out: dict = {"pattern": self.pattern, "vertices": list(self.vertices)}
        if labels is not None:
            out["labels"] = [labels[v] for v in self.vertices]
        return out


@dataclass
class ClassVerdict:
    class_name: str
    member: bool
    certificate: dict | None = None
    witness: Witness | None = None

    def to_json(self, labels: list[str] | None = None) -> dict:
        out: dict = {"class": self.class_name, "member": self.member}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.witness is not None:
            out["witness"] = self.witness.to_json(labels)
        return out


def _cycle_pattern_length(pattern: str) -> int | None:
    if pattern.startswith("C") and pattern[1:].isdigit():
        k = int(pattern[1:])
        if k >= 4:
            return k
    return None


def verify_witness(g: SimpleGraph, w: Witness) -> bool:
    """True iff the witness vertices induce exactly the claimed pattern."""
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    k = len(vs)
    if w.pattern == "P4":
        if k != 4:
            return False
        required = {(0, 1), (1, 2), (2, 3)}
    elif w.pattern == "2K2":
        if k != 4:
            return False
        required = {(0, 1), (2, 3)}
    else:
        length = _cycle_pattern_length(w.pattern)
        if length is None or k != length:
            return False
        required = {(i, (i + 1) % k) for i in range(k)}
    norm = {tuple(sorted(e)) for e in required}
    for i in range(k):
        for j in range(i + 1, k):
            present = g.has_edge(vs[i], vs[j])
            if present != ((i, j) in norm):
                return False
    return True


# ---------------------------------------------------------------------------
# exhaustive pattern search (the oracle side)

def find_induced(g: SimpleGraph, pattern: str) -> Witness | None:
    """First induced copy of P4 / C4 / C5 / 2K2 in a fixed deterministic scan
    order, or None. Exhaustive: enumerates candidate embeddings straight from
    the pattern definition.
    """
    if pattern == "P4":
        return _find_p4(g)
    if pattern == "C4":
        return _find_c4(g)
    if pattern == "C5":
        return _find_c5(g)
    if pattern == "2K2":
        return _find_2k2(g)
    raise SpecError(f"unknown pattern {pattern!r}")


def _find_2k2(g: SimpleGraph) -> Witness | None:
    rows = g.rows
    full = (1 << g.n) - 1
    for a in range(g.n):
        higher = rows[a] >> (a + 1) << (a + 1)
        for b in bits(higher):
            other = full & ~rows[a] & ~rows[b] & ~(1 << a) & ~(1 << b)
            for c in bits(other):
                ds = rows[c] & other & (full >> (c + 1) << (c + 1))
                if ds:
                    d = (ds & -ds).bit_length() - 1
                    return Witness("2K2", (a, b, c, d))
    return None


def _find_p4(g: SimpleGraph) -> Witness | None:
    rows = g.rows
    for a in range(g.n):
        na = rows[a] | (1 << a)
        for b in bits(rows[a]):
            for c in bits(rows[b] & ~na):
                ds = rows[c] & ~na & ~rows[b] & ~(1 << b)
                ds = ds >> (a + 1) << (a + 1)  # endpoint symmetry: a < d
                if ds:
                    d = (ds & -ds).bit_length() - 1
                    return Witness("P4", (a, b, c, d))
    return None


def _find_c4(g: SimpleGraph) -> Witness | None:
    rows = g.rows
    for a in range(g.n):
        higher = -1 << (a + 1)
        na = rows[a] | (1 << a)
        for b in bits(rows[a] & higher):
            for c in bits(rows[b] & ~na & higher):
                ds = rows[c] & rows[a] & ~rows[b] & higher & ~(1 << b)
                ds &= -1 << (b + 1)  # b < d: the two neighbors of a are ordered
                if ds:
                    d = (ds & -ds).bit_length() - 1
                    return Witness("C4", (a, b, c, d))
    return None


def _find_c5(g: SimpleGraph) -> Witness | None:
    rows = g.rows
    for v0 in range(g.n):
        higher = -1 << (v0 + 1)
        n0 = rows[v0] | (1 << v0)
        for v1 in bits(rows[v0] & higher):
            for v2 in bits(rows[v1] & ~n0 & higher):
                for v3 in bits(rows[v2] & ~n0 & ~rows[v1] & higher & ~(1 << v1)):
                    v4s = (rows[v3] & rows[v0] & ~rows[v1] & ~rows[v2]
                           & higher & (-1 << (v1 + 1)))
                    if v4s:
                        v4 = (v4s & -v4s).bit_length() - 1
                        return Witness("C5", (v0, v1, v2, v3, v4))
    return None


# ---------------------------------------------------------------------------
# induced long cycles

def find_induced_cycle_at_least(g: SimpleGraph, k: int) -> Witness | None:
    """An induced cycle of length >= k, or None if there is none.

    k = 4 scans common-neighbor triples (v; u, w), searching a shortest u-w
    path outside N[v]: a hole exists iff some triple yields a path, and the
    path plus v is chordless. For k > 4 the same scan is tried first (any
    hit of length >= k is returned); if holes exist but only short ones were
    seen, an exhaustive chordless-path DFS settles it (budgeted on graphs
    with more than 40 vertices).
    """
    if k < 4:
        raise SpecError("induced cycle search requires k >= 4")
    if k == 4:
        cyc = _find_hole(g)
        return Witness(f"C{len(cyc)}", tuple(cyc)) if cyc else None
    any_hole = False
    for v, u, w in _hole_triples(g):
        cyc = _hole_via_triple(g, v, u, w)
        if cyc:
            any_hole = True
            if len(cyc) >= k:
                return Witness(f"C{len(cyc)}", tuple(cyc))
    if not any_hole:
        return None
    budget = None if g.n <= _EXHAUSTIVE_DFS_LIMIT else _DFS_BUDGET
    cyc = _long_cycle_dfs(g, k, budget)
    return Witness(f"C{len(cyc)}", tuple(cyc)) if cyc else None


def _hole_triples(g: SimpleGraph) -> Iterator[tuple[int, int, int]]:
    """All (v; u, w) with u, w nonadjacent neighbors of v, deterministic order."""
    full = (1 << g.n) - 1
    for v in range(g.n):
        if g.rows[v] | (1 << v) == full:
            continue  # universal vertices lie on no induced cycle of length >= 4
        nb = list(bits(g.rows[v]))
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if not g.has_edge(u, w):
                    yield v, u, w


def _hole_via_triple(g: SimpleGraph, v: int, u: int, w: int) -> list[int] | None:
    """Shortest induced cycle through v whose v-neighbors are u and w.

    BFS for a shortest u-w path in the graph minus N[v] (keeping u, w); the
    path is chordless because it is shortest in an induced subgraph, and v
    sees only its endpoints.
    """
    allowed = ~(g.rows[v] | (1 << v)) | (1 << u) | (1 << w)
    parent = {u: -1}
    frontier = [u]
    while frontier and w not in parent:
        nxt = []
        for a in frontier:
            for b in bits(g.rows[a] & allowed):
                if b not in parent:
                    parent[b] = a
                    nxt.append(b)
        frontier = sorted(nxt)
    if w not in parent:
        return None
    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return [v] + path


def _find_hole(g: SimpleGraph,
               seed: tuple[int, int, int] | None = None) -> list[int] | None:
    if seed is not None:
        cyc = _hole_via_triple(g, *seed)
        if cyc:
            return cyc
    for v, u, w in _hole_triples(g):
        cyc = _hole_via_triple(g, v, u, w)
        if cyc:
            return cyc
    return None


def _long_cycle_dfs(g: SimpleGraph, k: int, budget: int | None) -> list[int] | None:
    """Exhaustive DFS over chordless paths; returns the first induced cycle of
    length >= k. With a budget, raises SizeLimitError when inconclusive.
    """
    rows = g.rows
    steps = 0
    for v0 in range(g.n):
        higher = -1 << (v0 + 1)
        n0 = rows[v0]
        for v1 in bits(n0 & higher):
            # path grows as [v0, v1, ...]; forbidden = N(inner vertices) + path
            stack = [([v0, v1], (1 << v0) | (1 << v1), 0)]
            while stack:
                if budget is not None:
                    steps += 1
                    if steps > budget:
                        raise SizeLimitError(
                            f"induced-cycle search exceeded {budget} expansions on "
                            f"{g.n} vertices; rerun on a smaller graph")
                path, path_mask, inner_nb = stack.pop()
                last = path[-1]
                cand = rows[last] & higher & ~path_mask & ~inner_nb
                closing = cand & n0
                for x in bits(closing):
                    if len(path) + 1 >= k:
                        return path + [x]
                for x in sorted(bits(cand & ~n0), reverse=True):
                    stack.append((path + [x], path_mask | (1 << x),
                                  inner_nb | rows[last] & ~(1 << x)))
    return None


# ---------------------------------------------------------------------------
# split graphs (degree-sequence splittance)

def is_split(g: SimpleGraph) -> ClassVerdict:
    """Split recognition via the degree-sequence splittance criterion; the
    certificate partition takes the m highest-degree vertices (ties broken by
    index) as the clique side.
    """
    n = g.n
    degs = sorted(((g.degree(v), v) for v in range(n)), key=lambda t: (-t[0], t[1]))
    d = [t[0] for t in degs]
    m = 0
    for i in range(1, n + 1):
        if d[i - 1] >= i - 1:
            m = i
    lhs = sum(d[:m])
    rhs = m * (m - 1) + sum(d[m:])
    if lhs == rhs:
        clique = sorted(v for _, v in degs[:m])
        indep = sorted(v for _, v in degs[m:])
        if not validate_split_partition(g, clique, indep):
            raise EpgError("splittance-zero partition failed its direct check")
        return ClassVerdict(SPLIT, True,
                            certificate={"clique": clique, "independent": indep})
    for pattern in ("2K2", "C4", "C5"):
        w = find_induced(g, pattern)
        if w is not None:
            return ClassVerdict(SPLIT, False, witness=w)
    raise EpgError("graph is not split yet contains no 2K2, C4, or C5")


def validate_split_partition(g: SimpleGraph, clique: list[int], indep: list[int]) -> bool:
    if sorted(clique + indep) != list(range(g.n)):
        return False
    ok_clique = all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:])
    ok_indep = all(not g.has_edge(u, v) for i, u in enumerate(indep) for v in indep[i + 1:])
    return ok_clique and ok_indep


# ---------------------------------------------------------------------------
# threshold graphs (isolated/dominating peeling)

def is_threshold(g: SimpleGraph) -> ClassVerdict:
    """Threshold recognition by repeatedly deleting a vertex that is isolated
    or dominating in the remainder (lowest index first). The reversed removal
    order is the construction certificate.
    """
    rem = (1 << g.n) - 1
    removal: list[tuple[int, str]] = []
    while rem:
        found = False
        for v in bits(rem):
            nb = g.rows[v] & rem
            if nb == 0:
                removal.append((v, "isolated"))
            elif nb == rem & ~(1 << v):
                removal.append((v, "dominating"))
            else:
                continue
            rem &= ~(1 << v)
            found = True
            break
        if not found:
            break
    if rem == 0:
        steps = [[v, kind] for v, kind in reversed(removal)]
        return ClassVerdict(THRESHOLD, True, certificate={"construction": steps})
    for pattern in ("2K2", "C4", "P4"):
        w = find_induced(g, pattern)
        if w is not None:
            return ClassVerdict(THRESHOLD, False, witness=w)
    raise EpgError("graph is not threshold yet contains no P4, C4, or 2K2")


def validate_threshold_construction(g: SimpleGraph, steps: list[list]) -> bool:
    if sorted(v for v, _ in steps) != list(range(g.n)):
        return False
    built = 0
    for v, kind in steps:
        nb = g.rows[v] & built
        if kind == "isolated" and nb != 0:
            return False
        if kind == "dominating" and nb != built:
            return False
        if kind not in ("isolated", "dominating"):
            return False
        built |= 1 << v
    return True


# ---------------------------------------------------------------------------
# chordal graphs (LexBFS + perfect elimination ordering)

def lexbfs_order(g: SimpleGraph) -> list[int]:
    """Lexicographic BFS visit order; ties always break to the lowest index.

    Labels are maintained as integer ranks: visiting v doubles every rank and
    adds one for v's unvisited neighbors, which reproduces the lexicographic
    comparison of visited-neighbor sets. Ranks are renormalized periodically
    to stay inside int64.
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adjacency_bool()
    rank = np.zeros(n, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    order: list[int] = []
    for step in range(n):
        masked = np.where(visited, np.int64(-1), rank)
        v = int(np.argmax(masked))
        visited[v] = True
        order.append(v)
        rank = rank * 2 + (adj[v] & ~visited)
        if step % 32 == 31:
            rank = np.unique(rank, return_inverse=True)[1].astype(np.int64)
    return order


def peo_violation(g: SimpleGraph, order: list[int]) -> tuple[int, int, int] | None:
    """First vertex whose later neighbors are not a clique.

    Returns (v, u, w) with u the earliest-positioned later neighbor of v and
    w a later neighbor not adjacent to u; None when the order is a perfect
    elimination ordering.
    """
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    suffix = 0
    for v in reversed(order):
        suffix |= 1 << v
    for v in order:
        suffix &= ~(1 << v)
        rn = g.rows[v] & suffix
        if rn == 0:
            continue
        u = min(bits(rn), key=lambda x: pos[x])
        bad = rn & ~(1 << u) & ~g.rows[u]
        if bad:
            w = (bad & -bad).bit_length() - 1
            return (v, u, w)
    return None


def is_peo(g: SimpleGraph, order: list[int]) -> bool:
    return sorted(order) == list(range(g.n)) and peo_violation(g, order) is None


def is_chordal(g: SimpleGraph) -> ClassVerdict:
    """Chordality via LexBFS: the reverse visit order is a perfect elimination
    ordering iff the graph is chordal. On failure an induced cycle of length
    >= 4 is extracted from the violating triple (falling back to a complete
    triple scan).
    """
    order = list(reversed(lexbfs_order(g)))
    viol = peo_violation(g, order)
    if viol is None:
        return ClassVerdict(CHORDAL, True, certificate={"peo": order})
    cyc = _find_hole(g, seed=viol)
    if cyc is None:
        raise EpgError("perfect elimination ordering failed but no induced cycle found")
    return ClassVerdict(CHORDAL, False, witness=Witness(f"C{len(cyc)}", tuple(cyc)))


# ---------------------------------------------------------------------------
# cographs (union/join decomposition)

class _P4Found(Exception):
    def __init__(self, vertices: tuple[int, int, int, int]):
        self.vertices = vertices


def is_cograph(g: SimpleGraph) -> ClassVerdict:
    """Cograph recognition by recursive decomposition: every module with at
    least two vertices must be disconnected or have disconnected complement.
    Membership yields the cotree; at a failing (connected, co-connected)
    module a P4 is extracted by exhaustive search inside that module only.
    """
    if g.n == 0:
        return ClassVerdict(COGRAPH, True, certificate={"cotree": {"op": "union", "children": []}})
    limit = 4 * g.n + 100
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    full = (1 << g.n) - 1
    try:
        tree = _decompose(g, full)
    except _P4Found as p4:
        return ClassVerdict(COGRAPH, False, witness=Witness("P4", p4.vertices))
    return ClassVerdict(COGRAPH, True, certificate={"cotree": tree})


def _decompose(g: SimpleGraph, mask: int) -> dict:
    if mask.bit_count() == 1:
        return {"leaf": mask.bit_length() - 1}
    comps = _components(g, mask)
    if len(comps) > 1:
        return {"op": "union", "children": [_decompose(g, c) for c in comps]}
    cocomps = _co_components(g, mask)
    if len(cocomps) > 1:
        return {"op": "join", "children": [_decompose(g, c) for c in cocomps]}
    p4 = _p4_in_module(g, mask)
    if p4 is None:
        raise EpgError("connected, co-connected module without a P4")
    raise _P4Found(p4)


def _components(g: SimpleGraph, mask: int) -> list[int]:
    comps = []
    rem = mask
    while rem:
        start = rem & -rem
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for a in bits(frontier):
                nxt |= g.rows[a]
            nxt &= rem & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def _co_components(g: SimpleGraph, mask: int) -> list[int]:
    comps = []
    rem = mask
    while rem:
        start = rem & -rem
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for a in bits(frontier):
                nxt |= mask & ~g.rows[a] & ~(1 << a)
            nxt &= rem & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def _p4_in_module(g: SimpleGraph, mask: int) -> tuple[int, int, int, int] | None:
    """Exhaustive P4 search restricted to a vertex subset: scan middle edges
    (b, c) and look for pendant ends a ~ b only, d ~ c only. Complete because
    every P4 has a middle edge.
    """
    rows = g.rows
    for b in bits(mask):
        for c in bits(rows[b] & mask):
            aa = rows[b] & ~rows[c] & ~(1 << c) & mask
            dd = rows[c] & ~rows[b] & ~(1 << b) & mask
            if not aa or not dd:
                continue
            for a in bits(aa):
                ds = dd & ~rows[a] & ~(1 << a)
                if ds:
                    d = (ds & -ds).bit_length() - 1
                    return (a, b, c, d)
    return None


def validate_cotree(g: SimpleGraph, tree: dict) -> bool:
    """Re-evaluate a cotree to an edge set and compare with the graph."""
    rows = [0] * g.n
    seen: set[int] = set()

    def walk(node: dict) -> int:
        if "leaf" in node:
            v = node["leaf"]
            if v in seen:
                raise SpecError("cotree repeats a vertex")
            seen.add(v)
            return 1 << v
        masks = [walk(c) for c in node["children"]]
        total = 0
        for m in masks:
            total |= m
        if node["op"] == "join":
            for i, mi in enumerate(masks):
                others = total & ~mi
                for v in bits(mi):
                    rows[v] |= others
        elif node["op"] != "union":
            raise SpecError(f"unknown cotree op {node['op']!r}")
        return total

    try:
        total = walk(tree)
    except SpecError:
        return False
    return total == (1 << g.n) - 1 and len(seen) == g.n and rows == g.rows


def recognize(g: SimpleGraph, class_name: str) -> ClassVerdict:
    if class_name == SPLIT:
        return is_split(g)
    if class_name == THRESHOLD:
        return is_threshold(g)
    if class_name == CHORDAL:
        return is_chordal(g)
    if class_name == COGRAPH:
        return is_cograph(g)
    raise SpecError(f"unknown graph class {class_name!r}")


def validate_certificate(g: SimpleGraph, verdict: ClassVerdict) -> bool:
    """Re-validate a membership certificate or a non-membership witness."""
    if verdict.member:
        cert = verdict.certificate or {}
        if verdict.class_name == SPLIT:
            return validate_split_partition(g, cert.get("clique", []),
                                            cert.get("independent", []))
        if verdict.class_name == THRESHOLD:
            return validate_threshold_construction(g, cert.get("construction", []))
        if verdict.class_name == CHORDAL:
            return is_peo(g, cert.get("peo", []))
        if verdict.class_name == COGRAPH:
            return validate_cotree(g, cert.get("cotree", {}))
        return False
    return verdict.witness is not None and verify_witness(g, verdict.witness)
