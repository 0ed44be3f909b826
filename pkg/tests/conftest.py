"""Shared helpers: seeded random graphs and naive pattern oracles that stay
independent of the library's own search code.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from pathlib import Path

import pytest

from epg.graphs import SimpleGraph, bits

DATA_DIR = Path(__file__).parent / "data"


def random_graph(rng: random.Random, n: int, density: float) -> SimpleGraph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return SimpleGraph(n, rows)


_PATTERN_EDGES = {
    "P4": {(0, 1), (1, 2), (2, 3)},
    "C4": {(0, 1), (1, 2), (2, 3), (0, 3)},
    "C5": {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)},
    "2K2": {(0, 1), (2, 3)},
}


def naive_has_pattern(g: SimpleGraph, pattern: str) -> bool:
    """Check every arrangement of every vertex subset against the pattern."""
    k = 5 if pattern == "C5" else 4
    wanted = _PATTERN_EDGES[pattern]
    for combo in combinations(range(g.n), k):
        for arr in permutations(combo):
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    has = g.has_edge(arr[i], arr[j])
                    if has != ((i, j) in wanted):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def naive_is_chordal(g: SimpleGraph) -> bool:
    """No vertex subset induces a cycle of length >= 4 (subset enumeration)."""
    for mask in range(1 << g.n):
        if mask.bit_count() < 4:
            continue
        if all((g.rows[v] & mask).bit_count() == 2 for v in bits(mask)):
            start = mask & -mask
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                for a in bits(frontier):
                    nxt |= g.rows[a] & mask
                nxt &= ~seen
                seen |= nxt
                frontier = nxt
            if seen == mask:
                return False
    return True


def naive_longest_hole(g: SimpleGraph) -> int:
    """Length of the longest induced cycle (0 if chordal), by subset enumeration."""
    best = 0
    for mask in range(1 << g.n):
        k = mask.bit_count()
        if k < 4 or k <= best:
            continue
        if all((g.rows[v] & mask).bit_count() == 2 for v in bits(mask)):
            start = mask & -mask
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                for a in bits(frontier):
                    nxt |= g.rows[a] & mask
                nxt &= ~seen
                seen |= nxt
                frontier = nxt
            if seen == mask:
                best = k
    return best


@pytest.fixture(scope="session")
def default_cat():
    from epg.catalog import default_catalog
    return default_catalog()
