"""Permutations and 2x2 matrices over Z_p: the element carriers for generator closures.

Permutations act on points 0..degree-1 internally; the cycle-notation parser and
printer use 1-based points so witnesses read naturally.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import SpecError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise SpecError(f"not a permutation of 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(x) = p(q(x)), i.e. apply q first."""
        if other.degree != self.degree:
            raise SpecError("cannot compose permutations of different degrees")
        im = self.images
        return Permutation(tuple(im[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by first point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = math.lcm(o, len(c))
        return o

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def extended(self, degree: int) -> "Permutation":
        """The same permutation viewed on a larger point set (new points fixed)."""
        if degree < self.degree:
            raise SpecError(f"cannot shrink permutation of degree {self.degree} to {degree}")
        return Permutation(self.images + tuple(range(self.degree, degree)))

    def cycle_string(self) -> str:
        """1-based disjoint cycle notation; identity prints as '()'."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.cycle_string()


def perm_from_cycles(cycles: list[list[int]], degree: int) -> Permutation:
    """Build a permutation from 0-based cycles; cycles are applied right to left."""
    result = Permutation.identity(degree)
    for cyc in reversed(cycles):
        images = list(range(degree))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 0 <= a < degree:
                raise SpecError(f"cycle point {a} out of range for degree {degree}")
            images[a] = b
        result = Permutation(tuple(images)) * result
    return result


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-based cycle notation like '(1 2)(3 4 5)'; '()' or 'e' is the identity.

    Points may be separated by spaces or commas. If degree is omitted, the
    largest point mentioned sets it (at least 1).
    """
    s = text.strip()
    if s in ("e", "()", ""):
        return Permutation.identity(degree or 1)
    body = _CYCLE_RE.findall(s)
    if not body or _CYCLE_RE.sub("", s).strip():
        raise SpecError(f"malformed cycle notation: {text!r}")
    cycles: list[list[int]] = []
    maxpt = 0
    for part in body:
        pts = [p for p in re.split(r"[,\s]+", part.strip()) if p]
        if not pts:
            continue
        try:
            cyc = [int(p) - 1 for p in pts]
        except ValueError:
            raise SpecError(f"malformed cycle notation: {text!r}") from None
        if any(p < 0 for p in cyc):
            raise SpecError(f"cycle points must be >= 1 in {text!r}")
        if len(set(cyc)) != len(cyc):
            raise SpecError(f"repeated point within a cycle in {text!r}")
        maxpt = max(maxpt, max(cyc) + 1)
        cycles.append(cyc)
    deg = degree if degree is not None else max(maxpt, 1)
    if maxpt > deg:
        raise SpecError(f"cycle point exceeds degree {deg} in {text!r}")
    return perm_from_cycles(cycles, deg)


@dataclass(frozen=True)
class MatrixModP:
    """2x2 matrix over Z_p, stored row-major as (a, b, c, d)."""

    entries: tuple[int, int, int, int]
    p: int

    def __post_init__(self):
        if any(not 0 <= x < self.p for x in self.entries):
            raise SpecError(f"matrix entries must be reduced mod {self.p}")

    @staticmethod
    def identity(p: int) -> "MatrixModP":
        return MatrixModP((1, 0, 0, 1), p)

    @staticmethod
    def make(rows: list[list[int]], p: int) -> "MatrixModP":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise SpecError("matrix must be 2x2")
        a, b = rows[0]
        c, d = rows[1]
        return MatrixModP((a % p, b % p, c % p, d % p), p)

    def det(self) -> int:
        a, b, c, d = self.entries
        return (a * d - b * c) % self.p

    def __mul__(self, other: "MatrixModP") -> "MatrixModP":
        if other.p != self.p:
            raise SpecError("cannot multiply matrices over different moduli")
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        p = self.p
        return MatrixModP(
            ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p),
            p,
        )

    def __str__(self) -> str:
        a, b, c, d = self.entries
        return f"[[{a},{b}],[{c},{d}]]"
