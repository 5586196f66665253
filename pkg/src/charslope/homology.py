"""Finitely generated abelian groups and first homology of filled links.

Groups are presented by integer relation matrices (rows are relations,
columns are generators) and reduced with a hand-rolled Smith normal form.
The matrices met here are at most a few rows wide, so the reduction is
written for clarity, not speed.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .slopes import Slope, make_slope

__all__ = [
    "FgAbelianGroup",
    "FilledLinkSpec",
    "smith_normal_form",
    "group_from_diagonal",
    "h1_knot_filling",
    "h1_link_filling",
    "nullhomologous_boundary_slope",
    "is_finite",
    "order",
]


def _divisor_chain(factors):
    """Rewrite positive cyclic orders as invariant factors d1 | d2 | ...

    Pairwise (gcd, lcm) replacement preserves the group and terminates in a
    divisor chain; ones are dropped at the end.
    """
    a = sorted(int(f) for f in factors)
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(a[i], a[j])
            a[i], a[j] = g, a[i] // g * a[j]
    return tuple(x for x in a if x > 1)


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank plus cyclic torsion summands.

    Any list of cyclic orders is accepted; it is normalised on construction
    so that two equal groups compare equal.  A zero order is a copy of Z and
    moves into the rank, an order of one disappears.
    """

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        orders = [abs(int(t)) for t in self.torsion]
        extra = sum(1 for t in orders if t == 0)
        object.__setattr__(self, "rank", int(self.rank) + extra)
        object.__setattr__(self, "torsion", _divisor_chain(t for t in orders if t))

    @property
    def has_torsion(self):
        return bool(self.torsion)

    def __str__(self):
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: ``"Z^2 + Z/2"``, ``"Z/3"``, ``"0"``."""
        text = text.strip()
        if text == "0":
            return cls()
        rank, torsion = 0, []
        for part in text.split("+"):
            part = part.strip()
            if m := re.fullmatch(r"Z\^(\d+)", part):
                rank += int(m.group(1))
            elif part == "Z":
                rank += 1
            elif m := re.fullmatch(r"Z/(\d+)", part):
                torsion.append(int(m.group(1)))
            else:
                raise ValueError(f"cannot parse group summand {part!r}")
        return cls(rank, tuple(torsion))

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["rank"]), tuple(int(t) for t in obj["torsion"]))


def smith_normal_form(m: Sequence[Sequence[int]]) -> list:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns ``min(rows, cols)`` non-negative entries with each dividing the
    next.

    >>> smith_normal_form([[2, 0], [0, 3]])
    [1, 6]
    >>> smith_normal_form([[0, 0], [0, 0]])
    [0, 0]
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise ValueError("ragged matrix")
    k = min(rows, cols)

    for t in range(k):
        while True:
            # pivot: smallest non-zero |entry| in the trailing block
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return [abs(a[i][i]) for i in range(t)] + [0] * (k - t)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            piv = a[t][t]

            dirty = False
            for i in range(t + 1, rows):
                f = a[i][t] // piv
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                f = a[t][j] // piv
                if f:
                    for row in a:
                        row[j] -= f * row[t]
                dirty |= a[t][j] != 0
            if dirty:
                continue
            # pivot must divide the rest of the block; fold an offending row in
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    return [abs(a[i][i]) for i in range(k)]


def group_from_diagonal(d, extra_free=0):
    """Cokernel of a diagonal presentation, plus ``extra_free`` free generators."""
    return FgAbelianGroup(extra_free + sum(1 for x in d if x == 0),
                          tuple(abs(x) for x in d if x))


def presentation_cokernel(m, ngens):
    """Group with ``ngens`` generators and the rows of ``m`` as relations."""
    if not m:
        return FgAbelianGroup(ngens)
    d = smith_normal_form(m)
    return group_from_diagonal(d, ngens - len(d))


def h1_knot_filling(p, w):
    """H_1 of p/q surgery on the pattern knot of a satellite with winding w:
    Z + Z/gcd(p, w)."""
    return FgAbelianGroup(1, (gcd(int(p), int(w)),))


def nullhomologous_boundary_slope(p, q, w):
    """Slope on the solid-torus boundary of the filled pattern space that
    bounds in homology: p/(q w^2), or the meridian when w = 0."""
    if w == 0:
        return make_slope(1, 0)
    return make_slope(p, q * w * w)


@dataclass(frozen=True)
class FilledLinkSpec:
    """Two-component link with linking number ``winding``; ``None`` leaves
    that component unfilled."""

    winding: int
    slope1: Optional[Slope] = None
    slope2: Optional[Slope] = None


def link_relations(link):
    """Relation rows on the meridians (mu1, mu2).

    Each longitude is ``w`` times the other meridian, so filling component i
    along p_i/q_i kills p_i mu_i + q_i w mu_j.
    """
    w = link.winding
    rows = []
    if link.slope1 is not None:
        rows.append([link.slope1.p, link.slope1.q * w])
    if link.slope2 is not None:
        rows.append([link.slope2.q * w, link.slope2.p])
    return rows


def h1_link_filling(link):
    return presentation_cokernel(link_relations(link), 2)


def is_finite(g):
    return g.rank == 0


def order(g):
    """Order of the group; ``math.inf`` when it has positive rank."""
    if g.rank:
        return math.inf
    return math.prod(g.torsion)
