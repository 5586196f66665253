"""Independent reference computations used only by the tests."""

from itertools import combinations
from math import gcd

import sympy


def determinantal_divisors(m):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}.

    Entirely separate from the elimination algorithm under test.
    """
    rows, cols = len(m), len(m[0]) if m else 0
    M = sympy.Matrix(m) if rows else None
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = gcd(g, int(M.extract(list(r), list(c)).det()))
        if g == 0:
            out.extend([0] * (min(rows, cols) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def cokernel_by_minors(m, ngens):
    """(rank, torsion) of Z^ngens / rowspace(m) via determinantal divisors."""
    if not m:
        return ngens, ()
    d = determinantal_divisors(m)
    rank = ngens - len(d) + d.count(0)
    return rank, tuple(x for x in d if x > 1)
