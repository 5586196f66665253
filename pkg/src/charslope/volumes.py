"""Volume bounds after Dehn filling, and the staged denominator table.

Filling a cusp along a slope of length at least ``|q|/sqrt 3`` shrinks
volume by at most the factor ``(1 - 3(2 pi/q)^2)^{3/2}``.  Inverting this
gives, for each volume ceiling, the least denominator that keeps a filled
manifold under it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from decimal import Decimal
from typing import Optional, Sequence

from .errors import BelowElevenError, VolumeTooSmall
from .geodesics import guarded_ceil

# volume of the Whitehead link complement (census m129)
WHITEHEAD_VOLUME = Decimal("3.6638623767")

STAGE_GUARD = 1e-12


def _f(x):
    return float(Decimal(str(x)))


def filled_volume_scale(q):
    if q <= 10:
        raise BelowElevenError(f"q = {q}: slope length bound does not exceed 2 pi below 11")
    return (1 - 3 * (2 * math.pi / q) ** 2) ** 1.5


def v_max(q, base=WHITEHEAD_VOLUME):
    """Volume ceiling for the unfilled manifold when the slope has denominator q."""
    return _f(base) / filled_volume_scale(q)


def q_min_from_vmax(volume, base=WHITEHEAD_VOLUME):
    """Least denominator q with ``v_max(q) <= volume``.

    >>> q_min_from_vmax(5.1799776154)
    24
    """
    v, b = _f(volume), _f(base)
    if v <= b:
        raise VolumeTooSmall(f"volume {volume} must exceed the base volume {base}")
    return guarded_ceil(2 * math.pi * math.sqrt(3 / (1 - (b / v) ** (2 / 3))))


@dataclass(frozen=True)
class StageRow:
    k: int
    boundary_volume: str
    a_k: Optional[int]
    q_k: int
    V_k: float

    def to_json(self):
        d = asdict(self)
        d["V_k"] = round(self.V_k, 4)
        return d


def least_q_below(boundary, base=WHITEHEAD_VOLUME):
    """Least q >= 11 with v_max(q) strictly below ``boundary``."""
    b = _f(boundary)
    if b <= _f(base):
        raise VolumeTooSmall(f"boundary {boundary} must exceed the base volume {base}")
    q = max(11, q_min_from_vmax(b, base))
    while v_max(q, base) >= b - STAGE_GUARD:
        q += 1
    while q > 11 and v_max(q - 1, base) < b - STAGE_GUARD:
        q -= 1
    return q


def stage_table(boundaries: Sequence, base=WHITEHEAD_VOLUME, counts: Optional[Sequence[int]] = None):
    """One row per boundary volume; ``counts`` supplies the a_k column."""
    boundaries = [str(b) for b in boundaries]
    if not boundaries:
        raise ValueError("no boundary volumes given")
    dec = [Decimal(b) for b in boundaries]
    if any(x >= y for x, y in zip(dec, dec[1:])):
        raise ValueError("boundary volumes must be strictly increasing")
    if counts is not None and len(counts) != len(boundaries):
        raise ValueError("need one count per boundary")
    rows = []
    for k, b in enumerate(boundaries, 1):
        q = least_q_below(b, base)
        rows.append(StageRow(k, b, None if counts is None else int(counts[k - 1]), q, v_max(q, base)))
    return rows


def format_stage_table(rows, listed=None):
    """Aligned text table: k, V_k, a_k, q_k (and census items up to the
    boundary when ``listed`` is given)."""
    head = ["k", "V_k", "a_k", "q_k", "boundary"]
    if listed is not None:
        head.append("listed<=boundary")
    lines = []
    for i, r in enumerate(rows):
        cells = [str(r.k), f"{r.V_k:.4f}", "" if r.a_k is None else str(r.a_k), str(r.q_k), r.boundary_volume]
        if listed is not None:
            cells.append(str(listed[i]))
        lines.append(cells)
    widths = [max(len(h), *(len(c[i]) for c in lines)) for i, h in enumerate(head)]
    fmt = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths))
    return "\n".join([fmt(head), fmt(["-" * w for w in widths])] + [fmt(c) for c in lines])
