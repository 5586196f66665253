"""Surgery slopes p/q on a torus boundary.

A slope is stored in canonical form: ``gcd(|p|, |q|) == 1`` and ``q >= 0``,
with the meridian written ``1/0`` and the zero slope ``0/1``.  Python
integers are unbounded, so products such as ``q * s**2`` never wrap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InfiniteSlope, InvalidCable, SlopeParseError, ZeroZero

_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


@dataclass(frozen=True, order=False)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ZeroZero("0/0 is not a slope")
        g = gcd(p, q)
        if g != 1 or q < 0 or (q == 0 and p != 1):
            raise ValueError(f"{p}/{q} is not canonical; use make_slope")

    @property
    def is_infinite(self):
        return self.q == 0

    def as_fraction(self):
        if self.is_infinite:
            raise InfiniteSlope("1/0 has no rational value")
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"

    @classmethod
    def parse(cls, text):
        """Parse ``"p/q"``.  Integers like ``"7"`` are read as ``7/1``.

        The text must already be canonical (``"6/4"`` or ``"1/-2"`` are
        rejected), so that a serialised slope round-trips exactly.
        """
        text = str(text).strip()
        m = _SLOPE_RE.match(text)
        if m:
            p, q = int(m.group(1)), int(m.group(2))
        elif re.fullmatch(r"[+-]?\d+", text):
            p, q = int(text), 1
        else:
            raise SlopeParseError(f"cannot parse slope {text!r}")
        s = make_slope(p, q)
        if (s.p, s.q) != (p, q):
            raise SlopeParseError(f"slope {text!r} is not in canonical form ({s})")
        return s


INFINITY = Slope(1, 0)


def make_slope(p, q):
    """Return the canonical reduced representative of p/q."""
    p, q = int(p), int(q)
    if p == 0 and q == 0:
        raise ZeroZero("0/0 is not a slope")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def distance(a, b):
    """Geometric intersection number |p_a q_b - q_a p_b|."""
    return abs(a.p * b.q - a.q * b.p)


def slopes_equal_up_to_sign(a, b):
    """True when a = ±b, i.e. the slopes agree after mirroring."""
    return a == b or a == make_slope(-b.p, b.q)


def cable_pushdown(s, cable_winding):
    """Slope p/(q s_c^2) seen on the companion after an (r, s_c)-cable collapses."""
    sc = int(cable_winding)
    if abs(sc) <= 1:
        raise InvalidCable(f"cable winding must satisfy |s| > 1, got {sc}")
    if s.is_infinite:
        raise InfiniteSlope("cannot push the meridian down a cable")
    return make_slope(s.p, s.q * sc * sc)


def fiber_distance(s, r, cable_winding):
    """Distance |p - q r s_c| from s to the regular fibre slope r s_c of a cable space."""
    if s.is_infinite:
        raise InfiniteSlope("fiber distance is only defined for finite slopes")
    return distance(s, make_slope(int(r) * int(cable_winding), 1))
