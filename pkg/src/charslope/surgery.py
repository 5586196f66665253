"""Symbolic descriptions of surgeries on torus knots and cables.

Results are small algebraic descriptions (lens spaces, Seifert fibred
spaces by exceptional fibre orders, connected sums, gluings) compared
syntactically.  No homeomorphism classification is attempted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidCableParams, InvalidClasp, InvalidParams, InvalidTorusParams
from .slopes import Slope, cable_pushdown, make_slope


# ---------------------------------------------------------------- knot labels

@dataclass(frozen=True)
class Unknot:
    def __str__(self):
        return "U"


@dataclass(frozen=True)
class TorusKnot:
    r: int
    s: int

    def __post_init__(self):
        if gcd(self.r, self.s) != 1 or abs(self.r) < 2 or abs(self.s) < 2:
            raise InvalidTorusParams(f"T({self.r},{self.s}) is not a non-trivial torus knot")

    def __str__(self):
        return f"T({self.r},{self.s})"


@dataclass(frozen=True)
class TwistKnot:
    """Twist knot with a single clasp of sign ``sign`` and ``t`` full twists."""

    sign: int
    t: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("twist knot sign must be +1 or -1")
        if self.sign * self.t == -1:
            # the figure-eight knot arises from either sign; store it once
            object.__setattr__(self, "sign", -1)
            object.__setattr__(self, "t", 1)

    @property
    def common_name(self):
        st = self.sign * self.t
        if st == -1:
            return "4_1"
        if st == 1:
            return "+3_1" if self.sign > 0 else "-3_1"
        return None

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        name = self.common_name
        return f"T^{s}_{self.t}" + (f" = {name}" if name else "")


@dataclass(frozen=True)
class DoubleTwist:
    """Two-twist-region knot; build through :func:`double_twist` so that the
    pair is sorted and degenerate cases collapse."""

    m: int
    t: int

    def __str__(self):
        return f"T^{self.m}_{self.t}"


@dataclass(frozen=True)
class WhiteheadDouble:
    n: int
    t: int
    companion: object

    def __post_init__(self):
        if self.n == 0:
            raise InvalidClasp("Whitehead double needs a non-zero clasp number")

    def __str__(self):
        return f"W^{self.n}_{self.t}({self.companion})"


@dataclass(frozen=True)
class Cable:
    r: int
    s: int
    companion: object

    def __str__(self):
        return f"C_{{{self.r},{self.s}}}({self.companion})"


@dataclass(frozen=True)
class Opaque:
    name: str

    def __str__(self):
        return self.name


FIGURE_EIGHT = TwistKnot(-1, 1)


def double_twist(m, t):
    """Canonical label for the double twist knot with parameters m and t.

    Zero in either slot gives the unknot; a parameter of ±1 gives a twist
    knot; otherwise the pair is sorted, which encodes the symmetry between
    the two twist regions.
    """
    m, t = int(m), int(t)
    if m == 0 or t == 0:
        return Unknot()
    a, b = sorted((m, t))
    if abs(a) == 1:
        return TwistKnot(a, b)
    if abs(b) == 1:
        return TwistKnot(b, a)
    return DoubleTwist(a, b)


def whitehead_fill_identity(n, q):
    """Knot obtained by 1/q filling the pattern component of the n-clasped
    Whitehead link (a Rolfsen twist turns it into a double twist knot)."""
    if n == 0:
        raise InvalidClasp("clasp number must be non-zero")
    return double_twist(n, q)


def double_twist_symmetric(m, q):
    return double_twist(m, q) == double_twist(q, m)


# ----------------------------------------------------------- closed manifolds

@dataclass(frozen=True)
class Lens:
    """Oriented lens space L(p, q), stored as (|p|, q mod |p|).

    L(-p, q) is L(p, -q), so a negative p flips the sign of q before
    reducing; this keeps S^3_U(p/q) = L(p, q) true for either sign of p.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 0:
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q % p if p else 1)

    def h1_order(self):
        return self.p

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class S1xS2:
    def __str__(self):
        return "S^1 x S^2"


@dataclass(frozen=True)
class ConnSum:
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError("empty connected sum")

    def __str__(self):
        return " # ".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class SfsOverS2:
    fiber_orders: tuple

    def __str__(self):
        return "SFS(S^2; " + ",".join(map(str, self.fiber_orders)) + ")"


@dataclass(frozen=True)
class SfsOverDisc:
    fiber_orders: tuple

    def __str__(self):
        return "SFS(D^2; " + ",".join(map(str, self.fiber_orders)) + ")"


@dataclass(frozen=True)
class SurgeredKnot:
    knot: object
    slope: Slope

    def __str__(self):
        return f"S3_{self.knot}({self.slope})"


@dataclass(frozen=True)
class GluedPieces:
    complement: object
    piece: SfsOverDisc

    def __str__(self):
        return f"E({self.complement}) u {self.piece}"


def h1_order(desc):
    """Order of H_1 for lens spaces and sums of them; ``None`` when the
    description does not determine it."""
    if isinstance(desc, Lens):
        return desc.p
    if isinstance(desc, S1xS2):
        return 0
    if isinstance(desc, ConnSum):
        orders = [h1_order(p) for p in desc.parts]
        if None in orders:
            return None
        out = 1
        for o in orders:
            out *= o
        return out
    return None


def unknot_surgery_as_lens(desc):
    """Rewrite every p/q surgery on the unknot inside ``desc`` as L(p, q)."""
    if isinstance(desc, SurgeredKnot) and isinstance(desc.knot, Unknot):
        if desc.slope.p == 0:
            return S1xS2()
        return Lens(desc.slope.p, desc.slope.q)
    if isinstance(desc, ConnSum):
        return ConnSum(tuple(unknot_surgery_as_lens(p) for p in desc.parts))
    return desc


def _slope_args(p, q, exc):
    if q == 0 or gcd(p, q) != 1:
        raise exc(f"need gcd(p,q) = 1 and q != 0, got {p}/{q}")
    s = make_slope(p, q)
    return s.p, s.q


def classify_torus_knot_surgery(r, s, p, q):
    """p/q surgery on the (r,s) torus knot."""
    if gcd(r, s) != 1 or abs(r) < 2 or abs(s) < 2:
        raise InvalidTorusParams(f"({r},{s}) is not a non-trivial torus knot")
    p, q = _slope_args(p, q, InvalidTorusParams)
    if p == r * s and q == 1:
        return ConnSum((Lens(r, s), Lens(s, r)))
    d = abs(p - q * r * s)
    if d == 1:
        return Lens(p, q * s * s)
    return SfsOverS2((abs(r), abs(s), d))


def classify_cable_surgery(r, s, p, q, companion):
    """p/q surgery on the (r,s) cable of ``companion``; s is the winding."""
    if abs(s) < 2 or gcd(r, s) != 1:
        raise InvalidCableParams(f"({r},{s}) is not a valid cable")
    p, q = _slope_args(p, q, InvalidCableParams)
    if p == r * s and q == 1:
        return ConnSum((SurgeredKnot(companion, make_slope(r, s)), Lens(s, r)))
    d = abs(p - q * r * s)
    if d == 1:
        return SurgeredKnot(companion, cable_pushdown(make_slope(p, q), s))
    return GluedPieces(companion, SfsOverDisc((abs(s), d)))


def cosmetic_obstruction(p, q, s):
    """True when p/q and ±p/(q s^2) differ, so surgery on a cable cannot
    match the same-slope surgery on its companion."""
    if abs(s) <= 1:
        raise InvalidParams(f"cable winding must satisfy |s| > 1, got {s}")
    if q == 0 or gcd(p, q) != 1:
        raise InvalidParams(f"need gcd(p,q) = 1 and q != 0, got {p}/{q}")
    a = Fraction(p, q)
    b = Fraction(p, q * s * s)
    return a != b and a != -b


def can_iterate_cable(p, q, r, s, r2, s2):
    """Whether p/q on an (r,s) cable can be a lens-type slope while its
    push-down p/(q s^2) is again lens-type on an (r2,s2) cable below."""
    if abs(q) < 3 or abs(s) < 2 or abs(s2) < 2:
        raise InvalidParams("need |q| >= 3 and cable windings |s|, |s2| >= 2")
    if gcd(p, q) != 1 or gcd(r, s) != 1 or gcd(r2, s2) != 1:
        raise InvalidParams("slope and cable parameters must be reduced")
    return abs(p - q * r * s) == 1 and abs(p - q * r2 * s2 * s * s) == 1


def iterated_cable_witnesses(pq_bound=50, r_bound=10, windings=(2, 3, 4)):
    """Scan a box of parameters for inputs where ``can_iterate_cable`` holds.

    The first equation pins p to q r s ± 1, so only those p are visited;
    every other p fails it outright.  Returns (witnesses, calls made).
    """
    ws = [w for w in windings] + [-w for w in windings]
    cables = [(r, s) for r in range(-r_bound, r_bound + 1) for s in ws if gcd(r, s) == 1]
    found, calls = [], 0
    for q in range(-pq_bound, pq_bound + 1):
        if abs(q) < 3:
            continue
        for r, s in cables:
            for p in (q * r * s - 1, q * r * s + 1):
                if abs(p) > pq_bound or gcd(p, q) != 1:
                    continue
                for r2, s2 in cables:
                    calls += 1
                    if can_iterate_cable(p, q, r, s, r2, s2):
                        found.append((p, q, r, s, r2, s2))
    return found, calls
