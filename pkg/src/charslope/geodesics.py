"""Length bounds for geodesics in Dehn fillings.

The central quantity is ``q_frak(sys)``: the least slope denominator that
forces the core of the filling solid torus to be shorter than anything a
drilling argument could produce below the systole ``sys``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DenominatorNonPositive, HypothesisNotMet, NonPositiveSystole

SNAP_TOL = 1e-9
CEIL_GUARD = 1e-12


@dataclass(frozen=True)
class BoundConstants:
    drill_factor: float = 1.9793
    quad_shift_upper: float = 28.78
    quad_shift_lower: float = 16.17
    nl_hypothesis: float = 7.823
    short_core_hypothesis: float = 0.0996
    pair_threshold: float = 0.0735
    core_cap: float = 0.0706
    cusp_area_floor: float = 2 * math.sqrt(3)
    six_theorem: float = 6.0
    q_floor: int = 35

    @property
    def cusp_scale(self):
        # sqrt(6 sqrt 3): converts |q| into a lower bound for normalised length
        return math.sqrt(self.six_theorem * self.cusp_area_floor / 2)


CONSTANTS = BoundConstants()


def guarded_ceil(x):
    """Ceiling that is exact at near-integers and never rounds down.

    Values within 1e-9 of an integer are taken to be that integer (float
    noise in a quantity that is an integer in exact arithmetic); anything
    else is rounded up from slightly above ``x``.
    """
    r = round(x)
    if abs(x - r) < SNAP_TOL:
        return int(r)
    return math.ceil(x + CEIL_GUARD)


def q_frak(systole, c=CONSTANTS):
    """Denominator threshold attached to a systole.

    >>> q_frak(1.061275061905)
    21
    >>> q_frak(0.14)
    35
    """
    if not systole > 0:
        raise NonPositiveSystole(f"systole must be positive, got {systole}")
    inner = 2 * math.pi * c.drill_factor / systole + c.quad_shift_upper
    return guarded_ceil(math.sqrt(c.cusp_scale ** 2 * inner))


def slope_length_floor(q):
    """Lower bound |q|/sqrt(3) on the length of a slope with denominator q
    on a maximal cusp of area at least 2 sqrt 3."""
    return abs(q) / math.sqrt(3)


def normalized_length_floor(q, c=CONSTANTS):
    return abs(q) / c.cusp_scale


def core_length_window(nl, c=CONSTANTS):
    """Bracket (lower, upper) for the core length of a filling with
    normalised slope length ``nl``."""
    if nl < c.nl_hypothesis:
        raise HypothesisNotMet(f"normalised length {nl} < {c.nl_hypothesis}")
    sq = nl * nl
    return 2 * math.pi / (sq + c.quad_shift_lower), 2 * math.pi / (sq - c.quad_shift_upper)


def core_length_cap(q, c=CONSTANTS):
    """Upper bound for the core length after filling along a slope with
    denominator q, using the normalised-length floor."""
    denom = q * q / c.cusp_scale ** 2 - c.quad_shift_upper
    if denom <= 0:
        raise DenominatorNonPositive(f"|q| = {abs(q)} is too small for a core length cap")
    return 2 * math.pi / denom


def drilled_length_cap(length, c=CONSTANTS):
    """Length bound, in the drilled manifold, for a geodesic of length
    ``length`` in the filled one."""
    if not 0 < length <= c.pair_threshold:
        raise HypothesisNotMet(f"length must lie in (0, {c.pair_threshold}], got {length}")
    return c.drill_factor * length


@dataclass(frozen=True)
class CoreCertificate:
    certified: bool
    q_required: int
    core_length_cap: float
    drilled_length_cap: float
    reason: str


def core_is_unique_shortest(systole, q, c=CONSTANTS):
    """Decide whether filling slope denominator ``q`` makes the core curves
    the unique shortest geodesics, given the systole of the unfilled side.

    The caps reported are those valid once ``|q| >= q_required``; they are
    filled in either way so a refusal still shows what would be needed.
    """
    need = max(c.q_floor, q_frak(systole, c))
    cap = min(c.core_cap, systole / c.drill_factor)
    drilled = drilled_length_cap(cap, c)
    if abs(q) >= need:
        reason = f"|q| = {abs(q)} >= {need}; core shorter than {cap:.6g}, drilled geodesics shorter than {drilled:.6g}"
        return CoreCertificate(True, need, cap, drilled, reason)
    reason = f"|q| = {abs(q)} < {need} required for systole {systole}"
    return CoreCertificate(False, need, cap, drilled, reason)
