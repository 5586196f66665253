"""Characterising-slope thresholds for families of knots.

``characterising_bound`` turns a description of a knot into a condition
on slopes p/q: a denominator threshold plus, for satellites, a condition
on the numerator.  Any slope meeting both is characterising.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import (InvalidClasp, InvalidParams, InvalidStage, MissingSystole,
                     NonHyperbolicInput, NonPositiveSystole, ZeroParameter)
from .fixtures import double_systoles, stage_data, twist_systoles
from .geodesics import CONSTANTS, q_frak
from .surgery import WhiteheadDouble as WhiteheadDoubleLabel, double_twist, whitehead_fill_identity
from .volumes import stage_table as _stage_table

# Whitehead doubles with at most this many clasps get the floor directly,
# as do twist knots with at most TWIST_DIRECT full twists
CLASP_DIRECT = 4
TWIST_DIRECT = 3
# sign * t values for which the once-clasped pattern gets the staged bounds
STAGED_TWISTS = (-1, 0, 1, 2)


# ------------------------------------------------------------- knot classes

def _check_systole(x, what="systole"):
    if x is not None and not x > 0:
        raise NonPositiveSystole(f"{what} must be positive, got {x}")


@dataclass(frozen=True)
class HyperbolicKnot:
    systole: float

    def __post_init__(self):
        _check_systole(self.systole)


@dataclass(frozen=True)
class SatelliteByHyperbolicPattern:
    pattern_systole: float
    winding: int

    def __post_init__(self):
        _check_systole(self.pattern_systole, "pattern systole")


@dataclass(frozen=True)
class WhiteheadDoubleInput:
    """Whitehead double with ``clasp`` clasps and ``twist`` full twists, of
    an arbitrary companion.  ``systole`` is that of the pattern link
    complement and is looked up in the shipped table when omitted."""

    clasp: int
    twist: int = 0
    systole: Optional[float] = None

    def __post_init__(self):
        if self.clasp == 0:
            raise InvalidClasp("clasp number must be non-zero")
        _check_systole(self.systole)


@dataclass(frozen=True)
class TwistKnotInput:
    sign: int
    t: int
    systole: Optional[float] = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidParams("sign must be +1 or -1")
        _check_systole(self.systole)


# ---------------------------------------------------------------- reports

class NumeratorCondition(enum.Enum):
    NONE = "none"
    GCD_WITH_WINDING_NOT_ONE = "gcd_p_w_ne_1"
    ABS_P_NOT_ONE = "abs_p_ne_1"


@dataclass(frozen=True)
class BoundReport:
    q_threshold: int
    numerator_condition: NumeratorCondition
    provenance: str
    stage: Optional[int] = None
    winding: Optional[int] = None

    def numerator_ok(self, p):
        c = self.numerator_condition
        if c is NumeratorCondition.GCD_WITH_WINDING_NOT_ONE:
            return gcd(p, self.winding) != 1
        if c is NumeratorCondition.ABS_P_NOT_ONE:
            return abs(p) != 1
        return True

    def to_json(self):
        d = {"q_threshold": self.q_threshold,
             "numerator_condition": self.numerator_condition.value,
             "provenance": self.provenance,
             "stage": self.stage}
        if self.winding is not None:
            d["winding"] = self.winding
        return d

    def describe(self):
        cond = {
            NumeratorCondition.NONE: "",
            NumeratorCondition.GCD_WITH_WINDING_NOT_ONE: f" with gcd(p, {self.winding}) != 1",
            NumeratorCondition.ABS_P_NOT_ONE: " with |p| != 1",
        }[self.numerator_condition]
        return f"every slope p/q with |q| >= {self.q_threshold}{cond} is characterising"


def default_stage_table(directory=None):
    data = stage_data(directory)
    st = data["stages"]
    return _stage_table([s["boundary"] for s in st], data["base_volume"], [s["a_k"] for s in st])


def _floor_bound(systole):
    return max(CONSTANTS.q_floor, q_frak(systole))


def characterising_bound(k, stage=None, stage_table=None, data_dir=None):
    if stage is not None and not isinstance(k, WhiteheadDoubleInput):
        raise InvalidStage("staged bounds only apply to Whitehead doubles")

    if isinstance(k, HyperbolicKnot):
        return BoundReport(_floor_bound(k.systole), NumeratorCondition.NONE, "hyperbolic_knot")

    if isinstance(k, SatelliteByHyperbolicPattern):
        return BoundReport(_floor_bound(k.pattern_systole), NumeratorCondition.GCD_WITH_WINDING_NOT_ONE,
                           "hyperbolic_pattern", winding=k.winding)

    if isinstance(k, WhiteheadDoubleInput):
        n = abs(k.clasp)
        if stage is not None:
            st = (1 if k.clasp > 0 else -1) * k.twist
            if n != 1 or st not in STAGED_TWISTS:
                raise InvalidStage(
                    f"staged bounds need a single clasp and sign*t in {STAGED_TWISTS}; got n={k.clasp}, t={k.twist}")
            rows = stage_table if stage_table is not None else default_stage_table(data_dir)
            match = [r for r in rows if r.k == stage]
            if not match:
                raise InvalidStage(f"no stage {stage}; available 1..{len(rows)}")
            return BoundReport(match[0].q_k, NumeratorCondition.ABS_P_NOT_ONE, "census_stage", stage=stage)
        if n <= CLASP_DIRECT:
            return BoundReport(CONSTANTS.q_floor, NumeratorCondition.ABS_P_NOT_ONE, "whitehead_double")
        sys_ = k.systole
        if sys_ is None:
            row = double_systoles(data_dir).get(n)
            if row is None:
                raise MissingSystole(f"no tabulated systole for {n} clasps; supply one")
            sys_ = float(row.systole)
        return BoundReport(_floor_bound(sys_), NumeratorCondition.ABS_P_NOT_ONE, "whitehead_double")

    if isinstance(k, TwistKnotInput):
        st = k.sign * k.t
        if k.t == 0:
            raise NonHyperbolicInput("twist knot with no twists is the unknot, non-hyperbolic")
        if st == 1:
            raise NonHyperbolicInput("this twist knot is a trefoil, non-hyperbolic")
        if abs(k.t) <= TWIST_DIRECT:
            return BoundReport(CONSTANTS.q_floor, NumeratorCondition.NONE, "twist_knot")
        sys_ = k.systole
        if sys_ is None:
            row = twist_systoles(data_dir).get(st)
            if row is None:
                raise MissingSystole(f"no tabulated systole for sign*t = {st}; supply one")
            sys_ = float(row.systole)
        return BoundReport(_floor_bound(sys_), NumeratorCondition.NONE, "twist_knot")

    raise TypeError(f"unsupported knot class {type(k).__name__}")


@dataclass(frozen=True)
class SlopeCertificate:
    certified: bool
    report: BoundReport
    reason: str

    def to_json(self):
        return {"certified": self.certified, "report": self.report.to_json(), "reason": self.reason}


def is_slope_certified(k, p, q, stage=None, stage_table=None, data_dir=None):
    if gcd(p, q) != 1:
        raise InvalidParams(f"slope {p}/{q} is not reduced")
    rep = characterising_bound(k, stage, stage_table, data_dir)
    if abs(q) < rep.q_threshold:
        return SlopeCertificate(False, rep, f"|q| = {abs(q)} < {rep.q_threshold}")
    if not rep.numerator_ok(p):
        return SlopeCertificate(False, rep, f"numerator {p} fails {rep.numerator_condition.value}")
    return SlopeCertificate(True, rep, rep.describe())


# ----------------------------------------------------- same-surgery pairs

MERIDIAN_LONGITUDE_SWAP = "meridian_longitude_swap"


@dataclass(frozen=True)
class GluedJsjWitness:
    """Two knot complements glued along their boundary tori.  ``pieces`` is
    kept sorted so that equality is multiset equality."""

    pieces: tuple
    gluing: str = MERIDIAN_LONGITUDE_SWAP

    @classmethod
    def of(cls, a, b, gluing=MERIDIAN_LONGITUDE_SWAP):
        return cls(tuple(sorted((a, b), key=repr)), gluing)

    def to_json(self):
        return {"pieces": [str(p) for p in self.pieces], "gluing": self.gluing}


@dataclass(frozen=True)
class BrakesPair:
    knot: WhiteheadDoubleLabel
    knot_prime: WhiteheadDoubleLabel
    witness: GluedJsjWitness
    witness_prime: GluedJsjWitness
    non_characterising: bool

    def to_json(self):
        return {"K": str(self.knot), "K_prime": str(self.knot_prime),
                "witness": self.witness.to_json(), "witness_prime": self.witness_prime.to_json(),
                "non_characterising": self.non_characterising}


def _nonzero(**kw):
    for name, v in kw.items():
        if v == 0:
            raise ZeroParameter(f"{name} must be non-zero")


def brakes_pair(q, m, n):
    """Untwisted Whitehead doubles K = W^n(T^m_q) and K' = W^m(T^n_q).

    1/q surgery on either is the union of the T^m_q and T^n_q exteriors
    glued by swapping meridian and longitude, so the two surgeries agree.
    """
    _nonzero(q=q, m=m, n=n)
    tm, tn = double_twist(m, q), double_twist(n, q)
    k = WhiteheadDoubleLabel(n, 0, tm)
    k2 = WhiteheadDoubleLabel(m, 0, tn)
    # K: the companion exterior is E(T^m_q); filling the pattern gives E(T^n_q)
    w = GluedJsjWitness.of(tm, whitehead_fill_identity(n, q))
    w2 = GluedJsjWitness.of(tn, whitehead_fill_identity(m, q))
    return BrakesPair(k, k2, w, w2, m != n)


@dataclass(frozen=True)
class TwistBoxes:
    """Signed full-twist counts in the four boxes of the standard diagram of
    W^n(T^m_q): the twist regions of the companion, the clasp, and the box
    cancelling the companion's writhe."""

    q_box: int
    m_box: int
    clasp_box: int
    writhe_box: int

    def as_tuple(self):
        return (self.q_box, self.m_box, self.clasp_box, self.writhe_box)


def diagram_parameters(q, m, n):
    _nonzero(q=q, m=m, n=n)
    return {"K": TwistBoxes(-q, -m, -n, -2 * (m + q)),
            "K_prime": TwistBoxes(-q, -n, -m, -2 * (n + q))}
