import itertools
from math import gcd

import pytest
from hypothesis import given, strategies as st

from charslope import fixtures
from charslope.characterisation import (BoundReport, GluedJsjWitness, HyperbolicKnot, NumeratorCondition,
                                        SatelliteByHyperbolicPattern, TwistKnotInput, WhiteheadDoubleInput,
                                        brakes_pair, characterising_bound, default_stage_table,
                                        diagram_parameters, is_slope_certified)
from charslope.geodesics import q_frak
from charslope.errors import (InvalidClasp, InvalidParams, InvalidStage, MissingSystole, NonHyperbolicInput,
                              NonPositiveSystole, ZeroParameter)
from charslope.surgery import FIGURE_EIGHT, TwistKnot, WhiteheadDouble, double_twist

ABS_P = NumeratorCondition.ABS_P_NOT_ONE
GCD_W = NumeratorCondition.GCD_WITH_WINDING_NOT_ONE
UNIT = (-1, 1)


def bound(k, **kw):
    return characterising_bound(k, **kw)


def test_examples():
    r = bound(HyperbolicKnot(0.153578692788))
    assert (r.q_threshold, r.numerator_condition) == (35, NumeratorCondition.NONE)
    r = bound(WhiteheadDoubleInput(1, 0), stage=8)
    assert (r.q_threshold, r.numerator_condition, r.stage) == (24, ABS_P, 8)
    r = bound(WhiteheadDoubleInput(5, 0, 0.126321972231))
    assert (r.q_threshold, r.numerator_condition) == (37, ABS_P)
    assert bound(WhiteheadDoubleInput(-5, 3)).q_threshold == 37  # systole from the table


def test_satellite():
    r = bound(SatelliteByHyperbolicPattern(0.05, 3))
    assert r.numerator_condition is GCD_W and r.winding == 3 and r.q_threshold == max(35, q_frak(0.05))
    assert r.numerator_ok(6) and not r.numerator_ok(5)


def test_whitehead_rules():
    for n in (1, -2, 3, 4, -4):
        assert bound(WhiteheadDoubleInput(n, 7)).q_threshold == 35
    assert bound(WhiteheadDoubleInput(34, 0)).q_threshold == 219
    with pytest.raises(MissingSystole):
        bound(WhiteheadDoubleInput(35, 0))
    assert bound(WhiteheadDoubleInput(35, 0, systole=0.0025)).q_threshold > 219
    with pytest.raises(InvalidClasp):
        WhiteheadDoubleInput(0, 0)


def test_stage_gate():
    for t in (-1, 0, 1, 2):
        assert bound(WhiteheadDoubleInput(1, t), stage=1).q_threshold == 43
        assert bound(WhiteheadDoubleInput(-1, -t), stage=1).q_threshold == 43
    for k, bad in [(1, WhiteheadDoubleInput(2, 0)), (1, WhiteheadDoubleInput(1, 3)), (9, WhiteheadDoubleInput(1, 0))]:
        with pytest.raises(InvalidStage):
            bound(bad, stage=k)
    with pytest.raises(InvalidStage):
        bound(HyperbolicKnot(1.0), stage=1)


def test_stage_thresholds_shape():
    qs = [bound(WhiteheadDoubleInput(1, 0), stage=k).q_threshold for k in range(1, 9)]
    assert qs == [43, 32, 30, 28, 27, 26, 25, 24]
    assert all(a >= b for a, b in zip(qs, qs[1:])) and max(qs) <= 43
    custom = default_stage_table()[:2]
    assert bound(WhiteheadDoubleInput(1, 0), stage=2, stage_table=custom).q_threshold == 32


def test_twist_knots():
    for st in (0,):
        with pytest.raises(NonHyperbolicInput):
            bound(TwistKnotInput(1, st))
    with pytest.raises(NonHyperbolicInput):
        bound(TwistKnotInput(1, 1))
    with pytest.raises(NonHyperbolicInput):
        bound(TwistKnotInput(-1, -1))
    # the figure-eight knot is hyperbolic
    assert bound(TwistKnotInput(1, -1)).q_threshold == 35
    for sign, t in [(1, 2), (-1, 3), (1, -3)]:
        assert bound(TwistKnotInput(sign, t)).q_threshold == 35
    assert bound(TwistKnotInput(1, 4)).q_threshold == 38
    assert bound(TwistKnotInput(-1, 4)).q_threshold == 42
    assert bound(TwistKnotInput(1, -34)).q_threshold == 312
    with pytest.raises(MissingSystole):
        bound(TwistKnotInput(1, 40))
    assert bound(TwistKnotInput(1, 40, systole=0.001)).q_threshold > 312
    with pytest.raises(InvalidParams):
        TwistKnotInput(0, 3)


def test_twist_table_agrees_with_direct_bounds():
    for st, row in fixtures.twist_systoles().items():
        if abs(st) <= 3:
            continue
        assert bound(TwistKnotInput(1, st)).q_threshold == row.reference_q


def test_systole_validation():
    with pytest.raises(NonPositiveSystole):
        HyperbolicKnot(0)
    with pytest.raises(NonPositiveSystole):
        WhiteheadDoubleInput(5, 0, -1.0)


@given(st.floats(1e-4, 1e4))
def test_threshold_floor(s):
    for k in (HyperbolicKnot(s), SatelliteByHyperbolicPattern(s, 2)):
        q = bound(k).q_threshold
        assert q >= 24
        if s >= 0.14:
            assert q == 35


def test_report_json():
    r = bound(WhiteheadDoubleInput(3, 0))
    assert r.to_json() == {"q_threshold": 35, "numerator_condition": "abs_p_ne_1",
                           "provenance": "whitehead_double", "stage": None}


def test_certification_examples():
    wd = WhiteheadDoubleInput(1, 0)
    assert is_slope_certified(wd, 2, 35).certified
    assert not is_slope_certified(wd, 1, 1000).certified
    assert not is_slope_certified(HyperbolicKnot(1.087070144996), 5, 21).certified
    with pytest.raises(InvalidParams):
        is_slope_certified(wd, 2, 4)


@given(st.integers(-200, 200), st.integers(1, 300), st.integers(0, 300))
def test_certification_monotone_in_q(p, q, extra):
    q2 = q + extra
    if gcd(p, q) != 1 or gcd(p, q2) != 1:
        return
    for k in (WhiteheadDoubleInput(1, 0), SatelliteByHyperbolicPattern(0.1, 4), HyperbolicKnot(0.01)):
        if is_slope_certified(k, p, q).certified:
            assert is_slope_certified(k, p, q2).certified
            assert is_slope_certified(k, p, -q2).certified


def test_brakes_example():
    pair = brakes_pair(1, -1, 1)
    assert set(pair.witness.pieces) == {FIGURE_EIGHT, TwistKnot(1, 1)}
    assert pair.knot == WhiteheadDouble(1, 0, FIGURE_EIGHT)
    assert pair.knot_prime == WhiteheadDouble(-1, 0, TwistKnot(1, 1))
    assert pair.witness == pair.witness_prime and pair.non_characterising
    assert brakes_pair(1, 1, -1).witness == pair.witness
    same = brakes_pair(2, 3, 3)
    assert same.knot == same.knot_prime and not same.non_characterising
    with pytest.raises(ZeroParameter):
        brakes_pair(0, 1, 1)


def test_witness_is_multiset():
    a, b = double_twist(2, 3), double_twist(2, 5)
    assert GluedJsjWitness.of(a, b) == GluedJsjWitness.of(b, a)
    assert GluedJsjWitness.of(a, a) != GluedJsjWitness.of(a, b)


def test_diagram_examples():
    d = diagram_parameters(1, -1, 1)
    assert d["K"].as_tuple() == (-1, 1, -1, 0)
    assert d["K_prime"].as_tuple() == (-1, -1, 1, -4)
    assert diagram_parameters(1, 1, -1)["K"].as_tuple() == (-1, -1, 1, -4)
    assert diagram_parameters(-1, -1, 1)["K"].as_tuple() == (1, 1, -1, 4)
    with pytest.raises(ZeroParameter):
        diagram_parameters(1, 0, 1)
