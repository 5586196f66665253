import math
from decimal import Decimal

import pytest
from hypothesis import given, strategies as st

from charslope import fixtures
from charslope.errors import BelowElevenError, VolumeTooSmall
from charslope.volumes import (WHITEHEAD_VOLUME, filled_volume_scale, format_stage_table, q_min_from_vmax,
                               stage_table, v_max)

BASE = float(WHITEHEAD_VOLUME)


def test_scale():
    assert filled_volume_scale(43) == pytest.approx(0.90548, abs=1e-4)
    assert 0 < filled_volume_scale(11) < filled_volume_scale(12) < 1
    assert filled_volume_scale(10**9) == pytest.approx(1)
    for q in (10, 0, -43):
        with pytest.raises(BelowElevenError):
            filled_volume_scale(q)


def test_v_max_examples():
    assert v_max(43) == pytest.approx(4.0464, abs=2e-4)
    assert v_max(24) == pytest.approx(5.1749, abs=2e-4)
    assert v_max(10**8) == pytest.approx(BASE, rel=1e-12)
    assert v_max(43, "3.6638623767") == v_max(43)


def test_v_max_monotone_above_base():
    vals = [v_max(q) for q in range(11, 2000)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert all(v > BASE for v in vals)


def test_q_min_examples():
    assert q_min_from_vmax(5.1799776154) == 24
    assert q_min_from_vmax("4.0597664256") == 43
    with pytest.raises(VolumeTooSmall):
        q_min_from_vmax(BASE)
    with pytest.raises(VolumeTooSmall):
        q_min_from_vmax(3.0)
    assert q_min_from_vmax(BASE * (1 + 1e-12)) > 10**6


@given(st.floats(3.67, 50.0))
def test_q_min_bracket(V):
    q = q_min_from_vmax(V)
    assert v_max(q) <= V * (1 + 1e-12)
    if q - 1 >= 11:
        assert V < v_max(q - 1)


def test_q_min_weakly_decreasing():
    vs = [3.67 + i * 0.001 for i in range(3000)]
    qs = [q_min_from_vmax(v) for v in vs]
    assert all(a >= b for a, b in zip(qs, qs[1:]))


def test_stage_rows_optimal():
    data = fixtures.stage_data()
    rows = stage_table([s["boundary"] for s in data["stages"]], data["base_volume"], [s["a_k"] for s in data["stages"]])
    for r in rows:
        b = float(Decimal(r.boundary_volume))
        assert r.V_k == v_max(r.q_k) < b <= v_max(r.q_k - 1)
    text = format_stage_table(rows)
    assert text.splitlines()[0].split() == ["k", "V_k", "a_k", "q_k", "boundary"]
    assert rows[0].to_json() == {"k": 1, "boundary_volume": "4.0597664256", "a_k": 4, "q_k": 43, "V_k": 4.0463}


def test_stage_single_boundaries():
    (r,) = stage_table(["4.0597664256"])
    assert (r.q_k, round(r.V_k, 3)) == (43, 4.046)
    (r,) = stage_table(["5.1799776154"])
    assert r.q_k == 24


def test_stage_table_rejects_bad_input():
    with pytest.raises(ValueError):
        stage_table([])
    with pytest.raises(ValueError):
        stage_table(["4.5", "4.4"])
    with pytest.raises(VolumeTooSmall):
        stage_table(["3.5"])


def test_counts_equal_items_up_to_boundary(census):
    # the a_k column counts census items with volume at most the boundary
    for s in fixtures.stage_data()["stages"]:
        b = Decimal(s["boundary"])
        assert sum(1 for r in census if r.volume_value <= b) == s["a_k"]
