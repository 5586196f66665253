"""
Volume ceilings and staged denominators
=======================================

Filling along a long slope cannot shrink volume by much.  Turning that
around, each volume ceiling V gives a least denominator q with
v_max(q) below V.  Feeding in the volumes where the census list breaks
rebuilds the staged table.
"""

from decimal import Decimal

from charslope import fixtures
from charslope.census import load_census
from charslope.volumes import format_stage_table, q_min_from_vmax, stage_table, v_max

for q in (11, 24, 43, 100, 1000):
    print(f"q = {q:>4}:  v_max = {v_max(q):.6f}")

# %%
# Inverting: the volume of v1284 gives 24, that of m202 gives 43
print(q_min_from_vmax("5.1799776154"), q_min_from_vmax("4.0597664256"))

# %%
# The full table, alongside the number of census items up to each boundary
data = fixtures.stage_data()
rows = stage_table([s["boundary"] for s in data["stages"]], data["base_volume"],
                   [s["a_k"] for s in data["stages"]])
census = load_census(fixtures.census_path())
listed = [sum(r.volume_value <= Decimal(row.boundary_volume) for r in census) for row in rows]
print(format_stage_table(rows, listed))
