"""
Denominator thresholds from systoles
====================================

A short closed geodesic on the unfilled side forces a large slope
denominator before the filling core is certifiably the shortest geodesic.
This walks through the threshold function and rebuilds both systole tables.
"""

from charslope import fixtures
from charslope.geodesics import CONSTANTS, core_is_unique_shortest, core_length_cap, q_frak

# The threshold never drops below 18, and 0.14 is roughly where it crosses 35
for s in (2.12255, 1.0, 0.14, 0.1395, 0.05, 0.001):
    print(f"systole {s:<8} -> q_frak {q_frak(s)}")

# %%
# Above the floor of 35 the core length cap stays under 0.0706
for q in (35, 50, 100):
    print(q, round(core_length_cap(q), 6))

# %%
# Certificates for a few denominators with the Whitehead link systole
for q in (21, 35, 36):
    c = core_is_unique_shortest(1.061275061905, q)
    print(q, c.certified, c.reason)

# %%
# The twist-knot table: sign*t, systole, threshold, tabulated value
table = fixtures.twist_systoles()
mismatch = 0
for k in sorted(table):
    row = table[k]
    q = q_frak(float(row.systole))
    mismatch += q != row.reference_q
    if abs(k) <= 4 or abs(k) == 34:
        print(f"{k:>4}  {row.systole}  {q:>4}  {row.reference_q:>4}")
print("rows:", len(table), "disagreements:", mismatch, "floor:", CONSTANTS.q_floor)
