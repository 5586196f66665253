"""
Surgeries on torus knots and cables
===================================

Surgery on a torus knot gives a lens space, a connected sum of two lens
spaces or a small Seifert fibred space, depending on how far the slope is
from the fibre slope rs.  Cables behave the same way relative to their
companion.
"""

from charslope.slopes import make_slope, fiber_distance
from charslope.surgery import (Opaque, Unknot, classify_cable_surgery, classify_torus_knot_surgery,
                               cosmetic_obstruction, iterated_cable_witnesses, unknot_surgery_as_lens)

for p, q in [(6, 1), (7, 1), (5, 1), (1, 2), (13, 2)]:
    d = fiber_distance(make_slope(p, q), 2, 3)
    print(f"{p}/{q} on T(2,3): distance {d} from the fibre ->", classify_torus_knot_surgery(2, 3, p, q))

# %%
# The same slopes on the (2,3) cable of an unnamed companion C
C = Opaque("C")
for p, q in [(6, 1), (13, 2), (1, 1)]:
    print(f"{p}/{q}:", classify_cable_surgery(2, 3, p, q, C))

# %%
# With the unknot as companion the cable is the torus knot again
print(unknot_surgery_as_lens(classify_cable_surgery(2, 3, 7, 1, Unknot())), "==",
      classify_torus_knot_surgery(2, 3, 7, 1))

# %%
# The slope seen on the companion always differs, so the two surgeries
# cannot be confused, and a lens-type slope never survives two cablings
print(cosmetic_obstruction(13, 2, 3))
found, calls = iterated_cable_witnesses()
print(f"{calls} candidate iterations checked, {len(found)} found")
