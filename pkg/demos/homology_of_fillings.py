"""
Homology of filled links
========================

The meridians generate the first homology of a two-component link
exterior.  Each filling adds one relation, and the Smith normal form of
the relation matrix reads off the group.
"""

from charslope.homology import FilledLinkSpec, h1_knot_filling, h1_link_filling, smith_normal_form
from charslope.slopes import INFINITY, make_slope

print(smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))

# %%
# Filling the pattern component of a satellite with winding number w
for p, w in [(6, 3), (5, 0), (5, 3), (4, 2)]:
    print(f"p = {p}, w = {w}:", h1_knot_filling(p, w))

# %%
# Both components filled.  With w = 0 the two fillings do not interact
print(h1_link_filling(FilledLinkSpec(0, make_slope(3, 2), make_slope(5, 7))))
print(h1_link_filling(FilledLinkSpec(0, INFINITY, make_slope(0, 1))))
print(h1_link_filling(FilledLinkSpec(2, make_slope(1, 1), make_slope(3, 1))))
