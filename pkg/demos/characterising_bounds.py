"""
Characterising slopes for knot families
=======================================

Each knot family gets a denominator threshold, sometimes with a condition
on the numerator.  Whitehead doubles have winding number zero, so their
condition is |p| != 1, and the once-clasped ones get sharper staged
thresholds from the census elimination.
"""

from charslope.characterisation import (HyperbolicKnot, SatelliteByHyperbolicPattern, TwistKnotInput,
                                        WhiteheadDoubleInput, brakes_pair, characterising_bound,
                                        diagram_parameters, is_slope_certified)

for k in (HyperbolicKnot(1.0), HyperbolicKnot(0.01), SatelliteByHyperbolicPattern(0.2, 3),
          WhiteheadDoubleInput(3, 1), WhiteheadDoubleInput(7, 0), TwistKnotInput(-1, 10)):
    print(type(k).__name__, characterising_bound(k).describe())

# %%
# Staged thresholds for the once-clasped doubles
print([characterising_bound(WhiteheadDoubleInput(1, 0), stage=k).q_threshold for k in range(1, 9)])

# %%
# Individual slopes
wd = WhiteheadDoubleInput(1, 0)
for p, q in [(2, 35), (5, 24), (1, 1000)]:
    c = is_slope_certified(wd, p, q, stage=8)
    print(f"{p}/{q}", c.certified, "-", c.reason)

# %%
# 1/q surgery cannot certify anything: two different doubles share it
pair = brakes_pair(1, -1, 1)
print(pair.knot, "and", pair.knot_prime)
print("both give", " u ".join(f"E({x})" for x in pair.witness.pieces))
print({k: v.as_tuple() for k, v in diagram_parameters(1, -1, 1).items()})
