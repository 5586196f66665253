"""
Eliminating census manifolds
============================

Every two-cusped census manifold below the stage-8 volume is tested
against four rules in order: torsion in homology, a known non-zero
linking number, two distinct solid-torus fillings on one cusp, and a
filling whose homology is finite.  Only the Whitehead link exterior m129
should be left.
"""

from collections import Counter

from charslope import fixtures
from charslope.census import Rule, format_report, load_census, run_pipeline

census = load_census(fixtures.census_path())
print(len(census), "records, lightest", census[0].name, census[0].volume)

report = run_pipeline(census, "5.1799776154")
print(Counter(v.rule.value for v in report.verdicts.values()))
print("survivors:", report.survivors)

# %%
# A few individual verdicts
for name in ("m412", "m203", "m202", "m292", "m129", "v1284"):
    print(name, report.verdicts[name].to_json())

# %%
# Lowering the cap to the first boundary only judges the two lightest items
small = run_pipeline(census, "4.0597664256")
print([n for n, v in small.verdicts.items() if v.rule is not Rule.OUT_OF_RANGE])
print(format_report(small, census).splitlines()[-1])
