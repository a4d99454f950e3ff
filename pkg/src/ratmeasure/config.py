"""Runtime switches.

VALIDATE turns on the expensive structural checks (face closure and exact
pairwise common-face verification) after every operation that builds a
complex or a fan.  The test suite enables it; production callers can too
when debugging.  Validation of pairwise intersections is quadratic, so for
large complexes only a deterministic sample of pairs is checked; the cap
keeps test runs affordable.
"""

VALIDATE = False

# full pairwise validation up to this many simplexes/cones, sampled beyond
PAIRWISE_FULL_LIMIT = 28
PAIRWISE_SAMPLE = 400
