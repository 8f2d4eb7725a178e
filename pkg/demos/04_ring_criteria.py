#!/usr/bin/env python3
"""When is the constructed point set closed under multiplication?

The real points of the set form Z[Delta, 1/Delta] where Delta collects
the differences of projection constants.  The whole set is a ring
exactly when the unit point e satisfies a monic quadratic over that
real part, and three further reformulations of the same fact.  All
four are checked with exact certificates.
"""

from origami_rings import SlopeSet, ratio_elements, ring_check, sqrt_rational

triangle = SlopeSet(["0", "pi/3", "2pi/3"])
report = ring_check(triangle)
print(triangle, "->", report.status.value)
for c in report.criteria:
    print(f"  {c.name:13s} {c.status.value}")

# with pi/3 and 2pi/3 both present the ratio elements are exactly 1,
# so the ring property is immediate whatever else the set contains
bigger = SlopeSet(["0", "pi/7", "pi/3", "pi/2", "2pi/3"],
                  alpha="2pi/3", beta="pi/3")
qa, qb = ratio_elements(bigger)
print("\n", bigger, "ratios:", qa.decimal(4), qb.decimal(4))
print("  ->", ring_check(bigger).status.value)

# the worked dense example: frame (pi/3, pi/4) with free direction pi/5
pentagon = SlopeSet(["0", "pi/5", "pi/4", "pi/3"])
qa, qb = ratio_elements(pentagon)
s3 = sqrt_rational(3)
print("\n", pentagon)
print("  qa =", qa.decimal(12), " equals 6+3*sqrt(3):", qa == 6 + 3 * s3)
print("  qb =", qb.decimal(12), " equals 4+2*sqrt(3):", qb == 4 + 2 * s3)
report = ring_check(pentagon)
print("  ->", report.status.value, "decided by", report.decided_by or "all criteria")
for c in report.criteria:
    print(f"  {c.name:13s} {c.status.value}")

# a three-direction set fails unless both criterion values are integers
skew = SlopeSet(["0", "pi/4", "pi/3"])
print("\n", skew, "->", ring_check(skew).status.value,
      "(real part is Z, the criteria values are not integers)")
