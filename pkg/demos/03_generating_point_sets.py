#!/usr/bin/env python3
"""Growing a point set by intersecting lines.

Start from {0, 1}.  At each round, draw every line with a slope from
the set through every known point and keep all pairwise intersections.
The cumulative levels stabilize for three slopes and explode for four.
"""

from origami_rings import SlopeSet, generate, generate_float, json_text

triangle = SlopeSet(["0", "pi/3", "2pi/3"])
print("slopes", triangle)
for level in generate(triangle, 4):
    print(f"  level {level.level}: {len(level)} points")
print("  the equilateral set closes into the hexagonal lattice Z + Z*e")

four = SlopeSet(["0", "pi/4", "pi/3", "2pi/3"])
print("\nslopes", four)
levels = generate(four, 2)
for level in levels:
    print(f"  level {level.level}: {len(level)} points")

# every point carries exact coordinates; the export keeps both the
# certified decimals and the coefficient vectors
doc = json_text(four, generate(four, 1))
print("\nJSON export of level 1 starts with:")
for line in doc.splitlines()[:8]:
    print("   ", line)

# the float preview plays the same game in numpy at line speed
preview = generate_float([a.radians for a in four.slopes], 2)
sizes = [len(points) for points, _ in preview]
print("\nfloat preview level sizes:", sizes)
print("exact level sizes:        ", [len(l) for l in levels])

# the cap keeps runaway levels bounded; truncation is flagged, points
# beyond the cap are dropped deterministically
capped = generate(four, 2, point_cap=30)
print("\nwith point_cap=30, level 2 holds", len(capped[2]),
      "points, truncated:", capped[2].truncated)
