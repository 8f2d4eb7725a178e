#!/usr/bin/env python3
"""Three directions give a lattice, four make the plane fill up.

With exactly three slopes the difference set is {1, -1}, the real part
is Z, and the whole construction is the discrete lattice Z + Z*e.  A
fourth slope brings a new projection constant p, the reciprocals 1/p
and 1/(p-1) enter the real part, and the points become dense.
"""

from origami_rings import SlopeSet, classify, delta_set, generate

for spec in [
    ["0", "pi/3", "2pi/3"],
    ["0", "pi/4", "pi/2"],
    ["0", "pi/6", "2pi/5"],
]:
    u = SlopeSet(spec)
    c = classify(u)
    print(f"{str(u):24s} {c}")

print()
for spec in [
    ["0", "pi/5", "pi/4", "pi/3"],
    ["0", "pi/6", "pi/4", "pi/3", "pi/2"],
]:
    u = SlopeSet(spec)
    c = classify(u)
    deltas = ", ".join(v.decimal(4) for v in delta_set(u))
    print(f"{str(u):32s} {c}")
    print(f"  delta = {{{deltas}}}")

# the growth rates tell the same story
three = SlopeSet(["0", "pi/3", "2pi/3"])
four = SlopeSet(["0", "pi/4", "pi/3", "2pi/3"])
print("\ncumulative level sizes")
print("  three slopes:", [len(l) for l in generate(three, 4)])
print("  four slopes: ", [len(l) for l in generate(four, 3, point_cap=20000)])
