#!/usr/bin/env python3
"""Frames, projections and two-coordinate geometry.

A frame is an ordered pair of distinct nonzero directions (alpha,
beta).  The alpha-projection of a point is where the line of slope
alpha through it crosses the real axis; the pair of projections
(r, s) determines the point, written here as PlanePoint(r, s, frame).
"""

from fractions import Fraction

from origami_rings import Angle, Frame, PlanePoint
from origami_rings.geometry import from_coords, project, to_frame

frame = Frame(Angle(2, 3), Angle(1, 3))  # alpha = 2pi/3, beta = pi/3
print("frame:", frame)

# p(gamma) is the gamma-projection of the unit point (0, 1)
for gamma in [Angle(1, 3), Angle(2, 3), Angle(1, 2), Angle(1, 4)]:
    print(f"  p({gamma}) = {frame.p_value(gamma).decimal(6)}")

e = frame.unit()
re, im = e.to_cartesian()
print("\nunit point e = (0, 1) sits at", re.decimal(6), "+", im.decimal(6), "i")

# projections recover coordinates, and they do so linearly
z = PlanePoint(Fraction(3, 2), Fraction(-1, 2), frame)
print("\nz =", z)
print("  alpha-projection:", project(z, frame.alpha).decimal(6))
print("  beta-projection: ", project(z, frame.beta).decimal(6))
w = PlanePoint(2, 5, frame)
gamma = Angle(1, 4)
lhs = project(z + w, gamma)
rhs = project(z, gamma) + project(w, gamma)
print("  projection along pi/4 is additive:", lhs == rhs)

# the same plane point in a different frame: coordinates change,
# the point does not
other = to_frame(z, Angle(1, 4), Angle(1, 2))
print("\nsame point in frame (pi/4, pi/2):", other)
print("  equal as plane points:", other == z)

# real points are exactly those with r == s
on_axis = from_coords(Fraction(7, 3), Fraction(7, 3), frame.alpha, frame.beta)
print("\n(7/3, 7/3) is real:", on_axis.is_real, "=", on_axis.as_real())
