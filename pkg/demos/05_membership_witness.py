#!/usr/bin/env python3
"""Certified membership in the real part of the point set.

For the slope set {0, pi/5, pi/4, pi/3} the real points form
Z[p, 1/p, 1/(p-1)] where p is the projection constant of pi/5.  A
membership claim is settled by searching denominator monomials
p^a (p-1)^b and asking an integer lattice whether the cleared value is
a Z-combination of power products; a hit yields a printable fraction
that re-evaluates to the element exactly.
"""

from origami_rings import (
    SlopeSet,
    delta_set,
    membership_in_MR,
    p_value,
    parse_expression,
    sqrt_rational,
)
from origami_rings.angles import Angle

u = SlopeSet(["0", "pi/5", "pi/4", "pi/3"])
p = p_value(u, Angle(1, 5))
print("free projection constant p =", p.decimal(12))
print("difference set:", ", ".join(v.decimal(6) for v in delta_set(u)))

verdict = membership_in_MR(sqrt_rational(3), u)
print("\nsqrt(3):", verdict.kind.value)
w = verdict.witness
print("  denominator exponents:", w.denominator_exponents)
print("  witness:\n   ", w)
print("  re-evaluates to sqrt(3):", w.evaluate() == sqrt_rational(3))

# the parser accepts the same expressions as the command line
for text in ["2", "1/2", "sqrt(7)", "4 + 2*sqrt(3)"]:
    v = membership_in_MR(parse_expression(text), u)
    print(f"\n{text}: {v.kind.value}")
    if v.reason:
        print("  ", v.reason)
