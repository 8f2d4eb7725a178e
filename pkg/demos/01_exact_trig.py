#!/usr/bin/env python3
"""Exact trigonometric arithmetic.

Every value here is an element of a cyclotomic field stored as an
integer coefficient vector, so equality tests are exact, signs are
certified, and printed decimals are correct to the shown digits.
"""

from fractions import Fraction

from origami_rings import Angle, cos_of, minimal_polynomial, sin_of, sqrt_rational

half_pi = Angle(1, 2)
print("sin(pi/2) =", sin_of(half_pi).decimal(6), "(exactly 1:", sin_of(half_pi) == 1, ")")

s3 = sqrt_rational(3)
print("\nsqrt(3)   =", s3.decimal(20))
print("sqrt(3)^2 == 3:", s3 * s3 == 3)
print("2*sin(pi/3) == sqrt(3):", 2 * sin_of(Angle(1, 3)) == s3)

# recognized rationals collapse to plain fractions
a = cos_of(Angle(1, 3))
print("\ncos(pi/3) lives in conductor", a.conductor, "and equals", a.as_rational())

# the Pythagorean identity holds exactly for any exact angle
for ang in [Angle(1, 5), Angle(2, 7), Angle(5, 12)]:
    s, c = sin_of(ang), cos_of(ang)
    print(f"sin^2+cos^2 at {ang}: exact equality {s * s + c * c == 1}")

# minimal polynomials come from exact linear algebra over Q
x = sin_of(Angle(2, 15))
mu = minimal_polynomial(x)
print("\nsin(2pi/15) has degree", mu.degree)
print("  mu =", mu)
print("  mu(sin(2pi/15)) == 0:", mu(x).is_zero)

# signs of tiny differences are decided by certified intervals, not floats
tiny = sqrt_rational(2) * sqrt_rational(3) - sqrt_rational(6)
print("\nsqrt(2)*sqrt(3) - sqrt(6) is exactly zero:", tiny.is_zero)
pell = Fraction(665857, 470832)  # convergent of sqrt(2), off by ~1.6e-12
near = sqrt_rational(2) - pell
print("sqrt(2) - 665857/470832 has sign", near.sign(), "and value", near.decimal(16))
