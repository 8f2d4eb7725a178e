"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored lowest degree first and trailing zeros are
trimmed, so equal polynomials compare equal structurally.  Evaluation
is generic Horner: anything supporting + and * with the coefficients
works, which covers Fractions as well as cyclotomic reals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rational = Union[int, Fraction]


def _trim(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


@dataclass(frozen=True)
class RationalPolynomial:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Sequence[Rational] = ()):
        object.__setattr__(
            self,
            "coefficients",
            _trim(tuple(Fraction(c) for c in coefficients)),
        )

    @classmethod
    def monomial(cls, degree: int, coefficient: Rational = 1) -> "RationalPolynomial":
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return RationalPolynomial(merged)

    def __neg__(self):
        return RationalPolynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coefficients])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    if b:
                        out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation at x (rational or cyclotomic)."""
        if self.is_zero:
            return 0 * x
        acc = None
        for c in reversed(self.coefficients):
            acc = c if acc is None else acc * x + c
        return acc + 0 * x if isinstance(acc, Fraction) else acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exp in range(self.degree, -1, -1):
            c = self.coefficients[exp]
            if c == 0:
                continue
            if exp == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}X" if exp == 1 else f"{head}X^{exp}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)
