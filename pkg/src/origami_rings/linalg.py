"""Exact linear algebra over Q and over Z.

Two small engines drive everything here:

* RowSpace keeps a rational echelon basis with transformation tracking,
  so a dependent vector comes back with its coordinates over the
  generators that were added.  It powers minimal polynomials (first
  linear relation among powers) and rational span tests.

* IntegerLattice keeps a Z-basis in row echelon form using gcd pivots,
  again with tracking, deciding membership of integer vectors in the
  Z-span of the generators and returning the integer combination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence


class RowSpace:
    """Echelon basis of a growing subspace of Q^n with coordinates."""

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: list[tuple[list[Fraction], list[Fraction]]] = []
        self._count = 0  # generators offered so far

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
        combo = [Fraction(0)] * self._count
        for row, row_combo in self._rows:
            pivot = next(i for i, c in enumerate(row) if c)
            c = vec[pivot]
            if c:
                factor = c / row[pivot]
                for i in range(pivot, self.dimension):
                    vec[i] -= factor * row[i]
                for i, rc in enumerate(row_combo):
                    combo[i] -= factor * rc
        return vec, combo

    def add(self, vector: Sequence[Fraction]) -> Optional[list[Fraction]]:
        """Offer a generator.  Returns None if it enlarged the space,
        else its coordinates over the previously offered generators."""
        vec = [Fraction(v) for v in vector]
        if len(vec) != self.dimension:
            raise ValueError("vector has wrong dimension")
        vec, combo = self._reduce(vec)
        self._count += 1
        if any(vec):
            # the reduced row equals generator + sum combo[i]*generator_i
            own = list(combo) + [Fraction(1)]
            self._pad()
            self._rows.append((vec, own))
            self._rows.sort(key=lambda r: next(i for i, c in enumerate(r[0]) if c))
            return None
        return [-c for c in combo]

    def _pad(self):
        for _, combo in self._rows:
            combo.extend([Fraction(0)] * (self._count - len(combo)))

    def coordinates(self, vector: Sequence[Fraction]) -> Optional[list[Fraction]]:
        """Coordinates of vector over the offered generators, or None."""
        vec = [Fraction(v) for v in vector]
        if len(vec) != self.dimension:
            raise ValueError("vector has wrong dimension")
        self._pad()
        vec, combo = self._reduce(vec)
        if any(vec):
            return None
        return [-c for c in combo]


class IntegerLattice:
    """Row echelon Z-basis with gcd pivots and combination tracking.

    Rows are indexed by pivot column; an incoming vector is swept left
    to right, so every gcd combination only ever touches columns at or
    after the current one and the echelon shape is preserved.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._pivots: dict[int, tuple[list[int], list[int]]] = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _pad(self):
        for _, combo in self._pivots.values():
            combo.extend([0] * (self._count - len(combo)))

    def add(self, vector: Sequence[int]) -> None:
        """Adjoin a generator to the lattice."""
        vec = [int(v) for v in vector]
        if len(vec) != self.dimension:
            raise ValueError("vector has wrong dimension")
        self._count += 1
        self._pad()
        combo = [0] * self._count
        combo[-1] = 1
        for col in range(self.dimension):
            if vec[col] == 0:
                continue
            hit = self._pivots.get(col)
            if hit is None:
                self._pivots[col] = (vec, combo)
                return
            row, row_combo = hit
            a, b = row[col], vec[col]
            if b % a == 0:
                q = b // a
                for i in range(col, self.dimension):
                    vec[i] -= q * row[i]
                for i in range(self._count):
                    combo[i] -= q * row_combo[i]
            else:
                g, x, y = _xgcd(a, b)
                qa, qb = a // g, b // g
                new_row = [x * row[i] + y * vec[i] for i in range(self.dimension)]
                new_combo = [
                    x * row_combo[i] + y * combo[i] for i in range(self._count)
                ]
                vec = [qa * vec[i] - qb * row[i] for i in range(self.dimension)]
                combo = [
                    qa * combo[i] - qb * row_combo[i] for i in range(self._count)
                ]
                self._pivots[col] = (new_row, new_combo)

    def membership(self, vector: Sequence[int]) -> Optional[list[int]]:
        """Integer coordinates of vector over the added generators, or None."""
        vec = [int(v) for v in vector]
        if len(vec) != self.dimension:
            raise ValueError("vector has wrong dimension")
        self._pad()
        combo = [0] * self._count
        for col in range(self.dimension):
            if vec[col] == 0:
                continue
            hit = self._pivots.get(col)
            if hit is None or vec[col] % hit[0][col]:
                return None
            row, row_combo = hit
            q = vec[col] // row[col]
            for i in range(col, self.dimension):
                vec[i] -= q * row[i]
            for i in range(self._count):
                combo[i] += q * row_combo[i]
        return combo


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, x, y with x*a + y*b = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def lattice_member(
    vector: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]
) -> tuple[bool, Optional[list[int]]]:
    """Decide membership of vector in the Z-span of the generators.

    All inputs are rational vectors of equal length; denominators are
    cleared by a common multiplier first, which does not change the
    Z-span relation.  Returns (flag, coefficients) where coefficients
    give vector = sum coefficients[i] * generators[i] when flag is True.
    """
    vecs = [[Fraction(c) for c in g] for g in generators]
    target = [Fraction(c) for c in vector]
    dim = len(target)
    if any(len(g) != dim for g in vecs):
        raise ValueError("generator dimensions do not match the vector")
    denominator = 1
    for g in vecs + [target]:
        for c in g:
            denominator = lcm(denominator, c.denominator)
    lattice = IntegerLattice(dim)
    for g in vecs:
        lattice.add([int(c * denominator) for c in g])
    coeffs = lattice.membership([int(c * denominator) for c in target])
    if coeffs is None:
        return False, None
    return True, coeffs


def gcd_many(values: Sequence[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
