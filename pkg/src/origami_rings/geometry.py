"""Plane geometry over a distinguished pair of directions.

A Frame fixes two distinct nonzero directions alpha and beta.  Every
point of the plane then has coordinates (r, s): r is where the line of
direction alpha through the point meets the real axis, s the same for
beta.  Both coordinates are exact cyclotomic reals, and the point is
real exactly when r = s.

Projections along other directions, changes of frame and intersections
of direction lines are all rational expressions in the projection
constants p(gamma), so everything stays inside exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .angles import Angle, angle_difference
from .cyclotomic import CyclotomicReal, cos_of, sin_of

Scalar = Union[int, Fraction, CyclotomicReal]


class ZeroSlopeError(ValueError):
    """Raised when a projection or constant needs a nonzero direction."""


class DegenerateFrameError(ValueError):
    """Raised when the two frame directions coincide or one is zero."""


class ParallelLinesError(ValueError):
    """Raised when intersecting lines of equal direction."""


def signed_sin(a: Angle, b: Angle) -> CyclotomicReal:
    """Exact sin(a - b) for directions a, b in [0, pi)."""
    sgn, diff = angle_difference(a, b)
    if sgn == 0:
        return CyclotomicReal.from_rational(0)
    value = sin_of(diff)
    return value if sgn > 0 else -value


@dataclass(frozen=True)
class Frame:
    """An ordered pair of distinct nonzero directions (alpha, beta)."""

    alpha: Angle
    beta: Angle

    def __post_init__(self):
        if self.alpha.is_zero or self.beta.is_zero:
            raise DegenerateFrameError("frame directions must be nonzero")
        if self.alpha == self.beta:
            raise DegenerateFrameError("frame directions must be distinct")

    def p_value(self, gamma: Angle) -> CyclotomicReal:
        """The projection constant p(gamma) of this frame.

        p(alpha) = 0 and p(beta) = 1; in general
        p(gamma) = sin(alpha-gamma)*sin(beta) / (sin(alpha-beta)*sin(gamma)).
        """
        return _p_value(self, gamma)

    def unit_parts(self) -> tuple[CyclotomicReal, CyclotomicReal]:
        """Cartesian parts (Re, Im) of the point with coordinates (0, 1)."""
        return _unit_parts(self)

    def zero(self) -> "PlanePoint":
        return PlanePoint(0, 0, self)

    def one(self) -> "PlanePoint":
        return PlanePoint(1, 1, self)

    def unit(self) -> "PlanePoint":
        """The distinguished unit: coordinates (0, 1)."""
        return PlanePoint(0, 1, self)

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta})"


@lru_cache(maxsize=None)
def _p_value(frame: Frame, gamma: Angle) -> CyclotomicReal:
    if gamma.is_zero:
        raise ZeroSlopeError("p is undefined for the horizontal direction")
    if gamma == frame.alpha:
        return CyclotomicReal.from_rational(0)
    if gamma == frame.beta:
        return CyclotomicReal.from_rational(1)
    numerator = signed_sin(frame.alpha, gamma) * sin_of(frame.beta)
    denominator = signed_sin(frame.alpha, frame.beta) * sin_of(gamma)
    return numerator * denominator.inv()


@lru_cache(maxsize=None)
def _unit_parts(frame: Frame) -> tuple[CyclotomicReal, CyclotomicReal]:
    scale = sin_of(frame.beta) * signed_sin(frame.alpha, frame.beta).inv()
    return (-cos_of(frame.alpha) * scale, -sin_of(frame.alpha) * scale)


@lru_cache(maxsize=None)
def _inverse_p_gap(frame: Frame, gamma: Angle, delta: Angle) -> CyclotomicReal:
    return (_p_value(frame, gamma) - _p_value(frame, delta)).inv()


def _as_cyclotomic(value: Scalar) -> CyclotomicReal:
    if isinstance(value, CyclotomicReal):
        return value
    return CyclotomicReal.from_rational(value)


class PlanePoint:
    """A plane point written in the coordinates of a frame."""

    __slots__ = ("r", "s", "frame")

    def __init__(self, r: Scalar, s: Scalar, frame: Frame):
        self.r = _as_cyclotomic(r)
        self.s = _as_cyclotomic(s)
        self.frame = frame

    @property
    def is_real(self) -> bool:
        return self.r == self.s

    def as_real(self) -> CyclotomicReal:
        if not self.is_real:
            raise ValueError("point is not on the real axis")
        return self.r

    def to_cartesian(self) -> tuple[CyclotomicReal, CyclotomicReal]:
        """Exact Cartesian parts (Re, Im)."""
        unit_re, unit_im = self.frame.unit_parts()
        gap = self.s - self.r
        return (self.r + gap * unit_re, gap * unit_im)

    @classmethod
    def from_cartesian(
        cls, re: Scalar, im: Scalar, frame: Frame
    ) -> "PlanePoint":
        unit_re, unit_im = frame.unit_parts()
        gap = _as_cyclotomic(im) * unit_im.inv()
        r = _as_cyclotomic(re) - gap * unit_re
        return cls(r, r + gap, frame)

    def in_frame(self, frame: Frame) -> "PlanePoint":
        """The same plane point rewritten in another frame."""
        if frame == self.frame:
            return self
        return PlanePoint.from_cartesian(*self.to_cartesian(), frame)

    def __add__(self, other):
        if not isinstance(other, PlanePoint):
            return NotImplemented
        o = other.in_frame(self.frame)
        return PlanePoint(self.r + o.r, self.s + o.s, self.frame)

    def __sub__(self, other):
        if not isinstance(other, PlanePoint):
            return NotImplemented
        o = other.in_frame(self.frame)
        return PlanePoint(self.r - o.r, self.s - o.s, self.frame)

    def __neg__(self):
        return PlanePoint(-self.r, -self.s, self.frame)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction, CyclotomicReal)):
            c = _as_cyclotomic(scalar)
            return PlanePoint(self.r * c, self.s * c, self.frame)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PlanePoint):
            return NotImplemented
        if other.frame == self.frame:
            return self.r == other.r and self.s == other.s
        return self.to_cartesian() == other.to_cartesian()

    def __hash__(self):
        return hash(self.to_cartesian())

    def __str__(self) -> str:
        return f"[[{self.r}, {self.s}]]"

    def __repr__(self) -> str:
        return f"PlanePoint({self.r!r}, {self.s!r}, frame={self.frame})"


def project(point: PlanePoint, gamma: Angle) -> CyclotomicReal:
    """Projection of the point onto the real axis along direction gamma.

    For gamma in the frame this recovers the coordinates themselves:
    the alpha-projection is r, the beta-projection is s.
    """
    if gamma.is_zero:
        raise ZeroSlopeError("projection along the horizontal direction")
    return point.r + (point.s - point.r) * point.frame.p_value(gamma)


def from_coords(r: Scalar, s: Scalar, alpha: Angle, beta: Angle) -> PlanePoint:
    """The point with coordinates (r, s) in the frame (alpha, beta)."""
    return PlanePoint(r, s, Frame(alpha, beta))


def to_frame(point: PlanePoint, gamma: Angle, delta: Angle) -> PlanePoint:
    """Rewrite the point in the frame (gamma, delta).

    The new coordinates are the gamma- and delta-projections of the
    point, so both directions must be nonzero and distinct.
    """
    target = Frame(gamma, delta)
    if target == point.frame:
        return point
    return PlanePoint(project(point, gamma), project(point, delta), target)


def from_frame(
    r: Scalar, s: Scalar, gamma: Angle, delta: Angle, frame: Frame
) -> PlanePoint:
    """The point whose (gamma, delta)-coordinates are (r, s), in frame.

    Inverts to_frame: with P = p(gamma), Q = p(delta) taken in the
    target frame, the coordinates come back through the exact inverse
    of the projection formulas.
    """
    Frame(gamma, delta)  # validates the pair
    r = _as_cyclotomic(r)
    s = _as_cyclotomic(s)
    if (gamma, delta) == (frame.alpha, frame.beta):
        return PlanePoint(r, s, frame)
    P = frame.p_value(gamma)
    Q = frame.p_value(delta)
    gap_inv = _inverse_p_gap(frame, gamma, delta)
    new_r = (s * P - r * Q) * gap_inv
    new_s = new_r + (r - s) * gap_inv
    return PlanePoint(new_r, new_s, frame)


class Line:
    """The line through a point in a direction from [0, pi)."""

    __slots__ = ("through", "slope")

    def __init__(self, through: PlanePoint, slope: Angle):
        self.through = through
        self.slope = slope

    def invariant(self) -> CyclotomicReal:
        """The value shared by all points of the line.

        For a nonzero direction this is the projection of any point of
        the line along that direction; horizontal lines use s - r
        (proportional to the height) instead.
        """
        if self.slope.is_zero:
            return self.through.s - self.through.r
        return project(self.through, self.slope)

    def contains(self, point: PlanePoint) -> bool:
        other = Line(point.in_frame(self.through.frame), self.slope)
        return self.invariant() == other.invariant()

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return self.slope == other.slope and self.invariant() == other.invariant()

    def __hash__(self):
        return hash((self.slope, self.invariant()))

    def __repr__(self):
        return f"Line(through={self.through!r}, slope={self.slope})"


def intersect(first: Line, second: Line) -> PlanePoint:
    """The unique common point of two lines of distinct directions.

    The result is written in the frame of the first line's base point;
    equal directions raise ParallelLinesError (coincident lines do not
    have a unique intersection either).
    """
    if first.slope == second.slope:
        raise ParallelLinesError(
            f"lines of equal direction {first.slope} do not meet in one point"
        )
    frame = first.through.frame
    gamma, delta = first.slope, second.slope
    v1 = first.invariant()
    v2 = Line(second.through.in_frame(frame), second.slope).invariant()
    if gamma.is_zero:
        r = v2 - v1 * frame.p_value(delta)
        return PlanePoint(r, r + v1, frame)
    if delta.is_zero:
        r = v1 - v2 * frame.p_value(gamma)
        return PlanePoint(r, r + v2, frame)
    gap = (v1 - v2) * _inverse_p_gap(frame, gamma, delta)
    r = v1 - gap * frame.p_value(gamma)
    return PlanePoint(r, r + gap, frame)
