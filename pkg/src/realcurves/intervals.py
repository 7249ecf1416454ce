"""Interval arithmetic with exact rational endpoints.

Endpoints are exact Fractions, so every operation is outward-exact: the
result interval contains the exact image set, with no rounding at all.
``outward_round`` optionally coarsens endpoints to dyadics to bound bit
growth during long refinement loops.

Precision policy for refinement loops lives here: widths start at 2^-32,
halve on demand and are capped at 2^-256, after which PrecisionExhausted
is raised.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import dyadic_ceil, dyadic_floor

START_WIDTH_EXP = -32
MIN_WIDTH_EXP = -256


class PrecisionExhausted(Exception):
    """Raised when a certified computation would need width below 2^-256."""


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def sign(self):
        """1, -1, or None when the interval straddles (or touches) zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 == self.hi:
            return 0
        return None

    def __add__(self, other):
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(cands), max(cands))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.contains_zero():
            raise ZeroDivisionError("interval divisor contains zero")
        cands = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return Interval(min(cands), max(cands))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n: int):
        if n == 0:
            return Interval(1)
        out = self
        for _ in range(n - 1):
            out = out * self
        if n % 2 == 0 and self.contains_zero():
            return Interval(0, out.hi)
        return out

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def outward_round(self, exp: int) -> "Interval":
        """Coarsen endpoints outward to the dyadic grid 2^exp."""
        return Interval(dyadic_floor(self.lo, exp), dyadic_ceil(self.hi, exp))

    def sqrt(self, exp: int = MIN_WIDTH_EXP) -> "Interval":
        """Enclosure of the square root of a nonnegative interval."""
        if self.lo < 0:
            raise ValueError("sqrt of interval with negative part")
        return Interval(_sqrt_lower(self.lo, exp), _sqrt_upper(self.hi, exp))


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(Fraction(x))


def _sqrt_lower(x: Fraction, exp: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    # integer sqrt of scaled numerator gives a certified lower bound
    scale = 2 ** (-2 * exp)
    n = (x.numerator * scale) // x.denominator
    r = _isqrt(n)
    return Fraction(r, 2 ** (-exp))


def _sqrt_upper(x: Fraction, exp: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    scale = 2 ** (-2 * exp)
    n = -((-x.numerator * scale) // x.denominator)  # ceil
    r = _isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, 2 ** (-exp))


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)


class ComplexBox:
    """Axis-aligned rectangle in the complex plane with exact endpoints."""

    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval):
        self.re = re
        self.im = im

    def __repr__(self):
        return f"ComplexBox({self.re!r}, {self.im!r})"

    def conj(self) -> "ComplexBox":
        return ComplexBox(self.re, -self.im)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def is_real_line(self) -> bool:
        return self.im.lo == 0 == self.im.hi

    def overlaps(self, other: "ComplexBox") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def __add__(self, other):
        other = _coerce_box(other)
        return ComplexBox(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_coerce_box(other))

    def __rsub__(self, other):
        return _coerce_box(other) + (-self)

    def __mul__(self, other):
        other = _coerce_box(other)
        return ComplexBox(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_box(other)
        n = other.re * other.re + other.im * other.im
        if n.contains_zero():
            raise ZeroDivisionError("complex box divisor encloses zero")
        return self * ComplexBox(other.re / n, -other.im / n)

    def __pow__(self, n: int):
        out = ComplexBox(Interval(1), Interval(0))
        for _ in range(n):
            out = out * self
        return out


def _coerce_box(x) -> ComplexBox:
    if isinstance(x, ComplexBox):
        return x
    if isinstance(x, Interval):
        return ComplexBox(x, Interval(0))
    from .rationals import GaussianRational

    if isinstance(x, GaussianRational):
        return ComplexBox(Interval(x.re), Interval(x.im))
    return ComplexBox(Interval(Fraction(x)), Interval(0))
