"""Exact scalar arithmetic: rationals, Gaussian rationals, dyadic helpers.

Rationals are stdlib ``fractions.Fraction`` (already normalized: positive
denominator, gcd(|num|, den) = 1).  ``GaussianRational`` adds the field QQ(i).
"""

from __future__ import annotations

from fractions import Fraction


QQ = Fraction


def rat(x, y=None) -> Fraction:
    """Coerce to Fraction; rat(a, b) = a/b."""
    if y is None:
        return Fraction(x)
    return Fraction(x, y)


def is_dyadic(x: Fraction) -> bool:
    d = x.denominator
    return d & (d - 1) == 0


def dyadic_floor(x: Fraction, exp: int) -> Fraction:
    """Largest multiple of 2^exp that is <= x."""
    scale = Fraction(2) ** exp
    return Fraction((x / scale).__floor__()) * scale


def dyadic_ceil(x: Fraction, exp: int) -> Fraction:
    scale = Fraction(2) ** exp
    return Fraction(-((-x / scale).__floor__())) * scale


def simplest_in_interval(lo, hi) -> Fraction:
    """Rational with smallest denominator in the closed interval [lo, hi]."""
    from math import ceil, floor

    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_in_interval(-hi, -lo)
    # 0 < lo <= hi
    c = Fraction(ceil(lo))
    if c <= hi:
        return c
    n = floor(lo)
    return n + 1 / simplest_in_interval(1 / (hi - n), 1 / (lo - n))


class GaussianRational:
    """Element of QQ(i), stored as re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(Fraction(x))

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in QQ(i)")
        return self * GaussianRational(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        return f"({self.re}+{self.im}*i)"


I = GaussianRational(0, 1)


def conj_scalar(c):
    """Complex conjugation on QQ or QQ(i) scalars."""
    if isinstance(c, GaussianRational):
        return c.conj()
    return c
