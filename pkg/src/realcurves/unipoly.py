"""Dense univariate polynomials over an exact field.

Coefficients may be Fraction, GaussianRational, or residue-tower elements
(anything with field operators and truthiness for zero tests).  The zero
polynomial has an empty coefficient list; otherwise the leading coefficient
is nonzero and ``degree == len(coeffs) - 1``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .intervals import Interval
from .rationals import GaussianRational, conj_scalar


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([c])

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly([])

    @staticmethod
    def x(field=Fraction) -> "UniPoly":
        return UniPoly([field(0), field(1)])

    @staticmethod
    def from_roots(roots) -> "UniPoly":
        p = UniPoly([Fraction(1)])
        for r in roots:
            p = p * UniPoly([-Fraction(r), Fraction(1)])
        return p

    # -- basic structure --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero poly has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else 0
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(a + b)
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        out = UniPoly([self._one()])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _one(self):
        for c in self.coeffs:
            if c:
                return c / c
        return Fraction(1)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __divmod__(self, other):
        return _longdiv(self, other)

    def __floordiv__(self, other):
        return _longdiv(self, other)[0]

    def __mod__(self, other):
        return _longdiv(self, other)[1]

    def divide_exact(self, other: "UniPoly") -> "UniPoly":
        q, r = _longdiv(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly([self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def eval(self, x):
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * x + c
        if out is None:
            return x - x  # zero of the right type
        return out

    def eval_interval(self, box: Interval) -> Interval:
        out = Interval(0)
        for c in reversed(self.coeffs):
            out = out * box + Interval(Fraction(c))
        return out

    def shift(self, a) -> "UniPoly":
        """p(x + a)."""
        out = UniPoly([])
        xa = UniPoly([a, self._one()])
        for c in reversed(self.coeffs):
            out = out * xa + UniPoly([c])
        return out

    def scale_arg(self, s) -> "UniPoly":
        """p(s*x)."""
        out = []
        acc = self._one()
        for i, c in enumerate(self.coeffs):
            out.append(c * acc)
            acc = acc * s
        return UniPoly(out)

    def reverse(self) -> "UniPoly":
        """x^deg * p(1/x)."""
        return UniPoly(list(reversed(self.coeffs)))

    def compose(self, inner: "UniPoly") -> "UniPoly":
        out = UniPoly([])
        for c in reversed(self.coeffs):
            out = out * inner + UniPoly([c])
        return out

    def conj(self) -> "UniPoly":
        return UniPoly([conj_scalar(c) for c in self.coeffs])

    # -- QQ-specific helpers -------------------------------------------------

    def content_primitive(self):
        """(content, primitive integer part) for QQ coefficients.

        The primitive part has coprime integer coefficients and positive
        leading coefficient.
        """
        if self.is_zero():
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        if ints[-1] < 0:
            g = -g
        content = Fraction(g, den)
        prim = UniPoly([Fraction(v // g) for v in ints])
        return content, prim

    def primitive(self) -> "UniPoly":
        return self.content_primitive()[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.lc()
        return UniPoly([c / lc for c in self.coeffs])

    def squarefree_part(self) -> "UniPoly":
        if self.degree <= 0:
            return self.monic()
        g = poly_gcd(self, self.derivative())
        if g.degree == 0:
            return self.monic()
        return self.divide_exact(g).monic()


def _longdiv(a: UniPoly, b: UniPoly):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    d = b.degree
    lcb = b.lc()
    if len(rem) - 1 < d:
        return UniPoly([]), a
    qlen = len(rem) - d
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        top = rem[k + d]
        if not top:
            continue
        c = top / lcb
        q[k] = c
        for i in range(d + 1):
            rem[k + i] = rem[k + i] - c * b.coeffs[i]
    return UniPoly(q), UniPoly(rem[:d])


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_xgcd(f: UniPoly, g: UniPoly):
    """(d, s, t) with s*f + t*g = d, d monic (or zero)."""
    one = f._one() if f else (g._one() if g else Fraction(1))
    r0, r1 = f, g
    s0, s1 = UniPoly([one]), UniPoly([])
    t0, t1 = UniPoly([]), UniPoly([one])
    while not r1.is_zero():
        q, r = _longdiv(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc()
    inv = (lc / lc) / lc
    return r0 * inv, s0 * inv, t0 * inv


def resultant_uni(f: UniPoly, g: UniPoly):
    """Resultant of two univariate polynomials over a field (Euclid-based)."""
    one = Fraction(1)
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    a, b = f, g
    res = one
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return Fraction(0) * one
        res = res * b.lc() ** (a.degree - r.degree) * (-one) ** (a.degree * b.degree)
        a, b = b, r
    # b is a nonzero constant
    return res * b.lc() ** a.degree


def sturm_chain(f: UniPoly):
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_at(p: UniPoly, x) -> int:
    if p.is_zero():
        return 0
    v = p.eval(Fraction(x))
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _sign_at_inf(p: UniPoly, positive: bool) -> int:
    if p.is_zero():
        return 0
    lc = p.lc()
    s = 1 if lc > 0 else -1
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


class EndpointRoot(Exception):
    """A Sturm endpoint is a root of the queried polynomial."""


def sturm_count(f: UniPoly, a=None, b=None) -> int:
    """Number of distinct real roots of f in the open interval (a, b).

    ``None`` endpoints mean -oo / +oo respectively.  Raises EndpointRoot if
    f vanishes at a finite endpoint.
    """
    if f.is_zero():
        raise ValueError("sturm_count of zero polynomial")
    f = f.squarefree_part()
    if f.degree == 0:
        return 0
    if a is not None and b is not None and not Fraction(a) < Fraction(b):
        raise ValueError("need a < b")
    if a is not None and _sign_at(f, a) == 0:
        raise EndpointRoot("f vanishes at left endpoint")
    if b is not None and _sign_at(f, b) == 0:
        raise EndpointRoot("f vanishes at right endpoint")
    chain = sturm_chain(f)
    sa = [_sign_at(p, a) if a is not None else _sign_at_inf(p, False) for p in chain]
    sb = [_sign_at(p, b) if b is not None else _sign_at_inf(p, True) for p in chain]
    return _variations(sa) - _variations(sb)


def cauchy_root_bound(f: UniPoly) -> Fraction:
    """B with all real roots of f in (-B, B)."""
    lc = abs(Fraction(f.lc()))
    m = max((abs(Fraction(c)) for c in f.coeffs[:-1]), default=Fraction(0))
    return m / lc + 1


def _descartes_signs(p: UniPoly) -> int:
    signs = []
    for c in p.coeffs:
        if c > 0:
            signs.append(1)
        elif c < 0:
            signs.append(-1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _descartes_01(p: UniPoly) -> int:
    """Descartes bound for the number of roots of p in (0, 1)."""
    # substitute x -> 1/(1+x): count variations of (1+x)^n p(1/(1+x))
    n = p.degree
    q = UniPoly([])
    xp1 = UniPoly([Fraction(1), Fraction(1)])
    acc = UniPoly([Fraction(1)])
    # (1+x)^n * p(1/(1+x)) = sum c_i (1+x)^(n-i)
    pows = [None] * (n + 1)
    pows[0] = UniPoly([Fraction(1)])
    for i in range(1, n + 1):
        pows[i] = pows[i - 1] * xp1
    for i, c in enumerate(p.coeffs):
        if c:
            q = q + pows[n - i] * c
    return _descartes_signs(q)


def isolate_real_roots_qq(f: UniPoly):
    """Isolating intervals for the distinct real roots of f over QQ.

    Returns a sorted list of Interval objects, pairwise disjoint, each
    containing exactly one real root of the squarefree part.  Rational roots
    get point intervals.  Cross-validated against the Sturm count.
    """
    if f.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    p = f.primitive().squarefree_part().primitive()
    if p.degree <= 0:
        return []
    out = []
    b = Fraction(1)
    while b < cauchy_root_bound(p):
        b *= 2  # dyadic endpoints keep bisection arithmetic cheap
    stack = [(-b, b)]
    # exact roots found at explored midpoints
    while stack:
        lo, hi = stack.pop()
        q = _transform_to_01(p, lo, hi)
        v = _descartes_01(q)
        if v == 0:
            continue
        mid = (lo + hi) / 2
        if v == 1:
            # check whether an endpoint/midpoint is the root itself
            if p.eval(mid) == 0:
                out.append(Interval(mid, mid))
                continue
            if p.eval(lo) != 0 and p.eval(hi) != 0 and sturm_count(p, lo, hi) == 1:
                out.append(Interval(lo, hi))
                continue
        if p.eval(mid) == 0:
            out.append(Interval(mid, mid))
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    # shrink until the closed boxes are pairwise disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i].hi >= out[i + 1].lo:
                out[i] = _shrink_half(p, out[i])
                out[i + 1] = _shrink_half(p, out[i + 1])
                changed = True
    total = sturm_count(p, None, None)
    if total != len(out):
        raise AssertionError(
            f"isolation disagrees with Sturm count: {len(out)} vs {total}"
        )
    return out


def _shrink_half(p: UniPoly, iv: Interval) -> Interval:
    if iv.is_point():
        return iv
    return refine_root_interval(p, iv, iv.width / 2)


def _transform_to_01(p: UniPoly, lo: Fraction, hi: Fraction) -> UniPoly:
    """q with roots of p in (lo, hi) mapped to roots of q in (0, 1)."""
    w = hi - lo
    return p.shift(Fraction(lo)).scale_arg(Fraction(w))


def refine_root_interval(p: UniPoly, iv: Interval, width: Fraction) -> Interval:
    """Bisect an isolating interval of squarefree p down to the given width."""
    if iv.is_point():
        return iv
    lo, hi = iv.lo, iv.hi
    slo = _sign_at(p, lo)
    shi = _sign_at(p, hi)
    if slo == 0 or shi == 0:
        raise ValueError("isolating interval must have nonvanishing endpoints")
    if slo == shi:
        # single root without sign change cannot happen for squarefree p
        raise ValueError("endpoints have equal signs; not an isolating interval")
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = _sign_at(p, mid)
        if sm == 0:
            return Interval(mid, mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)
