"""Real and complex algebraic numbers, residue towers, sign determination.

An AlgebraicNumber is (squarefree primitive polynomial over QQ, isolating
interval); refinement bisects the interval and never changes which root is
designated.  Equality is exact: gcd of the defining polynomials plus box
overlap after refinement, never numeric closeness.

A Tower is QQ extended by a chain of generators, each a root of a squarefree
polynomial over the level below.  When a designated real root is attached,
the tower behaves as an honest ordered field: moduli are lazily refined to
the factor vanishing at the designated root whenever a zero divisor shows
up, so signs and zero tests are always exact.  Without a designated root the
tower models a whole Galois orbit at once; a zero divisor then signals a
genuine orbit split and is raised as OrbitSplit for the caller to branch on.
"""

from __future__ import annotations

from fractions import Fraction

from .intervals import (
    MIN_WIDTH_EXP,
    START_WIDTH_EXP,
    ComplexBox,
    Interval,
    PrecisionExhausted,
)
from .multipoly import MultiPoly
from .unipoly import (
    UniPoly,
    isolate_real_roots_qq,
    poly_gcd,
    poly_xgcd,
    refine_root_interval,
    sturm_count,
)

MAX_TOWER_DEGREE = 16


class ExtensionTooDeep(Exception):
    """Residue tower total degree exceeded the guardrail."""


class OrbitSplit(Exception):
    """A non-designated tower modulus factored; carries both factors."""

    def __init__(self, tower, factor_a: UniPoly, factor_b: UniPoly):
        super().__init__("orbit modulus split")
        self.tower = tower
        self.factor_a = factor_a
        self.factor_b = factor_b


# ---------------------------------------------------------------------------
# real algebraic numbers over QQ
# ---------------------------------------------------------------------------


class AlgebraicNumber:
    """A designated real root of a squarefree primitive polynomial over QQ."""

    __slots__ = ("poly", "box")

    def __init__(self, poly: UniPoly, box: Interval):
        self.poly = poly
        self.box = box

    @staticmethod
    def from_rational(r) -> "AlgebraicNumber":
        r = Fraction(r)
        return AlgebraicNumber(UniPoly([-r, Fraction(1)]).primitive(), Interval(r, r))

    @staticmethod
    def roots_of(f: UniPoly) -> list["AlgebraicNumber"]:
        """All real roots, ascending; minimal-degree defining polys where a
        rational root splits off."""
        p = f.primitive().squarefree_part().primitive()
        rats = rational_roots(p)
        for r in rats:
            p = p.divide_exact(UniPoly([-r, Fraction(1)])).primitive()
        out = [AlgebraicNumber.from_rational(r) for r in rats]
        if p.degree > 0:
            for iv in isolate_real_roots_qq(p):
                if iv.is_point():
                    out.append(AlgebraicNumber.from_rational(iv.lo))
                else:
                    out.append(AlgebraicNumber(p, iv))
        out.sort(key=_root_sort_key)
        return out

    def is_rational(self) -> bool:
        return self.box.is_point()

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.box.lo

    def refine(self, width) -> "AlgebraicNumber":
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        if width < Fraction(2) ** MIN_WIDTH_EXP:
            raise PrecisionExhausted("requested width below 2^-256")
        if self.box.width <= width:
            return self
        return AlgebraicNumber(self.poly, refine_root_interval(self.poly, self.box, width))

    def sign(self) -> int:
        a = self
        while True:
            s = a.box.sign()
            if s is not None:
                return s
            # box straddles 0: 0 is the designated root iff it is a root at all
            if a.poly.eval(Fraction(0)) == 0:
                return 0
            a = a.refine(a.box.width / 2)

    def __eq__(self, other):
        if isinstance(other, AlgebraicNumber):
            return algebraic_equal(self, other)
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return self.poly.eval(r) == 0 and self.box.contains(r)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.box.lo)
        return hash("algebraic")  # equal values may have different defining polys

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.from_rational(other)
        return algebraic_compare(self, other) < 0

    def __le__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.from_rational(other)
        return algebraic_compare(self, other) <= 0

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __repr__(self):
        return f"AlgebraicNumber({list(self.poly.coeffs)}, [{self.box.lo}, {self.box.hi}])"

    def approx(self) -> float:
        a = self.refine(Fraction(1, 2**53)) if self.box.width > Fraction(1, 2**53) else self
        return float(a.box.mid)


def _root_sort_key(a: "AlgebraicNumber"):
    b = a
    # refine enough that boxes of distinct roots order correctly in practice
    if not b.box.is_point() and b.box.width > Fraction(1, 2**24):
        b = b.refine(Fraction(1, 2**24))
    return (b.box.lo, b.box.hi)


_RATROOT_LIMIT = 10**12


def rational_roots(p: UniPoly) -> list[Fraction]:
    """Rational roots of a primitive integer polynomial, ascending.

    Skips the divisor enumeration when the outer coefficients are huge; in
    that case rational roots simply stay represented by isolating boxes.
    """
    if p.degree <= 0:
        return []
    c0 = None
    k = 0
    for i, c in enumerate(p.coeffs):
        if c:
            c0 = int(c)
            k = i
            break
    lc = int(p.lc())
    out = set()
    if k > 0:
        out.add(Fraction(0))
    if abs(c0) > _RATROOT_LIMIT or abs(lc) > _RATROOT_LIMIT:
        # try only small candidates
        cands = [Fraction(n, d) for n in range(-12, 13) for d in range(1, 7)]
        for r in cands:
            if p.eval(r) == 0:
                out.add(r)
        return sorted(out)
    for n in _divisors(abs(c0)):
        for d in _divisors(abs(lc)):
            for r in (Fraction(n, d), Fraction(-n, d)):
                if p.eval(r) == 0:
                    out.add(r)
    return sorted(out)


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            out.append(n // i)
        i += 1
    return sorted(set(out))


def _compare_root_to_rational(poly: UniPoly, box: Interval, r: Fraction) -> int:
    """Position of the designated root of (poly, box) relative to r."""
    if poly.eval(r) == 0 and box.contains(r):
        return 0
    iv = box
    while iv.contains(r):
        iv = refine_root_interval(poly, iv, iv.width / 2)
        if iv.is_point():
            return -1 if iv.lo < r else (1 if iv.lo > r else 0)
    return -1 if iv.hi < r else 1


def _root_in_closed_box(poly: UniPoly, rootbox: Interval, target: Interval) -> bool:
    """Whether the designated root of (poly, rootbox) lies in target (closed)."""
    return (
        _compare_root_to_rational(poly, rootbox, target.lo) >= 0
        and _compare_root_to_rational(poly, rootbox, target.hi) <= 0
    )


def algebraic_equal(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    if not a.box.overlaps(b.box):
        return False
    g = poly_gcd(a.poly, b.poly)
    if g.degree <= 0:
        return False
    gp = g.primitive()
    for iv in isolate_real_roots_qq(gp):
        # each common root: is it the designated root of both a and b?
        if _root_in_closed_box(gp, iv, a.box) and _root_in_closed_box(gp, iv, b.box):
            return True
    return False


def algebraic_compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    if a.is_rational() and b.is_rational():
        x, y = a.rational_value(), b.rational_value()
        return (x > y) - (x < y)
    if b.is_rational():
        return _compare_root_to_rational(a.poly, a.box, b.rational_value())
    if a.is_rational():
        return -_compare_root_to_rational(b.poly, b.box, a.rational_value())
    if algebraic_equal(a, b):
        return 0
    wa, wb = a, b
    floor = Fraction(2) ** MIN_WIDTH_EXP
    while wa.box.overlaps(wb.box):
        w = min(wa.box.width, wb.box.width) / 2
        if w < floor:
            raise PrecisionExhausted("comparison undecided at precision cap")
        wa = wa.refine(w)
        wb = wb.refine(w)
    return -1 if wa.box.hi < wb.box.lo else 1


class ComplexAlgebraic:
    """A designated non-real root, as a certified rectangle + defining poly."""

    __slots__ = ("poly", "box")

    def __init__(self, poly: UniPoly, box: ComplexBox):
        self.poly = poly
        self.box = box

    def conj(self) -> "ComplexAlgebraic":
        return ComplexAlgebraic(self.poly, self.box.conj())

    def __repr__(self):
        return (
            f"ComplexAlgebraic({list(self.poly.coeffs)}, "
            f"re=[{self.box.re.lo},{self.box.re.hi}], im=[{self.box.im.lo},{self.box.im.hi}])"
        )


# ---------------------------------------------------------------------------
# residue towers
# ---------------------------------------------------------------------------


class Tower:
    """QQ(alpha_1, ..., alpha_k) with squarefree moduli, optionally ordered.

    Mutable: the modulus may be replaced by a divisor that still vanishes at
    the designated root.  Elements hold polynomials and re-reduce lazily, so
    refinement is transparent.
    """

    def __init__(self, base, modulus: UniPoly, name: str, box: Interval | None):
        self.base = base  # Tower or None (QQ)
        self.modulus = modulus
        self.name = name
        self.box = box
        if self.total_degree() > MAX_TOWER_DEGREE:
            raise ExtensionTooDeep(f"tower degree {self.total_degree()} > {MAX_TOWER_DEGREE}")

    # -- structure ----------------------------------------------------------

    def total_degree(self) -> int:
        d = max(self.modulus.degree, 1)
        return d * (self.base.total_degree() if self.base else 1)

    def depth(self) -> int:
        return 1 + (self.base.depth() if self.base else 0)

    def designated(self) -> bool:
        return self.box is not None and (self.base is None or self.base.designated())

    def one(self):
        return self.elem(UniPoly([self._base_one()]))

    def zero(self):
        return self.elem(UniPoly([]))

    def gen(self):
        return self.elem(UniPoly([self._base_zero(), self._base_one()]))

    def _base_one(self):
        return self.base.one() if self.base else Fraction(1)

    def _base_zero(self):
        return self.base.zero() if self.base else Fraction(0)

    def coerce(self, x):
        if isinstance(x, ExtElem):
            if x.tower is self:
                return x
            # element of the base (or deeper): embed as constant
            return self.elem(UniPoly([x]))
        if isinstance(x, (int, Fraction)):
            c = Fraction(x)
            if self.base:
                return self.elem(UniPoly([self.base.coerce(c)]))
            return self.elem(UniPoly([c]))
        raise TypeError(f"cannot coerce {x!r} into tower")

    def elem(self, poly: UniPoly) -> "ExtElem":
        return ExtElem(self, poly % self.modulus if poly.degree >= self.modulus.degree else poly)

    # -- modulus refinement ----------------------------------------------------

    def _refine_modulus(self, factor: UniPoly):
        """Replace modulus by the given monic divisor containing the root."""
        self.modulus = factor
        if self.box is not None and not self.box.is_point():
            # keep an isolating interval with sign-changing endpoints
            lo, hi = self.box.lo, self.box.hi
            if _tower_sign_at_rational(self, factor, lo) == 0 or _tower_sign_at_rational(
                self, factor, hi
            ) == 0:
                raise AssertionError("refined modulus vanishes at box endpoint")

    def split_for_root(self, g: UniPoly) -> bool:
        """Given g | modulus candidates, decide whether the designated root is
        a root of g; refine modulus to the matching factor.  Returns True if
        the designated root satisfies g."""
        if self.box is None:
            h = _tower_divide_poly(self, self.modulus, g)
            raise OrbitSplit(self, g, h)
        cnt = _tower_count_roots_in_box(self, g, self.box)
        if cnt > 0:
            self._refine_modulus(g.monic())
            return True
        h = _tower_divide_poly(self, self.modulus, g)
        self._refine_modulus(h.monic())
        return False

    # -- ordered-field services --------------------------------------------------

    def enclosure(self, elem: "ExtElem") -> Interval:
        if not self.designated():
            raise ValueError("enclosure requires a designated tower")
        return _enclosure(self, elem.poly)

    def refine_box(self):
        if self.box is None:
            raise ValueError("no designated root to refine")
        if self.box.is_point():
            return
        if self.base is not None:
            self.base.refine_box()
        self.box = _tower_bisect_once(self, self.modulus, self.box)

    def sign_of(self, elem: "ExtElem") -> int:
        if self.is_zero(elem):
            return 0
        iv = self.enclosure(elem)
        steps = 0
        while iv.sign() is None:
            self.refine_box()
            iv = self.enclosure(elem)
            steps += 1
            if steps > 4 * -MIN_WIDTH_EXP:
                raise PrecisionExhausted("sign undecided at precision cap")
        return iv.sign()

    def is_zero(self, elem: "ExtElem") -> bool:
        p = elem.poly % self.modulus
        if p.is_zero():
            return True
        if self.box is None:
            return False
        g = _tower_gcd(self, p, self.modulus)
        if g.degree <= 0:
            return False
        return self.split_for_root(g)

    def invert(self, elem: "ExtElem") -> "ExtElem":
        while True:
            p = elem.poly % self.modulus
            if p.is_zero():
                raise ZeroDivisionError("inverting zero tower element")
            g, s, _ = _tower_xgcd(self, p, self.modulus)
            if g.degree == 0:
                inv_c = _invert_coeff(self, g.coeffs[0])
                return self.elem(s * inv_c)
            # zero divisor: split and retry (designated) or raise (orbit)
            root_here = self.split_for_root(g)
            if root_here:
                raise ZeroDivisionError("element vanishes at designated root")

    def __repr__(self):
        return f"Tower({self.name}, deg {self.modulus.degree}, designated={self.box is not None})"


def _invert_coeff(tower: Tower, c):
    if isinstance(c, ExtElem):
        return c.tower.invert(c)
    return Fraction(1) / c


class ExtElem:
    __slots__ = ("tower", "poly")

    def __init__(self, tower: Tower, poly: UniPoly):
        self.tower = tower
        self.poly = poly

    def _c(self, other) -> "ExtElem":
        return self.tower.coerce(other)

    def __bool__(self):
        return not self.tower.is_zero(self)

    def __eq__(self, other):
        try:
            other = self._c(other)
        except TypeError:
            return NotImplemented
        return self.tower.is_zero(self - other)

    def __hash__(self):
        return hash((id(self.tower), (self.poly % self.tower.modulus).coeffs))

    def __add__(self, other):
        other = self._c(other)
        return self.tower.elem(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(self.tower, -self.poly)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return NotImplemented
        other = self._c(other)
        return self.tower.elem(self.poly * other.poly)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = self._c(other)
        return self * self.tower.invert(other)

    def __rtruediv__(self, other):
        return self._c(other) * self.tower.invert(self)

    def __pow__(self, n: int):
        if n < 0:
            return self.tower.invert(self) ** (-n)
        out = self.tower.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sign(self) -> int:
        return self.tower.sign_of(self)

    def __repr__(self):
        return f"ExtElem({self.tower.name}; {list(self.poly.coeffs)})"


# ---------------------------------------------------------------------------
# tower polynomial services (UniPoly with ExtElem/Fraction coefficients)
# ---------------------------------------------------------------------------


def _enclosure(tower: Tower, poly: UniPoly) -> Interval:
    """Interval enclosure of poly(designated root)."""
    box = tower.box
    out = Interval(0)
    for c in reversed(poly.coeffs):
        ci = _coeff_enclosure(c)
        out = out * box + ci
    return out


def _coeff_enclosure(c) -> Interval:
    if isinstance(c, ExtElem):
        return _enclosure(c.tower, c.poly)
    return Interval(Fraction(c))


def _tower_sign_at_rational(tower: Tower, poly: UniPoly, q: Fraction) -> int:
    v = poly.eval(_base_const(tower, q))
    if isinstance(v, ExtElem):
        return v.tower.sign_of(v)
    return 0 if v == 0 else (1 if v > 0 else -1)


def _base_const(tower: Tower, q: Fraction):
    if tower.base:
        return tower.base.coerce(q)
    return Fraction(q)


def _tower_bisect_once(tower: Tower, modulus: UniPoly, box: Interval) -> Interval:
    lo, hi = box.lo, box.hi
    mid = (lo + hi) / 2
    sm = _tower_sign_at_rational(tower, modulus, mid)
    if sm == 0:
        return Interval(mid, mid)
    slo = _tower_sign_at_rational(tower, modulus, lo)
    if slo == 0:
        raise AssertionError("box endpoint is a root")
    if sm == slo:
        return Interval(mid, hi)
    return Interval(lo, mid)


def _renorm(p: UniPoly) -> UniPoly:
    """Re-run trailing-zero trimming (leading coeffs may have become zero
    after a designated modulus refinement)."""
    return UniPoly(list(p.coeffs))


def _tower_gcd(tower: Tower, f: UniPoly, g: UniPoly) -> UniPoly:
    """gcd over the tower as a field at the designated root."""
    a, b = _renorm(f), _renorm(g)
    while not b.is_zero():
        a, b = b, _renorm(a % b)
    if a.is_zero():
        return a
    return a.monic()


def _tower_xgcd(tower: Tower, f: UniPoly, g: UniPoly):
    return poly_xgcd(f, g)


def _tower_divide_poly(tower: Tower, f: UniPoly, g: UniPoly) -> UniPoly:
    return f.divide_exact(g)


def _tower_count_roots_in_box(tower: Tower, g: UniPoly, box: Interval) -> int:
    """Roots of g (coeffs over tower.base) inside the box; g | modulus."""
    if box.is_point():
        v = g.eval(_base_const(tower, box.lo))
        z = (v == 0) if not isinstance(v, ExtElem) else v.tower.is_zero(v)
        return 1 if z else 0
    # endpoints are non-roots of modulus hence of g
    return _tower_sturm_count(tower, g, box.lo, box.hi)


def _tower_sturm_count(tower: Tower, f: UniPoly, a: Fraction, b: Fraction) -> int:
    chain = [f, _tower_derivative(f)]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()

    def sgn_at(q):
        out = []
        for p in chain:
            v = p.eval(_base_const(tower, Fraction(q)))
            if isinstance(v, ExtElem):
                out.append(v.tower.sign_of(v))
            else:
                out.append(0 if v == 0 else (1 if v > 0 else -1))
        return out

    sa, sb = sgn_at(a), sgn_at(b)

    def var(signs):
        s = [x for x in signs if x != 0]
        return sum(1 for u, v in zip(s, s[1:]) if u * v < 0)

    return var(sa) - var(sb)


def _tower_derivative(f: UniPoly) -> UniPoly:
    return UniPoly([f.coeffs[i] * i for i in range(1, len(f.coeffs))])


def tower_root_bound(tower: Tower, f: UniPoly) -> Fraction:
    """Cauchy-type bound from coefficient enclosures; f over a designated tower."""
    encs = [_coeff_enclosure(c) for c in f.coeffs]
    lc = encs[-1]
    while lc.contains_zero():
        tower.refine_box()
        encs = [_coeff_enclosure(c) for c in f.coeffs]
        lc = encs[-1]
    lo = min(abs(lc.lo), abs(lc.hi)) if not lc.contains_zero() else None
    m = Fraction(0)
    for e in encs[:-1]:
        m = max(m, abs(e.lo), abs(e.hi))
    return m / lo + 1


def tower_isolate_real_roots(tower: Tower, f: UniPoly):
    """Isolating rational intervals for real roots of f over a designated tower.

    f has ExtElem (or Fraction) coefficients; returns list of Interval.
    """
    # squarefree part
    g = _tower_gcd(tower, f, _tower_derivative(f))
    p = f if g.degree <= 0 else f.divide_exact(g)
    p = p.monic()
    if p.degree <= 0:
        return []
    total = _tower_sturm_count_inf(tower, p)
    if total == 0:
        return []
    b = Fraction(1)
    bound = tower_root_bound(tower, p)
    while b < bound:
        b *= 2
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        # skip exact roots at endpoints by nudging via bisection structure
        n = _tower_sturm_count(tower, p, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(Interval(lo, hi))
            continue
        mid = (lo + hi) / 2
        sm = _tower_sign_at_rational(tower, p, mid)
        if sm == 0:
            out.append(Interval(mid, mid))
            # count roots strictly left/right of mid
            eps = _tower_separate_eps(tower, p, mid, lo, hi)
            stack.append((lo, mid - eps))
            stack.append((mid + eps, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    if len(out) != total:
        raise AssertionError("tower isolation count mismatch")
    return out


def _tower_sturm_count_inf(tower: Tower, p: UniPoly) -> int:
    chain = [p, _tower_derivative(p)]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()

    def sgn_inf(poly: UniPoly, positive: bool) -> int:
        if poly.is_zero():
            return 0
        lc = poly.lc()
        s = lc.tower.sign_of(lc) if isinstance(lc, ExtElem) else (1 if lc > 0 else -1 if lc < 0 else 0)
        if not positive and poly.degree % 2 == 1:
            s = -s
        return s

    sa = [sgn_inf(q, False) for q in chain]
    sb = [sgn_inf(q, True) for q in chain]

    def var(signs):
        s = [x for x in signs if x != 0]
        return sum(1 for u, v in zip(s, s[1:]) if u * v < 0)

    return var(sa) - var(sb)


def _tower_separate_eps(tower: Tower, p: UniPoly, mid, lo, hi) -> Fraction:
    """eps > 0 such that (mid-eps, mid+eps) contains only the root at mid."""
    eps = min(mid - lo, hi - mid) / 4
    while True:
        left = _tower_sign_at_rational(tower, p, mid - eps)
        right = _tower_sign_at_rational(tower, p, mid + eps)
        if left != 0 and right != 0:
            inner = _tower_sturm_count(tower, p, mid - eps, mid + eps)
            if inner == 1:
                return eps
        eps /= 2
        if eps < Fraction(2) ** MIN_WIDTH_EXP:
            raise PrecisionExhausted("root separation below precision cap")


# ---------------------------------------------------------------------------
# bivariate real solving and complex isolation over QQ
# ---------------------------------------------------------------------------


def make_qq_root_tower(poly: UniPoly, box: Interval, name="a") -> Tower:
    """Level-1 designated tower QQ(alpha) for a real root of poly."""
    p = poly.primitive().squarefree_part().primitive()
    return Tower(None, p.monic(), name, box)


def lift_to_bivariate(modulus: UniPoly, h: UniPoly, xname: str, yname: str) -> MultiPoly:
    """h in QQ(alpha)[y] with level-1 ExtElem coefficients -> QQ[x, y] lift."""
    V = (xname, yname)
    out = MultiPoly.zero(V)
    for j, c in enumerate(h.coeffs):
        if isinstance(c, ExtElem):
            cp = c.poly
            for i, a in enumerate(cp.coeffs):
                if a:
                    out = out + MultiPoly(V, {(i, j): Fraction(a)})
        elif c:
            out = out + MultiPoly(V, {(0, j): Fraction(c)})
    return out


def solve_bivariate_real(f: MultiPoly, g: MultiPoly):
    """Certified real solutions of f = g = 0 (two variables, finitely many).

    Returns a list of (x: AlgebraicNumber, y: AlgebraicNumber, tower) sorted
    by coordinates; tower is the designated QQ(x0) used for the fiber.
    """
    xname, yname = f.vars
    from .multipoly import resultant as mresultant

    if f.degree_in(yname) <= 0 and g.degree_in(yname) <= 0:
        raise ValueError("system does not involve the second variable")
    R = mresultant(f, g, yname) if f.degree_in(yname) > 0 and g.degree_in(yname) > 0 else None
    if R is None:
        # one poly is univariate in x: use it as the eliminant
        R = _drop_to_x(f if f.degree_in(yname) <= 0 else g)
    if R.is_zero():
        raise ValueError("common component: resultant vanished identically")
    Rx = R.to_unipoly_scalar()
    out = []
    for x0 in AlgebraicNumber.roots_of(Rx):
        tower = make_qq_root_tower(x0.poly, x0.box, xname)
        fy = _specialize_y(f, tower, xname, yname)
        gy = _specialize_y(g, tower, xname, yname)
        h = _tower_gcd(tower, fy, gy)
        if h.is_zero():
            raise ValueError("common component above a fiber")
        if h.degree <= 0:
            continue
        hsf = _tower_squarefree(tower, h)
        ymin = _norm_minpoly(tower, hsf, xname, yname)
        for iv in tower_isolate_real_roots(tower, hsf):
            y0 = algebraic_from_tower_root(tower, hsf, iv, ymin)
            out.append((AlgebraicNumber(tower.modulus.primitive(), tower.box), y0, tower))
    return out


def _tower_squarefree(tower: Tower, f: UniPoly) -> UniPoly:
    g = _tower_gcd(tower, f, _tower_derivative(f))
    if g.degree <= 0:
        return _renorm(f).monic()
    return _renorm(f).divide_exact(g).monic()


def algebraic_from_tower_root(tower: Tower, h: UniPoly, iv: Interval, qqpoly: UniPoly) -> AlgebraicNumber:
    """Designated root of h over the tower as a plain QQ AlgebraicNumber.

    qqpoly is a squarefree QQ polynomial vanishing at the root (a norm); the
    tower interval is bisected until it isolates for qqpoly as well.
    """
    if iv.is_point():
        return AlgebraicNumber.from_rational(iv.lo)
    rr = [r for r in rational_roots(qqpoly)]
    lo, hi = iv.lo, iv.hi
    while True:
        ok_endpoints = qqpoly.eval(lo) != 0 and qqpoly.eval(hi) != 0
        if ok_endpoints and sturm_count(qqpoly, lo, hi) == 1:
            if len([r for r in rr if lo < r < hi]) == 1:
                return AlgebraicNumber.from_rational([r for r in rr if lo < r < hi][0])
            return AlgebraicNumber(qqpoly, Interval(lo, hi))
        # bisect against h over the tower (keeps the designated root)
        mid = (lo + hi) / 2
        sm = _tower_sign_at_rational(tower, h, mid)
        if sm == 0:
            return AlgebraicNumber.from_rational(mid)
        slo = _tower_sign_at_rational(tower, h, lo)
        if slo == 0 or slo == sm:
            lo = mid
        else:
            hi = mid
        if hi - lo < Fraction(2) ** MIN_WIDTH_EXP:
            raise PrecisionExhausted("isolating box shrink below precision cap")


def _drop_to_x(p: MultiPoly) -> MultiPoly:
    return p


def _specialize_y(f: MultiPoly, tower: Tower, xname: str, yname: str) -> UniPoly:
    """f(alpha, y) as UniPoly in y with ExtElem coefficients."""
    fy = f.as_unipoly_in(yname)
    coeffs = []
    for c in fy.coeffs:
        # c is a MultiPoly in (xname,) or with no variables at all
        if c.vars:
            cu = c.to_unipoly_scalar()
        else:
            cu = UniPoly([c.terms.get((), Fraction(0))])
        coeffs.append(tower.elem(UniPoly([Fraction(a) for a in cu.coeffs])))
    return UniPoly(coeffs)


def _norm_minpoly(tower: Tower, h: UniPoly, xname: str, yname: str) -> UniPoly:
    """Squarefree QQ-polynomial vanishing on the y-roots of h over QQ(alpha)."""
    from .multipoly import resultant as mresultant

    hb = lift_to_bivariate(tower.modulus, h, xname, yname)
    px = MultiPoly.from_unipoly(
        UniPoly([MultiPoly.const((yname,), c) for c in tower.modulus.coeffs]), (xname, yname), xname
    )
    N = mresultant(px, hb, xname)
    Np = N.to_unipoly_scalar().primitive().squarefree_part().primitive()
    return Np


def complex_roots(f: UniPoly):
    """(real_roots, nonreal_pairs) of a squarefree QQ-polynomial.

    real_roots: AlgebraicNumbers ascending.  nonreal_pairs: one
    ComplexAlgebraic per conjugate pair, the upper-half-plane member.
    Completeness is certified by degree count.
    """
    p = f.primitive().squarefree_part().primitive()
    reals = AlgebraicNumber.roots_of(p)
    n_nonreal = p.degree - len(reals)
    if n_nonreal == 0:
        return reals, []
    # p(a + i b) = U(a, c) + i b W(a, c) with c = b^2
    V = ("a", "c")
    a = MultiPoly.var(V, "a")
    c = MultiPoly.var(V, "c")
    U = MultiPoly.zero(V)
    W = MultiPoly.zero(V)
    # expand (a + ib)^k: sum_j C(k,j) a^(k-j) (ib)^j
    from math import comb

    for k, coef in enumerate(p.coeffs):
        if not coef:
            continue
        for j in range(k + 1):
            base = Fraction(comb(k, j)) * Fraction(coef)
            apow = a ** (k - j)
            # (i b)^j = i^j b^j ; b^j = b^(j mod 2) * c^(j//2)
            cp = c ** (j // 2)
            term = apow * cp * base
            if j % 4 == 0:
                U = U + term
            elif j % 4 == 1:
                W = W + term
            elif j % 4 == 2:
                U = U - term
            else:
                W = W - term
    pairs = []
    for x0, c0, _tower in solve_bivariate_real(U, W):
        if not (c0 > 0):
            continue
        are = x0
        cbox = c0.refine(Fraction(1, 2**24)).box
        bbox = cbox.sqrt(-32)
        rebox = are.refine(Fraction(1, 2**24)).box
        pairs.append(ComplexAlgebraic(p, ComplexBox(rebox, bbox)))
    if len(reals) + 2 * len(pairs) != p.degree:
        raise AssertionError(
            f"complex isolation incomplete: {len(reals)} real + 2*{len(pairs)} != {p.degree}"
        )
    return reals, pairs
