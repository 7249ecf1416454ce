"""Sparse multivariate polynomials and subresultant-PRS resultants.

Terms map exponent tuples to nonzero coefficients; the canonical order is
graded lexicographic, descending.  Coefficients are Fractions for curves
over QQ, GaussianRationals over QQ(i), or residue-tower elements in local
computations (anything with exact field operators works).
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import GaussianRational, conj_scalar
from .unipoly import UniPoly


def _grlex_key(expo):
    return (sum(expo), expo)


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(variables, c) -> "MultiPoly":
        if not c:
            return MultiPoly.zero(variables)
        return MultiPoly(variables, {tuple([0] * len(variables)): c})

    @staticmethod
    def var(variables, name) -> "MultiPoly":
        e = [0] * len(variables)
        e[list(variables).index(name)] = 1
        return MultiPoly(variables, {tuple(e): Fraction(1)})

    def one_like(self):
        for c in self.terms.values():
            return c / c
        return Fraction(1)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.vars, Fraction(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True))))

    def __repr__(self):
        from .parser import format_poly

        try:
            return f"MultiPoly<{format_poly(self)}>"
        except Exception:
            return f"MultiPoly({self.vars}, {self.terms})"

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient_of(self, name, power) -> "MultiPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = e[:i] + (0,) + e[i + 1 :]
                out[e2] = c
        return MultiPoly(self.vars, out)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if not other:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MultiPoly(self.vars, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        out = MultiPoly.const(self.vars, self.one_like())
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact division; raises ValueError if the division is inexact."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.terms)
        out = {}
        dlead, dc = max(divisor.terms.items(), key=lambda t: _grlex_key(t[0]))[0], None
        dc = divisor.terms[dlead]
        while rem:
            e, c = max(rem.items(), key=lambda t: _grlex_key(t[0]))
            q = tuple(a - b for a, b in zip(e, dlead))
            if any(v < 0 for v in q):
                raise ValueError("inexact multivariate division")
            k = c / dc
            out[q] = out.get(q, 0) + k
            for e2, c2 in divisor.terms.items():
                e3 = tuple(a + b for a, b in zip(q, e2))
                s = rem.get(e3, 0) - k * c2
                if s:
                    rem[e3] = s
                elif e3 in rem:
                    del rem[e3]
        return MultiPoly(self.vars, out)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.divide_exact(self)
            return True
        except ValueError:
            return False

    # -- calculus / substitution ----------------------------------------------

    def derivative(self, name) -> "MultiPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] > 0:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[e2] = out.get(e2, 0) + c * e[i]
        return MultiPoly(self.vars, {e: c for e, c in out.items() if c})

    def subs(self, assignment: dict):
        """Substitute scalars and/or MultiPolys for variables.

        Unsubstituted variables persist.  When every variable is assigned a
        scalar, the result is the scalar value.
        """
        all_scalar = all(not isinstance(v, MultiPoly) for v in assignment.values()) and set(
            assignment
        ) >= set(self.vars)
        if all_scalar:
            out = None
            for e, c in self.terms.items():
                term = c
                for name, p in zip(self.vars, e):
                    if p:
                        term = term * assignment[name] ** p
                out = term if out is None else out + term
            return out if out is not None else Fraction(0)
        # polynomial substitution: build in the target variable set
        target_vars = None
        for v in assignment.values():
            if isinstance(v, MultiPoly):
                target_vars = v.vars
                break
        if target_vars is None:
            target_vars = self.vars
        out = MultiPoly.zero(target_vars)
        for e, c in self.terms.items():
            term = MultiPoly.const(target_vars, c)
            for name, p in zip(self.vars, e):
                if not p:
                    continue
                if name in assignment:
                    v = assignment[name]
                    if not isinstance(v, MultiPoly):
                        v = MultiPoly.const(target_vars, v)
                else:
                    v = MultiPoly.var(target_vars, name)
                term = term * v**p
            out = out + term
        return out

    def eval_intervals(self, assignment: dict):
        """Interval/ComplexBox evaluation; assignment maps every var."""
        out = None
        for e, c in self.terms.items():
            term = c
            for name, p in zip(self.vars, e):
                if p:
                    term = assignment[name] ** p * term
            out = term if out is None else out + term
        return out

    def conj(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: conj_scalar(c) for e, c in self.terms.items()})

    # -- QQ normalization -------------------------------------------------------

    def content_primitive(self):
        """(content, primitive) over QQ: integer coprime coefficients, first
        canonical-order coefficient positive."""
        if self.is_zero():
            return Fraction(0), self
        from math import gcd as int_gcd

        den = 1
        for c in self.terms.values():
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = int_gcd(g, abs(v))
        lead = max(ints, key=_grlex_key)
        if ints[lead] < 0:
            g = -g
        return Fraction(g, den), MultiPoly(self.vars, {e: Fraction(v // g) for e, v in ints.items()})

    def primitive(self) -> "MultiPoly":
        return self.content_primitive()[1]

    # -- conversions ---------------------------------------------------------

    def as_unipoly_in(self, name) -> UniPoly:
        """UniPoly in `name` whose coefficients are MultiPolys in the rest."""
        rest = tuple(v for v in self.vars if v != name)
        i = self.vars.index(name)
        d = self.degree_in(name)
        coeffs = [MultiPoly.zero(rest) for _ in range(d + 1)] if d >= 0 else []
        for e, c in self.terms.items():
            e2 = tuple(p for j, p in enumerate(e) if j != i)
            coeffs[e[i]] = coeffs[e[i]] + MultiPoly(rest, {e2: c})
        return UniPoly(coeffs)

    @staticmethod
    def from_unipoly(p: UniPoly, variables, name) -> "MultiPoly":
        """Inverse of as_unipoly_in: rebuild with MultiPoly coefficients."""
        i = list(variables).index(name)
        out = {}
        for k, c in enumerate(p.coeffs):
            if isinstance(c, MultiPoly):
                for e, cc in c.terms.items():
                    e2 = list(e)
                    e2.insert(i, k)
                    out[tuple(e2)] = cc
            elif c:
                e2 = [0] * len(variables)
                e2[i] = k
                out[tuple(e2)] = c
        return MultiPoly(variables, out)

    def to_unipoly_scalar(self) -> UniPoly:
        """For a polynomial in exactly one variable: plain UniPoly over QQ."""
        if len(self.vars) != 1:
            nonzero = [v for v in self.vars if self.degree_in(v) > 0]
            if len(nonzero) > 1:
                raise ValueError("polynomial involves several variables")
            name = nonzero[0] if nonzero else self.vars[0]
            d = self.degree_in(name)
            i = self.vars.index(name)
            coeffs = [Fraction(0)] * (d + 1)
            for e, c in self.terms.items():
                coeffs[e[i]] += c
            return UniPoly(coeffs)
        d = self.total_degree()
        coeffs = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            coeffs[e[0]] += c
        return UniPoly(coeffs)


# -- resultants ----------------------------------------------------------------


def _prem(a: UniPoly, b: UniPoly):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, fraction-free."""
    d = a.degree - b.degree
    if d < 0:
        raise ValueError("prem needs deg a >= deg b")
    lcb = b.lc()
    rem = list(a.coeffs)
    for k in range(d, -1, -1):
        top = rem[k + b.degree]
        rem = [c * lcb for c in rem]
        if top:
            for i in range(b.degree + 1):
                rem[k + i] = rem[k + i] - top * b.coeffs[i]
        rem.pop()
    return UniPoly(rem)


def resultant_poly(f: UniPoly, g: UniPoly):
    """Resultant of f, g in R[x] where R is a (multivariate) UFD.

    Subresultant PRS (Collins/Brown-Traub); all divisions exact in R.
    Returns an element of R (a MultiPoly when coefficients are MultiPolys).
    """
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    m, n = f.degree, g.degree
    sign = 1
    if m < n:
        f, g = g, f
        m, n = n, m
        if m % 2 == 1 and n % 2 == 1:
            sign = -sign
    if n == 0:
        c = g.lc()
        return sign * _ring_pow(c, m)

    a, b = f, g
    one = _ring_one(f.lc())
    gg = one
    h = one
    while True:
        d = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
        r = _prem(a, b)
        a, b = b, r
        if b.is_zero():
            if isinstance(one, MultiPoly):
                return MultiPoly.zero(one.vars)
            return Fraction(0)
        denom = _ring_mul(gg, _ring_pow(h, d))
        b = UniPoly([_ring_div(c, denom) for c in b.coeffs])
        gg = a.lc()
        if d == 0:
            pass  # h unchanged
        else:
            h = _ring_div(_ring_pow(gg, d), _ring_pow(h, d - 1))
        if b.degree == 0:
            d = a.degree
            res = _ring_div(_ring_pow(b.lc(), d), _ring_pow(h, d - 1))
            return _ring_scale(res, sign)


def _ring_one(sample):
    if isinstance(sample, MultiPoly):
        return MultiPoly.const(sample.vars, Fraction(1))
    return Fraction(1)


def _ring_mul(a, b):
    return a * b


def _ring_pow(a, n: int):
    if n == 0:
        return _ring_one(a)
    out = a
    for _ in range(n - 1):
        out = out * a
    return out


def _ring_div(a, b):
    if isinstance(a, MultiPoly):
        return a.divide_exact(b if isinstance(b, MultiPoly) else MultiPoly.const(a.vars, b))
    if isinstance(b, MultiPoly):
        return MultiPoly.const(b.vars, a).divide_exact(b)
    return a / b


def _ring_scale(a, s: int):
    if s == 1:
        return a
    return -a


def resultant(f: MultiPoly, g: MultiPoly, name) -> MultiPoly:
    """Resultant of two MultiPolys with respect to one variable.

    The result lives in the remaining variables (same variable tuple, with
    `name` eliminated).
    """
    if f.vars != g.vars:
        raise ValueError("variable mismatch")
    df, dg = f.degree_in(name), g.degree_in(name)
    rest = tuple(v for v in f.vars if v != name)
    if df <= 0 and dg <= 0:
        raise ValueError("neither polynomial involves the variable")
    if df <= 0:
        # f constant in the variable: Res = f^dg
        return _mp_pow_rest(_drop_var(f, name), dg)
    if dg <= 0:
        return _mp_pow_rest(_drop_var(g, name), df)
    r = resultant_poly(f.as_unipoly_in(name), g.as_unipoly_in(name))
    if isinstance(r, MultiPoly):
        return r
    return MultiPoly.const(rest, r)


def _mp_pow_rest(base: MultiPoly, n: int) -> MultiPoly:
    out = MultiPoly.const(base.vars, Fraction(1))
    for _ in range(n):
        out = out * base
    return out


def sylvester_resultant(f: MultiPoly, g: MultiPoly, name) -> MultiPoly:
    """Naive Sylvester-determinant resultant (cofactor expansion).

    Independent oracle for resultant(); only for small degrees.
    """
    df, dg = f.degree_in(name), g.degree_in(name)
    rest = tuple(v for v in f.vars if v != name)
    fu = [_drop_var(f.coefficient_of(name, k), name) for k in range(df + 1)]
    gu = [_drop_var(g.coefficient_of(name, k), name) for k in range(dg + 1)]
    n = df + dg
    rows = []
    for i in range(dg):
        row = [MultiPoly.zero(rest)] * n
        for k in range(df + 1):
            row[i + k] = fu[df - k]
        rows.append(row)
    for i in range(df):
        row = [MultiPoly.zero(rest)] * n
        for k in range(dg + 1):
            row[i + k] = gu[dg - k]
        rows.append(row)
    return _det(rows)


def _drop_var(p: MultiPoly, name) -> MultiPoly:
    i = p.vars.index(name)
    rest = tuple(v for v in p.vars if v != name)
    return MultiPoly(rest, {tuple(x for j, x in enumerate(e) if j != i): c for e, c in p.terms.items()})


def _det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    out = None
    for j in range(n):
        a = rows[0][j]
        if a.is_zero():
            continue
        minor = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        term = a * _det(minor)
        if j % 2 == 1:
            term = -term
        out = term if out is None else out + term
    if out is None:
        return MultiPoly.zero(rows[0][0].vars)
    return out
