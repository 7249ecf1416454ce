"""Projective plane curves over QQ: singular loci as Galois orbits, local
multiplicities, tangent cones, line intersections, and a complete decision
procedure for emptiness of real affine zero sets.

Points are grouped into conjugation-closed orbits carried by triangular
systems {p(x) = 0, h(x, y) = 0}.  Real members get designated isolating
boxes; whole non-real sub-orbits are kept symbolic and split only when a
rational quadratic factor certifies the split exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebraic import (
    AlgebraicNumber,
    ComplexAlgebraic,
    ExtElem,
    OrbitSplit,
    Tower,
    algebraic_from_tower_root,
    complex_roots,
    lift_to_bivariate,
    make_qq_root_tower,
    rational_roots,
    tower_isolate_real_roots,
    _base_const,
    _norm_minpoly,
    _renorm,
    _specialize_y,
    _tower_gcd,
    _tower_squarefree,
)
from .errors import CommonComponent, PointNotOnCurve, SquarefreeRequired
from .intervals import ComplexBox, Interval
from .multipoly import MultiPoly, resultant
from .rationals import simplest_in_interval
from .unipoly import UniPoly, poly_gcd, sturm_count

PROJ_VARS = ("X", "Y", "Z")
AFF_VARS = ("x", "y")


# ---------------------------------------------------------------------------
# projective curves
# ---------------------------------------------------------------------------


class ProjCurve:
    """A primitive homogeneous form over QQ with sign normalization."""

    __slots__ = ("form", "degree", "_squarefree")

    def __init__(self, form: MultiPoly):
        if form.vars != PROJ_VARS:
            form = MultiPoly(PROJ_VARS, {e: c for e, c in form.terms.items()})
        if form.is_zero():
            raise ValueError("zero form")
        if not form.is_homogeneous():
            raise ValueError("form is not homogeneous")
        self.form = form.primitive()
        self.degree = form.total_degree()
        self._squarefree = None

    def __eq__(self, other):
        return isinstance(other, ProjCurve) and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def __repr__(self):
        return f"ProjCurve<{self.form!r} deg {self.degree}>"

    def dehomogenize(self, chart: str) -> MultiPoly:
        """Affine equation in (x, y) for charts Z, Y or X (=1)."""
        sub = {
            "Z": {"X": "x", "Y": "y"},
            "Y": {"X": "x", "Z": "y"},
            "X": {"Y": "x", "Z": "y"},
        }[chart]
        out = {}
        for e, c in self.form.terms.items():
            d = dict(zip(PROJ_VARS, e))
            key = (d[k] for k in sub)
            ex = tuple(d[k] for k in sub)
            out[ex] = out.get(ex, 0) + c
        return MultiPoly(AFF_VARS, out)

    def is_squarefree(self) -> bool:
        if self._squarefree is None:
            self._squarefree = _proj_squarefree(self.form)
        return self._squarefree

    def gradient(self):
        return tuple(self.form.derivative(v) for v in PROJ_VARS)


def _proj_squarefree(F: MultiPoly) -> bool:
    # repeated factor in the affine chart, or a repeated line at infinity
    for chart in ("Z", "Y"):
        idx = PROJ_VARS.index(chart)
        k = min(e[idx] for e in F.terms)
        if k >= 2:
            return False
    f = MultiPoly(AFF_VARS, {(e[0], e[1]): c for e, c in F.terms.items()})  # Z=1
    return _bivariate_squarefree(f)


def _bivariate_squarefree(f: MultiPoly) -> bool:
    if f.degree_in("y") == 0:
        return f.to_unipoly_scalar().squarefree_part().degree == f.degree_in("x")
    cont = _content_in(f, "y")
    if cont.degree != cont.squarefree_part().degree:
        return False
    pp = _divide_content(f, cont, "y")
    r = resultant(pp, pp.derivative("y"), "y")
    return not r.is_zero()


def _content_in(f: MultiPoly, name: str) -> UniPoly:
    """gcd of the coefficients of f as a polynomial in `name` (UniPoly in the
    other variable)."""
    other = [v for v in f.vars if v != name][0]
    g = UniPoly([])
    for k in range(f.degree_in(name) + 1):
        c = f.coefficient_of(name, k)
        cu = c.to_unipoly_scalar() if c.vars else UniPoly([])
        g = poly_gcd(g, cu)
        if g.degree == 0 and not g.is_zero():
            break
    return g if not g.is_zero() else UniPoly([Fraction(1)])


def _uni_as_multipoly(p: UniPoly, variables, name) -> MultiPoly:
    i = list(variables).index(name)
    return MultiPoly(
        variables,
        {
            tuple(k if j == i else 0 for j in range(len(variables))): c
            for k, c in enumerate(p.coeffs)
            if c
        },
    )


def _divide_content(f: MultiPoly, cont: UniPoly, name: str) -> MultiPoly:
    if cont.degree <= 0:
        return f
    other = [v for v in f.vars if v != name][0]
    return f.divide_exact(_uni_as_multipoly(cont, f.vars, other))


def bivariate_gcd(f: MultiPoly, g: MultiPoly, name: str) -> MultiPoly:
    """Primitive gcd of two bivariate polynomials, as polynomials in `name`.

    Primitive PRS over QQ[x][y]; includes the content gcd.
    """
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    cf, cg = _content_in(f, name), _content_in(g, name)
    ccont = poly_gcd(cf, cg)
    a, b = _divide_content(f, cf, name), _divide_content(g, cg, name)
    if a.degree_in(name) < b.degree_in(name):
        a, b = b, a
    while not b.is_zero() and b.degree_in(name) > 0:
        r = _pseudo_rem(a, b, name)
        if r.is_zero():
            a, b = b, r
            break
        rc = _content_in(r, name)
        r = _divide_content(r, rc, name)
        a, b = b, r
    if not b.is_zero() and b.degree_in(name) == 0:
        # coprime as polynomials in name
        base = MultiPoly.const(f.vars, Fraction(1))
    else:
        base = a.primitive()
    other = [v for v in f.vars if v != name][0]
    return (base * _uni_as_multipoly(ccont, f.vars, other)).primitive()


def _pseudo_rem(a: MultiPoly, b: MultiPoly, name: str) -> MultiPoly:
    from .multipoly import _prem

    au, bu = a.as_unipoly_in(name), b.as_unipoly_in(name)
    r = _prem(au, bu)
    return MultiPoly.from_unipoly(r, a.vars, name)


def bivariate_squarefree_part(f: MultiPoly) -> MultiPoly:
    """Squarefree part of a bivariate polynomial over QQ (primitive).

    Splits off the content (factors free of y), handles it univariately, and
    reduces the y-dependent part by its gcd with the y-derivative.
    """
    f = f.primitive()
    xn, yn = f.vars
    if f.degree_in(yn) == 0:
        return _uni_as_multipoly(f.to_unipoly_scalar().squarefree_part().primitive(), f.vars, xn)
    if f.degree_in(xn) == 0:
        return _uni_as_multipoly(f.to_unipoly_scalar().squarefree_part().primitive(), f.vars, yn)
    cont = _content_in(f, yn)
    pp = _divide_content(f, cont, yn)
    g = bivariate_gcd(pp, pp.derivative(yn), yn)
    sf_pp = pp.divide_exact(g).primitive() if g.total_degree() > 0 else pp
    sf_cont = cont.squarefree_part().primitive()
    return (sf_pp * _uni_as_multipoly(sf_cont, f.vars, xn)).primitive()


# ---------------------------------------------------------------------------
# point orbits
# ---------------------------------------------------------------------------


@dataclass
class PointOrbit:
    """A conjugation-closed set of points in one affine chart.

    system: triangular {p(x) = 0, h(x, y) = 0} over QQ cutting out a superset
    of the orbit; for designated orbits the boxes select the members.
    """

    chart: str
    xpoly: UniPoly
    hpoly: MultiPoly  # in ("x", "y"), lifted over QQ
    size: int
    reality: str  # "Real" | "ConjugatePair" | "LargerOrbit"
    n_real: int
    n_pairs: int
    xbox: Interval | None = None
    ybox: Interval | None = None
    mult: int | None = None
    coords: list = field(default_factory=list)  # serializable coordinate data

    def __repr__(self):
        return (
            f"PointOrbit({self.chart}, {self.reality}, size {self.size}, m={self.mult})"
        )

    def is_real_point(self) -> bool:
        return self.reality == "Real"

    def proj_coords_repr(self):
        return self.coords

    # -- local data ---------------------------------------------------------

    def base_tower(self):
        """(tower|None, xelem, yelem) for local arithmetic at the orbit.

        tower None means the point is rational; xelem/yelem are Fractions.
        """
        if self.xpoly.degree == 1:
            xq = -self.xpoly.coeffs[0] / self.xpoly.coeffs[1]
            hy = _subs_x_rational(self.hpoly, xq)
            if hy.degree == 1:
                yq = -hy.coeffs[0] / hy.coeffs[1]
                return None, xq, yq
            tower = Tower(None, hy.monic(), "y", self.ybox)
            return tower, tower.coerce(xq), tower.gen()
        xtower = make_qq_root_tower(self.xpoly, self.xbox, "x") if self.xbox is not None else Tower(
            None, self.xpoly.monic(), "x", None
        )
        hspec = _specialize_y(self.hpoly, xtower, "x", "y")
        hspec = _renorm(hspec)
        if hspec.degree == 1:
            yv = -hspec.coeffs[0] / hspec.coeffs[1]
            return xtower, xtower.gen(), yv
        ytower = Tower(xtower, hspec.monic(), "y", self.ybox)
        return ytower, ytower.coerce(xtower.gen()), ytower.gen()

    def local(self, affine: MultiPoly):
        """(tower, germ): affine translated so the orbit point is the origin,
        in local variables (u, v); tower carries the coordinate field."""
        tower, xv, yv = self.base_tower()
        U = ("u", "v")
        u = MultiPoly.var(U, "u")
        v = MultiPoly.var(U, "v")
        xm = u + MultiPoly.const(U, xv)
        ym = v + MultiPoly.const(U, yv)
        return tower, affine.subs({"x": xm, "y": ym})

    def germ(self, affine: MultiPoly) -> MultiPoly:
        return self.local(affine)[1]


def _subs_x_rational(h: MultiPoly, xq: Fraction) -> UniPoly:
    out = {}
    for (i, j), c in h.terms.items():
        out[j] = out.get(j, Fraction(0)) + c * xq**i
    d = max(out) if out else 0
    return UniPoly([out.get(k, Fraction(0)) for k in range(d + 1)])


def _poly_to_multipoly_x(p: UniPoly) -> MultiPoly:
    return MultiPoly(AFF_VARS, {(i, 0): c for i, c in enumerate(p.coeffs) if c})


def _ypoly_to_multipoly(p: UniPoly) -> MultiPoly:
    return MultiPoly(AFF_VARS, {(0, i): c for i, c in enumerate(p.coeffs) if c})


def _try_quadratic_split(p: UniPoly) -> list[UniPoly]:
    """Split a squarefree QQ-polynomial into exact rational quadratic factors
    (one per certified non-real conjugate pair) plus a remainder.

    Returns the list of factors found; product of returned factors divides p.
    Only splits that verify by exact division are kept.
    """
    out = []
    reals, pairs = complex_roots(p)
    rest = p
    for pr in pairs:
        re_iv, im_iv = pr.box.re, pr.box.im
        for _ in range(6):
            s_iv = re_iv * 2
            q_iv = re_iv * re_iv + im_iv * im_iv
            s = simplest_in_interval(s_iv.lo, s_iv.hi)
            q = simplest_in_interval(q_iv.lo, q_iv.hi)
            cand = UniPoly([q, -s, Fraction(1)])
            try:
                rest2 = rest.divide_exact(cand)
            except ValueError:
                re_iv = _halve(re_iv)
                im_iv = _halve(im_iv)
                continue
            out.append(cand.primitive())
            rest = rest2
            break
    return out


def _halve(iv: Interval) -> Interval:
    m = iv.mid
    w = iv.width / 4
    return Interval(m - w, m + w)


# ---------------------------------------------------------------------------
# singular locus
# ---------------------------------------------------------------------------


def singular_points(C: ProjCurve) -> list[PointOrbit]:
    """All singular orbits of a squarefree curve, with multiplicities."""
    if not C.is_squarefree():
        raise SquarefreeRequired("curve form has a repeated factor")
    out = []
    f = C.dehomogenize("Z")
    for orbit in _affine_singular_orbits(f, "Z"):
        orbit.chart = "Z"
        out.append(orbit)
    out.extend(_infinity_singular_orbits(C))
    return _sorted_orbits(out)


def _attach_mult(orbit: PointOrbit, f: MultiPoly) -> list[PointOrbit]:
    """Compute the orbit multiplicity; split the orbit when the computation
    proves the fiber polynomial factors over the x-field."""
    from dataclasses import replace

    try:
        orbit.mult = orbit_multiplicity(orbit, f)
        return [orbit]
    except OrbitSplit as sp:
        if sp.tower.base is None:
            raise  # x-level split: handled by the branch retry
        npts = orbit.size // max(orbit.hpoly.degree_in("y"), 1)
        parts = []
        for fac in (sp.factor_a, sp.factor_b):
            hq = lift_to_bivariate(sp.tower.base.modulus, fac, "x", "y")
            dy = hq.degree_in("y")
            o2 = replace(
                orbit,
                hpoly=hq,
                size=npts * dy,
                n_pairs=(npts * dy) // 2,
                reality="ConjugatePair" if npts * dy == 2 else "LargerOrbit",
            )
            parts.extend(_attach_mult(o2, f))
        return parts


def _sorted_orbits(orbits):
    def key(o: PointOrbit):
        return (
            o.chart,
            tuple(map(str, o.xpoly.coeffs)),
            str(o.xbox.lo) if o.xbox else "",
            str(o.ybox.lo) if o.ybox else "",
            o.size,
        )

    return sorted(orbits, key=key)


def _affine_singular_orbits(f: MultiPoly, chart: str) -> list[PointOrbit]:
    if f.degree_in("y") == 0 or f.degree_in("x") == 0:
        return []  # unions of coordinate lines have no affine-chart singularities here
    fx, fy = f.derivative("x"), f.derivative("y")
    R = resultant(f, fy, "y")
    Rx = R.to_unipoly_scalar()
    if Rx.is_zero():
        raise SquarefreeRequired("degenerate elimination: repeated factor suspected")
    cand = Rx.primitive().squarefree_part().primitive()
    orbits = []
    for branch in _branches(cand):
        orbits.extend(_orbits_on_branch(branch, f, (fx, fy)))
    return orbits


def _branches(p: UniPoly) -> list[UniPoly]:
    """Split off rational roots and certified rational quadratic factors;
    keep the remainder whole (a possibly-large Galois orbit)."""
    out = []
    rest = p
    for r in rational_roots(p):
        lin = UniPoly([-r, Fraction(1)]).primitive()
        out.append(lin)
        rest = rest.divide_exact(lin)
    rest = rest.primitive()
    if rest.degree > 2:
        for quad in _try_quadratic_split(rest):
            out.append(quad)
            rest = rest.divide_exact(quad).primitive()
    if rest.degree > 0:
        out.append(rest)
    return out


def _orbits_on_branch(p: UniPoly, f: MultiPoly, extra) -> list[PointOrbit]:
    """Orbits of common zeros of f and all polys in `extra` with x on branch p."""
    try:
        return _orbits_on_branch_inner(p, f, extra)
    except OrbitSplit as sp:
        parts = []
        for q in (sp.factor_a, sp.factor_b):
            qq = _lift_factor_to_qq(q)
            parts.extend(_orbits_on_branch(qq, f, extra))
        return parts


def _lift_factor_to_qq(q: UniPoly) -> UniPoly:
    coeffs = []
    for c in q.coeffs:
        if isinstance(c, ExtElem):
            raise AssertionError("level-1 split expected rational coefficients")
        coeffs.append(Fraction(c))
    return UniPoly(coeffs).primitive()


def _orbits_on_branch_inner(p: UniPoly, f: MultiPoly, extra) -> list[PointOrbit]:
    orbits = []
    if p.degree == 1:
        xq = -p.coeffs[0] / p.coeffs[1]
        fibers = [_subs_x_rational(g, xq) for g in (f, *extra)]
        h = UniPoly([])
        for fb in fibers:
            h = poly_gcd(h, fb)
        if h.degree <= 0:
            return []
        h = h.squarefree_part().primitive()
        hm = _ypoly_to_multipoly(h)
        reals, pairs = complex_roots(h)
        for y0 in reals:
            orbits.append(
                PointOrbit(
                    chart="",
                    xpoly=p,
                    hpoly=hm,
                    size=1,
                    reality="Real",
                    n_real=1,
                    n_pairs=0,
                    xbox=Interval(xq, xq),
                    ybox=y0.box,
                    coords=[_coords_rat_alg(xq, y0)],
                )
            )
        if pairs:
            quads = _try_quadratic_split(h)
            covered = UniPoly([Fraction(1)])
            for quad in quads:
                covered = covered * quad
                pb = _pair_box_for(quad)
                orbits.append(
                    PointOrbit(
                        chart="",
                        xpoly=p,
                        hpoly=_ypoly_to_multipoly(quad),
                        size=2,
                        reality="ConjugatePair",
                        n_real=0,
                        n_pairs=1,
                        xbox=Interval(xq, xq),
                        coords=[_coords_rat_pair(xq, pb)],
                    )
                )
            restdeg = h.degree - covered.degree - len(reals)
            if restdeg > 0:
                rest = h
                for y0 in reals:
                    if y0.is_rational():
                        rest = rest.divide_exact(
                            UniPoly([-y0.rational_value(), Fraction(1)])
                        )
                rest = rest.divide_exact(covered).primitive()
                orbits.append(
                    PointOrbit(
                        chart="",
                        xpoly=p,
                        hpoly=_ypoly_to_multipoly(rest),
                        size=rest.degree,
                        reality="LargerOrbit" if rest.degree > 2 else "ConjugatePair",
                        n_real=0,
                        n_pairs=rest.degree // 2,
                        xbox=Interval(xq, xq),
                        coords=[],
                    )
                )
        final = []
        for o in orbits:
            final.extend(_attach_mult(o, f))
        return final

    # non-linear branch: work over the (possibly orbit-wide) tower
    xtower = Tower(None, p.monic(), "x", None)
    fy = _specialize_y(f, xtower, "x", "y")
    h = fy
    for g in extra:
        h = _tower_gcd(xtower, h, _specialize_y(g, xtower, "x", "y"))
    h = _renorm(h)
    if h.is_zero():
        raise CommonComponent("fiber gcd vanished identically")
    if h.degree <= 0:
        return []
    h = _tower_squarefree(xtower, h)
    hqq = lift_to_bivariate(xtower.modulus, h, "x", "y")
    # real x roots split off as designated sub-orbits
    xreals, xpairs = complex_roots(p)
    for x0 in xreals:
        dtower = make_qq_root_tower(p, x0.box, "x")
        hd = _renorm(_specialize_y(hqq, dtower, "x", "y"))
        hd = _tower_squarefree(dtower, hd)
        if hd.degree <= 0:
            continue
        ymin = _norm_minpoly(dtower, hd, "x", "y")
        rivs = tower_isolate_real_roots(dtower, hd)
        nreal = len(rivs)
        for iv in rivs:
            y0 = algebraic_from_tower_root(dtower, hd, iv, ymin)
            orbits.append(
                PointOrbit(
                    chart="",
                    xpoly=p,
                    hpoly=hqq,
                    size=1,
                    reality="Real",
                    n_real=1,
                    n_pairs=0,
                    xbox=x0.box,
                    ybox=y0.box,
                    coords=[_coords_alg_alg(p, x0, y0)],
                )
            )
        npair = (hd.degree - nreal) // 2
        if npair:
            # strip rational y-roots so the pair orbit's system avoids the
            # real members of the fiber
            hd2 = hd
            for q in rational_roots(ymin):
                lin = UniPoly([dtower.coerce(-q), dtower.one()])
                while hd2.degree > 0:
                    quo, rem = divmod(hd2, lin)
                    if _renorm(rem).is_zero():
                        hd2 = _renorm(quo)
                    else:
                        break
            horb = lift_to_bivariate(dtower.modulus, hd2, "x", "y") if hd2.degree >= 1 else hqq
            orbits.append(
                PointOrbit(
                    chart="",
                    xpoly=p,
                    hpoly=horb,
                    size=2 * npair,
                    reality="ConjugatePair" if npair == 1 else "LargerOrbit",
                    n_real=0,
                    n_pairs=npair,
                    xbox=x0.box,
                    coords=[],
                )
            )
    if xpairs:
        # all non-real-x points of the branch form one symbolic orbit
        deg_y = h.degree
        size = 2 * len(xpairs) * deg_y
        if size:
            orbits.append(
                PointOrbit(
                    chart="",
                    xpoly=p,
                    hpoly=hqq,
                    size=size,
                    reality="ConjugatePair" if size == 2 else "LargerOrbit",
                    n_real=0,
                    n_pairs=size // 2,
                    coords=[_coords_pairs(p, xpairs)],
                )
            )
    final = []
    for o in orbits:
        final.extend(_attach_mult(o, f))
    return final


def _pair_box_for(quad: UniPoly) -> ComplexBox:
    _, pairs = complex_roots(quad)
    return pairs[0].box


def _coords_rat_alg(xq: Fraction, y0: AlgebraicNumber):
    return {"x": {"rational": str(xq)}, "y": _alg_repr(y0)}


def _coords_rat_pair(xq: Fraction, box: ComplexBox):
    return {
        "x": {"rational": str(xq)},
        "y": {
            "re": [str(box.re.lo), str(box.re.hi)],
            "im": [str(box.im.lo), str(box.im.hi)],
            "conjugate_pair": True,
        },
    }


def _coords_alg_alg(p: UniPoly, x0: AlgebraicNumber, y0: AlgebraicNumber):
    return {"x": _alg_repr(x0), "y": _alg_repr(y0)}


def _coords_pairs(p: UniPoly, xpairs):
    return {
        "x": {
            "minpoly": [str(c) for c in p.coeffs],
            "boxes": [
                {
                    "re": [str(pr.box.re.lo), str(pr.box.re.hi)],
                    "im": [str(pr.box.im.lo), str(pr.box.im.hi)],
                }
                for pr in xpairs
            ],
        }
    }


def _alg_repr(a: AlgebraicNumber):
    if a.is_rational():
        return {"rational": str(a.rational_value())}
    return {
        "minpoly": [str(c) for c in a.poly.coeffs],
        "box": [str(a.box.lo), str(a.box.hi)],
    }


def _infinity_singular_orbits(C: ProjCurve) -> list[PointOrbit]:
    """Singular orbits on the line Z = 0 (affine charts Y=1 then X=1)."""
    out = []
    # points [x : 1 : 0]: roots of b(x) = F(x, 1, 0)
    b = _binary_restrict(C.form)
    gx, gy, gz = C.gradient()
    if not b.is_zero():
        for branch in _branches(b.primitive().squarefree_part().primitive()):
            orbit = _inf_branch_orbits(branch, C)
            out.extend(orbit)
    # the point [1 : 0 : 0]
    if C.form.terms.get((C.degree, 0, 0), 0) == 0:
        if _gradient_zero_at_100(C):
            f = C.dehomogenize("X")  # (x, y) = (Y, Z), point at origin
            out.append(
                PointOrbit(
                    chart="X",
                    xpoly=UniPoly([Fraction(0), Fraction(1)]),
                    hpoly=MultiPoly(AFF_VARS, {(0, 1): Fraction(1)}),
                    size=1,
                    reality="Real",
                    n_real=1,
                    n_pairs=0,
                    xbox=Interval(0, 0),
                    ybox=Interval(0, 0),
                    coords=[{"point": "[1:0:0]"}],
                )
            )
    return out


def _binary_restrict(F: MultiPoly) -> UniPoly:
    """F(x, 1, 0) as a univariate polynomial."""
    out = {}
    for (i, j, k), c in F.terms.items():
        if k == 0:
            out[i] = out.get(i, Fraction(0)) + c
    d = max(out) if out else -1
    return UniPoly([out.get(t, Fraction(0)) for t in range(d + 1)])


def _gradient_zero_at_100(C: ProjCurve) -> bool:
    for g in C.gradient():
        v = g.terms.get((C.degree - 1, 0, 0), 0)
        if v:
            return False
    return True


def _inf_branch_orbits(p: UniPoly, C: ProjCurve) -> list[PointOrbit]:
    """Singular orbits among the points [x0 : 1 : 0], x0 a root of p."""
    orbits = []
    # the point is singular iff all three gradient components vanish there
    grads = [_binary_restrict(g) for g in C.gradient()]
    common = p
    for gp in grads:
        if gp.is_zero():
            continue
        common = poly_gcd(common, gp)
        if common.degree <= 0:
            return []
    common = common.primitive()
    fY = C.dehomogenize("Y")  # local chart for multiplicities, (x, z)
    for branch in _branches(common):
        reals, pairs = complex_roots(branch)
        for x0 in reals:
            orbits.append(
                PointOrbit(
                    chart="Y",
                    xpoly=branch,
                    hpoly=MultiPoly(AFF_VARS, {(0, 1): Fraction(1)}),  # y (=z) = 0
                    size=1,
                    reality="Real",
                    n_real=1,
                    n_pairs=0,
                    xbox=x0.box,
                    ybox=Interval(0, 0),
                    coords=[{"x": _alg_repr(x0), "y": {"rational": "0"}, "at_infinity": True}],
                )
            )
        if pairs:
            size = 2 * len(pairs)
            orbits.append(
                PointOrbit(
                    chart="Y",
                    xpoly=branch,
                    hpoly=MultiPoly(AFF_VARS, {(0, 1): Fraction(1)}),
                    size=size,
                    reality="ConjugatePair" if size == 2 else "LargerOrbit",
                    n_real=0,
                    n_pairs=len(pairs),
                    coords=[_coords_pairs(branch, pairs)],
                )
            )
    return orbits


# ---------------------------------------------------------------------------
# multiplicity, tangent cone
# ---------------------------------------------------------------------------


def orbit_multiplicity(orbit: PointOrbit, affine: MultiPoly) -> int:
    germ = orbit.germ(affine)
    return germ_multiplicity(germ)


def germ_multiplicity(germ: MultiPoly) -> int:
    best = None
    for e, c in germ.terms.items():
        d = sum(e)
        if best is not None and d >= best:
            continue
        if c:
            best = d
    if best is None:
        raise PointNotOnCurve("curve vanishes identically at the point?")
    return best


def germ_lowest_form(germ: MultiPoly) -> MultiPoly:
    m = germ_multiplicity(germ)
    return MultiPoly(germ.vars, {e: c for e, c in germ.terms.items() if sum(e) == m and c})


@dataclass
class TangentCone:
    multiplicity: int
    factors: list  # (description, exponent, reality) descriptions
    lowest_form: MultiPoly

    def reality_tags(self):
        return [r for (_, _, r) in self.factors]


def tangent_cone(C: ProjCurve, orbit: PointOrbit) -> TangentCone:
    """Factored lowest-degree form of the local equation at the orbit.

    Factor reality is decided exactly: linear factors found over the orbit's
    field, quadratic (and higher even) leftovers tagged by real-root counts.
    """
    f = C.dehomogenize(orbit.chart if orbit.chart else "Z")
    tower, germ = orbit.local(f)
    if germ.terms.get((0, 0), 0):
        raise PointNotOnCurve("orbit not on the curve")
    low = germ_lowest_form(germ)
    m = germ_multiplicity(germ)
    factors = _factor_binary_form(low, tower, orbit)
    return TangentCone(multiplicity=m, factors=factors, lowest_form=low)


def _factor_binary_form(low: MultiPoly, tower, orbit: PointOrbit) -> list:
    """Squarefree-split a binary form in (u, v) over the orbit's field and tag
    the reality of each group of directions."""
    m = low.total_degree()
    # dehomogenize: directions v = t*u ; root at u = 0 handled separately
    coeffs = {}
    for (i, j), c in low.terms.items():
        coeffs[j] = coeffs.get(j, 0) + c
    d = max(coeffs)
    if tower is None:
        poly = UniPoly([Fraction(coeffs.get(k, 0)) for k in range(d + 1)])
    else:
        poly = UniPoly([tower.coerce(coeffs.get(k, 0)) for k in range(d + 1)])
    factors = []
    ucount = m - d  # exponent of the direction u = 0 (vertical tangent)
    if ucount > 0:
        factors.append(("direction v-axis", ucount, "Real"))
    if d == 0:
        return factors
    if tower is None:
        factors.extend(_factor_qq_direction_poly(poly))
    else:
        factors.extend(_factor_tower_direction_poly(tower, poly))
    return factors


def _factor_qq_direction_poly(poly: UniPoly) -> list:
    out = []
    # multiplicity structure via squarefree decomposition (Yun)
    for (sq, mult) in squarefree_decomposition(poly):
        if sq.degree <= 0:
            continue
        reals, pairs = complex_roots(sq)
        for r in reals:
            out.append((f"real direction {r.approx():.6g}", mult, "Real"))
        for _pr in pairs:
            out.append(("conjugate direction pair", mult, "ConjugatePair"))
    return out


def _factor_tower_direction_poly(tower, poly: UniPoly) -> list:
    out = []
    poly = _renorm(poly)
    mult_struct = _yun_generic(poly, lambda a, b: _tower_gcd(tower, a, b))
    designated = tower.designated()
    for (sq, mult) in mult_struct:
        if sq.degree <= 0:
            continue
        if designated:
            rivs = tower_isolate_real_roots(tower, sq)
            for _iv in rivs:
                out.append(("real direction", mult, "Real"))
            npair = (sq.degree - len(rivs)) // 2
            for _ in range(npair):
                out.append(("conjugate direction pair", mult, "ConjugatePair"))
        else:
            out.append((f"direction factor deg {sq.degree}", mult, "NonRealOrbit"))
    return out


def _yun_generic(p: UniPoly, gcdf):
    """Yun's squarefree decomposition with a supplied gcd (field of char 0)."""
    p = _renorm(p).monic()
    if p.degree <= 0:
        return []
    d = _renorm(p.derivative())
    a = gcdf(p, d)
    if a.degree == 0:
        return [(p, 1)]
    out = []
    b = p.divide_exact(a)
    c = d.divide_exact(a)
    i = 1
    while b.degree > 0:
        z = _renorm(c - b.derivative())
        g = gcdf(b, z)
        if g.degree > 0:
            out.append((g, i))
            b = _renorm(b.divide_exact(g))
            c = _renorm(z.divide_exact(g))
        else:
            c = z
        i += 1
    return out


def squarefree_decomposition(p: UniPoly):
    """Yun's algorithm over QQ: [(factor, multiplicity)], factors squarefree,
    product of factor^mult = p up to a constant."""
    p = p.primitive()
    if p.degree <= 0:
        return []
    d = p.derivative()
    a = poly_gcd(p, d)
    if a.degree == 0:
        return [(p, 1)]
    out = []
    b = p.divide_exact(a)
    c = d.divide_exact(a)
    i = 1
    while b.degree > 0:
        z = c - b.derivative()
        g = poly_gcd(b, z)
        if g.degree > 0:
            out.append((g.primitive(), i))
            b = b.divide_exact(g)
            c = z.divide_exact(g)
        else:
            c = z
        i += 1
    return out
