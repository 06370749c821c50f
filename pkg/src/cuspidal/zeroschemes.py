"""Zero-dimensional schemes as linear functionals on form coefficients.

Three kinds of generators are supported, each contributing rows to a
condition matrix over the monomial basis of the ambient form space:

* ruling divisors m*o on a ruling: the restriction of a form to the
  ruling must vanish to order >= m at o;
* fat points (squared maximal ideal): value and both first partials in
  an affine chart vanish, 3 conditions;
* cusp schemes forcing an A_2h singularity: in sheared local
  coordinates (u, v) with u along the tangent, the Taylor coefficients
  c_i0 (i <= 2h) and c_i1 (i <= h) vanish, 3h+2 conditions; this is
  membership in the ideal (v^2, v*u^(h+1), u^(2h+1)).

Supports of distinct generators must be pairwise disjoint points.
"""

from __future__ import annotations

from .binform import P1Point
from .bipoly import BiPoly
from .errors import (DegreeNegative, PointNotOnLine, VertexSupport,
                     WorkbenchError, ZeroTangent)
from .fields import Field, FieldElement
from .unipoly import Poly
from .surfaces import (BiForm, ConeForm, SurfacePoint, cone_monomials,
                       quadric_monomials)


class Ruling:
    """A ruling of the ambient surface.

    On the quadric: family "x" is |O(1,0)| = {x = value} (restriction of
    a bidegree (d1,d2) form has degree d2), family "y" is |O(0,1)|.
    On the cone: the line through the vertex with base parameter (s:t).
    """

    __slots__ = ("ambient", "family", "value")

    def __init__(self, ambient, family, value: P1Point):
        self.ambient = ambient
        self.family = family
        self.value = value

    @classmethod
    def quadric_x(cls, value: P1Point):
        return cls("quadric", "x", value)

    @classmethod
    def quadric_y(cls, value: P1Point):
        return cls("quadric", "y", value)

    @classmethod
    def cone_through(cls, p: SurfacePoint):
        return cls("cone", "ruling", p.ruling_base())

    def contains(self, p: SurfacePoint) -> bool:
        if self.ambient != p.ambient:
            return False
        if self.ambient == "quadric":
            return (p.px == self.value) if self.family == "x" else (p.py == self.value)
        if p.is_vertex:
            return True
        return p.ruling_base() == self.value

    def __eq__(self, other):
        if not isinstance(other, Ruling):
            return NotImplemented
        return (self.ambient == other.ambient and self.family == other.family
                and self.value == other.value)

    def __repr__(self):
        if self.ambient == "quadric":
            return "{%s = %r}" % (self.family, self.value)
        return "ruling(%r)" % (self.value,)

    def describe(self):
        return {"ambient": self.ambient, "family": self.family,
                "value": repr(self.value)}


def _centered_coefficients(field, deg, j, pt: P1Point, count):
    """First ``count`` coefficients of the monomial z0^(deg-j) z1^j after
    moving pt to (1:0): the basis change z = pt*w0 + complement*w1.

    Returns coefficients of w1^e for e < count, as a list.
    """
    c0, c1 = pt.complement()
    # (pt.a + c0*w)^(deg-j) * (pt.b + c1*w)^j as a polynomial in w
    f1 = Poly(field, (pt.a, c0)) ** (deg - j)
    f2 = Poly(field, (pt.b, c1)) ** j
    prod = f1 * f2
    return [prod[e] for e in range(count)]


class Generator:
    kind = "abstract"

    @property
    def degree(self) -> int:
        raise NotImplementedError

    @property
    def support(self) -> SurfacePoint:
        raise NotImplementedError


class RulingDivisorGen(Generator):
    kind = "ruling_divisor"

    def __init__(self, line: Ruling, point: SurfacePoint, multiplicity: int):
        if multiplicity < 1:
            raise WorkbenchError("multiplicity must be positive")
        if not line.contains(point):
            raise PointNotOnLine("%r does not lie on %r" % (point, line))
        if point.ambient == "cone" and point.is_vertex:
            raise VertexSupport("the cone vertex cannot support a scheme")
        self.line = line
        self.point = point
        self.multiplicity = multiplicity

    @property
    def degree(self):
        return self.multiplicity

    @property
    def support(self):
        return self.point

    def rows_quadric(self, d1, d2):
        field = self.point.field
        m = self.multiplicity
        monos = quadric_monomials(d1, d2)
        if self.line.family == "x":
            a = self.line.value
            free_pt, free_deg = self.point.py, d2
            scalars_i = [a.a ** (d1 - i) * a.b ** i for i in range(d1 + 1)]
            centered = [_centered_coefficients(field, free_deg, j, free_pt, m)
                        for j in range(d2 + 1)]
            rows = []
            for e in range(m):
                rows.append([scalars_i[i] * centered[j][e] for (i, j) in monos])
            return rows
        b = self.line.value
        free_pt, free_deg = self.point.px, d1
        scalars_j = [b.a ** (d2 - j) * b.b ** j for j in range(d2 + 1)]
        centered = [_centered_coefficients(field, free_deg, i, free_pt, m)
                    for i in range(d1 + 1)]
        rows = []
        for e in range(m):
            rows.append([centered[i][e] * scalars_j[j] for (i, j) in monos])
        return rows

    def rows_cone(self, d):
        field = self.point.field
        m = self.multiplicity
        base = self.line.value
        par = self.point.ruling_parameter()
        sp = [base.a ** k for k in range(2 * d + 1)]
        tp = [base.b ** k for k in range(2 * d + 1)]
        centered = [_centered_coefficients(field, d, g, par, m)
                    for g in range(d + 1)]
        rows = []
        for e in range(m):
            row = []
            for (a, ee, b, g) in cone_monomials(d):
                row.append(sp[2 * a + ee] * tp[ee + 2 * b] * centered[g][e])
            rows.append(row)
        return rows

    def describe(self):
        return {"kind": self.kind, "line": self.line.describe(),
                "point": repr(self.point), "multiplicity": self.multiplicity}


class FatPointGen(Generator):
    kind = "fat_point"

    def __init__(self, point: SurfacePoint):
        if point.ambient == "cone" and point.is_vertex:
            raise VertexSupport("the cone vertex cannot support a scheme")
        self.point = point

    @property
    def degree(self):
        return 3

    @property
    def support(self):
        return self.point

    def _expansions(self, d1, d2=None):
        field = self.point.field
        U = BiPoly.variable(field, "u")
        V = BiPoly.variable(field, "v")
        if self.point.ambient == "quadric":
            return _quadric_monomial_expansions(self.point, d1, d2, U, V, 2, 2)
        return _cone_monomial_expansions(self.point, d1, U, V, 2, 2)

    def rows_quadric(self, d1, d2):
        exps = self._expansions(d1, d2)
        return [[e.coeff(0, 0) for e in exps],
                [e.coeff(1, 0) for e in exps],
                [e.coeff(0, 1) for e in exps]]

    def rows_cone(self, d):
        exps = self._expansions(d)
        return [[e.coeff(0, 0) for e in exps],
                [e.coeff(1, 0) for e in exps],
                [e.coeff(0, 1) for e in exps]]

    def describe(self):
        return {"kind": self.kind, "point": repr(self.point)}


class CuspSchemeGen(Generator):
    """A_2h singularity scheme: ideal (v^2, v u^(h+1), u^(2h+1)) in the
    sheared chart with u along the given tangent direction."""

    kind = "cusp_scheme"

    def __init__(self, point: SurfacePoint, tangent, h: int):
        if h < 1:
            raise WorkbenchError("cusp order h must be positive")
        if point.ambient == "cone" and point.is_vertex:
            raise VertexSupport("the cone vertex cannot support a scheme")
        field = point.field
        t1, t2 = (t if isinstance(t, FieldElement) else field.element(t)
                  for t in tangent)
        if t1.is_zero() and t2.is_zero():
            raise ZeroTangent("tangent direction must be nonzero")
        self.point = point
        self.tangent = (t1, t2)
        self.h = h

    @property
    def degree(self):
        return 3 * self.h + 2

    @property
    def support(self):
        return self.point

    def shear(self):
        """Local frame: chart displacement (e1, e2) as BiPolys in (U, V)
        with the U-axis along the tangent."""
        field = self.point.field
        t1, t2 = self.tangent
        if not t1.is_zero():
            s1, s2 = field.zero(), field.one()
        else:
            s1, s2 = field.one(), field.zero()
        U = BiPoly.variable(field, "u")
        V = BiPoly.variable(field, "v")
        e1 = U * t1 + V * s1
        e2 = U * t2 + V * s2
        return e1, e2

    def _expansions(self, d1, d2=None, tv=2):
        e1, e2 = self.shear()
        tu = 2 * self.h + 1
        if self.point.ambient == "quadric":
            return _quadric_monomial_expansions(self.point, d1, d2, e1, e2, tu, tv)
        return _cone_monomial_expansions(self.point, d1, e1, e2, tu, tv)

    def _rows(self, exps):
        rows = []
        for i in range(2 * self.h + 1):
            rows.append([e.coeff(i, 0) for e in exps])
        for i in range(self.h + 1):
            rows.append([e.coeff(i, 1) for e in exps])
        return rows

    def rows_quadric(self, d1, d2):
        return self._rows(self._expansions(d1, d2))

    def rows_cone(self, d):
        return self._rows(self._expansions(d))

    def describe(self):
        return {"kind": self.kind, "point": repr(self.point),
                "tangent": [repr(t) for t in self.tangent], "h": self.h}


def _quadric_monomial_expansions(p, d1, d2, e1, e2, tu, tv):
    """Truncated local expansions of every bidegree monomial at p."""
    field = p.field
    cxa, cxb = p.px.complement()
    cya, cyb = p.py.complement()
    x0e = BiPoly.constant(field, p.px.a) + e1 * cxa
    x1e = BiPoly.constant(field, p.px.b) + e1 * cxb
    y0e = BiPoly.constant(field, p.py.a) + e2 * cya
    y1e = BiPoly.constant(field, p.py.b) + e2 * cyb
    x0p = _pows(x0e, d1, tu, tv)
    x1p = _pows(x1e, d1, tu, tv)
    y0p = _pows(y0e, d2, tu, tv)
    y1p = _pows(y1e, d2, tu, tv)
    out = []
    for (i, j) in quadric_monomials(d1, d2):
        t = x0p[d1 - i].mul_trunc(x1p[i], tu, tv)
        t = t.mul_trunc(y0p[d2 - j], tu, tv)
        t = t.mul_trunc(y1p[j], tu, tv)
        out.append(t)
    return out


def _cone_monomial_expansions(p, d, e1, e2, tu, tv):
    field = p.field
    which = 0 if not p.coords[0].is_zero() else 2
    if which == 0:
        inv = p.coords[0].inverse()
    else:
        inv = p.coords[2].inverse()
    u0 = p.coords[1] * inv
    w0 = p.coords[3] * inv
    uexpr = BiPoly.constant(field, u0) + e1
    wexpr = BiPoly.constant(field, w0) + e2
    usq = uexpr.mul_trunc(uexpr, tu, tv)
    one = BiPoly.constant(field, field.one())
    if which == 0:
        c0, c1, c2, c3 = one, uexpr, usq, wexpr
    else:
        c0, c1, c2, c3 = usq, uexpr, one, wexpr
    p0 = _pows(c0, d, tu, tv)
    p2 = _pows(c2, d, tu, tv)
    p3 = _pows(c3, d, tu, tv)
    out = []
    for (a, e, b, g) in cone_monomials(d):
        t = p0[a].mul_trunc(p2[b], tu, tv)
        t = t.mul_trunc(p3[g], tu, tv)
        if e:
            t = t.mul_trunc(c1, tu, tv)
        out.append(t)
    return out


def _pows(b, n, tu, tv):
    out = [BiPoly.constant(b.field, b.field.one())]
    for _ in range(n):
        out.append(out[-1].mul_trunc(b, tu, tv))
    return out


class ZeroScheme:
    """Finite union of generators with pairwise disjoint supports."""

    __slots__ = ("ambient", "field", "generators")

    def __init__(self, ambient, field, generators):
        gens = tuple(generators)
        pts = [g.support for g in gens]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if pts[i] == pts[j]:
                    raise WorkbenchError(
                        "generators share the support point %r" % (pts[i],))
        self.ambient = ambient
        self.field = field
        self.generators = gens

    @property
    def degree(self) -> int:
        return sum(g.degree for g in self.generators)

    def union(self, other: "ZeroScheme") -> "ZeroScheme":
        if self.ambient != other.ambient or self.field != other.field:
            raise WorkbenchError("schemes in different ambients")
        return ZeroScheme(self.ambient, self.field,
                          self.generators + other.generators)

    def support(self):
        return [g.support for g in self.generators]

    def describe(self):
        return {"ambient": self.ambient, "degree": self.degree,
                "generators": [g.describe() for g in self.generators]}

    def __repr__(self):
        return "ZeroScheme(%s, deg %d, %d generators)" % (
            self.ambient, self.degree, len(self.generators))


def empty_scheme(ambient, field) -> ZeroScheme:
    return ZeroScheme(ambient, field, ())


def ruling_divisor(line: Ruling, o: SurfacePoint, m: int) -> ZeroScheme:
    """Degree-m scheme: forms restricted to the line vanish to order >= m at o."""
    return ZeroScheme(o.ambient, o.field, (RulingDivisorGen(line, o, m),))


def fat_point(p: SurfacePoint) -> ZeroScheme:
    """Degree-3 scheme cut out by the square of the maximal ideal at p."""
    return ZeroScheme(p.ambient, p.field, (FatPointGen(p),))


def cusp_scheme(p: SurfacePoint, tangent, h: int) -> ZeroScheme:
    """Degree-(3h+2) scheme forcing an A_2h singularity at p along the tangent."""
    return ZeroScheme(p.ambient, p.field, (CuspSchemeGen(p, tangent, h),))


def condition_matrix(Z: ZeroScheme, degree):
    """Rows of all functionals of Z on the ambient monomial basis.

    ``degree`` is a bidegree pair for the quadric or an integer for the
    cone.  Row count equals deg(Z); columns follow
    :func:`quadric_monomials` / :func:`cone_monomials`.
    """
    rows = []
    if Z.ambient == "quadric":
        d1, d2 = degree
        if d1 < 0 or d2 < 0:
            raise DegreeNegative("bidegree must be nonnegative")
        for g in Z.generators:
            rows.extend(g.rows_quadric(d1, d2))
    else:
        d = degree
        if d < 1:
            raise DegreeNegative("cone degree must be >= 1")
        for g in Z.generators:
            rows.extend(g.rows_cone(d))
    return rows
