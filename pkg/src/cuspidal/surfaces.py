"""Points and forms on the smooth quadric P1xP1 and the quadric cone.

Conventions:

* A bidegree-(d1, d2) form stores ``coeffs[(i, j)]`` for the monomial
  x0^(d1-i) x1^i y0^(d2-j) y1^j.  Rulings of the family |O(1,0)| are
  {x = a} (first factor fixed); restricting a form to one gives a
  degree-d2 binary form in (y0, y1), and symmetrically for |O(0,1)|.
* The cone is {X0*X2 = X1^2} in P3 with vertex (0:0:0:1).  Degree-d
  forms are reduced modulo the cone equation to the monomial basis
  {X0^a X1^e X2^b X3^c : e in {0,1}}, of size (d+1)^2.  The ruling with
  base parameter (s:t) is (lam*s^2 : lam*s*t : lam*t^2 : mu).
"""

from __future__ import annotations

from fractions import Fraction

from .binform import BinaryForm, P1Point
from .bipoly import BiPoly
from .errors import ParseError, WorkbenchError
from .fields import Field, FieldElement
from .grammar import (format_polynomial, parse_p3_point, parse_polynomial,
                      parse_quadric_point)


class SurfacePoint:
    """A point of the smooth quadric (pair of P1 points) or of the cone
    (P3 point satisfying the cone equation exactly)."""

    __slots__ = ("ambient", "field", "px", "py", "coords")

    def __init__(self, ambient, field, px=None, py=None, coords=None):
        self.ambient = ambient
        self.field = field
        self.px = px
        self.py = py
        self.coords = coords

    @classmethod
    def quadric(cls, px: P1Point, py: P1Point) -> "SurfacePoint":
        if px.field != py.field:
            raise WorkbenchError("factors over different fields")
        return cls("quadric", px.field, px=px, py=py)

    @classmethod
    def cone(cls, field, coords) -> "SurfacePoint":
        cs = [c if isinstance(c, FieldElement) else field.element(c) for c in coords]
        if len(cs) != 4:
            raise WorkbenchError("cone points live in P3")
        if all(c.is_zero() for c in cs):
            raise WorkbenchError("(0:0:0:0) is not a point")
        if cs[0] * cs[2] != cs[1] * cs[1]:
            raise WorkbenchError("point does not satisfy the cone equation")
        first = next(i for i, c in enumerate(cs) if not c.is_zero())
        inv = cs[first].inverse()
        cs = tuple(c * inv for c in cs)
        return cls("cone", field, coords=cs)

    @property
    def is_vertex(self) -> bool:
        return (self.ambient == "cone"
                and all(self.coords[i].is_zero() for i in range(3)))

    def ruling_base(self) -> P1Point:
        """Base parameter (s:t) of the cone ruling through a non-vertex point."""
        if self.ambient != "cone":
            raise WorkbenchError("ruling_base is a cone-point operation")
        if self.is_vertex:
            raise WorkbenchError("every ruling passes through the vertex")
        x0, x1, x2 = self.coords[0], self.coords[1], self.coords[2]
        if not x0.is_zero():
            return P1Point(self.field, x0, x1)
        return P1Point.infinity(self.field)

    def ruling_parameter(self) -> P1Point:
        """Parameter (lam:mu) of the point on its own ruling."""
        base = self.ruling_base()
        if not base.a.is_zero():
            return P1Point(self.field, self.coords[0], self.coords[3])
        return P1Point(self.field, self.coords[2], self.coords[3])

    def map_field(self, new_field) -> "SurfacePoint":
        if self.ambient == "quadric":
            return SurfacePoint.quadric(self.px.map_field(new_field),
                                        self.py.map_field(new_field))
        return SurfacePoint.cone(new_field,
                                 [new_field.element(c) for c in self.coords])

    def __eq__(self, other):
        if not isinstance(other, SurfacePoint):
            return NotImplemented
        if self.ambient != other.ambient:
            return False
        if self.ambient == "quadric":
            return self.px == other.px and self.py == other.py
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        if self.ambient == "quadric":
            return hash(("q", self.px, self.py))
        return hash(("c", self.field.key, tuple(c.val for c in self.coords)))

    def __repr__(self):
        if self.ambient == "quadric":
            return "(%r,%r)" % (self.px, self.py)
        return "(" + ":".join(repr(c) for c in self.coords) + ")"


def parse_surface_point(text: str, field, ambient: str) -> SurfacePoint:
    if ambient == "quadric":
        (a, b), (c, d) = parse_quadric_point(text)
        return SurfacePoint.quadric(P1Point(field, field.element(a), field.element(b)),
                                    P1Point(field, field.element(c), field.element(d)))
    coords = parse_p3_point(text)
    return SurfacePoint.cone(field, [field.element(c) for c in coords])


class BiForm:
    """Bihomogeneous form of bidegree (d1, d2) on P1 x P1."""

    __slots__ = ("field", "d1", "d2", "coeffs")

    def __init__(self, field, d1: int, d2: int, coeffs: dict):
        clean = {}
        for (i, j), c in coeffs.items():
            if not (0 <= i <= d1 and 0 <= j <= d2):
                raise WorkbenchError("exponent (%d,%d) out of bidegree (%d,%d)"
                                     % (i, j, d1, d2))
            c = c if isinstance(c, FieldElement) else field.element(c)
            if not c.is_zero():
                clean[(i, j)] = c
        self.field = field
        self.d1 = d1
        self.d2 = d2
        self.coeffs = clean

    @property
    def bidegree(self):
        return (self.d1, self.d2)

    def is_zero(self) -> bool:
        return not self.coeffs

    @classmethod
    def zero(cls, field, d1, d2):
        return cls(field, d1, d2, {})

    @classmethod
    def from_vector(cls, field, d1, d2, vec):
        """Coefficient vector in the monomial order of :func:`monomials`."""
        out = {}
        for k, (i, j) in enumerate(quadric_monomials(d1, d2)):
            out[(i, j)] = vec[k]
        return cls(field, d1, d2, out)

    def to_vector(self):
        return [self.coeffs.get(m, self.field.zero())
                for m in quadric_monomials(self.d1, self.d2)]

    @classmethod
    def from_string(cls, text: str, field, bidegree=None) -> "BiForm":
        cm = parse_polynomial(text, ("x0", "x1", "y0", "y1"))
        if not cm:
            raise ParseError("zero form")
        xdeg = {e[0] + e[1] for e in cm}
        ydeg = {e[2] + e[3] for e in cm}
        if len(xdeg) != 1 or len(ydeg) != 1:
            raise ParseError("form is not bihomogeneous")
        d1, d2 = xdeg.pop(), ydeg.pop()
        if bidegree is not None and (d1, d2) != tuple(bidegree):
            raise ParseError("form has bidegree (%d,%d), expected %r"
                             % (d1, d2, bidegree))
        out = {}
        for (e0, e1, e2, e3), c in cm.items():
            out[(e1, e3)] = field.element(c)
        return cls(field, d1, d2, out)

    def to_string(self) -> str:
        cm = {}
        for (i, j), c in self.coeffs.items():
            cm[(self.d1 - i, i, self.d2 - j, j)] = c
        return format_polynomial(cm, ("x0", "x1", "y0", "y1"), value_repr=repr)

    def eval(self, p: SurfacePoint) -> FieldElement:
        return self.eval_raw(p.px.a, p.px.b, p.py.a, p.py.b)

    def eval_raw(self, x0, x1, y0, y1) -> FieldElement:
        field = self.field
        vals = [v if isinstance(v, FieldElement) else field.element(v)
                for v in (x0, x1, y0, y1)]
        x0, x1, y0, y1 = vals
        x0p = _powers(x0, self.d1)
        x1p = _powers(x1, self.d1)
        y0p = _powers(y0, self.d2)
        y1p = _powers(y1, self.d2)
        acc = field.zero()
        for (i, j), c in self.coeffs.items():
            acc = acc + c * x0p[self.d1 - i] * x1p[i] * y0p[self.d2 - j] * y1p[j]
        return acc

    def restrict_x(self, a: P1Point) -> BinaryForm:
        """Restriction to the ruling {x = a} of |O(1,0)|: a form in (y0, y1)."""
        x0p = _powers(a.a, self.d1)
        x1p = _powers(a.b, self.d1)
        out = [self.field.zero()] * (self.d2 + 1)
        for (i, j), c in self.coeffs.items():
            out[j] = out[j] + c * x0p[self.d1 - i] * x1p[i]
        return BinaryForm(self.field, self.d2, out)

    def restrict_y(self, b: P1Point) -> BinaryForm:
        """Restriction to the ruling {y = b} of |O(0,1)|: a form in (x0, x1)."""
        y0p = _powers(b.a, self.d2)
        y1p = _powers(b.b, self.d2)
        out = [self.field.zero()] * (self.d1 + 1)
        for (i, j), c in self.coeffs.items():
            out[i] = out[i] + c * y0p[self.d2 - j] * y1p[j]
        return BinaryForm(self.field, self.d1, out)

    def partial(self, var: str) -> "BiForm":
        out = {}
        if var == "x0":
            for (i, j), c in self.coeffs.items():
                e = self.d1 - i
                if e > 0:
                    out[(i, j)] = c * e
            return BiForm(self.field, self.d1 - 1, self.d2, out)
        if var == "x1":
            for (i, j), c in self.coeffs.items():
                if i > 0:
                    out[(i - 1, j)] = c * i
            return BiForm(self.field, self.d1 - 1, self.d2, out)
        if var == "y0":
            for (i, j), c in self.coeffs.items():
                e = self.d2 - j
                if e > 0:
                    out[(i, j)] = c * e
            return BiForm(self.field, self.d1, self.d2 - 1, out)
        if var == "y1":
            for (i, j), c in self.coeffs.items():
                if j > 0:
                    out[(i, j - 1)] = c * j
            return BiForm(self.field, self.d1, self.d2 - 1, out)
        raise WorkbenchError("unknown variable %r" % var)

    def dehomogenize(self, chart) -> BiPoly:
        """Affine equation in chart (cx, cy): set x_cx = 1 and y_cy = 1.

        The affine coordinate is the other projective coordinate of each
        factor, so chart (0,0) gives F(1, u, 1, v).
        """
        cx, cy = chart
        out = {}
        for (i, j), c in self.coeffs.items():
            eu = i if cx == 0 else self.d1 - i
            ev = j if cy == 0 else self.d2 - j
            out[(eu, ev)] = out.get((eu, ev), self.field.zero()) + c
        return BiPoly(self.field, out)

    def is_smooth_point(self, p: SurfacePoint) -> bool:
        """Jacobian criterion at a point of the curve F = 0: smooth iff
        some partial derivative does not vanish there."""
        for var in ("x0", "x1", "y0", "y1"):
            if not self.partial(var).eval(p).is_zero():
                return True
        return False

    def normalized(self) -> "BiForm":
        """Scale so the first nonzero coefficient (lex monomial order) is 1."""
        if self.is_zero():
            return self
        key = min(self.coeffs.keys())
        inv = self.coeffs[key].inverse()
        return BiForm(self.field, self.d1, self.d2,
                      {k: c * inv for k, c in self.coeffs.items()})

    def is_exact_bidegree(self) -> bool:
        """No common x0/x1/y0/y1 factor; the nominal bidegree is achieved."""
        if self.is_zero():
            return False
        is_ = [k[0] for k in self.coeffs]
        js = [k[1] for k in self.coeffs]
        return (min(is_) == 0 and max(is_) == self.d1
                and min(js) == 0 and max(js) == self.d2)

    def map_field(self, new_field) -> "BiForm":
        return BiForm(new_field, self.d1, self.d2,
                      {k: new_field.element(c) for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        return (self.field == other.field and self.bidegree == other.bidegree
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return self.to_string()


def _powers(x: FieldElement, n: int):
    out = [x.field.one()]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def quadric_monomials(d1: int, d2: int):
    """Column order of the bidegree-(d1,d2) monomial basis."""
    return [(i, j) for i in range(d1 + 1) for j in range(d2 + 1)]


QUADRIC_CHARTS = ((0, 0), (0, 1), (1, 0), (1, 1))


def quadric_point_in_chart(p: SurfacePoint, chart):
    """Affine coordinates of p in the chart, or None if outside."""
    cx, cy = chart
    xc = (p.px.a, p.px.b) if cx == 0 else (p.px.b, p.px.a)
    yc = (p.py.a, p.py.b) if cy == 0 else (p.py.b, p.py.a)
    if xc[0].is_zero() or yc[0].is_zero():
        return None
    return xc[1] / xc[0], yc[1] / yc[0]


def quadric_chart_point(field, chart, u, v) -> SurfacePoint:
    """Inverse of :func:`quadric_point_in_chart`."""
    cx, cy = chart
    one = field.one()
    u = u if isinstance(u, FieldElement) else field.element(u)
    v = v if isinstance(v, FieldElement) else field.element(v)
    px = P1Point(field, one, u) if cx == 0 else P1Point(field, u, one)
    py = P1Point(field, one, v) if cy == 0 else P1Point(field, v, one)
    return SurfacePoint.quadric(px, py)


def quadric_local_expansion(F: BiForm, p: SurfacePoint,
                            ex: BiPoly, ey: BiPoly,
                            tu: int, tv: int) -> BiPoly:
    """Expansion of F along the affine chart at p.

    The first factor moves as p.x + ex(U,V) * complement(p.x) and the
    second as p.y + ey(U,V) * complement(p.y); the result is truncated
    to U-exponents < tu and V-exponents < tv.
    """
    field = F.field
    cxa, cxb = p.px.complement()
    cya, cyb = p.py.complement()
    x0e = BiPoly.constant(field, p.px.a) + ex * cxa
    x1e = BiPoly.constant(field, p.px.b) + ex * cxb
    y0e = BiPoly.constant(field, p.py.a) + ey * cya
    y1e = BiPoly.constant(field, p.py.b) + ey * cyb
    x0p = _bipoly_powers(x0e, F.d1, tu, tv)
    x1p = _bipoly_powers(x1e, F.d1, tu, tv)
    y0p = _bipoly_powers(y0e, F.d2, tu, tv)
    y1p = _bipoly_powers(y1e, F.d2, tu, tv)
    acc = BiPoly.zero(field)
    for (i, j), c in F.coeffs.items():
        term = x0p[F.d1 - i].mul_trunc(x1p[i], tu, tv)
        term = term.mul_trunc(y0p[F.d2 - j], tu, tv)
        term = term.mul_trunc(y1p[j], tu, tv)
        acc = acc + term * c
    return acc.truncate(tu, tv)


def _bipoly_powers(b: BiPoly, n: int, tu: int, tv: int):
    out = [BiPoly.constant(b.field, b.field.one())]
    for _ in range(n):
        out.append(out[-1].mul_trunc(b, tu, tv))
    return out


class ConeForm:
    """Degree-d form on P3 reduced modulo the cone quadric X0*X2 - X1^2.

    Coefficients are stored on the reduced monomial basis
    {X0^a X1^e X2^b X3^c : e in {0,1}, a+e+b+c = d} of size (d+1)^2.
    """

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree: int, coeffs: dict):
        clean = {}
        for key, c in coeffs.items():
            a, e, b, g = key
            if e not in (0, 1) or a + e + b + g != degree or min(key) < 0:
                raise WorkbenchError("monomial %r is not reduced of degree %d"
                                     % (key, degree))
            c = c if isinstance(c, FieldElement) else field.element(c)
            if not c.is_zero():
                clean[key] = c
        self.field = field
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def reduce_from_p3(cls, field, degree, raw: dict) -> "ConeForm":
        """Reduce a 4-variable coefficient dict modulo X1^2 -> X0*X2."""
        out = {}
        for (a, e, b, g), c in raw.items():
            c = c if isinstance(c, FieldElement) else field.element(c)
            k = e // 2
            key = (a + k, e % 2, b + k, g)
            out[key] = out.get(key, field.zero()) + c
        return cls(field, degree, out)

    @classmethod
    def from_string(cls, text: str, field) -> "ConeForm":
        cm = parse_polynomial(text, ("X0", "X1", "X2", "X3"))
        if not cm:
            raise ParseError("zero form")
        degs = {sum(e) for e in cm}
        if len(degs) != 1:
            raise ParseError("form is not homogeneous")
        d = degs.pop()
        raw = {e: field.element(c) for e, c in cm.items()}
        return cls.reduce_from_p3(field, d, raw)

    def to_string(self) -> str:
        return format_polynomial(self.coeffs, ("X0", "X1", "X2", "X3"),
                                 value_repr=repr)

    @classmethod
    def zero(cls, field, degree):
        return cls(field, degree, {})

    @classmethod
    def from_vector(cls, field, degree, vec):
        out = {}
        for k, mono in enumerate(cone_monomials(degree)):
            out[mono] = vec[k]
        return cls(field, degree, out)

    def to_vector(self):
        return [self.coeffs.get(m, self.field.zero())
                for m in cone_monomials(self.degree)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval(self, p: SurfacePoint) -> FieldElement:
        if p.ambient != "cone":
            raise WorkbenchError("cone form evaluated at a quadric point")
        return self.eval_raw(*p.coords)

    def eval_raw(self, x0, x1, x2, x3) -> FieldElement:
        field = self.field
        vals = [v if isinstance(v, FieldElement) else field.element(v)
                for v in (x0, x1, x2, x3)]
        x0, x1, x2, x3 = vals
        d = self.degree
        p0 = _powers(x0, d)
        p2 = _powers(x2, d)
        p3 = _powers(x3, d)
        acc = field.zero()
        for (a, e, b, g), c in self.coeffs.items():
            term = c * p0[a] * p2[b] * p3[g]
            if e:
                term = term * x1
            acc = acc + term
        return acc

    def vertex_value(self) -> FieldElement:
        """Value at the vertex (0:0:0:1): the coefficient of X3^d."""
        return self.coeffs.get((0, 0, 0, self.degree), self.field.zero())

    def restrict_to_ruling(self, base: P1Point) -> BinaryForm:
        """Restriction to the ruling with base parameter (s:t), as a
        degree-d binary form in the ruling parameter (lam, mu)."""
        field = self.field
        s, t = base.a, base.b
        d = self.degree
        sp = _powers(s, 2 * d)
        tp = _powers(t, 2 * d)
        out = [field.zero()] * (d + 1)
        for (a, e, b, g), c in self.coeffs.items():
            # X0^a X1^e X2^b X3^g -> lam^(a+e+b) mu^g s^(2a+e) t^(e+2b)
            lam_exp = a + e + b
            out[g] = out[g] + c * sp[2 * a + e] * tp[e + 2 * b]
        return BinaryForm(field, d, out)

    def chart(self, which: int) -> BiPoly:
        """Affine surface equation pulled to the plane.

        Chart 0 (X0 = 1): point (1, u, u^2, w), covering X0 != 0.
        Chart 2 (X2 = 1): point (u^2, u, 1, w), covering X2 != 0.
        Together these cover the cone minus the vertex.
        """
        out = {}
        zero = self.field.zero()
        for (a, e, b, g), c in self.coeffs.items():
            if which == 0:
                key = (e + 2 * b, g)
            elif which == 2:
                key = (2 * a + e, g)
            else:
                raise WorkbenchError("cone charts are 0 (X0=1) and 2 (X2=1)")
            out[key] = out.get(key, zero) + c
        return BiPoly(self.field, out)

    def chart_point(self, p: SurfacePoint, which: int):
        """Chart coordinates (u, w) of a non-vertex point, or None."""
        x0, x1, x2, x3 = p.coords
        if which == 0:
            if x0.is_zero():
                return None
            inv = x0.inverse()
            return x1 * inv, x3 * inv
        if x2.is_zero():
            return None
        inv = x2.inverse()
        return x1 * inv, x3 * inv

    def point_from_chart(self, which: int, u, w) -> SurfacePoint:
        field = self.field
        u = u if isinstance(u, FieldElement) else field.element(u)
        w = w if isinstance(w, FieldElement) else field.element(w)
        if which == 0:
            return SurfacePoint.cone(field, [field.one(), u, u * u, w])
        return SurfacePoint.cone(field, [u * u, u, field.one(), w])

    def local_expansion(self, p: SurfacePoint, e1: BiPoly, e2: BiPoly,
                        tu: int, tv: int) -> BiPoly:
        """Expansion along the chart at a non-vertex point p."""
        if p.is_vertex:
            raise WorkbenchError("no smooth chart at the vertex")
        field = self.field
        which = 0 if not p.coords[0].is_zero() else 2
        cp = self.chart_point(p, which)
        u0, w0 = cp
        uexpr = BiPoly.constant(field, u0) + e1
        wexpr = BiPoly.constant(field, w0) + e2
        d = self.degree
        if which == 0:
            coords = [BiPoly.constant(field, field.one()), uexpr,
                      uexpr.mul_trunc(uexpr, tu, tv), wexpr]
        else:
            coords = [uexpr.mul_trunc(uexpr, tu, tv), uexpr,
                      BiPoly.constant(field, field.one()), wexpr]
        p0 = _bipoly_powers(coords[0], d, tu, tv)
        p2 = _bipoly_powers(coords[2], d, tu, tv)
        p3 = _bipoly_powers(coords[3], d, tu, tv)
        acc = BiPoly.zero(field)
        for (a, e, b, g), c in self.coeffs.items():
            term = p0[a].mul_trunc(p2[b], tu, tv)
            term = term.mul_trunc(p3[g], tu, tv)
            if e:
                term = term.mul_trunc(coords[1], tu, tv)
            acc = acc + term * c
        return acc.truncate(tu, tv)

    def normalized(self) -> "ConeForm":
        if self.is_zero():
            return self
        key = min(self.coeffs.keys())
        inv = self.coeffs[key].inverse()
        return ConeForm(self.field, self.degree,
                        {k: c * inv for k, c in self.coeffs.items()})

    def map_field(self, new_field) -> "ConeForm":
        return ConeForm(new_field, self.degree,
                        {k: new_field.element(c) for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ConeForm):
            return NotImplemented
        return (self.field == other.field and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return self.to_string()


def cone_monomials(d: int):
    """Column order of the reduced cone monomial basis, size (d+1)^2."""
    out = []
    for e in (0, 1):
        for a in range(d - e, -1, -1):
            for b in range(d - e - a, -1, -1):
                g = d - e - a - b
                out.append((a, e, b, g))
    return out


def segre(p: SurfacePoint):
    """Segre image of a quadric point in P3: (a0b0 : a0b1 : a1b0 : a1b1)."""
    a0, a1 = p.px.a, p.px.b
    b0, b1 = p.py.a, p.py.b
    return (a0 * b0, a0 * b1, a1 * b0, a1 * b1)


def projection_forms(center):
    """Three independent linear forms on P3 vanishing at the center.

    Applying them to a point realizes the linear projection away from
    the center; two points collide iff their form-triples are
    projectively equal.
    """
    k = next(i for i, c in enumerate(center) if not c.is_zero())
    rows = []
    for i in range(4):
        if i == k:
            continue
        row = [None] * 4
        row[i] = center[k]
        row[k] = -center[i]
        rows.append(row)
    return k, rows


def project_point(center, forms_data, pt):
    """Image of pt under projection from the center, normalized tuple."""
    k, rows = forms_data
    field = pt[0].field
    zero = field.zero()
    img = []
    for row in rows:
        acc = zero
        for i in range(4):
            if row[i] is not None and not pt[i].is_zero():
                acc = acc + row[i] * pt[i]
        img.append(acc)
    first = next((i for i, c in enumerate(img) if not c.is_zero()), None)
    if first is None:
        raise WorkbenchError("point coincides with the projection center")
    inv = img[first].inverse()
    return tuple(c * inv for c in img)
