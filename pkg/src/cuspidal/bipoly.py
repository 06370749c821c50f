"""Bivariate polynomials over an exact field, with Sylvester resultants.

Used for affine chart equations of curves on surfaces: partials,
restrictions, and elimination.  The resultant is a Sylvester determinant
evaluated by Bareiss fraction-free elimination over the univariate
polynomial ring, so no fraction field is ever materialized.
"""

from __future__ import annotations

from .errors import BothZero, WorkbenchError
from .fields import Field, FieldElement
from .unipoly import Poly, gcd_univariate


class BiPoly:
    """Polynomial in (u, v): sparse dict {(i, j): coefficient}."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: dict):
        clean = {}
        for k, c in coeffs.items():
            c = c if isinstance(c, FieldElement) else field.element(c)
            if not c.is_zero():
                clean[k] = c
        self.field = field
        self.coeffs = clean

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {(0, 0): c})

    @classmethod
    def variable(cls, field, which: str):
        if which == "u":
            return cls(field, {(1, 0): 1})
        if which == "v":
            return cls(field, {(0, 1): 1})
        raise WorkbenchError("unknown variable %r" % which)

    @classmethod
    def from_poly_u(cls, p: Poly):
        return cls(p.field, {(i, 0): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def from_poly_v(cls, p: Poly):
        return cls(p.field, {(0, j): c for j, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.coeffs)

    @property
    def degree_u(self) -> int:
        return max((k[0] for k in self.coeffs), default=-1)

    @property
    def degree_v(self) -> int:
        return max((k[1] for k in self.coeffs), default=-1)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, self.field.zero()) + c
        return BiPoly(self.field, out)

    def __sub__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, self.field.zero()) - c
        return BiPoly(self.field, out)

    def __neg__(self):
        return BiPoly(self.field, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return BiPoly(self.field, {k: c * other for k, c in self.coeffs.items()})
        other = self._coerce(other)
        out = {}
        zero = self.field.zero()
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, zero) + c1 * c2
        return BiPoly(self.field, out)

    __rmul__ = __mul__

    def mul_trunc(self, other: "BiPoly", tu: int, tv: int) -> "BiPoly":
        """Product truncated to exponents i < tu, j < tv."""
        out = {}
        zero = self.field.zero()
        for (i1, j1), c1 in self.coeffs.items():
            if i1 >= tu or j1 >= tv:
                continue
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i < tu and j < tv:
                    out[(i, j)] = out.get((i, j), zero) + c1 * c2
        return BiPoly(self.field, out)

    def truncate(self, tu: int, tv: int) -> "BiPoly":
        return BiPoly(self.field, {k: c for k, c in self.coeffs.items()
                                   if k[0] < tu and k[1] < tv})

    def pow_trunc(self, n: int, tu: int, tv: int) -> "BiPoly":
        result = BiPoly.constant(self.field, self.field.one())
        base = self.truncate(tu, tv)
        while n:
            if n & 1:
                result = result.mul_trunc(base, tu, tv)
            base = base.mul_trunc(base, tu, tv)
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            if other.field != self.field:
                raise WorkbenchError("bivariate polynomials over different fields")
            return other
        return BiPoly.constant(self.field, other)

    def coeff(self, i: int, j: int) -> FieldElement:
        return self.coeffs.get((i, j), self.field.zero())

    def partial_u(self) -> "BiPoly":
        return BiPoly(self.field, {(i - 1, j): c * i
                                   for (i, j), c in self.coeffs.items() if i > 0})

    def partial_v(self) -> "BiPoly":
        return BiPoly(self.field, {(i, j - 1): c * j
                                   for (i, j), c in self.coeffs.items() if j > 0})

    def eval(self, a, b) -> FieldElement:
        field = self.field
        a = a if isinstance(a, FieldElement) else field.element(a)
        b = b if isinstance(b, FieldElement) else field.element(b)
        du, dv = self.degree_u, self.degree_v
        apow = [field.one()]
        for _ in range(max(du, 0)):
            apow.append(apow[-1] * a)
        bpow = [field.one()]
        for _ in range(max(dv, 0)):
            bpow.append(bpow[-1] * b)
        acc = field.zero()
        for (i, j), c in self.coeffs.items():
            acc = acc + c * apow[i] * bpow[j]
        return acc

    def eval_u(self, a) -> Poly:
        """Substitute u = a; polynomial in v."""
        field = self.field
        a = a if isinstance(a, FieldElement) else field.element(a)
        du = self.degree_u
        apow = [field.one()]
        for _ in range(max(du, 0)):
            apow.append(apow[-1] * a)
        dv = self.degree_v
        out = [field.zero()] * (dv + 1)
        for (i, j), c in self.coeffs.items():
            out[j] = out[j] + c * apow[i]
        return Poly(field, out)

    def eval_v(self, b) -> Poly:
        field = self.field
        b = b if isinstance(b, FieldElement) else field.element(b)
        dv = self.degree_v
        bpow = [field.one()]
        for _ in range(max(dv, 0)):
            bpow.append(bpow[-1] * b)
        du = self.degree_u
        out = [field.zero()] * (du + 1)
        for (i, j), c in self.coeffs.items():
            out[i] = out[i] + c * bpow[j]
        return Poly(field, out)

    def swap(self) -> "BiPoly":
        return BiPoly(self.field, {(j, i): c for (i, j), c in self.coeffs.items()})

    def as_v_coefficients(self):
        """List of Poly-in-u coefficients, index = power of v."""
        dv = self.degree_v
        du = self.degree_u
        zero = self.field.zero()
        cols = [[zero] * (du + 1) for _ in range(dv + 1)]
        for (i, j), c in self.coeffs.items():
            cols[j][i] = c
        return [Poly(self.field, col) for col in cols]

    @classmethod
    def from_v_coefficients(cls, field, polys):
        out = {}
        for j, p in enumerate(polys):
            for i, c in enumerate(p.coeffs):
                if not c.is_zero():
                    out[(i, j)] = c
        return cls(field, out)

    def map_field(self, new_field) -> "BiPoly":
        return BiPoly(new_field, {k: new_field.element(c)
                                  for k, c in self.coeffs.items()})

    def substitute_linear(self, u_expr: "BiPoly", v_expr: "BiPoly",
                          tu: int = None, tv: int = None) -> "BiPoly":
        """Substitute u -> u_expr, v -> v_expr (optionally truncated)."""
        big = 1 << 30
        tu = big if tu is None else tu
        tv = big if tv is None else tv
        du, dv = max(self.degree_u, 0), max(self.degree_v, 0)
        upows = [BiPoly.constant(self.field, self.field.one())]
        for _ in range(du):
            upows.append(upows[-1].mul_trunc(u_expr, tu, tv))
        vpows = [BiPoly.constant(self.field, self.field.one())]
        for _ in range(dv):
            vpows.append(vpows[-1].mul_trunc(v_expr, tu, tv))
        acc = BiPoly.zero(self.field)
        for (i, j), c in self.coeffs.items():
            acc = acc + upows[i].mul_trunc(vpows[j], tu, tv) * c
        return acc.truncate(tu, tv)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __repr__(self):
        from .grammar import format_polynomial
        return format_polynomial(self.coeffs, ("u", "v"), value_repr=repr)


def _poly_matrix_det_bareiss(rows, field) -> Poly:
    """Determinant of a square matrix of univariate polynomials.

    Bareiss fraction-free elimination; all divisions are exact in k[u].
    """
    n = len(rows)
    if n == 0:
        return Poly.one(field)
    M = [list(r) for r in rows]
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        if M[k][k].is_zero():
            pivot = None
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    pivot = i
                    break
            if pivot is None:
                return Poly.zero(field)
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = num.divexact(prev)
            M[i][k] = Poly.zero(field)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant_v(f: BiPoly, g: BiPoly) -> Poly:
    """Res_v(f, g) as a polynomial in u.

    Vanishes at alpha iff f(alpha, .) and g(alpha, .) share a closure
    root or both leading v-coefficients vanish at alpha.
    """
    if f.is_zero() and g.is_zero():
        raise BothZero("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.field if not f.is_zero() else g.field)
    field = f.field
    fc = f.as_v_coefficients()
    gc = g.as_v_coefficients()
    m = len(fc) - 1
    n = len(gc) - 1
    if m == 0 and n == 0:
        return Poly.one(field)
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    size = m + n
    zero = Poly.zero(field)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = fc[m - k]
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = gc[n - k]
        rows.append(row)
    return _poly_matrix_det_bareiss(rows, field)


def resultant_bivariate(f: BiPoly, g: BiPoly, eliminate: str = "v") -> Poly:
    """Sylvester resultant eliminating the named variable ('u' or 'v')."""
    if eliminate == "v":
        return resultant_v(f, g)
    if eliminate == "u":
        return resultant_v(f.swap(), g.swap())
    raise WorkbenchError("eliminate must be 'u' or 'v'")


def bipoly_content_v(f: BiPoly) -> Poly:
    """Gcd in k[u] of the v-coefficients."""
    acc = Poly.zero(f.field)
    for p in f.as_v_coefficients():
        acc = gcd_univariate(acc, p)
        if acc.degree == 0 and not acc.is_zero():
            break
    return acc


def bipoly_gcd_v(f: BiPoly, g: BiPoly) -> BiPoly:
    """Gcd of bivariate polynomials (primitive-part Euclid in v over k(u)).

    Normalized to have monic content-free leading v-coefficient when
    nonconstant; returns a constant 1 when the inputs are coprime.
    """
    field = f.field
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    cf, cg = bipoly_content_v(f), bipoly_content_v(g)
    ccontent = gcd_univariate(cf, cg)
    fp = _divide_content(f, cf)
    gp = _divide_content(g, cg)
    a, b = fp, gp
    while not b.is_zero() and b.degree_v >= 0:
        if b.degree_v == 0:
            # primitive with v-degree 0 means unit content: coprime in v
            a = BiPoly.constant(field, field.one())
            break
        r = _pseudo_rem_v(a, b)
        if r.is_zero():
            a = b
            break
        a, b = b, _divide_content(r, bipoly_content_v(r))
        if b.degree_v == 0:
            a = BiPoly.constant(field, field.one())
            break
    result = a
    cpoly = BiPoly.from_poly_u(ccontent)
    return cpoly * result


def _divide_content(f: BiPoly, content: Poly) -> BiPoly:
    if content.is_zero() or content.degree == 0:
        if content.is_zero():
            return f
        inv = content.coeffs[0].inverse()
        return f * inv
    polys = [p.divexact(content) for p in f.as_v_coefficients()]
    return BiPoly.from_v_coefficients(f.field, polys)


def _pseudo_rem_v(a: BiPoly, b: BiPoly) -> BiPoly:
    """Pseudo-remainder of a by b with respect to v."""
    da, db = a.degree_v, b.degree_v
    if da < db:
        return a
    lead_b = b.as_v_coefficients()[db]
    lead_b_bi = BiPoly.from_poly_u(lead_b)
    r = a
    v = BiPoly.variable(a.field, "v")
    while not r.is_zero() and r.degree_v >= db:
        dr = r.degree_v
        lead_r = BiPoly.from_poly_u(r.as_v_coefficients()[dr])
        shift = v.pow_trunc(dr - db, 1 << 30, 1 << 30)
        r = lead_b_bi * r - lead_r * shift * b
    return r
