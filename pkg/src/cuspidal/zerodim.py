"""Common zeros of bivariate polynomial systems over the lazy closure.

The driver behind smoothness certification and double-point detection:
given polynomials in k[u, v], find all common zeros over the algebraic
closure of k.  Candidates come from pairwise Sylvester resultants (a
common zero forces every pairwise resultant to vanish at its
u-coordinate, with no genericity assumption); each candidate u-value is
then checked by a gcd of specializations over the extension field it
generates, and every reported zero is re-verified by substitution.

Over finite fields all witnesses are explicit points in some GF(p^k).
Over the rationals, a v-coordinate living in a proper extension of the
u-coordinate's number field is reported in triangular form: the minimal
polynomial of u together with the residual polynomial its v-coordinate
satisfies (the substitution check then runs in the quotient ring).
"""

from __future__ import annotations

from .bipoly import BiPoly, bipoly_gcd_v, resultant_v
from .errors import WorkbenchError
from .fields import QQ, Field
from .unipoly import (Poly, gcd_univariate, roots_over_closure,
                      squarefree_part, factor)


class AffineZero:
    """Explicit common zero (u, v) with coordinates in ``field``."""

    __slots__ = ("field", "u", "v")

    def __init__(self, field, u, v):
        self.field = field
        self.u = u
        self.v = v

    @property
    def triangular(self):
        return False

    def describe(self):
        return {"kind": "point", "field": self.field.spec_string(),
                "u": repr(self.u), "v": repr(self.v)}

    def __repr__(self):
        return "AffineZero(u=%r, v=%r over %r)" % (self.u, self.v, self.field)


class TriangularZero:
    """Zero given by u (in ``field``) and the residual polynomial that
    its v-coordinate satisfies over that field (degree >= 1)."""

    __slots__ = ("field", "u", "residual")

    def __init__(self, field, u, residual: Poly):
        self.field = field
        self.u = u
        self.residual = residual

    @property
    def triangular(self):
        return True

    def describe(self):
        return {"kind": "triangular", "field": self.field.spec_string(),
                "u": repr(self.u), "v_satisfies": repr(self.residual)}

    def __repr__(self):
        return "TriangularZero(u=%r, v: %r = 0)" % (self.u, self.residual)


class CommonZeros:
    """Result of a common-zero computation.

    ``zeros``: isolated common zeros (explicit or triangular).
    ``component``: a nonconstant BiPoly dividing every input, whose whole
    zero set consists of common zeros (None when the system is zero-
    dimensional).  ``component_sample``: one verified point on it.
    """

    def __init__(self, zeros, component=None, component_sample=None):
        self.zeros = zeros
        self.component = component
        self.component_sample = component_sample

    @property
    def empty(self):
        return not self.zeros and self.component is None


def _verify_zero(polys, zero) -> bool:
    if not zero.triangular:
        for p in polys:
            pe = p.map_field(zero.field) if p.field != zero.field else p
            if not pe.eval(zero.u, zero.v).is_zero():
                return False
        return True
    # triangular: check residual divides every specialization
    res = zero.residual.monic()
    for p in polys:
        pe = p.map_field(zero.field) if p.field != zero.field else p
        spec = pe.eval_u(zero.u)
        if not (spec % res).is_zero():
            return False
    return True


def _nonzero(polys):
    return [p for p in polys if not p.is_zero()]


def _v_roots_over(field, g: Poly, u_value):
    """Zeros with u = u_value and v ranging over the closure roots of g."""
    out = []
    if field.order is not None or field == QQ:
        for root in roots_over_closure(g):
            ext = root.field
            if ext == field:
                out.append(AffineZero(field, u_value, root.value))
            else:
                u_up = ext.element(u_value)
                out.append(AffineZero(ext, u_up, root.value))
        return out
    # number field: no factorization available; linear residuals are
    # still solved explicitly, the rest is reported in triangular form
    if g.degree == 1:
        out.append(AffineZero(field, u_value, -g.coeffs[0] / g.coeffs[1]))
    else:
        out.append(TriangularZero(field, u_value, g.monic()))
    return out


def _sample_component_point(polys, component: BiPoly, rng_seed=0):
    """One verified point on a common component."""
    field = component.field
    # try to specialize u over small candidates until the slice is proper
    candidates = []
    if field.order is not None:
        candidates = [field.element(i) for i in range(min(field.characteristic, 64))]
    else:
        candidates = [field.element(i) for i in range(32)]
    for a in candidates:
        slice_g = component.eval_u(a)
        if slice_g.is_zero():
            # whole line u = a inside the component: try v = 0 style points
            z = AffineZero(field, a, field.zero())
            if _verify_zero(polys, z):
                return z
            continue
        if slice_g.degree >= 1:
            for z in _v_roots_over(field, slice_g, a):
                if _verify_zero(polys, z):
                    return z
        # constant nonzero slice: component has no point over u = a
    # component may be a pure-u factor: roots give vertical lines
    cols = component.as_v_coefficients()
    if len(cols) == 1:
        for root in roots_over_closure(cols[0]):
            f2 = root.field
            z = AffineZero(f2, root.value, f2.zero())
            if _verify_zero(polys, z):
                return z
    return None


def common_zeros_bivariate(polys, max_candidates=None) -> CommonZeros:
    """All common zeros of the given bivariate polynomials.

    Raises if every input is zero.  Returns isolated zeros and, when the
    inputs share a nonconstant factor, that common component.
    """
    polys = _nonzero(polys)
    if not polys:
        raise WorkbenchError("common zeros of an empty/zero system")
    field = polys[0].field
    for p in polys:
        if p.is_constant():
            return CommonZeros([])
    if len(polys) == 1:
        comp = polys[0]
        return CommonZeros([], comp, _sample_component_point(polys, comp))
    # common component?
    g = polys[0]
    for p in polys[1:]:
        g = bipoly_gcd_v(g, p)
        if g.is_constant():
            break
    if not g.is_constant() and not g.is_zero():
        sample = _sample_component_point(polys, g)
        residual = CommonZeros([])
        return CommonZeros(residual.zeros, g, sample)
    return CommonZeros(_isolated_common_zeros(polys, field))


def _isolated_common_zeros(polys, field):
    # candidate u-values from pairwise resultants
    res_list = []
    pairs = [(0, 1)]
    if len(polys) > 2:
        pairs.append((0, 2))
    for (i, j) in pairs:
        r = resultant_v(polys[i], polys[j])
        if not r.is_zero():
            res_list.append(r)
    if not res_list:
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                r = resultant_v(polys[i], polys[j])
                if not r.is_zero():
                    res_list.append(r)
                    break
            if res_list:
                break
    if not res_list:
        # every pair shares a factor but there is no global one: zeros on
        # the (0,1) pair-gcd component, plus zeros of the peeled system
        h = bipoly_gcd_v(polys[0], polys[1])
        rest = polys[2:]
        zeros = []
        if rest:
            zeros.extend(_common_with_component(h, rest, polys))
        reduced = [_divide_out(polys[0], h)] + polys[1:]
        sub = common_zeros_bivariate(_nonzero(reduced))
        zeros.extend(sub.zeros)
        if sub.component is not None and sub.component_sample is not None:
            zeros.append(sub.component_sample)
        return _dedupe([z for z in zeros if _verify_zero(polys, z)])
    cand = res_list[0]
    for r in res_list[1:]:
        cand = gcd_univariate(cand, r)
        if cand.degree == 0:
            return []
    if cand.degree == 0:
        return []
    cand = squarefree_part(cand)
    zeros = []
    for root in roots_over_closure(cand):
        ext = root.field
        specs = []
        all_zero = True
        for p in polys:
            pe = p.map_field(ext) if p.field != ext else p
            s = pe.eval_u(root.value)
            if not s.is_zero():
                all_zero = False
                specs.append(s)
        if all_zero:
            # vertical line of common zeros; should have been caught as a
            # component, but report one point defensively
            z = AffineZero(ext, root.value, ext.zero())
            if _verify_zero(polys, z):
                zeros.append(z)
            continue
        g = specs[0]
        for s in specs[1:]:
            g = gcd_univariate(g, s)
            if g.degree == 0:
                break
        if g.degree < 1:
            continue
        for z in _v_roots_over(ext, g, root.value):
            if _verify_zero(polys, z):
                zeros.append(z)
    return _dedupe(zeros)


def _common_with_component(h: BiPoly, rest, allpolys):
    """Zeros lying on the pair-gcd component h and on every remaining poly."""
    sub = common_zeros_bivariate([h] + list(rest))
    zeros = list(sub.zeros)
    if sub.component is not None and sub.component_sample is not None:
        zeros.append(sub.component_sample)
    return [z for z in zeros if _verify_zero(allpolys, z)]


def _divide_out(f: BiPoly, h: BiPoly) -> BiPoly:
    """Exact division f / h in k[u][v] via pseudo-division bookkeeping."""
    fc = f.as_v_coefficients()
    hc = h.as_v_coefficients()
    dh = len(hc) - 1
    if dh == 0:
        polys = [p.divexact(hc[0]) for p in fc]
        return BiPoly.from_v_coefficients(f.field, polys)
    quotient = {}
    r = f
    while not r.is_zero() and r.degree_v >= dh:
        rc = r.as_v_coefficients()
        dr = len(rc) - 1
        qpoly = rc[dr].divexact(hc[dh])
        for i, c in enumerate(qpoly.coeffs):
            if not c.is_zero():
                quotient[(i, dr - dh)] = c
        term = BiPoly(f.field, {(i, dr - dh): c for i, c in enumerate(qpoly.coeffs)})
        r = r - term * h
    if not r.is_zero():
        raise WorkbenchError("component does not divide the polynomial")
    return BiPoly(f.field, quotient)


def _dedupe(zeros):
    out = []
    seen = set()
    for z in zeros:
        key = repr(z.describe())
        if key not in seen:
            seen.add(key)
            out.append(z)
    return out
