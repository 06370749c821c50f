"""Divisor calculus on hyperelliptic curves y^2 = f(x).

The combinatorial h1 recipe: to an effective affine divisor D attach
D', where a ramification point of multiplicity m contributes the
minimal even integer >= m and a conjugate pair contributes its maximal
multiplicity to both points; with k = deg(D')/2 the index of
speciality is h1(D) = max(0, g - k), because the dual space is cut out
of the degree <= g-1 polynomials by independent divisibility
conditions of total degree k.

Riemann-Roch spaces are realized explicitly as (A(x) + B(x) y)/Delta(x)
with degree bounds deg A <= deg Delta and deg B <= deg Delta - (g+1),
cut down by vanishing conditions of local branch expansions; the
dimension always reproduces the recipe's h0 and membership is verified
at every support point.
"""

from __future__ import annotations

import random

from .errors import (EvenCharacteristic, NonEffective, SpecialP,
                     WorkbenchError, ZeroSpace, CoincidentQ)
from .fields import Field, FieldElement, QQ
from .linalg import kernel_basis, rank
from .series import TruncatedSeries, hensel_sqrt
from .surfaces import BiForm, SurfacePoint
from .binform import P1Point
from .unipoly import (Poly, factor, gcd_univariate, sqrt_element,
                      _canonical_sort_key)


class HyperellipticCurve:
    """Smooth hyperelliptic curve with affine model y^2 = f(x),
    deg f = 2g + 2 and f squarefree; characteristic != 2."""

    __slots__ = ("field", "f", "genus")

    def __init__(self, f: Poly):
        field = f.field
        if field.characteristic == 2:
            raise EvenCharacteristic("hyperelliptic models need char != 2")
        if f.degree < 6 or f.degree % 2 != 0:
            raise WorkbenchError("need deg f = 2g + 2 with g >= 2")
        if gcd_univariate(f, f.derivative()).degree != 0:
            raise WorkbenchError("f must be squarefree")
        self.field = field
        self.f = f
        self.genus = (f.degree - 2) // 2

    def point(self, x, y) -> "HPoint":
        x = x if isinstance(x, FieldElement) else self.field.element(x)
        y = y if isinstance(y, FieldElement) else self.field.element(y)
        if self.f.eval(x) != y * y:
            raise WorkbenchError("(%r, %r) is not on the curve" % (x, y))
        return HPoint(x, y)

    def branch_point(self, x, sign: str = "+") -> "HPoint":
        """Point above x; the branch with the smaller canonical
        representative of y is '+'."""
        x = x if isinstance(x, FieldElement) else self.field.element(x)
        c = self.f.eval(x)
        r = sqrt_element(c)
        if r is None:
            raise WorkbenchError("f(%r) is not a square in the field" % (x,))
        if sign == "+":
            return HPoint(x, r)
        return HPoint(x, -r)

    def sigma(self, p: "HPoint") -> "HPoint":
        """Hyperelliptic involution."""
        return HPoint(p.x, -p.y)

    def is_on_curve(self, p: "HPoint") -> bool:
        return self.f.eval(p.x) == p.y * p.y

    def __repr__(self):
        return "HyperellipticCurve(genus %d over %r)" % (self.genus, self.field)


class HPoint:
    """Affine point (x, y) with y^2 = f(x); Weierstrass iff y = 0."""

    __slots__ = ("x", "y")

    def __init__(self, x: FieldElement, y: FieldElement):
        self.x = x
        self.y = y

    @property
    def weierstrass(self) -> bool:
        return self.y.is_zero()

    def __eq__(self, other):
        if not isinstance(other, HPoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def sort_key(self):
        return (_canonical_sort_key(self.x), _canonical_sort_key(self.y))

    def __repr__(self):
        return "(%r, %r)" % (self.x, self.y)


class HDivisor:
    """Effective divisor supported on affine points."""

    __slots__ = ("points",)

    def __init__(self, items=()):
        pts = {}
        for p, m in dict(items).items():
            if m < 0:
                raise NonEffective("divisors here are effective")
            if m > 0:
                pts[p] = m
        self.points = pts

    @classmethod
    def of(cls, *pairs):
        """HDivisor.of((p1, m1), (p2, m2), ...); repeated points add up."""
        acc = {}
        for p, m in pairs:
            acc[p] = acc.get(p, 0) + m
        return cls(acc)

    @property
    def degree(self) -> int:
        return sum(self.points.values())

    def multiplicity(self, p: HPoint) -> int:
        return self.points.get(p, 0)

    def support(self):
        return sorted(self.points.keys(), key=lambda p: p.sort_key())

    def __add__(self, other):
        acc = dict(self.points)
        for p, m in other.points.items():
            acc[p] = acc.get(p, 0) + m
        return HDivisor(acc)

    def sigma(self):
        return HDivisor({HPoint(p.x, -p.y): m for p, m in self.points.items()})

    def __eq__(self, other):
        if not isinstance(other, HDivisor):
            return NotImplemented
        return self.points == other.points

    def items(self):
        return [(p, self.points[p]) for p in self.support()]

    def __repr__(self):
        if not self.points:
            return "0"
        return " + ".join(("%d*%r" % (m, p)) if m > 1 else repr(p)
                          for p, m in self.items())


def weierstrass_points(X: HyperellipticCurve):
    """Rational ramification points plus the factor-degree census of f.

    Over the closure there are always 2g + 2 ramification points; the
    census reports how many live in which extension degree."""
    pts = []
    census = {}
    for fac, mult in factor(X.f):
        census[fac.degree] = census.get(fac.degree, 0) + 1
        if fac.degree == 1:
            root = -fac.coeffs[0]
            pts.append(HPoint(root, X.field.zero()))
    pts.sort(key=lambda p: p.sort_key())
    return pts, {"factor_degrees": census,
                 "rational": len(pts),
                 "total_over_closure": X.f.degree}


def _pairing_data(X: HyperellipticCurve, D: HDivisor):
    """Group the divisor by x-coordinate: for each x, the multiplicities
    of the two branches (or the single ramification point)."""
    groups = {}
    for p, m in D.points.items():
        if not X.is_on_curve(p):
            raise WorkbenchError("divisor point %r is not on the curve" % (p,))
        key = p.x
        g = groups.setdefault(key, {"wei": 0, "branches": {}})
        if p.weierstrass:
            g["wei"] += m
        else:
            g["branches"][p] = g["branches"].get(p, 0) + m
    return groups


def h1_effective(X: HyperellipticCurve, D: HDivisor) -> int:
    """Index of speciality by the even-ing recipe: h1 = max(0, g - k)."""
    k = 0
    for xval, g in _pairing_data(X, D).items():
        if g["wei"]:
            m = g["wei"]
            k += (m + 1) // 2  # ceil(m/2) = deg of the even-ed pair / 2
        if g["branches"]:
            k += max(g["branches"].values())
    return max(0, X.genus - k)


def h0_effective(X: HyperellipticCurve, D: HDivisor) -> int:
    """Riemann-Roch: h0 = deg D + 1 - g + h1."""
    return D.degree + 1 - X.genus + h1_effective(X, D)


class RRSpace:
    """Explicit Riemann-Roch space: functions (A + B y)/Delta."""

    __slots__ = ("curve", "divisor", "denominator", "basis", "dimension",
                 "_delta_exponents")

    def __init__(self, curve, divisor, denominator, basis, delta_exponents):
        self.curve = curve
        self.divisor = divisor
        self.denominator = denominator
        self.basis = basis
        self.dimension = len(basis)
        self._delta_exponents = delta_exponents

    def describe(self):
        return {
            "divisor": repr(self.divisor),
            "denominator": repr(self.denominator),
            "dimension": self.dimension,
            "basis": [{"A": repr(A), "B": repr(B)} for A, B in self.basis],
        }

    def __repr__(self):
        return "RRSpace(dim %d of %r)" % (self.dimension, self.divisor)


def _taylor_row(a: FieldElement, degree_bound: int, order: int):
    """Rows of Taylor coefficients at a for the monomials x^i."""
    field = a.field
    rows = []
    # shifted[i][e] = coefficient of (x-a)^e in x^i
    shifted = []
    cur = Poly.one(field)
    lin = Poly(field, (a, field.one()))  # x = a + u -> substitute
    for i in range(degree_bound + 1):
        shifted.append([cur[e] for e in range(order)])
        cur = cur * lin
    return shifted


def _series_rows(a, degree_bound, order, Y: TruncatedSeries):
    """Taylor coefficients at a of x^j * Y(x) for j <= degree_bound."""
    field = a.field
    shifted = _taylor_row(a, degree_bound, order)
    rows = []
    for j in range(degree_bound + 1):
        row = []
        for e in range(order):
            acc = field.zero()
            for t in range(e + 1):
                if shifted[j][t] is not None and t < order:
                    acc = acc + shifted[j][t] * Y.coeffs[e - t]
            row.append(acc)
        rows.append(row)
    return rows


def rr_space(X: HyperellipticCurve, D: HDivisor) -> RRSpace:
    """The space L(D) = {(A + B y) / Delta} with exact degree bounds and
    branch-expansion vanishing conditions; dimension equals the recipe's
    h0 (verified), membership checked at every support point."""
    field = X.field
    g = X.genus
    groups = _pairing_data(X, D)
    delta_exponents = {}
    for xval, grp in sorted(groups.items(),
                            key=lambda kv: _canonical_sort_key(kv[0])):
        if grp["wei"]:
            delta_exponents[xval] = (grp["wei"] + 1) // 2
        else:
            delta_exponents[xval] = max(grp["branches"].values())
    delta = Poly.one(field)
    for xval, e in sorted(delta_exponents.items(),
                          key=lambda kv: _canonical_sort_key(kv[0])):
        delta = delta * Poly(field, (-xval, field.one())) ** e
    n = delta.degree
    nB = n - (g + 1)  # degree bound for B; negative means no y-part
    ncols = (n + 1) + (nB + 1 if nB >= 0 else 0)

    rows = []
    for xval, grp in sorted(groups.items(),
                            key=lambda kv: _canonical_sort_key(kv[0])):
        e = delta_exponents[xval]
        if grp["wei"]:
            m = grp["wei"]
            r = 2 * e - m  # 0 or 1
            if r == 1:
                shifted = _taylor_row(xval, n, 1)
                row = [shifted[i][0] for i in range(n + 1)]
                row += [field.zero()] * (nB + 1 if nB >= 0 else 0)
                rows.append(row)
            continue
        for p, m in sorted(grp["branches"].items(),
                           key=lambda kv: kv[0].sort_key()):
            r = e - m
            if r <= 0:
                continue
            Y = hensel_sqrt(X.f, xval, p.y, r)
            shiftedA = _taylor_row(xval, n, r)
            if nB >= 0:
                rowsB = _series_rows(xval, nB, r, Y)
            for t in range(r):
                row = [shiftedA[i][t] for i in range(n + 1)]
                if nB >= 0:
                    row += [rowsB[j][t] for j in range(nB + 1)]
                rows.append(row)
        # a branch missing from the divisor entirely also needs full
        # vanishing to order e
        if grp["branches"]:
            present = set(grp["branches"].keys())
            y0 = next(iter(present)).y
            other = HPoint(xval, -y0)
            if other not in present and not other.weierstrass:
                Y = hensel_sqrt(X.f, xval, other.y, delta_exponents[xval])
                r = delta_exponents[xval]
                shiftedA = _taylor_row(xval, n, r)
                if nB >= 0:
                    rowsB = _series_rows(xval, nB, r, Y)
                for t in range(r):
                    row = [shiftedA[i][t] for i in range(n + 1)]
                    if nB >= 0:
                        row += [rowsB[j][t] for j in range(nB + 1)]
                    rows.append(row)

    kern = kernel_basis(rows, field, ncols) if rows else \
        [[field.one() if i == j else field.zero() for i in range(ncols)]
         for j in range(ncols)]
    basis = []
    for vec in kern:
        A = Poly(field, vec[:n + 1])
        B = Poly(field, vec[n + 1:]) if nB >= 0 else Poly.zero(field)
        basis.append((A, B))
    space = RRSpace(X, D, delta, basis, delta_exponents)
    expected = h0_effective(X, D)
    if space.dimension != expected:
        raise WorkbenchError(
            "section space has dimension %d, recipe predicts %d"
            % (space.dimension, expected))
    _verify_membership(space)
    return space


def section_order_at(space: RRSpace, A: Poly, B: Poly, p: HPoint) -> int:
    """Order of (A + B y)/Delta at an affine point p."""
    X = space.curve
    field = X.field
    a = p.x
    e = space._delta_exponents.get(a, 0)
    if p.weierstrass:
        vA = A.valuation_at(a) if not A.is_zero() else None
        vB = B.valuation_at(a) if not B.is_zero() else None
        cands = []
        if vA is not None:
            cands.append(2 * vA)
        if vB is not None:
            cands.append(2 * vB + 1)
        if not cands:
            raise ZeroSpace("zero section")
        return min(cands) - 2 * e
    cap = max(2 * A.degree, 2 * B.degree + X.f.degree, 1) + 2 * e + 2
    Y = hensel_sqrt(X.f, a, p.y, cap)
    As = TruncatedSeries.from_poly(A, a, cap)
    Bs = TruncatedSeries.from_poly(B, a, cap)
    s = As + Bs * Y
    v = s.valuation()
    if v is None:
        raise WorkbenchError("section vanishes beyond the exact cap")
    return v - e


def _verify_membership(space: RRSpace):
    D = space.divisor
    for A, B in space.basis:
        for p, m in D.points.items():
            if section_order_at(space, A, B, p) < -m:
                raise WorkbenchError("section violates the pole bound at %r"
                                     % (p,))


def base_locus(space: RRSpace) -> HDivisor:
    """Fixed part of the linear series: pointwise minimum of section
    orders over the divisor's support (1 is a section for effective D,
    so no base point can occur elsewhere)."""
    if space.dimension < 1:
        raise ZeroSpace("base locus of the empty series")
    D = space.divisor
    out = {}
    for p, m in D.points.items():
        mn = min(section_order_at(space, A, B, p) for A, B in space.basis)
        if mn + m > 0:
            out[p] = mn + m
    return HDivisor(out)


def dim_sections_vanishing_on(space: RRSpace, E: HDivisor) -> int:
    """Dimension of {s in L(D) : div(s) + D >= E}, i.e. h0(D - E) for
    effective E (E need not be a subdivisor of D)."""
    X = space.curve
    field = X.field
    D = space.divisor
    rows = []
    for p, target in E.points.items():
        req = target - D.multiplicity(p)
        a = p.x
        e = space._delta_exponents.get(a, 0)
        if p.weierstrass:
            need = req + 2 * e
            if need <= 0:
                continue
            # ord_t(A + By) = min(2 val_x A, 2 val_x B + 1) at a branch point
            needA = (need + 1) // 2
            needB = need // 2
            for t in range(needA):
                rows.append([A.shift(a)[t] for A, B in space.basis])
            for t in range(needB):
                rows.append([B.shift(a)[t] for A, B in space.basis])
            continue
        need = req + e
        if need <= 0:
            continue
        Y = hensel_sqrt(X.f, a, p.y, need)
        svals = []
        for A, B in space.basis:
            As = TruncatedSeries.from_poly(A, a, need)
            Bs = TruncatedSeries.from_poly(B, a, need)
            svals.append((As + Bs * Y).coeffs)
        for t in range(need):
            rows.append([sv[t] for sv in svals])
    if not rows:
        return space.dimension
    return space.dimension - rank(rows, field)


def classify_series(X: HyperellipticCurve, D: HDivisor) -> dict:
    """h0-driven classification of the series |D| into the injective
    types: complete (I), incomplete with very ample bundle (II),
    incomplete with non-very-ample bundle (III)."""
    h1 = h1_effective(X, D)
    h0 = h0_effective(X, D)
    notes = []
    if h1 > 0:
        notes.append("special series are composed with the double cover")
        return {"type": "not_injective_candidate", "h0": h0, "h1": h1,
                "notes": notes}
    if h0 == 3:
        notes.append("complete plane series")
        return {"type": "I", "h0": h0, "h1": h1, "notes": notes}
    if h0 == 4:
        space = rr_space(X, D)
        drop_failures = []
        for p in set(D.support()) | {X.sigma(q) for q in D.support()}:
            if not X.is_on_curve(p):
                continue
            d2 = dim_sections_vanishing_on(space, HDivisor({p: 2}))
            if d2 > h0 - 2:
                drop_failures.append(p)
        if drop_failures:
            if X.genus == 2:
                notes.append("degree 2g+1 bundle is very ample; cone branch "
                             "is an embedding only in genus 2")
                return {"type": "II", "h0": h0, "h1": h1, "notes": notes}
            notes.append("tangent conditions degenerate at %r: bundle not "
                         "very ample (cone branch)" % (drop_failures[0],))
            return {"type": "III", "h0": h0, "h1": h1, "notes": notes}
        notes.append("separates tested points and tangents (quadric branch)")
        return {"type": "II", "h0": h0, "h1": h1, "notes": notes}
    notes.append("h0 = %d does not match a plane-image candidate" % h0)
    return {"type": "not_injective_candidate", "h0": h0, "h1": h1,
            "notes": notes}


def point_search(X: HyperellipticCurve, seed, avoid_weierstrass=True,
                 limit=10000):
    """Seeded search for an affine curve point (non-ramification by
    default)."""
    rng = random.Random("hpoint:%s" % (seed,))
    field = X.field
    for _ in range(limit):
        x = field.random_element(rng)
        c = X.f.eval(x)
        if c.is_zero():
            if avoid_weierstrass:
                continue
            return HPoint(x, field.zero())
        r = sqrt_element(c)
        if r is not None:
            return HPoint(x, r)
    raise WorkbenchError("no curve point found within the search limit")


def injective_series_pipeline(X: HyperellipticCurve, o: HPoint, p: HPoint,
                              seed=0) -> dict:
    """End-to-end construction of an injective degree-(g+3) plane image.

    From a ramification point o and a generic point p: build
    N = 2o + (g+1)p (h0 = 4), extract the degree-(g+1) map u1 from
    L((g+1)p) and the double cover u2 = x, implicitize the image of
    (u1, u2) as a bidegree-(2, g+1) curve, project from
    q = (u1(p), u2(o)), and certify injectivity by the ruling criterion.
    """
    field = X.field
    g = X.genus
    if not X.is_on_curve(o) or not o.weierstrass:
        raise WorkbenchError("o must be a rational ramification point")
    if not X.is_on_curve(p) or p.weierstrass:
        raise WorkbenchError("p must be a non-ramification point")
    gp = HDivisor({p: g})
    if h1_effective(X, gp) != 0:
        raise SpecialP("h1(g*p) != 0; choose another p")
    h0_gp = h0_effective(X, gp)
    D_g1 = HDivisor({p: g + 1})
    h0_g1 = h0_effective(X, D_g1)
    Np = HDivisor({o: 2, p: g + 1})
    h0_N = h0_effective(X, Np)
    space = rr_space(X, D_g1)
    # a section with B != 0 exists: sigma-invariant members of L((g+1)p)
    # are constants, so a 2-dimensional space has an odd part
    psi = next(((A, B) for A, B in space.basis if not B.is_zero()), None)
    if psi is None:
        raise WorkbenchError("no odd-part section: map would factor "
                             "through the double cover")
    A, B = psi
    delta = space.denominator
    xp = p.x
    # implicitize: (u*Delta - A)^2 - B^2 f, then strip the forced
    # (x - x_p)^(g+1) content of every u-coefficient
    c2 = delta * delta
    c1 = delta * A * field.element(-2)
    c0 = A * A - B * B * X.f
    strip = Poly(field, (-xp, field.one())) ** (g + 1)
    c2 = c2.divexact(strip)
    c1 = c1.divexact(strip)
    c0 = c0.divexact(strip)
    coeffs = {}
    for k, c in enumerate((c0, c1, c2)):
        for m in range(c.degree + 1):
            if not c[m].is_zero():
                coeffs[(k, m)] = c[m]
    F = BiForm(field, 2, g + 1, coeffs).normalized()
    if not F.is_exact_bidegree():
        raise WorkbenchError("image form does not achieve bidegree (2, g+1)")
    # sample verification: rational points of X must land on F
    checked = 0
    rng = random.Random("verify:%s" % (seed,))
    for _ in range(200):
        if checked >= 12:
            break
        x = field.random_element(rng)
        c = X.f.eval(x)
        r = sqrt_element(c) if not c.is_zero() else field.zero()
        if r is None:
            continue
        pt = HPoint(x, r)
        if pt.x == xp:
            continue
        u1 = (A.eval(pt.x) + B.eval(pt.x) * pt.y) / delta.eval(pt.x)
        val = F.eval_raw(field.one(), u1, field.one(), pt.x)
        if not val.is_zero():
            raise WorkbenchError("implicitization failed at %r" % (pt,))
        checked += 1
    # the projection center
    u1_p = P1Point.infinity(field)          # psi has its pole at p
    u2_o = P1Point.affine(field, o.x)
    q = SurfacePoint.quadric(u1_p, u2_o)
    if F.eval(q).is_zero():
        raise CoincidentQ("projection center lies on the image curve")
    from .projection import outer_injectivity_quadric
    verdict = outer_injectivity_quadric(F, q)
    rest_x = F.restrict_x(u1_p)   # degree g+1 fiber over u1 = infinity
    rest_y = F.restrict_y(u2_o)   # degree 2 fiber over x = x_o
    prof_x = rest_x.distinct_root_count()
    prof_y = rest_y.distinct_root_count()
    mult_at_p = rest_x.vanishing_order(P1Point.affine(field, xp))
    u1_o = (A.eval(o.x)) / delta.eval(o.x)
    mult_at_o = rest_y.vanishing_order(P1Point.affine(field, u1_o))
    report = {
        "genus": g,
        "h0_table": {"g*p": h0_gp, "(g+1)*p": h0_g1, "2o+(g+1)p": h0_N},
        "image": F.to_string(),
        "image_bidegree": [2, g + 1],
        "image_arithmetic_genus": g,
        "center": repr(q),
        "ruling_profiles": {
            "through_image_of_p": list(prof_x[1]),
            "through_image_of_o": list(prof_y[1]),
            "contact_orders": [mult_at_p, mult_at_o],
        },
        "projection": verdict.describe(),
        "plane_image_singularities": [
            "ordinary cusp at the image of o (double unibranch point)",
            "unibranch point of multiplicity %d at the image of p" % (g + 1),
        ],
        "implicitization_checked_points": checked,
        "seed": str(seed),
    }
    return report
