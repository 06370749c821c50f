"""Injectivity of linear projections of curves on quadrics and cones.

Outer projections from a surface point are decided by the ruling
criterion: the projection is injective exactly when each ruling through
the center meets the curve in a single point set-theoretically, which
is read off from gcd degrees over the algebraic closure (never from
rational point counts).  Inner projections classify smooth curve points
into the sets A (punctured projection injective) and B (full projection
injective).  A parametrized checker decides injectivity of a rational
map P1 -> P2 through Bezoutian quotients.
"""

from __future__ import annotations

import random

from .binform import BinaryForm, P1Point
from .bipoly import BiPoly
from .errors import (CenterIsVertex, CenterOnCurve, DegenerateBidegree,
                     NotCoprime, PointNotOnCurve, SingularPoint,
                     SmallCharacteristic, WorkbenchError)
from .fields import ExtensionField, Field, PrimeField
from .surfaces import BiForm, ConeForm, SurfacePoint
from .unipoly import (Poly, find_irreducible, gcd_univariate, roots_in_field)
from .zerodim import common_zeros_bivariate


class ProjectionVerdict:
    """Outcome of an outer-projection injectivity check."""

    def __init__(self, injective, rulings, failure_witness=None):
        self.injective = injective
        self.rulings = rulings
        self.failure_witness = failure_witness

    def describe(self):
        return {
            "injective": self.injective,
            "rulings": self.rulings,
            "failure_witness": self.failure_witness,
            "irreducibility": "assumed",
        }

    def __repr__(self):
        return "ProjectionVerdict(injective=%s)" % self.injective


def _char_guard(field, degree):
    ch = field.characteristic
    if 0 < ch <= degree:
        raise SmallCharacteristic(
            "characteristic %d <= degree %d" % (ch, degree))


def _ruling_record(label, restriction: BinaryForm, witness_point=None):
    count, profile = restriction.distinct_root_count()
    rec = {
        "ruling": label,
        "restriction": repr(restriction),
        "distinct_points": count,
        "profile": list(profile),
    }
    return rec, count


def _collision_witness(restriction: BinaryForm, fixed_label):
    """Two distinct intersection points on one ruling (collinear with the
    center by construction)."""
    roots = restriction.roots_over_closure()
    if len(roots) < 2:
        return None
    pts = sorted(roots, key=lambda r: (r[0].field.key != restriction.field.key,))
    a = pts[0][0]
    b = pts[1][0]
    return {
        "ruling": fixed_label,
        "points": [
            {"field": a.field.spec_string(), "value": repr(a)},
            {"field": b.field.spec_string(), "value": repr(b)},
        ],
        "note": "both points lie on the stated ruling through the center",
    }


def outer_injectivity_quadric(F: BiForm, q: SurfacePoint) -> ProjectionVerdict:
    """Is the projection of the curve F = 0 from q in Q \\ Y injective?

    Criterion: both rulings through q meet the curve in a single point
    over the closure.  Irreducibility of the curve is the caller's
    responsibility and is flagged as assumed in the verdict.
    """
    _char_guard(F.field, max(F.d1, F.d2))
    if F.eval(q).is_zero():
        raise CenterOnCurve("projection center lies on the curve")
    rest_x = F.restrict_x(q.px)
    rest_y = F.restrict_y(q.py)
    rec_x, n_x = _ruling_record(["x", repr(q.px)], rest_x)
    rec_y, n_y = _ruling_record(["y", repr(q.py)], rest_y)
    injective = (n_x == 1 and n_y == 1)
    witness = None
    if not injective:
        bad = rest_x if n_x > 1 else rest_y
        label = rec_x["ruling"] if n_x > 1 else rec_y["ruling"]
        witness = _collision_witness(bad, label)
    return ProjectionVerdict(injective, [rec_x, rec_y], witness)


def outer_injectivity_cone(G: ConeForm, q: SurfacePoint) -> ProjectionVerdict:
    """Injectivity of the projection of a cone curve from a non-vertex
    point q not on the curve: the ruling through q must meet the curve
    in a single point."""
    _char_guard(G.field, G.degree)
    if q.is_vertex:
        raise CenterIsVertex("projection center is the cone vertex")
    if G.eval(q).is_zero():
        raise CenterOnCurve("projection center lies on the curve")
    fiber = G.restrict_to_ruling(q.ruling_base())
    rec, n = _ruling_record(["cone", repr(q.ruling_base())], fiber)
    injective = n == 1
    witness = None if injective else _collision_witness(fiber, rec["ruling"])
    return ProjectionVerdict(injective, [rec], witness)


def _ruling_b_ok(count: int, mult_at_o: int) -> bool:
    """Per-ruling condition for the full projection to stay injective.

    A ruling through o collides two curve points iff it carries two
    points besides o, or it is tangent at o (so the extension sends o to
    the ruling's direction) while carrying another point.  Hence the
    ruling is harmless iff it meets the curve only at o, or in exactly
    two points with simple contact at o.
    """
    if count == 1:
        return True
    return count == 2 and mult_at_o == 1


def inner_membership_quadric(F: BiForm, o: SurfacePoint):
    """Membership of a smooth curve point o in the inner-projection sets.

    Returns (inA, inB, report): o is in A iff both rulings through o
    meet the curve in at most 2 points; o is in B iff additionally no
    ruling is tangent at o while meeting the curve elsewhere.  The
    report carries the contact multiplicities at o and the
    full-tangency flag (both rulings meeting the curve only at o)."""
    if (F.d1, F.d2) == (1, 1):
        raise DegenerateBidegree("bidegree (1,1) is excluded")
    _char_guard(F.field, max(F.d1, F.d2))
    if not F.eval(o).is_zero():
        raise PointNotOnCurve("the point is not on the curve")
    if not F.is_smooth_point(o):
        raise SingularPoint("inner projection needs a smooth point")
    rest_x = F.restrict_x(o.px)
    rest_y = F.restrict_y(o.py)
    n_x, prof_x = rest_x.distinct_root_count()
    n_y, prof_y = rest_y.distinct_root_count()
    mult_x = rest_x.vanishing_order(o.py)
    mult_y = rest_y.vanishing_order(o.px)
    in_a = n_x <= 2 and n_y <= 2
    in_b = _ruling_b_ok(n_x, mult_x) and _ruling_b_ok(n_y, mult_y)
    report = {
        "counts": [n_x, n_y],
        "profiles": [list(prof_x), list(prof_y)],
        "contact_multiplicities": [mult_x, mult_y],
        "full_tangency": (n_x == 1 and n_y == 1),
        "full_tangency_multiplicity_form": (mult_x == F.d2 and mult_y == F.d1),
        "near_full_tangency": (mult_x >= F.d2 - 1 and mult_y >= F.d1 - 1),
        "inA": in_a,
        "inB": in_b,
    }
    return in_a, in_b, report


def inner_membership_cone(G: ConeForm, o: SurfacePoint):
    """Single-ruling criterion for inner projections on the cone."""
    _char_guard(G.field, G.degree)
    if o.is_vertex:
        raise CenterIsVertex("inner membership of the vertex is out of range")
    if not G.eval(o).is_zero():
        raise PointNotOnCurve("the point is not on the curve")
    if _cone_point_singular(G, o):
        raise SingularPoint("inner projection needs a smooth point")
    fiber = G.restrict_to_ruling(o.ruling_base())
    n, prof = fiber.distinct_root_count()
    mult = fiber.vanishing_order(o.ruling_parameter())
    in_a = n <= 2
    in_b = _ruling_b_ok(n, mult)
    report = {
        "count": n,
        "profile": list(prof),
        "contact_multiplicity": mult,
        "full_tangency": n == 1,
        "inA": in_a,
        "inB": in_b,
    }
    return in_a, in_b, report


def _cone_point_singular(G: ConeForm, o: SurfacePoint) -> bool:
    which = 0 if not o.coords[0].is_zero() else 2
    f = G.chart(which)
    u, w = G.chart_point(o, which)
    return (f.partial_u().eval(u, w).is_zero()
            and f.partial_v().eval(u, w).is_zero())


class InnerSets:
    """Census of the inner-projection sets over finite fields."""

    def __init__(self, field_order, levels):
        self.field_order = field_order
        self.levels = levels

    @property
    def A_members(self):
        return self.levels[1]["A"]

    @property
    def B_members(self):
        return self.levels[1]["B"]

    def describe(self):
        out = {"field_order": self.field_order, "levels": {}}
        for j, data in self.levels.items():
            out["levels"][str(j)] = {
                "points_on_curve": data["points"],
                "smooth_points": data["smooth"],
                "singular_points": data["singular"],
                "A_count": len(data["A"]),
                "B_count": len(data["B"]),
                "full_tangency_count": len(data["full_tangency"]),
                "A": [repr(p) for p in data["A"]],
                "B": [repr(p) for p in data["B"]],
                "full_tangency": [repr(p) for p in data["full_tangency"]],
            }
        return out


def enumerate_quadric_points(F: BiForm):
    """All points of the curve F = 0 rational over its coefficient field."""
    field = F.field
    if field.order is None:
        raise WorkbenchError("point enumeration needs a finite field")
    pts = []
    p1 = [P1Point.affine(field, e) for e in field.elements()]
    p1.append(P1Point.infinity(field))
    for a in p1:
        fiber = F.restrict_x(a)
        if fiber.is_zero():
            for b in p1:
                pts.append(SurfacePoint.quadric(a, b))
            continue
        f = fiber.dehomogenize_t()
        if f.degree < fiber.degree:
            pts.append(SurfacePoint.quadric(a, P1Point.infinity(field)))
        if f.degree > 0:
            for root, _m in roots_in_field(f):
                pts.append(SurfacePoint.quadric(a, P1Point.affine(field, root)))
    return pts


def enumerate_cone_points(G: ConeForm):
    """All non-vertex points of the cone curve rational over its field,
    plus the vertex when it lies on the curve."""
    field = G.field
    if field.order is None:
        raise WorkbenchError("point enumeration needs a finite field")
    pts = []
    p1 = [P1Point.affine(field, e) for e in field.elements()]
    p1.append(P1Point.infinity(field))
    for base in p1:
        fiber = G.restrict_to_ruling(base)
        s, t = base.a, base.b
        if fiber.is_zero():
            for lam_mu in p1:
                if lam_mu.a.is_zero():
                    continue
                mu = lam_mu.b
                pts.append(SurfacePoint.cone(field, [s * s, s * t, t * t, mu]))
            continue
        f = fiber.dehomogenize_t()  # lam = 1, parameter mu
        if f.degree > 0:
            for root, _m in roots_in_field(f):
                pts.append(SurfacePoint.cone(field,
                                             [s * s, s * t, t * t, root]))
    if G.vertex_value().is_zero():
        pts.append(SurfacePoint.cone(field, [0, 0, 0, 1]))
    return pts


def census_inner_sets(curve, extension_cap: int = 1, seed=0) -> InnerSets:
    """Classify every rational point of the curve over GF(p^j), j <= cap.

    Each level lists all points rational over that level's field (so a
    level-1 point reappears at level 2); B is a subset of A within each
    level by construction of the criteria."""
    base_field = curve.field
    if base_field.order is None:
        raise WorkbenchError("census needs a finite field")
    deg = max(curve.d1, curve.d2) if isinstance(curve, BiForm) else curve.degree
    _char_guard(base_field, deg)
    levels = {}
    for j in range(1, extension_cap + 1):
        if j == 1:
            field_j = base_field
            curve_j = curve
        else:
            minpoly = find_irreducible(base_field, j, seed=seed)
            field_j = ExtensionField(base_field, minpoly.coeffs, validate=False)
            curve_j = curve.map_field(field_j)
        if isinstance(curve_j, BiForm):
            points = enumerate_quadric_points(curve_j)
            member = inner_membership_quadric
        else:
            points = enumerate_cone_points(curve_j)
            member = inner_membership_cone
        A, B, full = [], [], []
        singular = 0
        skipped_vertex = 0
        for pt in points:
            try:
                in_a, in_b, rep = member(curve_j, pt)
            except SingularPoint:
                singular += 1
                continue
            except CenterIsVertex:
                skipped_vertex += 1
                continue
            if in_a:
                A.append(pt)
            if in_b:
                B.append(pt)
            if rep["full_tangency"]:
                full.append(pt)
        levels[j] = {
            "points": len(points),
            "smooth": len(points) - singular - skipped_vertex,
            "singular": singular,
            "A": A,
            "B": B,
            "full_tangency": full,
        }
    return InnerSets(base_field.order, levels)


# -- parametrized curves ----------------------------------------------------

def _bezoutian_quotient(f: BinaryForm, g: BinaryForm) -> BiPoly:
    """(f(s,t) g(u,v) - g(s,t) f(u,v)) / (sv - tu), dehomogenized to the
    affine chart s = u = 1 (variables: first parameter a, second b)."""
    field = f.field
    fa = f.dehomogenize_t()
    ga = g.dehomogenize_t()
    # D(a, b) = fa(a) ga(b) - ga(a) fa(b), divisible by (b - a)
    D = {}
    for i, ci in enumerate(fa.coeffs):
        for j, cj in enumerate(ga.coeffs):
            D[(i, j)] = D.get((i, j), field.zero()) + ci * cj
    for i, ci in enumerate(ga.coeffs):
        for j, cj in enumerate(fa.coeffs):
            D[(i, j)] = D.get((i, j), field.zero()) - ci * cj
    Dp = BiPoly(field, D)
    if Dp.is_zero():
        return BiPoly.zero(field)
    from .zerodim import _divide_out
    divisor = BiPoly(field, {(0, 1): field.one(), (1, 0): -field.one()})
    return _divide_out(Dp, divisor)


def _flip(q: BiPoly, n: int, flip_u: bool, flip_v: bool) -> BiPoly:
    """Reindex the (n-1, n-1) coefficient matrix for the other P1 charts."""
    out = {}
    for (i, j), c in q.coeffs.items():
        out[(n - 1 - i if flip_u else i, n - 1 - j if flip_v else j)] = c
    return BiPoly(q.field, out)


def _param_label(value, flipped: bool):
    """Projective parameter from a chart coordinate."""
    if flipped:
        if value.is_zero():
            return "infinity"
        return "(1:%r)" % value.inverse()
    return "(1:%r)" % value


def parametrized_injectivity(phi, closure_cap=None) -> dict:
    """Injectivity of the degree-n map P1 -> P2 given by three coprime
    binary forms.

    The three Bezoutian quotients of the component pairs cut out the
    locus of parameter pairs mapping to the same image point;
    off-diagonal common zeros are genuine double points, diagonal ones
    are ramification (cusp) parameters.  Zeros are searched over the
    closure in all four chart combinations of P1 x P1."""
    if len(phi) != 3:
        raise WorkbenchError("need exactly three forms")
    f0, f1, f2 = phi
    field = f0.field
    n = f0.degree
    if n < 2:
        raise WorkbenchError("need degree >= 2")
    if any(f.degree != n for f in phi):
        raise WorkbenchError("forms must share one degree")
    ch = field.characteristic
    if 0 < ch <= 2 * n:
        raise SmallCharacteristic("characteristic %d <= 2*deg" % ch)
    g01 = gcd_univariate(f0.dehomogenize_t(), f1.dehomogenize_t())
    g = gcd_univariate(g01, f2.dehomogenize_t())
    if g.degree > 0:
        raise NotCoprime("components share a finite common root")
    if all(f.dehomogenize_t().degree < n for f in phi):
        raise NotCoprime("components share the root at infinity")
    quots = [_bezoutian_quotient(f0, f1), _bezoutian_quotient(f0, f2),
             _bezoutian_quotient(f1, f2)]
    if all(q.is_zero() for q in quots):
        raise NotCoprime("map degenerates to a point")
    double_points = []
    cusp_params = []
    seen = set()

    def record(kind, entry, key):
        if key in seen:
            return
        seen.add(key)
        if kind == "diagonal":
            cusp_params.append(entry)
        else:
            double_points.append(entry)

    # chart sweep: (flip_u, flip_v) with flipped coordinate a' = 1/a;
    # only zeros with a flipped coordinate equal to 0 are new in a
    # flipped chart (the rest already appear in earlier charts)
    for flip_u, flip_v in ((False, False), (True, False),
                           (False, True), (True, True)):
        polys = [_flip(q, n, flip_u, flip_v) for q in quots if not q.is_zero()]
        result = common_zeros_bivariate(polys)
        if result.component is not None and not (flip_u or flip_v):
            sample = result.component_sample
            entry = {"kind": "component", "component": repr(result.component)}
            if sample is not None and not sample.triangular:
                entry["witness"] = sample.describe()
                kind = "diagonal" if sample.u == sample.v else "off"
            else:
                kind = "off"
            record(kind, entry, ("component",))
        for z in result.zeros:
            if flip_u and not (z.triangular or z.u.is_zero()):
                continue
            if flip_v and not z.triangular and not z.v.is_zero():
                continue
            if z.triangular:
                # split the residual into its diagonal and off-diagonal parts
                lin = Poly(z.field, (-z.u, z.field.one()))
                reduced = z.residual
                diag_mult = 0
                while not reduced.is_constant():
                    q2, r2 = reduced.divmod(lin)
                    if not r2.is_zero():
                        break
                    reduced = q2
                    diag_mult += 1
                if diag_mult and not (flip_u or flip_v):
                    record("diagonal",
                           {"param": {"satisfies": repr(z.residual),
                                      "value": repr(z.u)},
                            "field": z.field.spec_string()},
                           ("tri-diag", repr(z.u), z.field.key))
                if not reduced.is_constant():
                    record("off", {"zero": z.describe()},
                           ("tri-off", repr(z.describe())))
                continue
            first = _param_label(z.u, flip_u)
            second = _param_label(z.v, flip_v)
            entry = {"first": first, "second": second,
                     "field": z.field.spec_string()}
            if first == second:
                record("diagonal", {"param": first,
                                    "field": z.field.spec_string()},
                       ("diag", first, z.field.key))
            else:
                key = ("off", tuple(sorted((first, second))), z.field.key)
                record("off", entry, key)
    return {
        "injective": not double_points,
        "double_points": double_points,
        "cusp_params": cusp_params,
        "degree": n,
    }
