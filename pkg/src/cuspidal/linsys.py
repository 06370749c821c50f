"""Linear systems with imposed zero-schemes, smoothness certificates,
and the curve constructions built from them.

``system`` computes h0 and the h1 deficiency as an exact rank
computation: h1 = h0 - (ambient dimension - deg Z) measures how far the
scheme's conditions are from independent.  "General member" is realized
as a seeded-random draw followed by certification, retried up to a
budget; every report carries the seeds so runs are reproducible.
"""

from __future__ import annotations

import random

from .binform import BinaryForm, P1Point
from .bipoly import BiPoly
from .counting import genus_window_check
from .errors import (EmptySystem, RetriesExhausted, SmallCharacteristic,
                     WorkbenchError)
from .fields import Field
from .formulas import quadric_genus_with_cusps
from .linalg import kernel_basis, rank
from .surfaces import (QUADRIC_CHARTS, BiForm, ConeForm, SurfacePoint,
                       quadric_chart_point)
from .zerodim import common_zeros_bivariate
from .zeroschemes import (Ruling, ZeroScheme, condition_matrix, cusp_scheme,
                          empty_scheme, ruling_divisor)


class LinearSystem:
    """Kernel of a scheme's condition matrix inside a form space."""

    __slots__ = ("ambient", "field", "degree", "scheme", "basis", "h0", "h1",
                 "ambient_dimension")

    def __init__(self, ambient, field, degree, scheme, basis, ambient_dimension):
        self.ambient = ambient
        self.field = field
        self.degree = degree
        self.scheme = scheme
        self.basis = basis
        self.ambient_dimension = ambient_dimension
        self.h0 = len(basis)
        self.h1 = self.h0 - (ambient_dimension - scheme.degree)

    def describe(self):
        return {
            "ambient": self.ambient,
            "degree": list(self.degree) if self.ambient == "quadric" else self.degree,
            "scheme": self.scheme.describe(),
            "h0": self.h0,
            "h1": self.h1,
            "ambient_dimension": self.ambient_dimension,
        }

    def __repr__(self):
        return "LinearSystem(%s %r: h0=%d, h1=%d)" % (
            self.ambient, self.degree, self.h0, self.h1)


def system(ambient: str, degree, Z: ZeroScheme) -> LinearSystem:
    """The linear system of degree-``degree`` forms through Z."""
    field = Z.field
    rows = condition_matrix(Z, degree)
    if ambient == "quadric":
        d1, d2 = degree
        ncols = (d1 + 1) * (d2 + 1)
        kern = kernel_basis(rows, field, ncols)
        basis = [BiForm.from_vector(field, d1, d2, v) for v in kern]
    else:
        d = degree
        ncols = (d + 1) ** 2
        kern = kernel_basis(rows, field, ncols)
        basis = [ConeForm.from_vector(field, d, v) for v in kern]
    return LinearSystem(ambient, field, degree, Z, basis, ncols)


def h1_vanishing_probe(ambient: str, degree, Z: ZeroScheme) -> bool:
    """True iff the scheme imposes independent conditions (h1 = 0)."""
    rows = condition_matrix(Z, degree)
    return rank(rows, Z.field) == Z.degree


def random_member(S: LinearSystem, seed):
    """Seeded-uniform combination of the kernel basis; deterministic."""
    if S.h0 == 0:
        raise EmptySystem("the system has no nonzero members")
    rng = random.Random("member:%s" % (seed,))
    field = S.field
    for _ in range(64):
        coeffs = [field.random_element(rng) for _ in S.basis]
        if all(c.is_zero() for c in coeffs):
            continue
        acc = None
        for c, b in zip(coeffs, S.basis):
            vec = [c * x for x in b.to_vector()]
            acc = vec if acc is None else [a + x for a, x in zip(acc, vec)]
        if S.ambient == "quadric":
            d1, d2 = S.degree
            member = BiForm.from_vector(field, d1, d2, acc)
        else:
            member = ConeForm.from_vector(field, S.degree, acc)
        if not member.is_zero():
            return member
    raise WorkbenchError("could not draw a nonzero member")


class SmoothnessReport:
    """Outcome of the chart-by-chart singular-point search."""

    def __init__(self, verdict, charts_checked, witnesses, excised, notes):
        self.verdict = verdict
        self.charts_checked = charts_checked
        self.witnesses = witnesses
        self.excised = excised
        self.notes = notes

    @property
    def smooth(self):
        return self.verdict == "smooth"

    def describe(self):
        return {
            "verdict": self.verdict,
            "charts_checked": self.charts_checked,
            "witnesses": self.witnesses,
            "excised_hits": self.excised,
            "notes": self.notes,
        }

    def __repr__(self):
        return "SmoothnessReport(%s, %d witnesses)" % (
            self.verdict, len(self.witnesses))


def _char_guard_form(form):
    ch = form.field.characteristic
    if isinstance(form, BiForm):
        deg = max(form.d1, form.d2)
    else:
        deg = form.degree
    if 0 < ch <= deg:
        raise SmallCharacteristic(
            "characteristic %d <= degree %d" % (ch, deg))


def _witness_matches_excised(zero, to_surface, excise):
    """Does a chart zero coincide with one of the excised surface points?"""
    if zero.triangular:
        return False
    pt = to_surface(zero)
    for e in excise:
        try:
            if e.map_field(zero.field) == pt:
                return True
        except WorkbenchError:
            continue
    return False


def smoothness_certificate(form, excise=()) -> SmoothnessReport:
    """Singular-locus search for a curve on the quadric or the cone.

    Every chart equation f is searched for common zeros of
    (f, f_u, f_v); a ``singular`` verdict carries a witness verified by
    substitution, possibly over an extension field.  Points listed in
    ``excise`` are skipped (used when singularities are imposed on
    purpose).  On the cone the two charts cover everything but the
    vertex, so a curve through the vertex is never declared smooth.
    """
    if form.is_zero():
        raise WorkbenchError("smoothness of the zero form")
    _char_guard_form(form)
    notes = []
    witnesses = []
    excised_hits = []
    charts_checked = []
    if isinstance(form, BiForm):
        chart_data = []
        for chart in QUADRIC_CHARTS:
            f = form.dehomogenize(chart)
            chart_data.append((("chart", chart), f,
                               lambda z, ch=chart: quadric_chart_point(
                                   z.field, ch, z.u, z.v)))
    else:
        chart_data = []
        for which in (0, 2):
            f = form.chart(which)
            chart_data.append((("cone_chart", which), f,
                               lambda z, w=which: _cone_point_over(form, w, z)))
        if form.vertex_value().is_zero():
            notes.append("curve passes through the cone vertex; "
                         "charts do not cover it")
    for label, f, to_surface in chart_data:
        charts_checked.append(list(label))
        polys = [f, f.partial_u(), f.partial_v()]
        result = common_zeros_bivariate(polys)
        found = list(result.zeros)
        if result.component is not None:
            notes.append("%r: singular along a whole component" % (label,))
            if result.component_sample is not None:
                found.append(result.component_sample)
        for z in found:
            if _witness_matches_excised(z, to_surface, excise):
                excised_hits.append({"chart": list(label), "zero": z.describe()})
                continue
            entry = {"chart": list(label), "zero": z.describe()}
            if not z.triangular:
                entry["surface_point"] = repr(to_surface(z))
            witnesses.append(entry)
    if witnesses:
        verdict = "singular"
    elif isinstance(form, ConeForm) and form.vertex_value().is_zero():
        verdict = "inconclusive"
    else:
        verdict = "smooth"
    return SmoothnessReport(verdict, charts_checked, witnesses,
                            excised_hits, notes)


def _cone_point_over(form, which, zero):
    ext = zero.field
    f2 = form if form.field == ext else form.map_field(ext)
    return f2.point_from_chart(which, zero.u, zero.v)


def _attempt_seed(seed, attempt):
    return "%s#%d" % (seed, attempt)


def construct_smooth_tangent_curve(d1: int, d2: int, o: SurfacePoint,
                                   o2: SurfacePoint, seed,
                                   retries: int = 32):
    """A smooth bidegree-(d1,d2) curve meeting the ruling through o in the
    single point o (multiplicity d2) and the opposite-family ruling
    through o2 in the single point o2 (multiplicity d1).

    Returns (curve, report).  The intersection point q of the two
    rulings is an injective outer projection center for the result.
    """
    if not (1 <= d1 <= d2):
        raise WorkbenchError("need 1 <= d1 <= d2")
    field = o.field
    L = Ruling.quadric_x(o.px)
    L2 = Ruling.quadric_y(o2.py)
    q = SurfacePoint.quadric(o.px, o2.py)
    if o == q or o2 == q:
        raise WorkbenchError("support points must avoid the ruling crossing")
    Z = ruling_divisor(L, o, d2).union(ruling_divisor(L2, o2, d1))
    S = system("quadric", (d1, d2), Z)
    draws = []
    for attempt in range(retries):
        member = random_member(S, _attempt_seed(seed, attempt))
        entry = {"attempt": attempt, "seed": _attempt_seed(seed, attempt)}
        rest_L = member.restrict_x(o.px)
        rest_L2 = member.restrict_y(o2.py)
        if rest_L.is_zero() or rest_L2.is_zero():
            entry["reject"] = "curve contains a ruling"
            draws.append(entry)
            continue
        ordL = rest_L.vanishing_order(o.py)
        ordL2 = rest_L2.vanishing_order(o2.px)
        entry["tangency"] = [ordL, ordL2]
        if ordL != d2 or ordL2 != d1:
            entry["reject"] = "tangency order mismatch"
            draws.append(entry)
            continue
        cert = smoothness_certificate(member)
        entry["smooth"] = cert.verdict
        if not cert.smooth:
            entry["reject"] = "singular member"
            draws.append(entry)
            continue
        draws.append(entry)
        report = {
            "system": S.describe(),
            "h0_expected": d1 * d2 + 1,
            "member": member.to_string(),
            "center": repr(q),
            "certificates": {
                "smooth": cert.describe(),
                "tangency": {
                    "ruling_x": {"order": ordL, "profile":
                                 list(rest_L.distinct_root_count()[1])},
                    "ruling_y": {"order": ordL2, "profile":
                                 list(rest_L2.distinct_root_count()[1])},
                },
            },
            "genus_arithmetic": (d1 - 1) * (d2 - 1),
            "seed": str(seed),
            "attempts": draws,
        }
        return member, report
    raise RetriesExhausted("no smooth tangent curve in %d draws" % retries,
                           draws=draws)


def construct_cone_curve(d: int, p: SurfacePoint, seed, retries: int = 32):
    """A smooth degree-d curve on the cone avoiding the vertex and meeting
    the ruling through p at the single point p with multiplicity d."""
    if d < 2:
        raise WorkbenchError("need d >= 2")
    if p.is_vertex:
        raise WorkbenchError("support point must not be the vertex")
    field = p.field
    Z = ruling_divisor(Ruling.cone_through(p), p, d)
    S = system("cone", d, Z)
    param = p.ruling_parameter()
    draws = []
    for attempt in range(retries):
        member = random_member(S, _attempt_seed(seed, attempt))
        entry = {"attempt": attempt, "seed": _attempt_seed(seed, attempt)}
        if member.vertex_value().is_zero():
            entry["reject"] = "vertex on curve"
            draws.append(entry)
            continue
        fiber = member.restrict_to_ruling(p.ruling_base())
        if fiber.is_zero():
            entry["reject"] = "curve contains the ruling"
            draws.append(entry)
            continue
        ordp = fiber.vanishing_order(param)
        entry["tangency"] = ordp
        if ordp != d:
            entry["reject"] = "tangency order mismatch"
            draws.append(entry)
            continue
        cert = smoothness_certificate(member)
        entry["smooth"] = cert.verdict
        if not cert.smooth:
            entry["reject"] = "singular member"
            draws.append(entry)
            continue
        draws.append(entry)
        report = {
            "system": S.describe(),
            "h0_expected": d * d + d + 1,
            "member": member.to_string(),
            "certificates": {
                "smooth": cert.describe(),
                "vertex_avoided": True,
                "ruling_intersection": {"order": ordp, "profile":
                                        list(fiber.distinct_root_count()[1])},
            },
            "genus_note": "cone-curve genus is reported by point-count "
                          "evidence only",
            "seed": str(seed),
            "attempts": draws,
        }
        return member, report
    raise RetriesExhausted("no smooth cone curve in %d draws" % retries,
                           draws=draws)


def _draw_cusp_layout(field, seed, attempt, alpha, beta):
    """Seeded points/tangents for the two cusp schemes, off both rulings."""
    rng = random.Random("cusps:%s#%d" % (seed, attempt))
    def draw_point():
        while True:
            a = field.random_element(rng)
            b = field.random_element(rng)
            if not a.is_zero() and not b.is_zero():
                return SurfacePoint.quadric(P1Point.affine(field, a),
                                            P1Point.affine(field, b))
    def draw_tangent():
        while True:
            t1 = field.random_element(rng)
            t2 = field.random_element(rng)
            if not (t1.is_zero() or t2.is_zero()):
                return (t1, t2)
    qA = draw_point()
    qB = draw_point()
    while qB == qA:
        qB = draw_point()
    return (qA, draw_tangent(), alpha), (qB, draw_tangent(), beta)


def cusp_normal_form_check(member: BiForm, gen) -> dict:
    """Exact local normal-form test at an imposed cusp.

    In the scheme's own sheared chart the member must satisfy every
    scheme functional, carry a nonzero v^2 term, and have nonzero
    coefficient on u^(2h+1): together these pin the singularity type
    down to its contact order.
    """
    h = gen.h
    e1, e2 = gen.shear()
    from .surfaces import quadric_local_expansion
    le = quadric_local_expansion(member, gen.point, e1, e2, 2 * h + 2, 3)
    functional_residues = []
    for i in range(2 * h + 1):
        functional_residues.append(le.coeff(i, 0))
    for i in range(h + 1):
        functional_residues.append(le.coeff(i, 1))
    scheme_ok = all(c.is_zero() for c in functional_residues)
    lead = le.coeff(2 * h + 1, 0)
    quad = le.coeff(0, 2)
    return {
        "point": repr(gen.point),
        "h": h,
        "scheme_functionals_vanish": scheme_ok,
        "next_u_coefficient_nonzero": not lead.is_zero(),
        "v2_coefficient_nonzero": not quad.is_zero(),
        "passed": scheme_ok and not lead.is_zero() and not quad.is_zero(),
    }


def construct_cuspidal_curve(d1: int, d2: int, alpha: int, beta: int,
                             seed, field: Field = None, retries: int = 32,
                             layout=None):
    """A bidegree-(d1,d2) curve with exactly two imposed unibranch
    singularities of types A_2alpha and A_2beta, full ruling tangency at
    two boundary points, and independent conditions (h1 = 0).

    The guaranteed range is d2 >= d1 >= 16 with 3*max(alpha,beta)+2 at
    most binom(d1-1, 2); smaller degrees run in experimental mode and
    are flagged.  Geometric genus: (d1-1)(d2-1) - alpha - beta.
    """
    if alpha < beta or beta < 1:
        raise WorkbenchError("need alpha >= beta >= 1 "
                             "(kappa = 0 is the smooth tangent construction)")
    if not (2 <= d1 <= d2):
        raise WorkbenchError("need 2 <= d1 <= d2")
    if field is None:
        raise WorkbenchError("a coefficient field is required")
    h = max(alpha, beta)
    cap = (d1 - 1) * (d1 - 2) // 2
    warnings = []
    if d1 < 16:
        warnings.append("experimental_below_guaranteed_threshold")
    if 3 * h + 2 > cap:
        # outside the guaranteed range; the per-draw h1 and normal-form
        # certificates decide whether the instance actually works
        warnings.append("cusp_order_beyond_guarantee")
    scheme_degree = d1 + d2 + 3 * alpha + 2 + 3 * beta + 2
    if scheme_degree >= (d1 + 1) * (d2 + 1):
        raise WorkbenchError("scheme degree %d cannot impose independent "
                             "conditions in bidegree (%d,%d)"
                             % (scheme_degree, d1, d2))
    one = field.one()
    zero = field.zero()
    o1 = SurfacePoint.quadric(P1Point(field, one, zero), P1Point(field, zero, one))
    o2 = SurfacePoint.quadric(P1Point(field, zero, one), P1Point(field, one, zero))
    L = Ruling.quadric_x(o1.px)
    R = Ruling.quadric_y(o2.py)
    base = ruling_divisor(L, o1, d2).union(ruling_divisor(R, o2, d1))
    kappa = alpha + beta
    genus = quadric_genus_with_cusps(d1, d2, kappa).value
    draws = []
    for attempt in range(retries):
        entry = {"attempt": attempt, "seed": _attempt_seed(seed, attempt)}
        if layout is None:
            (qA, tA, ha), (qB, tB, hb) = _draw_cusp_layout(
                field, seed, attempt, alpha, beta)
        else:
            (qA, tA, ha), (qB, tB, hb) = layout
        if L.contains(qA) or R.contains(qA) or L.contains(qB) or R.contains(qB):
            entry["reject"] = "cusp point on a boundary ruling"
            draws.append(entry)
            continue
        A = cusp_scheme(qA, tA, ha)
        B = cusp_scheme(qB, tB, hb)
        Z = base.union(A).union(B)
        S = system("quadric", (d1, d2), Z)
        entry["h1"] = S.h1
        if S.h1 != 0:
            entry["reject"] = "dependent conditions (h1 > 0)"
            draws.append(entry)
            continue
        member = random_member(S, _attempt_seed(seed, attempt))
        rest_L = member.restrict_x(o1.px)
        rest_R = member.restrict_y(o2.py)
        if rest_L.is_zero() or rest_R.is_zero():
            entry["reject"] = "curve contains a boundary ruling"
            draws.append(entry)
            continue
        nfA = cusp_normal_form_check(member, A.generators[0])
        nfB = cusp_normal_form_check(member, B.generators[0])
        entry["normal_form"] = [nfA["passed"], nfB["passed"]]
        if not (nfA["passed"] and nfB["passed"]):
            entry["reject"] = "cusp normal form degenerate"
            draws.append(entry)
            continue
        cert = smoothness_certificate(member, excise=(qA, qB))
        entry["smooth_away_from_cusps"] = cert.verdict
        if not cert.smooth:
            entry["reject"] = "extra singular point"
            draws.append(entry)
            continue
        if len(cert.excised) < 2:
            # both cusps should have been detected and excised
            entry["reject"] = "imposed cusp not detected as singular"
            draws.append(entry)
            continue
        draws.append(entry)
        report = {
            "system": S.describe(),
            "member": member.to_string(),
            "cusps": {"A": nfA, "B": nfB},
            "certificates": {
                "smooth_away_from_cusps": cert.describe(),
                "tangency": {
                    "ruling_x": rest_L.vanishing_order(o1.py),
                    "ruling_y": rest_R.vanishing_order(o2.px),
                },
                "h1_vanishing": S.h1 == 0,
            },
            "kappa": kappa,
            "genus": genus,
            "genus_by_singularity_count": (d1 - 1) * (d2 - 1) - (alpha + beta),
            "irreducibility": "assumed (connected with unibranch "
                              "singularities); not machine-checked",
            "warnings": warnings,
            "seed": str(seed),
            "attempts": draws,
        }
        return member, report
    raise RetriesExhausted("no cuspidal curve in %d draws" % retries,
                           draws=draws)
