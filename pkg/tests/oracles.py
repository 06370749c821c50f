"""Independent oracles for the test suite.

These recompute quantities by routes the library does not take:
exhaustive searches over finite fields, trial division, pairwise
collision grouping, and explicit dual-space linear algebra.  They stay
deliberately naive.
"""

from __future__ import annotations

from cuspidal.fields import ExtensionField, PrimeField
from cuspidal.unipoly import Poly, find_irreducible
from cuspidal.surfaces import (BiForm, SurfacePoint, projection_forms,
                               project_point, segre)
from cuspidal.binform import BinaryForm, P1Point


def trial_division_factors(p: Poly):
    """All monic irreducible factors of p over a small prime field, found
    by exhaustive enumeration of candidate divisors by degree."""
    field = p.field
    q = field.order
    assert q is not None and q <= 11, "trial division is for tiny fields"
    rem = p.monic()
    out = []
    deg = 1
    while rem.degree > 0:
        if deg > rem.degree:
            break
        found = False
        for cand in _all_monic(field, deg):
            if (rem % cand).is_zero():
                mult = 0
                while (rem % cand).is_zero():
                    rem = rem.divexact(cand)
                    mult += 1
                out.append((cand, mult))
                found = True
                break
        if not found:
            deg += 1
    if rem.degree > 0:
        out.append((rem, 1))
    return out


def _all_monic(field, deg):
    import itertools
    elems = list(field.elements())
    for tail in itertools.product(elems, repeat=deg):
        yield Poly(field, list(tail) + [field.one()])


def exhaustive_distinct_roots(form: BinaryForm, max_level: int = None):
    """Distinct projective roots of a binary form, counted by scanning
    P1 over GF(q^k) for k = 1..deg (scan for k <= 2, Frobenius gcd for
    higher levels, cross-checked at the scanned levels)."""
    field = form.field
    q = field.order
    d = form.degree
    f = form.dehomogenize_t()
    count = 1 if f.degree < d else 0  # root at infinity
    if f.degree <= 0:
        return count
    max_level = max_level or f.degree
    counted = {}
    for k in range(1, max_level + 1):
        if k == 1:
            fk = field
            fform = f
        else:
            fk = ExtensionField(field, find_irreducible(field, k).coeffs)
            fform = f.map_field(fk)
        if fk.order <= 12000:
            roots = sum(1 for e in fk.elements() if fform.eval(e).is_zero())
        else:
            from cuspidal.unipoly import gcd_univariate
            x = Poly.x(fk)
            frob = x.powmod(fk.order, fform) - x
            roots = gcd_univariate(fform, frob).degree
        counted[k] = roots
    # distinct closure roots = sum over levels of roots new at that level
    # (roots rational at a proper divisor level are already counted)
    total = 0
    newly = {}
    for k in sorted(counted):
        seen = sum(newly[kk] for kk in newly if k % kk == 0)
        newly[k] = counted[k] - seen
        total += newly[k]
    return count + total


def brute_force_collisions_quadric(points, center: SurfacePoint):
    """Group projected images of the given surface points; return the
    list of collision groups (>= 2 distinct points with equal image)."""
    c = segre(center)
    pf = projection_forms(c)
    groups = {}
    for pt in points:
        img = tuple(repr(x) for x in project_point(c, pf, segre(pt)))
        groups.setdefault(img, []).append(pt)
    return [g for g in groups.values() if len(set_repr(g)) > 1]


def set_repr(pts):
    return {repr(p) for p in pts}


def dual_space_h1(X, D) -> int:
    """h1(D) as the dimension of the space of polynomials q(x) of degree
    <= g-1 satisfying the divisibility conditions forced by D, computed
    by explicit rank over the coefficient basis."""
    from cuspidal.linalg import rank
    field = X.field
    g = X.genus
    # per x-coordinate: q must vanish to order ceil(m/2) at a ramification
    # x-value of multiplicity m, and to order max(m1, m2) at the common
    # x-value of a conjugate pair
    constraints = {}
    for p, m in D.points.items():
        key = repr(p.x.val)
        req = (m + 1) // 2 if p.weierstrass else m
        old = constraints.get(key, (p.x, 0))[1]
        constraints[key] = (p.x, max(old, req))
    rows = []
    for key, (a, req) in sorted(constraints.items()):
        shifted = []
        cur = Poly.one(field)
        lin = Poly(field, (a, field.one()))
        for i in range(g):
            shifted.append([cur[e] for e in range(req)])
            cur = cur * lin
        for e in range(req):
            rows.append([shifted[i][e] for i in range(g)])
    if not rows:
        return g
    return g - rank(rows, field)
