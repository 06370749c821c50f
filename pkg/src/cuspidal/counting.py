"""Finite-field point counts and Hasse-Weil genus windows.

Counting is fiber-by-fiber: a curve on the quadric is swept along one
ruling family, and the rational roots of each degree-d2 restriction are
counted through the Frobenius gcd, never by root enumeration.  The
count feeds a Weil-bound window |N - q - 1| <= 2 g sqrt(q), which gives
a certified lower bound for the genus: an estimate, not a proof, and
reports label it as such.
"""

from __future__ import annotations

import math

from .binform import BinaryForm, P1Point
from .errors import WorkbenchError
from .surfaces import BiForm, ConeForm
from .unipoly import Poly, gcd_univariate


def rational_root_count(form: BinaryForm) -> int:
    """Number of distinct P1(k)-points where the binary form vanishes."""
    if form.is_zero():
        raise WorkbenchError("zero form vanishes everywhere")
    field = form.field
    if field.order is None:
        raise WorkbenchError("rational point counting needs a finite field")
    f = form.dehomogenize_t()
    count = 1 if f.degree < form.degree else 0  # root at (0:1)
    if f.degree > 0:
        x = Poly.x(field)
        frob = x.powmod(field.order, f) - x
        count += gcd_univariate(f, frob).degree
    return count


def p1_points(field):
    """All points of P1 over a finite field: affine values then infinity."""
    for e in field.elements():
        yield P1Point.affine(field, e)
    yield P1Point.infinity(field)


def count_points_quadric(F: BiForm) -> int:
    """Number of k-points of the curve F = 0 on the quadric."""
    field = F.field
    total = 0
    for a in p1_points(field):
        fiber = F.restrict_x(a)
        if fiber.is_zero():
            total += field.order + 1  # the whole ruling lies on the curve
        else:
            total += rational_root_count(fiber)
    return total


def count_points_cone(G: ConeForm) -> int:
    """Number of k-points of the curve G = 0 on the cone (vertex counted once)."""
    field = G.field
    total = 0
    for base in p1_points(field):
        fiber = G.restrict_to_ruling(base)
        if fiber.is_zero():
            total += field.order + 1
        else:
            # parameter (0:1) on every ruling is the vertex; counted once below
            total += _affine_root_count_excluding_infinity(fiber)
    if not G.vertex_value().is_zero():
        return total
    return total + 1


def _affine_root_count_excluding_infinity(fiber: BinaryForm) -> int:
    """Roots (lam:mu) of the fiber form with lam != 0 (vertex is (0:1))."""
    field = fiber.field
    f = fiber.dehomogenize_t()  # lam = 1, polynomial in mu
    if f.degree == 0:
        return 0
    x = Poly.x(field)
    frob = x.powmod(field.order, f) - x
    return gcd_univariate(f, frob).degree


def hasse_weil_min_genus(count: int, q: int) -> int:
    """Smallest genus g consistent with |N - q - 1| <= 2 g sqrt(q)."""
    delta = abs(count - q - 1)
    if delta == 0:
        return 0
    # smallest g with delta^2 <= 4 g^2 q
    g = math.isqrt(delta * delta // (4 * q))
    while 4 * g * g * q < delta * delta:
        g += 1
    return g


def genus_window_check(count: int, q: int, claimed_genus: int) -> dict:
    """Weil-window consistency report for one point count."""
    gmin = hasse_weil_min_genus(count, q)
    return {
        "count": count,
        "field_order": q,
        "min_consistent_genus": gmin,
        "claimed_genus": claimed_genus,
        "consistent": gmin <= claimed_genus,
        "note": "point-count window is an estimate (lower bound), not a proof",
    }
