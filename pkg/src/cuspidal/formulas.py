"""Closed-form genus counts, dimension formulas, and classical bounds.

Every operation is total: it returns a :class:`FormulaResult` carrying
the computed value together with a validity flag that reflects exactly
the hypothesis under which the formula is meaningful.  Values are exact
(integers, or rationals where division genuinely occurs).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DTooSmall


class FormulaResult:
    """Value of a closed-form expression plus its hypothesis check."""

    __slots__ = ("value", "valid", "condition")

    def __init__(self, value, valid: bool, condition: str):
        self.value = value
        self.valid = valid
        self.condition = condition

    def describe(self):
        v = self.value
        if isinstance(v, Fraction):
            v = int(v) if v.denominator == 1 else str(v)
        return {"value": v, "valid": self.valid, "condition": self.condition}

    def __repr__(self):
        return "FormulaResult(%r, valid=%s)" % (self.value, self.valid)


def plucker_genus(d: int, kappa: int) -> FormulaResult:
    """Geometric genus of a degree-d plane curve whose only singularities
    are kappa ordinary cusps: (d-1)(d-2)/2 - kappa."""
    if d < 1 or kappa < 0:
        raise DTooSmall("need d >= 1 and kappa >= 0")
    value = (d - 1) * (d - 2) // 2 - kappa
    return FormulaResult(value, value >= 0,
                         "genus nonnegative: kappa <= (d-1)(d-2)/2")


def castelnuovo_pi(d: int) -> FormulaResult:
    """Castelnuovo bound pi(d, 3) = m(m-1) + m*eps on the genus of a
    non-degenerate degree-d space curve, where d = 2m + 1 + eps."""
    if d < 3:
        raise DTooSmall("Castelnuovo bound needs d >= 3")
    m = (d - 1) // 2
    eps = (d - 1) % 2
    value = m * (m - 1) + m * eps
    return FormulaResult(value, True, "d = 2m+1+eps with eps in {0,1}")


def cusp_family_dimension(d: int, kappa: int) -> FormulaResult:
    """Dimension (d^2+3d)/2 - 2*kappa of the family of irreducible plane
    curves of degree d with kappa ordinary cusps; the smoothness range
    of the family is 9*kappa < d^2 + 6d + 8."""
    if d < 1 or kappa < 0:
        raise DTooSmall("need d >= 1 and kappa >= 0")
    value = (d * d + 3 * d) // 2 - 2 * kappa
    valid = 9 * kappa < d * d + 6 * d + 8
    return FormulaResult(value, valid, "9*kappa < d^2 + 6d + 8")


def barkats_condition(d: int, kappa: int) -> FormulaResult:
    """Existence range for plane curves with kappa ordinary cusps:
    5*kappa <= (d+2)(d+1)/2 - d - 1 (boolean-valued)."""
    rhs = (d + 2) * (d + 1) // 2 - d - 1
    holds = 5 * kappa <= rhs
    return FormulaResult(1 if holds else 0, d >= 4,
                         "5*kappa <= (d+2)(d+1)/2 - d - 1 (stated for d >= 4)")


def tono_bound(g: int) -> FormulaResult:
    """Upper bound (21g + 17)/2 on the number of cusps of a cuspidal
    plane curve of geometric genus g; genuinely half-integral."""
    if g < 0:
        raise DTooSmall("need g >= 0")
    value = Fraction(21 * g + 17, 2)
    return FormulaResult(value, True, "cusp count <= (21g+17)/2")


def quadric_genus_with_cusps(d1: int, d2: int, kappa: int) -> FormulaResult:
    """Geometric genus d1*d2 - d1 - d2 + 1 - kappa of a bidegree-(d1,d2)
    curve on the smooth quadric with kappa total singularity degree.

    Valid when 0 < kappa <= 2h for an admissible cusp order h with
    3h + 2 <= binom(d1-1, 2); the maximal admissible kappa is reported
    in the condition.  kappa = 0 is the smooth tangent-curve case.
    """
    if d1 < 1 or d2 < 1 or kappa < 0:
        raise DTooSmall("need d1, d2 >= 1 and kappa >= 0")
    value = d1 * d2 - d1 - d2 + 1 - kappa
    cap = (d1 - 1) * (d1 - 2) // 2
    kappa_max = 2 * ((cap - 2) // 3) if cap >= 2 else 0
    if kappa == 0:
        return FormulaResult(value, False,
                             "kappa = 0 is the smooth tangent-curve case; "
                             "max admissible kappa = %d" % kappa_max)
    return FormulaResult(value, kappa <= kappa_max,
                         "0 < kappa <= %d (= 2*floor((binom(d1-1,2)-2)/3))"
                         % kappa_max)


_SHUSTIN_SMALL = {1: 0, 2: 0, 4: 3, 5: 5, 6: 7}


def shustin_kappa_lower(d: int) -> FormulaResult:
    """Lower bound for the maximal number of real ordinary cusps on a
    degree-d real plane curve; tabulated for d <= 6, closed form d >= 7."""
    if d < 1:
        raise DTooSmall("need d >= 1")
    if d >= 7:
        if d % 4 in (0, 3):
            value = (d * d - 3 * d + 4) // 4
        else:
            value = (d * d - 3 * d + 2) // 4
        return FormulaResult(value, True, "closed form for d >= 7")
    if d == 3:
        return FormulaResult(None, False, "unspecified for d = 3")
    return FormulaResult(_SHUSTIN_SMALL[d], True, "tabulated small degree")


def singularity_degree_a2h(h: int) -> int:
    """Delta-invariant of an A_2h singularity (h = 0 is a smooth point)."""
    if h < 0:
        raise DTooSmall("need h >= 0")
    return h


FORMULAS = {
    "plucker_genus": (plucker_genus, 2),
    "castelnuovo_pi": (castelnuovo_pi, 1),
    "cusp_family_dimension": (cusp_family_dimension, 2),
    "barkats_condition": (barkats_condition, 2),
    "tono_bound": (tono_bound, 1),
    "quadric_genus_with_cusps": (quadric_genus_with_cusps, 3),
    "shustin_kappa_lower": (shustin_kappa_lower, 1),
}
