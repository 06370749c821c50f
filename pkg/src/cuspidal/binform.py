"""Binary forms on P1: root multiplicities without leaving the base field.

A degree-d form F(s,t) stores coefficients of s^(d-i) t^i.  The number
of distinct projective roots over the algebraic closure and the full
multiplicity profile are computed from gcds and a squarefree
decomposition; actual root values (with lazily-built extension fields)
are available separately for witness extraction.
"""

from __future__ import annotations

from .errors import SmallCharacteristic, WorkbenchError, ZeroForm
from .fields import Field, FieldElement
from .unipoly import (Poly, gcd_univariate, roots_over_closure,
                      squarefree_decomposition)


class P1Point:
    """Point (a : b) of the projective line, normalized so the first
    nonzero coordinate is 1."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field, a, b):
        a = a if isinstance(a, FieldElement) else field.element(a)
        b = b if isinstance(b, FieldElement) else field.element(b)
        if a.is_zero() and b.is_zero():
            raise WorkbenchError("(0:0) is not a point of P1")
        if not a.is_zero():
            inv = a.inverse()
            a, b = field.one(), b * inv
        else:
            b = field.one()
        self.field = field
        self.a = a
        self.b = b

    @classmethod
    def affine(cls, field, value):
        return cls(field, field.one(), value)

    @classmethod
    def infinity(cls, field):
        return cls(field, 0, 1)

    def is_infinity(self) -> bool:
        return self.a.is_zero()

    def affine_value(self) -> FieldElement:
        if self.is_infinity():
            raise WorkbenchError("point at infinity has no affine value")
        return self.b

    def complement(self):
        """A fixed vector independent of (a, b), used to build charts."""
        if not self.a.is_zero():
            return self.field.zero(), self.field.one()
        return self.field.one(), self.field.zero()

    def map_field(self, new_field):
        return P1Point(new_field, new_field.element(self.a), new_field.element(self.b))

    def __eq__(self, other):
        if not isinstance(other, P1Point):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.field.key, self.a.val, self.b.val))

    def __repr__(self):
        return "(%r:%r)" % (self.a, self.b)


class BinaryForm:
    """Homogeneous degree-d polynomial in (s, t) over an exact field."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree: int, coeffs):
        cs = [c if isinstance(c, FieldElement) else field.element(c) for c in coeffs]
        if len(cs) != degree + 1:
            raise WorkbenchError("need %d coefficients for degree %d"
                                 % (degree + 1, degree))
        self.field = field
        self.degree = degree
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p: Poly, degree: int) -> "BinaryForm":
        """Homogenize a polynomial in t to the given degree."""
        if p.degree > degree:
            raise WorkbenchError("degree too small to homogenize")
        cs = [p[i] for i in range(degree + 1)]
        return cls(p.field, degree, cs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def eval(self, pt: P1Point) -> FieldElement:
        return self.eval_raw(pt.a, pt.b)

    def eval_raw(self, a, b) -> FieldElement:
        field = self.field
        a = a if isinstance(a, FieldElement) else field.element(a)
        b = b if isinstance(b, FieldElement) else field.element(b)
        acc = field.zero()
        # Horner in two stages: powers of a descending, b ascending
        pow_b = field.one()
        apows = [field.one()]
        for _ in range(self.degree):
            apows.append(apows[-1] * a)
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + c * apows[self.degree - i] * pow_b
            pow_b = pow_b * b
        return acc

    def dehomogenize_t(self) -> Poly:
        """Chart s = 1: polynomial in t."""
        return Poly(self.field, self.coeffs)

    def dehomogenize_s(self) -> Poly:
        """Chart t = 1: polynomial in s."""
        return Poly(self.field, tuple(reversed(self.coeffs)))

    def scale(self, c) -> "BinaryForm":
        c = c if isinstance(c, FieldElement) else self.field.element(c)
        return BinaryForm(self.field, self.degree, [x * c for x in self.coeffs])

    def map_field(self, new_field) -> "BinaryForm":
        return BinaryForm(new_field, self.degree,
                          [new_field.element(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return (self.field == other.field and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __repr__(self):
        from .grammar import format_polynomial
        cm = {}
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                cm[(self.degree - i, i)] = c
        return format_polynomial(cm, ("s", "t"), value_repr=repr)

    def _guard(self):
        if self.is_zero():
            raise ZeroForm("operation undefined on the zero form")

    def _char_guard(self):
        ch = self.field.characteristic
        if 0 < ch <= self.degree:
            raise SmallCharacteristic(
                "characteristic %d <= degree %d" % (ch, self.degree))

    def divexact_linear(self, pt: P1Point) -> "BinaryForm":
        """Exact division by the linear form a*t - b*s vanishing at pt.

        Solves the coefficient recurrence F_i = a*G_{i-1} - b*G_i for the
        quotient G of degree d-1; raises if the division is not exact.
        """
        self._guard()
        if self.degree == 0:
            raise WorkbenchError("cannot divide a constant form")
        a, b = pt.a, pt.b
        d = self.degree
        if a.is_zero():
            # pt = (0:1), linear form -b*s: needs F_d = 0
            if not self.coeffs[d].is_zero():
                raise WorkbenchError("form not divisible at the point")
            binv = b.inverse()
            return BinaryForm(self.field, d - 1,
                              [-c * binv for c in self.coeffs[:d]])
        if b.is_zero():
            # pt = (1:0), linear form a*t: needs F_0 = 0
            if not self.coeffs[0].is_zero():
                raise WorkbenchError("form not divisible at the point")
            ainv = a.inverse()
            return BinaryForm(self.field, d - 1,
                              [c * ainv for c in self.coeffs[1:]])
        binv = b.inverse()
        g = [-self.coeffs[0] * binv]
        for i in range(1, d):
            g.append((a * g[i - 1] - self.coeffs[i]) * binv)
        if self.coeffs[d] != a * g[d - 1]:
            raise WorkbenchError("form not divisible at the point")
        return BinaryForm(self.field, d - 1, g)

    def vanishing_order(self, pt: P1Point) -> int:
        """Multiplicity of pt as a root; 0 if F(pt) != 0."""
        self._guard()
        order = 0
        f = self
        while f.degree > 0 and f.eval(pt).is_zero():
            f = f.divexact_linear(pt)
            order += 1
        if f.degree == 0 and f.coeffs[0].is_zero():
            raise WorkbenchError("zero form reached; inconsistent state")
        return order

    def multiplicity_profile(self):
        """Multiset (sorted tuple) of root multiplicities over the closure."""
        self._guard()
        self._char_guard()
        f = self.dehomogenize_t()
        profile = []
        if f.degree < self.degree:
            profile.append(self.degree - f.degree)  # root at (0:1)
        if f.degree > 0:
            for sq, mult in squarefree_decomposition(f):
                profile.extend([mult] * sq.degree)
        return tuple(sorted(profile))

    def distinct_root_count(self):
        """(number of distinct closure roots, multiplicity profile)."""
        profile = self.multiplicity_profile()
        return len(profile), profile

    def roots_over_closure(self, max_degree=None):
        """Roots as (P1Point over base or extension, multiplicity)."""
        self._guard()
        self._char_guard()
        out = []
        f = self.dehomogenize_t()
        if f.degree < self.degree:
            out.append((P1Point.infinity(self.field), self.degree - f.degree))
        if f.degree > 0:
            for root in roots_over_closure(f, max_degree=max_degree):
                out.append((P1Point.affine(root.field, root.value),
                            root.multiplicity))
        return out

    def count_roots_in_field(self) -> int:
        """Number of distinct roots rational over the coefficient field."""
        self._guard()
        total = 0
        f = self.dehomogenize_t()
        if f.degree < self.degree:
            total += 1
        if f.degree > 0:
            g = gcd_univariate(f, _frobenius_minus_x(f))
            total += _distinct_in_field(f, g)
        return total


def _frobenius_minus_x(f: Poly) -> Poly:
    """x^q - x reduced mod f, for counting roots in GF(q)."""
    field = f.field
    if field.order is None:
        raise WorkbenchError("field root counting needs a finite field")
    x = Poly.x(field)
    return x.powmod(field.order, f) - x


def _distinct_in_field(f: Poly, g: Poly) -> int:
    # g = gcd(f, x^q - x) splits into distinct linear factors
    return g.degree


def linear_form(pt: P1Point) -> BinaryForm:
    """Degree-1 form vanishing exactly at pt: a*t - b*s."""
    return BinaryForm(pt.field, 1, [-pt.b, pt.a])
