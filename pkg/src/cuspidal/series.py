"""Truncated power series and square roots by Newton iteration.

A :class:`TruncatedSeries` is an expansion in powers of (x - center) kept
to a fixed order (exclusive).  The main consumer is the hyperelliptic
machinery, which needs local branches of y = sqrt(f(x)) at non-ramification
points.
"""

from __future__ import annotations

from .errors import BranchZero, EvenCharacteristic, NotASquare, WorkbenchError
from .fields import FieldElement
from .unipoly import Poly


class TruncatedSeries:
    """Series sum(coeffs[i] * (x - center)^i, i < order)."""

    __slots__ = ("field", "center", "order", "coeffs")

    def __init__(self, field, center, order: int, coeffs):
        if order < 1:
            raise WorkbenchError("series order must be positive")
        cs = [c if isinstance(c, FieldElement) else field.element(c) for c in coeffs]
        cs = cs[:order]
        while len(cs) < order:
            cs.append(field.zero())
        self.field = field
        self.center = center if isinstance(center, FieldElement) else field.element(center)
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p: Poly, center, order: int) -> "TruncatedSeries":
        """Expand a polynomial around the center, truncated."""
        if not isinstance(center, FieldElement):
            center = p.field.element(center)
        shifted = p.shift(center)  # p(center + u)
        return cls(p.field, center, order, shifted.coeffs[:order])

    def _compat(self, other: "TruncatedSeries"):
        if (self.field != other.field or self.center != other.center
                or self.order != other.order):
            raise WorkbenchError("series with different expansion data")

    def __add__(self, other):
        self._compat(other)
        return TruncatedSeries(self.field, self.center, self.order,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._compat(other)
        return TruncatedSeries(self.field, self.center, self.order,
                               [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return TruncatedSeries(self.field, self.center, self.order,
                                   [c * other for c in self.coeffs])
        self._compat(other)
        zero = self.field.zero()
        out = [zero] * self.order
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.field, self.center, self.order, out)

    __rmul__ = __mul__

    def __neg__(self):
        return TruncatedSeries(self.field, self.center, self.order,
                               [-c for c in self.coeffs])

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.field, self.center, order, self.coeffs[:order])

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a unit constant term."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ZeroDivisionError("series with zero constant term")
        inv0 = c0.inverse()
        out = [inv0]
        for n in range(1, self.order):
            acc = self.field.zero()
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * out[n - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(self.field, self.center, self.order, out)

    def valuation(self):
        """Index of the first nonzero coefficient; None if all vanish."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def constant_term(self) -> FieldElement:
        return self.coeffs[0]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.field == other.field and self.center == other.center
                and self.order == other.order and self.coeffs == other.coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                terms.append(repr(c))
            else:
                terms.append("%r*u^%d" % (c, i))
        body = " + ".join(terms) if terms else "0"
        return "Series[%s + O(u^%d)]" % (body, self.order)


def hensel_sqrt(f: Poly, a, b, order: int) -> TruncatedSeries:
    """Branch of sqrt(f) at x = a with value b, truncated to the order.

    Newton iteration Y -> (Y + f/Y)/2 on truncated series; the result Y
    satisfies Y(a) = b and Y^2 = f mod (x - a)^order exactly.
    """
    field = f.field
    if field.characteristic == 2:
        raise EvenCharacteristic("square-root branches need characteristic != 2")
    if not isinstance(a, FieldElement):
        a = field.element(a)
    if not isinstance(b, FieldElement):
        b = field.element(b)
    if b.is_zero():
        raise BranchZero("branch value must be nonzero (ramification point)")
    if f.eval(a) != b * b:
        raise NotASquare("f(a) != b^2 for the supplied branch")
    target = TruncatedSeries.from_poly(f, a, order)
    half = (field.one() + field.one()).inverse()
    y = TruncatedSeries(field, a, order, [b])
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        y = (y + target * y.inverse()) * half
    return y
