"""Dense univariate polynomial algebra over an exact field.

Provides arithmetic, monic gcd, squarefree decomposition, and full
factorization: Cantor-Zassenhaus over finite fields (of odd order,
including extension towers) and Zassenhaus lifting over the rationals.
Factorization is what realizes the lazy algebraic closure: roots living
in an extension are reported together with the extension field generated
by their minimal polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import FieldError, EvenCharacteristic, SmallCharacteristic, WorkbenchError
from .fields import (QQ, ExtensionField, Field, FieldElement, PrimeField,
                     is_prime)


class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies x^i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [c if isinstance(c, FieldElement) else field.element(c) for c in coeffs]
        n = len(cs)
        while n > 0 and cs[n - 1].is_zero():
            n -= 1
        self.field = field
        self.coeffs = tuple(cs[:n])

    # -- constructors --

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, c: FieldElement):
        return cls(c.field, (c,))

    @classmethod
    def monomial(cls, field, n: int, c=1):
        return cls(field, [0] * n + [c])

    # -- structure --

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> FieldElement:
        if self.is_zero():
            return self.field.zero()
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.key, tuple(c.val for c in self.coeffs)))

    # -- arithmetic --

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Poly(self.field, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldError("polynomials over different fields")
            return other
        return Poly(self.field, (other,))

    def divmod(self, other: "Poly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lcinv = other.lc().inverse()
        q = {}
        while len(rem) - 1 >= d and rem:
            lead = rem[-1]
            k = len(rem) - 1 - d
            f = lead * lcinv
            q[k] = f
            if not f.is_zero():
                for i in range(d + 1):
                    rem[k + i] = rem[k + i] - f * other.coeffs[i]
            rem.pop()
        qn = max(q) + 1 if q else 0
        zero = self.field.zero()
        qc = [q.get(i, zero) for i in range(qn)]
        return Poly(self.field, qc), Poly(self.field, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divexact(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise WorkbenchError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.lc().inverse()

    def mulmod(self, other: "Poly", modulus: "Poly") -> "Poly":
        return (self * other) % modulus

    def powmod(self, n: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self.field) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = result.mulmod(base, modulus)
            base = base.mulmod(base, modulus)
            n >>= 1
        return result

    # -- calculus / evaluation --

    def derivative(self) -> "Poly":
        return Poly(self.field,
                    [self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def eval(self, x) -> FieldElement:
        if not isinstance(x, FieldElement):
            x = self.field.element(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def shift(self, a) -> "Poly":
        """Return p(x + a)."""
        if not isinstance(a, FieldElement):
            a = self.field.element(a)
        return self.compose(Poly(self.field, (a, self.field.one())))

    def valuation_at(self, a) -> int:
        """Multiplicity of a as a root (degree+1 sentinel never returned)."""
        if self.is_zero():
            raise WorkbenchError("valuation of the zero polynomial")
        if not isinstance(a, FieldElement):
            a = self.field.element(a)
        v = 0
        p = self
        lin = Poly(self.field, (-a, self.field.one()))
        while True:
            q, r = p.divmod(lin)
            if not r.is_zero():
                return v
            v += 1
            p = q

    def map_field(self, new_field: Field) -> "Poly":
        """Push coefficients into an extension of the current field."""
        return Poly(new_field, [new_field.element(c) for c in self.coeffs])

    def __repr__(self):
        from .grammar import format_univariate
        return format_univariate(self, "x")


def gcd_univariate(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd_univariate(a: Poly, b: Poly):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(field), Poly.zero(field)
    t0, t1 = Poly.zero(field), Poly.one(field)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero():
        c = r0.lc().inverse()
        r0, s0, t0 = r0 * c, s0 * c, t0 * c
    return r0, s0, t0


def _check_separability_guard(p: Poly):
    ch = p.field.characteristic
    if 0 < ch <= p.degree:
        raise SmallCharacteristic(
            "characteristic %d <= degree %d" % (ch, p.degree))


def squarefree_decomposition(p: Poly):
    """Yun decomposition: list of (factor, multiplicity), factors coprime
    and squarefree, product of factor^mult = monic part of p.

    Requires characteristic 0 or larger than deg(p).
    """
    _check_separability_guard(p)
    p = p.monic()
    out = []
    if p.degree <= 0:
        return out
    dp = p.derivative()
    a = gcd_univariate(p, dp)
    b = p.divexact(a)
    c = dp.divexact(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd_univariate(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.divexact(a)
        c = d.divexact(a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    _check_separability_guard(p)
    p = p.monic()
    if p.degree <= 0:
        return p
    return p.divexact(gcd_univariate(p, p.derivative()))


# -- factorization over finite fields (odd order) --------------------------

def _distinct_degree_factor(p: Poly):
    """Split a squarefree monic p over GF(q) into (product, degree) parts."""
    field = p.field
    q = field.order
    f = p.monic()
    if f.degree <= 1:
        return [(f, 1)] if f.degree == 1 else []
    out = []
    x = Poly.x(field)
    h = x % f
    d = 0
    while f.degree > 2 * d:
        d += 1
        h = h.powmod(q, f)
        g = gcd_univariate(h - x, f)
        if g.degree > 0:
            out.append((g, d))
            f = f.divexact(g)
            if f.degree == 0:
                break
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree_split(p: Poly, d: int, rng) -> Poly:
    """Find a proper monic factor of p, all of whose irreducible factors
    have degree d (Cantor-Zassenhaus, odd field order)."""
    field = p.field
    q = field.order
    if q % 2 == 0:
        raise EvenCharacteristic("factorization requires odd field order")
    e = (q ** d - 1) // 2
    n = p.degree
    while True:
        r = Poly(field, [field.random_element(rng) for _ in range(n)])
        if r.degree <= 0:
            continue
        g = gcd_univariate(r, p)
        if 0 < g.degree < n:
            return g
        h = r.powmod(e, p) - Poly.one(field)
        g = gcd_univariate(h, p)
        if 0 < g.degree < n:
            return g


def _equal_degree_factor(p: Poly, d: int, rng):
    if p.degree == d:
        return [p.monic()]
    g = _equal_degree_split(p, d, rng)
    return _equal_degree_factor(g, d, rng) + _equal_degree_factor(p.divexact(g), d, rng)


def _factor_finite_squarefree(p: Poly, rng):
    out = []
    for part, d in _distinct_degree_factor(p.monic()):
        out.extend(_equal_degree_factor(part, d, rng))
    out.sort(key=lambda f: (f.degree, tuple(repr(c) for c in f.coeffs)))
    return out


# -- factorization over the rationals (Zassenhaus) --------------------------

def _to_integer_poly(p: Poly):
    """Scale a rational poly to a primitive integer coefficient list."""
    den = 1
    for c in p.coeffs:
        den = den * c.val.denominator // math.gcd(den, c.val.denominator)
    ints = [int(c.val * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    return ints


def _int_poly_mod(coeffs, m):
    out = [c % m for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _int_poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_poly_mul_mod(a, b, m):
    return _int_poly_mod(_int_poly_mul(a, b), m)


def _int_poly_divmod_mod(a, b, m):
    """Division of integer coefficient lists modulo m (lc(b) invertible)."""
    a = [c % m for c in a]
    d = len(b) - 1
    inv = pow(b[-1], -1, m)
    q = [0] * max(0, len(a) - d)
    while len(a) - 1 >= d and any(a):
        while a and a[-1] % m == 0:
            a.pop()
        if len(a) - 1 < d:
            break
        k = len(a) - 1 - d
        f = a[-1] * inv % m
        q[k] = f
        for i in range(d + 1):
            a[k + i] = (a[k + i] - f * b[i]) % m
        a.pop()
    return q, _int_poly_mod(a, m)


def _hensel_lift_pair(f, g, h, s, t, p, k):
    """Lift f = g*h (mod p) with s*g + t*h = 1 (mod p) to modulus p^k.

    Quadratic Hensel iteration on integer coefficient lists; h carries
    the leading coefficient of f, g stays monic.
    """
    m = p
    while m < p ** k:
        m2 = min(m * m, p ** k)
        e = [(x - y) % m2 for x, y in _pad_pair(f, _int_poly_mul(g, h))]
        se = _int_poly_mul_mod(s, e, m2)
        q, r = _int_poly_divmod_mod(se, h, m2)
        te = _int_poly_mul_mod(t, e, m2)
        qg = _int_poly_mul_mod(q, g, m2)
        corr = [(u + v) % m2 for u, v in _pad_pair(te, qg)]
        g_new = _int_poly_mod([(x + y) % m2 for x, y in _pad_pair(g, corr)], m2)
        h_new = _int_poly_mod([(x + y) % m2 for x, y in _pad_pair(h, r)], m2)
        # lift the Bezout pair
        b = [(x - y) % m2 for x, y in
             _pad_pair(_int_poly_mod([(u + v) % m2 for u, v in _pad_pair(_int_poly_mul(s, g_new), _int_poly_mul(t, h_new))], m2),
                       [1])]
        sb = _int_poly_mul_mod(s, b, m2)
        c, d = _int_poly_divmod_mod(sb, h_new, m2)
        s_new = _int_poly_mod([(x - y) % m2 for x, y in _pad_pair(s, d)], m2)
        tb = _int_poly_mul_mod(t, b, m2)
        cg = _int_poly_mul_mod(c, g_new, m2)
        t_new = _int_poly_mod([(x - y - z) % m2 for x, y, z in _pad_triple(t, tb, cg)], m2)
        g, h, s, t = g_new, h_new, s_new, t_new
        m = m2
    return g, h


def _pad_pair(a, b):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0))
            for i in range(n)]


def _pad_triple(a, b, c):
    n = max(len(a), len(b), len(c))
    return [((a[i] if i < len(a) else 0),
             (b[i] if i < len(b) else 0),
             (c[i] if i < len(c) else 0)) for i in range(n)]


def _hensel_lift_many(f, factors, p, k):
    """Lift monic-mod-p factors of f (integers, p not dividing lc) to
    monic factors mod p^k whose product times lc(f) reproduces f."""
    m = p ** k
    if len(factors) == 1:
        inv = pow(f[-1] % m, -1, m)
        return [_int_poly_mod([c * inv for c in f], m)]
    half = len(factors) // 2
    g = [1]
    for fac in factors[:half]:
        g = _int_poly_mul_mod(g, fac, p)
    h = [1]
    for fac in factors[half:]:
        h = _int_poly_mul_mod(h, fac, p)
    h = [c * f[-1] % p for c in h]  # h carries lc(f), g stays monic
    gf = PrimeField(p)
    one, s, t = xgcd_univariate(Poly(gf, g), Poly(gf, h))
    if one.degree != 0:
        raise WorkbenchError("modular factors not coprime")
    s_int = [c.val for c in s.coeffs]
    t_int = [c.val for c in t.coeffs]
    g_lift, h_lift = _hensel_lift_pair([c % m for c in f], g, h,
                                       s_int, t_int, p, k)
    return (_hensel_lift_many(g_lift, factors[:half], p, k)
            + _hensel_lift_many(h_lift, factors[half:], p, k))


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _factor_rational_squarefree(p: Poly, rng):
    """Zassenhaus factorization of a squarefree rational polynomial."""
    ints = _to_integer_poly(p)
    n = len(ints) - 1
    if n <= 0:
        return []
    if n == 1:
        return [p.monic()]
    lc = ints[-1]
    # choose a prime of good reduction
    pr = 101
    while True:
        pr = _next_prime(pr)
        if lc % pr == 0:
            continue
        gf = PrimeField(pr)
        fp = Poly(gf, ints)
        if fp.degree != n:
            continue
        if gcd_univariate(fp, fp.derivative()).degree == 0:
            break
    modular = _factor_finite_squarefree(fp.monic(), rng)
    if len(modular) == 1:
        return [p.monic()]
    # lift to p^k beyond twice the Landau-Mignotte-style bound
    norm = math.isqrt(sum(int(c) * int(c) for c in ints)) + 1
    bound = (2 ** n) * norm * abs(lc)
    k = 1
    while pr ** k <= 2 * bound:
        k += 1
    lifted = _hensel_lift_many([c % pr ** k for c in ints],
                               [[c.val for c in f.coeffs] for f in modular],
                               pr, k)
    m = pr ** k
    # recombine subsets
    import itertools
    remaining = list(range(len(lifted)))
    current = ints[:]
    found = []
    r = 1
    while 2 * r <= len(remaining):
        progress = False
        for combo in itertools.combinations(remaining, r):
            prod = [current[-1] % m]  # lc adjustment
            for idx in combo:
                prod = _int_poly_mul_mod(prod, lifted[idx], m)
            cand = [_symmetric(c, m) for c in prod]
            while cand and cand[-1] == 0:
                cand.pop()
            g = 0
            for v in cand:
                g = math.gcd(g, v)
            if g:
                cand = [v // g for v in cand]
            if not cand:
                continue
            q, rem = _int_poly_trial_divide(current, cand)
            if rem:
                continue
            found.append(cand)
            current = q
            remaining = [i for i in remaining if i not in combo]
            progress = True
            break
        if not progress:
            r += 1
    if len(current) > 1:
        found.append(current)
    out = [Poly(QQ, [Fraction(c) for c in f]).monic() for f in found]
    out.sort(key=lambda f: (f.degree, tuple(str(c.val) for c in f.coeffs)))
    return out


def _int_poly_trial_divide(a, b):
    """Exact division attempt of integer polys; returns (quotient, remainder)."""
    if not b or (len(b) > len(a)):
        return None, a
    a = a[:]
    d = len(b) - 1
    q = [0] * (len(a) - d)
    for k in range(len(a) - d - 1, -1, -1):
        if a[k + d] % b[-1] != 0:
            return None, a
        f = a[k + d] // b[-1]
        q[k] = f
        for i in range(d + 1):
            a[k + i] -= f * b[i]
    if any(a):
        return None, a
    return q, []


def _next_prime(n: int) -> int:
    n += 1
    while not is_prime(n):
        n += 1
    return n


# -- public factorization / roots ------------------------------------------

def factor(p: Poly, rng=None):
    """Full factorization into monic irreducibles: list of (factor, mult).

    Supported over finite fields of odd order (including extension
    towers) and over the rationals.  The leading coefficient is dropped;
    multiply by ``p.lc()`` to recover p exactly.
    """
    import random
    if rng is None:
        rng = random.Random(0xC0FFEE)
    if p.is_zero():
        raise WorkbenchError("cannot factor the zero polynomial")
    out = []
    for sq, mult in squarefree_decomposition(p):
        if p.field.order is not None:
            irr = _factor_finite_squarefree(sq, rng)
        elif p.field == QQ:
            irr = _factor_rational_squarefree(sq, rng)
        else:
            raise WorkbenchError("factorization over %r is not supported" % p.field)
        out.extend((f, mult) for f in irr)
    return out


def is_irreducible(p: Poly, rng=None) -> bool:
    if p.degree <= 0:
        return False
    if p.degree == 1:
        return True
    fs = factor(p, rng)
    return len(fs) == 1 and fs[0][1] == 1


def _is_irreducible_finite(p: Poly) -> bool:
    """Rabin irreducibility test over a finite field."""
    n = p.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    q = p.field.order
    x = Poly.x(p.field)
    h = x.powmod(q ** n, p)
    if not ((h - x) % p).is_zero():
        return False
    primes = set()
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.add(m)
    for ell in primes:
        h = x.powmod(q ** (n // ell), p)
        if gcd_univariate(h - x, p).degree != 0:
            return False
    return True


def find_irreducible(field, degree: int, seed=0) -> Poly:
    """A monic irreducible polynomial of the given degree, by seeded search."""
    import random
    if degree < 1:
        raise WorkbenchError("degree must be positive")
    rng = random.Random("irr:%s:%d" % (seed, degree))
    x_n = Poly.monomial(field, degree)
    while True:
        tail = Poly(field, [field.random_element(rng) for _ in range(degree)])
        cand = x_n + tail
        if _is_irreducible_finite(cand):
            return cand


def rational_roots(p: Poly):
    """Roots in QQ of a rational polynomial, with multiplicities."""
    ints = _to_integer_poly(p)
    while ints and ints[0] == 0:
        ints = ints[1:]
        # x = 0 root handled below via valuation
    out = []
    v0 = p.valuation_at(0)
    if v0:
        out.append((QQ.zero(), v0))
    if len(ints) <= 1:
        return out
    a0, an = abs(ints[0]), abs(ints[-1])
    seen = set()
    for r in _divisors(a0):
        for s in _divisors(an):
            for sign in (1, -1):
                cand = Fraction(sign * r, s)
                if cand in seen:
                    continue
                seen.add(cand)
                m = p.valuation_at(QQ.element(cand))
                if m:
                    out.append((QQ.element(cand), m))
    out.sort(key=lambda t: (t[0].val,))
    return out


def _divisors(n: int):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def roots_in_field(p: Poly):
    """Roots of p lying in its own coefficient field, with multiplicities."""
    if p.is_zero():
        raise WorkbenchError("roots of the zero polynomial")
    if p.field == QQ:
        return rational_roots(p)
    out = []
    for f, mult in factor(p):
        if f.degree == 1:
            out.append((-f.coeffs[0], mult))
    return out


class ClosureRoot:
    """A root of a polynomial over the lazy algebraic closure.

    Attributes: ``field`` (the base field or an extension containing the
    root), ``value`` (the root as an element of that field),
    ``multiplicity``, and ``minpoly`` (monic irreducible over the base).
    """

    __slots__ = ("field", "value", "multiplicity", "minpoly")

    def __init__(self, field, value, multiplicity, minpoly):
        self.field = field
        self.value = value
        self.multiplicity = multiplicity
        self.minpoly = minpoly

    @property
    def degree(self):
        return self.minpoly.degree

    def __repr__(self):
        return "ClosureRoot(%r, mult=%d, deg=%d)" % (
            self.value, self.multiplicity, self.degree)


def roots_over_closure(p: Poly, max_degree=None):
    """All roots of p over the algebraic closure, up to conjugacy.

    One :class:`ClosureRoot` is returned per irreducible factor: roots in
    the base field directly, roots of a degree-k irreducible factor as
    the generator of the extension it defines.  Conjugate roots are not
    listed separately.  ``max_degree`` caps the extension degree
    searched; factors beyond the cap are skipped.
    """
    out = []
    for f, mult in factor(p):
        if f.degree == 1:
            out.append(ClosureRoot(p.field, -f.coeffs[0], mult, f))
        elif max_degree is None or f.degree <= max_degree:
            ext = ExtensionField(p.field, f.coeffs, validate=False)
            out.append(ClosureRoot(ext, ext.gen(), mult, f))
    return out


def sqrt_element(c: FieldElement):
    """A square root of c in its own field, or None if c is not a square."""
    field = c.field
    if c.is_zero():
        return field.zero()
    if field == QQ:
        num, den = c.val.numerator, c.val.denominator
        if num < 0:
            return None
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return field.element(Fraction(rn, rd))
        return None
    if field.characteristic == 2:
        raise EvenCharacteristic("square roots in characteristic 2")
    p = Poly(field, (-c, 0, 1))
    rts = roots_in_field(p)
    if not rts:
        return None
    # deterministic branch: smaller canonical representative first
    vals = sorted(rts, key=lambda t: _canonical_sort_key(t[0]))
    return vals[0][0]


def _canonical_sort_key(e: FieldElement):
    v = e.val
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, Fraction):
        return (0, v)
    return (1, repr(e))


def resultant_univariate(f: Poly, g: Poly) -> FieldElement:
    """Resultant of two univariate polynomials via the Euclidean chain."""
    field = f.field
    if f.is_zero() or g.is_zero():
        return field.zero()
    res = field.one()
    a, b = f, g
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return field.zero()
        res = res * b.lc() ** (a.degree - r.degree)
        if (a.degree * b.degree) % 2 == 1:
            res = -res
        a, b = b, r
    return res * b.lc() ** a.degree
