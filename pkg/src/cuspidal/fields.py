"""Exact field arithmetic: prime fields, rationals, and univariate extensions.

Every element is stored in canonical reduced form: residues in [0, p) for
prime fields, `Fraction` in lowest terms for the rationals, and
coefficient tuples reduced modulo the (monic) defining polynomial for
extensions.  Extension towers are supported: the base of an extension may
itself be an extension, which is how lazily-discovered splitting fields
are represented.

All values are immutable; operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldError, ParseError


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldElement:
    """Immutable element of a :class:`Field`, with operator arithmetic."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        self.field = field
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements of different fields: %r vs %r"
                                 % (self.field, other.field))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.val, o.val))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.val, o.val))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(o.val, self.val))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.val, o.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.val, self.field._inv(o.val)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(o.val, self.field._inv(self.val)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.val))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        return FieldElement(self.field, self.field._inv(self.val))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.val)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.val == other.val

    def __hash__(self):
        return hash((self.field.key, self.val))

    def __repr__(self):
        return self.field._format(self.val)


class Field:
    """Abstract exact field.  Subclasses implement payload arithmetic."""

    kind = "abstract"

    def element(self, x) -> FieldElement:
        return FieldElement(self, self._convert(x))

    def zero(self) -> FieldElement:
        return self.element(0)

    def one(self) -> FieldElement:
        return self.element(1)

    # payload hooks: _add,_sub,_mul,_neg,_inv,_is_zero,_convert,_format

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    @property
    def order(self):
        """Number of elements, or None for infinite fields."""
        return None

    def elements(self):
        """Iterate all elements (finite fields only)."""
        raise FieldError("cannot enumerate an infinite field")

    def random_element(self, rng) -> FieldElement:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError


class PrimeField(Field):
    """The field of integers modulo a prime p."""

    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.p = p
        self.key = ("p", p)

    def _convert(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldError("cannot convert %r into GF(%d)" % (x, self.p))
            return x.val
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError("denominator divisible by p")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return str(a)

    @property
    def characteristic(self):
        return self.p

    @property
    def order(self):
        return self.p

    def elements(self):
        for i in range(self.p):
            yield FieldElement(self, i)

    def random_element(self, rng):
        return FieldElement(self, rng.randrange(self.p))

    def spec_string(self):
        return "p:%d" % self.p

    def __repr__(self):
        return "GF(%d)" % self.p


class RationalField(Field):
    """The field of rational numbers with arbitrary-precision arithmetic."""

    kind = "rationals"

    def __init__(self):
        self.key = ("q",)

    def _convert(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldError("cannot convert %r into QQ" % (x,))
            return x.val
        return Fraction(x)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return str(a)

    @property
    def characteristic(self):
        return 0

    def random_element(self, rng, bound: int = 40):
        return FieldElement(self, Fraction(rng.randint(-bound, bound)))

    def spec_string(self):
        return "q"

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# -- raw polynomial helpers on coefficient tuples (low-to-high) -----------
# These exist so that extension fields do not depend on the higher-level
# polynomial module, which is itself built on fields.

def _raw_trim(base, cs):
    n = len(cs)
    while n > 0 and base._is_zero(cs[n - 1]):
        n -= 1
    return tuple(cs[:n])


def _raw_add(base, a, b):
    n = max(len(a), len(b))
    z = base._convert(0)
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else z
        y = b[i] if i < len(b) else z
        out.append(base._add(x, y))
    return _raw_trim(base, out)


def _raw_mul(base, a, b):
    if not a or not b:
        return ()
    z = base._convert(0)
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if base._is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = base._add(out[i + j], base._mul(x, y))
    return _raw_trim(base, out)


def _raw_rem_monic(base, a, m):
    """Remainder of a modulo the monic tuple m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        k = len(a) - 1 - dm
        if not base._is_zero(lead):
            for i in range(dm):
                a[k + i] = base._sub(a[k + i], base._mul(lead, m[i]))
        a.pop()
    return _raw_trim(base, a)


def _raw_xgcd(base, a, b):
    """Extended gcd of coefficient tuples; returns (g, s, t), g monic."""
    r0, r1 = a, b
    s0, s1 = (base._convert(1),), ()
    t0, t1 = (), (base._convert(1),)
    while r1:
        # divide r0 by r1
        lc = r1[-1]
        lcinv = base._inv(lc)
        q = []
        rem = list(r0)
        dr1 = len(r1) - 1
        qcoeffs = {}
        while len(rem) - 1 >= dr1 and rem:
            lead = rem[-1]
            k = len(rem) - 1 - dr1
            f = base._mul(lead, lcinv)
            qcoeffs[k] = f
            if not base._is_zero(f):
                for i in range(dr1 + 1):
                    rem[k + i] = base._sub(rem[k + i], base._mul(f, r1[i]))
            rem.pop()
        qn = max(qcoeffs) + 1 if qcoeffs else 0
        z = base._convert(0)
        q = tuple(qcoeffs.get(i, z) for i in range(qn))
        q = _raw_trim(base, q)
        r0, r1 = r1, _raw_trim(base, rem)
        s0, s1 = s1, _raw_add(base, s0, _raw_neg(base, _raw_mul(base, q, s1)))
        t0, t1 = t1, _raw_add(base, t0, _raw_neg(base, _raw_mul(base, q, t1)))
    if r0:
        lcinv = base._inv(r0[-1])
        r0 = tuple(base._mul(c, lcinv) for c in r0)
        s0 = tuple(base._mul(c, lcinv) for c in s0)
        t0 = tuple(base._mul(c, lcinv) for c in t0)
    return r0, s0, t0


def _raw_neg(base, a):
    return tuple(base._neg(c) for c in a)


class ExtensionField(Field):
    """Extension base[t]/(m(t)) for a monic defining polynomial m.

    Elements are coefficient tuples of fixed length deg(m) over the base
    field's payloads.  Irreducibility of m over the base is the caller's
    responsibility (the factorization routines only ever hand over
    irreducible factors); a cheap degree/monic validation is performed.
    """

    kind = "extension"

    def __init__(self, base: Field, minpoly, validate: bool = True):
        # minpoly: sequence of base FieldElements or raw payloads, low-to-high,
        # monic, degree >= 1.  Internal constructions from factorization
        # output pass validate=False; irreducibility is then already known.
        self.base = base
        m = tuple(c.val if isinstance(c, FieldElement) else base._convert(c)
                  for c in minpoly)
        m = _raw_trim(base, m)
        if len(m) < 2:
            raise FieldError("defining polynomial must have degree >= 1")
        if not m[-1] == base._convert(1):
            raise FieldError("defining polynomial must be monic")
        self.minpoly = m
        self.degree = len(m) - 1
        self.key = ("ext", base.key, m)
        if validate and self.degree > 1:
            self._validate_irreducible()

    def _validate_irreducible(self):
        # deferred import: the polynomial layer is built on top of fields
        from .unipoly import Poly, _is_irreducible_finite, is_irreducible
        mp = Poly(self.base, [FieldElement(self.base, c) for c in self.minpoly])
        if self.base.order is not None:
            ok = _is_irreducible_finite(mp)
        elif self.base.kind == "rationals":
            ok = is_irreducible(mp)
        else:
            return  # no factorization over number-field towers; trusted
        if not ok:
            raise FieldError("defining polynomial %r is reducible" % (mp,))

    def _pad(self, cs):
        z = self.base._convert(0)
        cs = list(cs)
        while len(cs) < self.degree:
            cs.append(z)
        return tuple(cs)

    def _convert(self, x):
        if isinstance(x, FieldElement):
            if x.field == self:
                return x.val
            if x.field == self.base:
                return self._pad((x.val,))
            raise FieldError("cannot convert %r into %r" % (x, self))
        if isinstance(x, tuple):
            return self._pad(_raw_rem_monic(self.base, x, self.minpoly))
        return self._pad((self.base._convert(x),))

    def embed(self, elem: FieldElement) -> FieldElement:
        """Embed a base-field element."""
        return self.element(elem)

    def gen(self) -> FieldElement:
        """The class of t, a root of the defining polynomial."""
        z = self.base._convert(0)
        o = self.base._convert(1)
        return FieldElement(self, self._pad((z, o)))

    def _add(self, a, b):
        return tuple(self.base._add(x, y) for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple(self.base._sub(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(self.base._neg(x) for x in a)

    def _mul(self, a, b):
        prod = _raw_mul(self.base, _raw_trim(self.base, a), _raw_trim(self.base, b))
        return self._pad(_raw_rem_monic(self.base, prod, self.minpoly))

    def _inv(self, a):
        at = _raw_trim(self.base, a)
        if not at:
            raise ZeroDivisionError("inverse of zero in %r" % self)
        g, s, _ = _raw_xgcd(self.base, at, self.minpoly)
        if len(g) != 1:
            raise FieldError("defining polynomial is reducible: zero divisor found")
        ginv = self.base._inv(g[0])
        s = tuple(self.base._mul(c, ginv) for c in s)
        return self._pad(_raw_rem_monic(self.base, s, self.minpoly))

    def _is_zero(self, a):
        return all(self.base._is_zero(c) for c in a)

    def _format(self, a):
        terms = []
        for i, c in enumerate(a):
            if self.base._is_zero(c):
                continue
            cs = self.base._format(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append("%s*t" % cs if cs != "1" else "t")
            else:
                terms.append("%s*t^%d" % (cs, i) if cs != "1" else "t^%d" % i)
        return "(" + (" + ".join(terms) if terms else "0") + ")"

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def order(self):
        base_order = self.base.order
        if base_order is None:
            return None
        return base_order ** self.degree

    def elements(self):
        import itertools
        base_vals = [e.val for e in self.base.elements()]
        for combo in itertools.product(base_vals, repeat=self.degree):
            yield FieldElement(self, tuple(combo))

    def random_element(self, rng):
        vals = tuple(self.base.random_element(rng).val for _ in range(self.degree))
        return FieldElement(self, vals)

    def spec_string(self):
        return "%s[t]/(deg %d)" % (self.base.spec_string(), self.degree)

    def __repr__(self):
        if self.base.order is not None:
            return "GF(%d^%d)" % (self.base.characteristic, self.absolute_degree())
        return "%r[t]/(deg %d)" % (self.base, self.degree)

    def absolute_degree(self) -> int:
        d = self.degree
        b = self.base
        while isinstance(b, ExtensionField):
            d *= b.degree
            b = b.base
        return d


def prime_subfield_tower(field: Field):
    """Yield the tower from the given field down to its prime field / QQ."""
    f = field
    while isinstance(f, ExtensionField):
        yield f
        f = f.base
    yield f


def parse_field_spec(spec: str) -> Field:
    """Parse a field description: ``q`` for the rationals, ``p:<prime>``."""
    spec = spec.strip()
    if spec == "q":
        return QQ
    if spec.startswith("p:"):
        try:
            p = int(spec[2:])
        except ValueError:
            raise ParseError("bad field spec %r" % spec) from None
        return PrimeField(p)
    raise ParseError("bad field spec %r (expected 'q' or 'p:<prime>')" % spec)
