import random

import pytest

from cuspidal.errors import SmallCharacteristic, WorkbenchError
from cuspidal.fields import QQ, ExtensionField, PrimeField
from cuspidal.unipoly import (Poly, factor, find_irreducible, gcd_univariate,
                              is_irreducible, rational_roots, roots_in_field,
                              roots_over_closure, resultant_univariate,
                              sqrt_element, squarefree_decomposition,
                              xgcd_univariate)

from oracles import trial_division_factors


def test_gcd_basic_examples():
    F = PrimeField(101)
    x = Poly.x(F)
    assert gcd_univariate(x ** 2 - 1, x - 1) == (x - 1)
    assert gcd_univariate(x ** 3, x ** 2) == x ** 2
    assert gcd_univariate(Poly.zero(F), Poly.zero(F)).is_zero()
    # gcd is monic
    g = gcd_univariate((x - 2) * 5, (x - 2) * (x + 1) * 7)
    assert g == x - 2


def test_gcd_random_products_vs_trial_division():
    # random products over GF(7) sharing a factor: gcd recovers it,
    # cross-checked by exhaustive trial division
    F = PrimeField(7)
    x = Poly.x(F)
    rng = random.Random(7)
    for _ in range(25):
        def randpoly(d):
            return Poly(F, [F.random_element(rng) for _ in range(d)] + [1])
        shared = randpoly(rng.randint(1, 2))
        a = shared * randpoly(rng.randint(1, 2))
        b = shared * randpoly(rng.randint(1, 2))
        g = gcd_univariate(a, b)
        # trial division: g divides both, and every common irreducible
        # factor of a and b divides g
        assert (a % g).is_zero() and (b % g).is_zero()
        fa = dict((repr(f.coeffs), (f, m)) for f, m in trial_division_factors(a))
        for f, m in trial_division_factors(b):
            key = repr(f.coeffs)
            if key in fa:
                assert (g % f).is_zero()


def test_xgcd_bezout():
    F = PrimeField(31)
    x = Poly.x(F)
    a = (x ** 3 + 2) * (x - 5)
    b = (x - 5) * (x + 7)
    g, s, t = xgcd_univariate(a, b)
    assert g == (x - 5)
    assert s * a + t * b == g


def test_squarefree_decomposition_char_guard():
    F = PrimeField(3)
    x = Poly.x(F)
    with pytest.raises(SmallCharacteristic):
        squarefree_decomposition(x ** 4 + x)


def test_factor_finite_field_matches_trial_division():
    F = PrimeField(7)
    x = Poly.x(F)
    rng = random.Random(11)
    for _ in range(15):
        f = Poly(F, [F.random_element(rng) for _ in range(rng.randint(2, 6))] + [1])
        got = {(repr(fc.coeffs), m) for fc, m in factor(f)}
        want = {(repr(fc.coeffs), m) for fc, m in trial_division_factors(f)}
        assert got == want, f


def test_factor_over_extension_field():
    F = PrimeField(5)
    E = ExtensionField(F, find_irreducible(F, 2, seed=0).coeffs)
    x = Poly.x(E)
    t = E.gen()
    f = (x - t) * (x - t) * (x ** 2 + x + t)
    fs = factor(f)
    prod = Poly.one(E)
    for fc, m in fs:
        prod = prod * fc ** m
    assert prod == f.monic()
    assert sum(fc.degree * m for fc, m in fs) == f.degree


def test_factor_rationals_zassenhaus():
    x = Poly.x(QQ)
    f = (x ** 2 - 2) * (x ** 3 + x + 1) * (x - 3) ** 2
    fs = factor(f)
    degs = sorted((fc.degree, m) for fc, m in fs)
    assert degs == [(1, 2), (2, 1), (3, 1)]
    prod = Poly.one(QQ)
    for fc, m in fs:
        prod = prod * fc ** m
    assert prod == f.monic()


def test_rational_roots():
    from fractions import Fraction
    x = Poly.x(QQ)
    f = (x - QQ.element(Fraction(1, 2))) ** 2 * (x + 3) * (x ** 2 + 1) * x
    roots = dict((r.val, m) for r, m in rational_roots(f))
    assert roots == {Fraction(1, 2): 2, Fraction(-3): 1, Fraction(0): 1}


def test_roots_over_closure_accounts_every_root():
    F = PrimeField(11)
    x = Poly.x(F)
    rng = random.Random(3)
    for _ in range(10):
        f = Poly(F, [F.random_element(rng) for _ in range(5)] + [1])
        total = sum(r.multiplicity * r.degree for r in roots_over_closure(f))
        assert total == f.degree
        for r in roots_over_closure(f):
            fe = f.map_field(r.field) if r.field != F else f
            assert fe.eval(r.value).is_zero()


def test_irreducibility_and_search():
    F = PrimeField(13)
    m = find_irreducible(F, 3, seed=2)
    assert m.degree == 3 and is_irreducible(m)
    x = Poly.x(F)
    assert not is_irreducible((x + 1) * (x + 2))


def test_sqrt_element():
    F = PrimeField(101)
    for v in (0, 1, 4, 5, 37):
        r = sqrt_element(F.element(v))
        if r is not None:
            assert r * r == F.element(v)
    squares = {(e * e).val for e in F.elements()}
    assert all((sqrt_element(F.element(v)) is not None) == (v in squares)
               for v in range(101))


def test_resultant_univariate_vs_product_formula():
    F = PrimeField(31)
    x = Poly.x(F)
    f = (x - 1) * (x - 2)
    g = (x - 3) * (x - 4) * (x - 5)
    # res(f, g) = prod g(root_i of f) for monic f
    want = g.eval(F.element(1)) * g.eval(F.element(2))
    assert resultant_univariate(f, g) == want
    assert resultant_univariate(f, (x - 1)) == F.zero()
