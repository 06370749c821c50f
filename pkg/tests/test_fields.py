from fractions import Fraction

import pytest

from cuspidal.errors import FieldError, ParseError
from cuspidal.fields import (QQ, ExtensionField, FieldElement, PrimeField,
                             parse_field_spec)


def test_prime_field_canonical_residues():
    F = PrimeField(101)
    a = F.element(-5)
    assert a.val == 96
    assert (a + 5).is_zero()
    assert (F.element(37) * F.element(37).inverse()) == F.one()
    assert F.element(Fraction(1, 2)) == F.element(51)


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        PrimeField(91)


def test_rationals_lowest_terms():
    a = QQ.element(Fraction(4, 6))
    assert a.val == Fraction(2, 3)
    assert (a / a) == QQ.one()
    assert (QQ.element(2) ** -2).val == Fraction(1, 4)


def test_mixed_field_arithmetic_rejected():
    with pytest.raises(FieldError):
        PrimeField(7).element(1) + PrimeField(11).element(1)


def test_extension_field_tower():
    F = PrimeField(7)
    E = ExtensionField(F, [1, 0, 1])  # t^2 + 1 (irreducible: -1 nonsquare mod 7)
    t = E.gen()
    assert t * t == E.element(-1)
    assert E.order == 49
    assert E.characteristic == 7
    # tower: extend again by an irreducible quadratic over E
    from cuspidal.unipoly import find_irreducible
    m = find_irreducible(E, 2, seed=1)
    T = ExtensionField(E, m.coeffs)
    assert T.order == 49 ** 2
    s = T.gen()
    assert (s + 1) * (s + 1).inverse() == T.one()
    assert T.absolute_degree() == 4


def test_extension_enumeration_and_embed():
    F = PrimeField(3)
    E = ExtensionField(F, [1, 0, 1])  # t^2 + 1 over GF(3)
    elems = list(E.elements())
    assert len(elems) == 9
    assert len(set(elems)) == 9
    x = F.element(2)
    assert E.embed(x) == E.element(2)


def test_parse_field_spec():
    assert parse_field_spec("q") == QQ
    assert parse_field_spec("p:101") == PrimeField(101)
    with pytest.raises(ParseError):
        parse_field_spec("gf:4")


def test_element_hashing_and_repr():
    F = PrimeField(13)
    s = {F.element(5), F.element(5 + 13), F.element(6)}
    assert len(s) == 2
    assert repr(F.element(5)) == "5"
