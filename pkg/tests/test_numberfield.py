"""Exact number-field arithmetic, minimal polynomials, integrality."""

import random
from fractions import Fraction

import pytest

from sl2kit import (FieldElement, NotMonicError, ReducibleError,
                    is_algebraic_integer, make_field, minimal_polynomial)


def test_make_field_degree_two():
    k = make_field([-5, 0, 1])
    assert k.degree == 2
    assert make_field([1, 1, 1]).degree == 2


def test_make_field_rejects_reducible():
    with pytest.raises(ReducibleError) as exc:
        make_field([-1, 0, 1])  # x^2 - 1
    assert exc.value.witness == (-1, 1)  # x - 1 found before x + 1


def test_make_field_rejects_nonmonic():
    with pytest.raises(NotMonicError):
        make_field([1, 0, 2])
    with pytest.raises(NotMonicError):
        make_field([Fraction(1, 2), 1])


def test_make_field_degree_limits():
    with pytest.raises(ValueError):
        make_field([1])
    with pytest.raises(ValueError):
        make_field([1, 0, 0, 0, 0, 1])  # degree 5


def test_quartic_irreducibility():
    # (x^2+1)(x^2+2) = x^4 + 3x^2 + 2 must be caught
    with pytest.raises(ReducibleError) as exc:
        make_field([2, 0, 3, 0, 1])
    w = exc.value.witness
    assert len(w) == 3 and w[-1] == 1
    # x^4 + 1 has no rational root and no integer quadratic split
    assert make_field([1, 0, 0, 0, 1]).degree == 4
    assert make_field([1, -1, 0, 0, 1]).degree == 4


def test_cubic():
    assert make_field([-2, 0, 0, 1]).degree == 3
    with pytest.raises(ReducibleError):
        make_field([-1, 0, 0, 1])  # x^3 - 1


def test_golden_ratio_arithmetic():
    k = make_field([-5, 0, 1])
    gamma = k.gamma()
    phi = (1 + gamma) / 2
    assert phi * phi == phi + 1
    assert gamma * gamma == 5
    assert 1 / gamma == gamma / 5
    assert (gamma + 2) * (gamma - 2) == 1


def test_element_padding_and_validation():
    k = make_field([-5, 0, 1])
    assert k.element([3]) == 3
    with pytest.raises(ValueError):
        k.element([1, 2, 3])


def test_division_and_zero():
    k = make_field([1, 1, 1])
    g = k.gamma()
    x = 2 * g + 3
    assert x / x == 1
    assert (x * x.inverse()) == k.one()
    with pytest.raises(ZeroDivisionError):
        k.zero().inverse()
    assert bool(k.zero()) is False and bool(g) is True


def test_powers():
    k = make_field([1, 0, 0, 0, 1])  # gamma^4 = -1
    g = k.gamma()
    assert g ** 4 == -1
    assert g ** 8 == 1
    assert g ** 0 == 1
    acc = k.one()
    for _ in range(7):
        acc = acc * g
    assert g ** 7 == acc


def test_minimal_polynomial_examples():
    k = make_field([-5, 0, 1])
    gamma = k.gamma()
    assert minimal_polynomial((1 + gamma) / 2) == \
        (Fraction(-1), Fraction(-1), Fraction(1))
    assert minimal_polynomial(Fraction(3)) == (Fraction(-3), Fraction(1))
    assert minimal_polynomial(3) == (Fraction(-3), Fraction(1))
    assert minimal_polynomial(gamma) == (Fraction(-5), Fraction(0),
                                         Fraction(1))


def test_minimal_polynomial_subfield_element():
    k = make_field([-2, 0, 0, 0, 1])  # gamma^4 = 2
    g = k.gamma()
    assert minimal_polynomial(g * g) == (Fraction(-2), Fraction(0),
                                         Fraction(1))
    assert minimal_polynomial(k.from_rational(Fraction(1, 2))) == \
        (Fraction(-1, 2), Fraction(1))


def test_minimal_polynomial_annihilates():
    rng = random.Random(23)
    k = make_field([1, -1, 0, 0, 1])
    for _ in range(25):
        x = k.element([Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                       for _ in range(4)])
        mp = minimal_polynomial(x)
        acc = k.zero()
        power = k.one()
        for c in mp:
            acc = acc + c * power
            power = power * x
        assert acc == 0
        assert mp[-1] == 1


def test_is_algebraic_integer():
    k = make_field([-5, 0, 1])
    gamma = k.gamma()
    assert is_algebraic_integer((1 + gamma) / 2)
    assert not is_algebraic_integer(Fraction(1, 2))
    assert is_algebraic_integer(7)
    assert not is_algebraic_integer(gamma / 2)
    assert is_algebraic_integer(gamma)


def test_integer_closure_under_sum_and_product():
    # sums and products of algebraic integers stay integral
    rng = random.Random(31)
    k = make_field([-5, 0, 1])
    gamma = k.gamma()
    phi = (1 + gamma) / 2
    pool = [gamma, phi, k.one(), 3 - gamma, 2 * phi + 1]
    for _ in range(40):
        a = rng.choice(pool) + rng.randint(-3, 3)
        b = rng.choice(pool) * rng.randint(1, 3)
        assert is_algebraic_integer(a + b)
        assert is_algebraic_integer(a * b)


def test_field_axioms_random_triples():
    rng = random.Random(47)
    k = make_field([1, 1, 1])

    def rand():
        return k.element([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                          for _ in range(2)])

    for _ in range(60):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a


def test_rational_comparisons_and_hash():
    k = make_field([1, 1, 1])
    two = k.from_rational(2)
    assert two == 2
    assert two == Fraction(2)
    assert hash(two) == hash(Fraction(2))
    assert k.gamma() != Fraction(1)
    other = make_field([-5, 0, 1])
    assert k.from_rational(3) == other.from_rational(3)
    assert k.gamma() != other.gamma()


def test_mixed_scalar_ops():
    k = make_field([-5, 0, 1])
    g = k.gamma()
    assert Fraction(1, 2) * g == g / 2
    assert 3 - g == -(g - 3)
    assert (6 / (g + 1)).field is k


def test_is_rational_and_as_fraction():
    k = make_field([-5, 0, 1])
    x = k.from_rational(Fraction(7, 2))
    assert x.is_rational
    assert x.as_fraction() == Fraction(7, 2)
    assert not k.gamma().is_rational
    with pytest.raises(ValueError):
        k.gamma().as_fraction()


def test_field_element_repr_is_stable():
    k = make_field([-5, 0, 1])
    assert isinstance(repr(k.gamma() / 2 + 1), str)
    assert isinstance(k.gamma(), FieldElement)
