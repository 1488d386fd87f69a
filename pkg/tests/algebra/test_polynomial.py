"""Unit tests for exact univariate polynomials."""

from fractions import Fraction

import numpy as np
import pytest
import sympy

from sasakijoin.algebra.polynomial import (
    UniPoly,
    exact_quotient,
    poly_divrem,
    poly_gcd,
    root_multiplicity,
    square_free_decomposition,
    square_free_part,
)
from sasakijoin.utilities.exceptions import DomainError


# Utility method(s)
def _random_poly(rng: np.random.RandomState, max_degree: int) -> UniPoly:
    degree = rng.randint(0, max_degree + 1)
    coefficients = [int(c) for c in rng.randint(-100, 101, size=degree + 1)]
    if coefficients[-1] == 0:
        coefficients[-1] = 1
    return UniPoly(coefficients)


# Unit test(s)
def test_canonical_form():
    """Trailing zeros are stripped and the zero polynomial has degree -1."""
    assert UniPoly([1, 2, 0, 0]).coefficients == (1, 2)
    assert UniPoly([0, 0]).is_zero
    assert UniPoly().degree == -1
    assert UniPoly([3, 0, 5]).leading_coefficient == 5
    assert UniPoly([0, 0, 7]).trailing_degree == 2


def test_arithmetic():
    b = UniPoly.identity()
    p = (b - 1) * (b + 1)
    assert p == UniPoly([-1, 0, 1])
    assert p + 1 == b**2
    assert 2 * p == UniPoly([-2, 0, 2])
    assert p / 2 == UniPoly([Fraction(-1, 2), 0, Fraction(1, 2)])
    assert p(Fraction(1, 2)) == Fraction(-3, 4)
    assert (b**3).derivative() == 3 * b**2
    assert (3 * b**2).antiderivative() == b**3
    assert UniPoly([5]).antiderivative()(0) == 0


@pytest.mark.parametrize(
    "p, d, quotient, remainder",
    [
        ([-1, 0, 1], [-1, 1], [1, 1], []),
        ([1, 0, 1], [-1, 1], [1, 1], [2]),
    ],
)
def test_poly_divrem_examples(p, d, quotient, remainder):
    q, r = poly_divrem(UniPoly(p), UniPoly(d))
    assert q == UniPoly(quotient)
    assert r == UniPoly(remainder)


def test_poly_divrem_zero_divisor():
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        poly_divrem(UniPoly([1, 1]), UniPoly())


def test_poly_divrem_reconstruction():
    """p = q d + r exactly, with deg r < deg d, on random inputs."""
    rng = np.random.RandomState(42)
    for _ in range(200):
        p = _random_poly(rng, 8)
        d = _random_poly(rng, 8)
        q, r = poly_divrem(p, d)
        assert q * d + r == p
        assert r.degree < d.degree


def test_exact_quotient_rejects_remainder():
    with pytest.raises(DomainError):
        exact_quotient(UniPoly([1, 0, 1]), UniPoly([-1, 1]))


def test_poly_gcd_divisibility():
    """The monic gcd divides both inputs and is divided by a shared factor."""
    rng = np.random.RandomState(7)
    for _ in range(30):
        common = _random_poly(rng, 3)
        a = common * _random_poly(rng, 4)
        b = common * _random_poly(rng, 4)
        g = poly_gcd(a, b)
        assert g.leading_coefficient == 1
        exact_quotient(a, g)
        exact_quotient(b, g)
        exact_quotient(g, common)


def test_sympy_conversion():
    b = UniPoly.identity()
    p = Fraction(3, 2) * b**3 - 7 * b + Fraction(1, 5)
    poly = p.as_sympy()
    assert poly.domain == sympy.QQ
    assert poly.all_coeffs() == [
        sympy.Rational(3, 2),
        0,
        -7,
        sympy.Rational(1, 5),
    ]
    assert UniPoly.from_sympy(poly) == p
    assert UniPoly.from_sympy(UniPoly().as_sympy()).is_zero


@pytest.mark.parametrize(
    "p, x, expected",
    [
        (UniPoly([-2, 3]) ** 2, Fraction(2, 3), 2),
        (UniPoly([-2, 3]) ** 6, Fraction(2, 3), 6),
        (UniPoly([1, 0, 1]), Fraction(1), 0),
    ],
)
def test_root_multiplicity(p, x, expected):
    assert root_multiplicity(p, x) == expected


def test_root_multiplicity_zero_polynomial():
    with pytest.raises(DomainError):
        root_multiplicity(UniPoly(), 1)


def test_square_free_decomposition():
    b = UniPoly.identity()
    p = 5 * (b - 1) ** 2 * (b - 3) * (b**2 - 2) ** 3
    factors = square_free_decomposition(p)
    assert factors == [(b - 3, 1), (b - 1, 2), (b**2 - 2, 3)]
    assert square_free_part(p) == 5 * (b - 1) * (b - 3) * (b**2 - 2)
