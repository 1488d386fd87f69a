"""Unit tests for join parameters and their admissibility conditions."""

from fractions import Fraction
import re

import pytest

from sasakijoin.join.params import (
    BaseKind,
    JoinParams,
    base_scalar_helper,
    is_sasaki_einstein_join,
    validate,
    validated,
    zero_scalar_family,
)
from sasakijoin.utilities.exceptions import DomainError


# Unit test(s)
def test_valid_params():
    params = JoinParams(d_N=2, A=1, l1=1, l2=29, w1=3, w2=2)
    assert validate(params) == []
    assert validated(params) is params
    assert params.A == Fraction(1)
    assert isinstance(params.A, Fraction)
    assert params.n_dim == 3
    assert params.regular_slope == Fraction(2, 3)


@pytest.mark.parametrize(
    "params, violation",
    [
        (JoinParams(1, -2, 1, 4, 3, 2), "gcd(l2, w1w2) ≠ 1"),
        (JoinParams(1, -2, 1, 1, 2, 3), "w1 ≥ w2 fails"),
        (JoinParams(1, -2, 2, 4, 3, 1), "gcd(l1, l2) ≠ 1"),
        (JoinParams(1, -2, 1, 1, 4, 2), "gcd(w1, w2) ≠ 1"),
    ],
)
def test_violations(params, violation):
    assert violation in validate(params)
    with pytest.raises(DomainError, match=re.escape(violation)):
        validated(params)


def test_several_violations_are_all_reported():
    violations = validate(JoinParams(1, 0, 2, 4, 2, 6))
    assert violations == [
        "gcd(l1, l2) ≠ 1",
        "gcd(w1, w2) ≠ 1",
        "w1 ≥ w2 fails",
        "gcd(l2, w1w2) ≠ 1",
    ]


@pytest.mark.parametrize("field", ["d_N", "l1", "l2", "w1", "w2"])
def test_non_positive_input_is_out_of_domain(field):
    values = dict(d_N=1, A=-2, l1=1, l2=1, w1=3, w2=2)
    values[field] = 0
    with pytest.raises(DomainError, match="out of domain"):
        validate(JoinParams(**values))


def test_inexact_A_is_rejected():
    with pytest.raises(TypeError):
        JoinParams(1, 0.5, 1, 1, 3, 2)


@pytest.mark.parametrize(
    "kind, value, expected",
    [
        (BaseKind.PROJECTIVE_SPACE, 2, 3),
        ("riemann-surface", 2, -2),
        ("riemann-surface", 1, 0),
        ("riemann-surface", 0, 2),
    ],
)
def test_base_scalar_helper(kind, value, expected):
    assert base_scalar_helper(kind, value) == expected


def test_base_scalar_helper_out_of_domain():
    with pytest.raises(DomainError):
        base_scalar_helper("riemann-surface", -1)
    with pytest.raises(ValueError):
        base_scalar_helper("torus", 1)


def test_sasaki_einstein_join():
    assert is_sasaki_einstein_join(JoinParams(1, 2, 1, 5, 3, 2))
    assert not is_sasaki_einstein_join(JoinParams(1, 2, 1, 7, 3, 2))
    assert not is_sasaki_einstein_join(JoinParams(1, 2, 2, 5, 3, 2))


def test_zero_scalar_family():
    """The smallest member reproduces the null-scalar cscS configuration."""
    params, genus, trivial = zero_scalar_family(1, 3, 1, 2, 1)
    assert params == JoinParams(1, -12, 1, 1, 9, 4)
    assert genus == 7
    assert params.A == base_scalar_helper("riemann-surface", genus)
    assert trivial is False

    params, genus, trivial = zero_scalar_family(2, 3, 1, 2, 1)
    assert params.A == -24
    assert genus == 13
    assert trivial is True


def test_zero_scalar_family_requires_coprime_primes():
    with pytest.raises(DomainError, match="gcd"):
        zero_scalar_family(1, 2, 1, 4, 1)
