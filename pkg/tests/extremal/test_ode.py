"""Unit tests for the admissible extremal ODE."""

from fractions import Fraction

import numpy as np
import pytest

from sasakijoin.algebra.numbers import sign
from sasakijoin.algebra.polynomial import UniPoly
from sasakijoin.analysis.sampling import random_join_params, random_ray
from sasakijoin.extremal.ode import (
    extremal_solution,
    is_admissible,
    profile_at,
)
from sasakijoin.join.params import JoinParams
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import DomainError


# Utility method(s)
def genus_two(l2: int) -> JoinParams:
    return JoinParams(d_N=1, A=-2, l1=1, l2=l2, w1=3, w2=2)


def g_reference(b: Fraction, l2: int) -> UniPoly:
    """Quadratic `g` with the extremal profile proportional to
    `(1 - z^2) g(z)` on the genus-two join with weights (3, 2)."""
    shift = l2 * b * (3 * b - 2) ** 2
    return UniPoly(
        [
            27 * b**4 + 126 * b**3 + 120 * b**2 + 84 * b + 8 - shift,
            2 * (3 * b**2 - 2) * (9 * b**2 + 24 * b + 4),
            (3 * b - 2) * (9 * b**3 + 12 * b**2 - 12 * b - 4) + shift,
        ]
    )


# Unit test(s)
def test_extremal_solution_genus_two():
    solution = extremal_solution(genus_two(1), RayId(1, 2))
    assert solution.alpha == Fraction(15, 22)
    assert solution.beta == Fraction(75, 22)
    assert solution.F == UniPoly([129, 110, -104, -110, -25]) / 176
    assert solution.admissible

    # (1) Matches the published quadratic up to a positive constant
    g = UniPoly([2064, 1760, 400])
    assert g_reference(Fraction(2), 1) == g
    assert solution.F * 2816 == UniPoly([1, 0, -1]) * g


@pytest.mark.parametrize("l2", [1, 101])
@pytest.mark.parametrize("b", [Fraction(1, 2), Fraction(2)])
def test_extremal_profile_proportional_to_reference(l2, b):
    F = profile_at(genus_two(l2), b).F
    expected = UniPoly([1, 0, -1]) * g_reference(b, l2)
    ratio = expected.leading_coefficient / F.leading_coefficient
    assert ratio > 0
    assert F * ratio == expected


def test_null_scalar_csc_ray_has_constant_scalar_curvature():
    solution = extremal_solution(
        JoinParams(1, -12, 1, 1, 9, 4), RayId(3, 2)
    )
    assert solution.alpha == 0
    assert solution.beta == 0
    assert solution.F == UniPoly([Fraction(2, 5), 0, Fraction(-2, 5)])
    assert solution.admissible


def test_beta_changes_sign_across_csc_ray():
    """The affine part of the scalar curvature vanishes at the cscS ray."""
    below = profile_at(genus_two(1), Fraction(83, 100)).beta
    above = profile_at(genus_two(1), Fraction(84, 100)).beta
    assert sign(below) * sign(above) == -1


@pytest.mark.parametrize(
    "b, expected",
    [
        (Fraction(1, 10), False),
        (Fraction(1, 100), False),
        (Fraction(99, 10000), False),
        (Fraction(1), True),
    ],
)
def test_admissibility_genus_two_101(b, expected):
    solution = profile_at(genus_two(101), b)
    assert solution.admissible is expected
    assert is_admissible(solution) is expected


def test_regular_ray_is_rejected():
    with pytest.raises(DomainError, match="undefined at b = w2/w1"):
        extremal_solution(genus_two(1), RayId(3, 2))


def test_residuals_vanish():
    """The solved profile satisfies the ODE and all endpoint conditions."""
    rng = np.random.RandomState(9)
    for params in random_join_params(rng, 25):
        ray = random_ray(rng)
        if ray.b == params.regular_slope:
            continue
        solution = extremal_solution(params, ray)
        assert solution.ode_residual().is_zero
        assert solution.endpoint_residuals() == (0, 0, 0, 0)
        assert solution.F.degree <= params.d_N + 3


def test_serialisation():
    rendered = extremal_solution(genus_two(1), RayId(1, 2)).to_dict()
    assert rendered["alpha"] == "15/22"
    assert rendered["ray"] == [1, 2]
    assert rendered["quotient"]["n_deg"] == 4
