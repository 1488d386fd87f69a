"""Unit tests for the Einstein-Hilbert functional and per-ray totals."""

from fractions import Fraction

import numpy as np
import pytest

from sasakijoin.algebra.numbers import DEFAULT_TOLERANCE, sign
from sasakijoin.algebra.polynomial import UniPoly
from sasakijoin.algebra.rational_function import RationalFn
from sasakijoin.algebra.roots import isolate_positive_roots, refine_root
from sasakijoin.analysis.sampling import random_join_params, random_ray
from sasakijoin.functionals.bundle import FunctionalBundle, functional_bundle
from sasakijoin.functionals.closed_forms import f_csc
from sasakijoin.functionals.einstein_hilbert import (
    eh_derivative,
    eh_he2,
    eh_second_derivative,
    einstein_hilbert,
    futaki_value,
    total_scalar,
    total_scalar_at,
    total_volume,
    total_volume_at,
)
from sasakijoin.join.params import JoinParams
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import DomainError


B = UniPoly.identity()
THREE_CSC = JoinParams(d_N=2, A=1, l1=1, l2=29, w1=3, w2=2)
NULL_SCALAR_CSC = JoinParams(d_N=1, A=-12, l1=1, l2=1, w1=9, w2=4)


# Utility method(s)
def genus_two(l2: int) -> JoinParams:
    return JoinParams(d_N=1, A=-2, l1=1, l2=l2, w1=3, w2=2)


# Unit test(s)
def test_einstein_hilbert_three_csc():
    S = UniPoly([4, 58, 87, 9])
    V = UniPoly([4, 6, 9])
    H = einstein_hilbert(THREE_CSC)
    assert H == RationalFn(S**4, B**3 * V**3)
    assert H(1) == Fraction(623201296, 6859)


@pytest.mark.parametrize("l2", [1, 101])
def test_einstein_hilbert_genus_two(l2):
    S = UniPoly([2, -2 * l2, 3])
    assert einstein_hilbert(genus_two(l2)) == RationalFn(
        S**3, B**2 * UniPoly([2, 3]) ** 2
    )


def test_eh_derivative_three_csc():
    S = UniPoly([4, 58, 87, 9])
    V = UniPoly([4, 6, 9])
    dH = eh_derivative(THREE_CSC)
    assert dH == RationalFn(S**3 * f_csc(THREE_CSC), B**4 * V**4)

    # H' has the sign of f_csc when A >= 0
    for b in (Fraction(1, 3), Fraction(2, 3)):
        assert sign(dH(b)) == sign(f_csc(THREE_CSC)(b))


def test_eh_second_derivative_at_three_csc_roots():
    """Relative minimum, maximum, minimum."""
    p = f_csc(THREE_CSC)
    d2H = eh_second_derivative(THREE_CSC)
    signs = [
        sign(d2H(refine_root(p, interval, DEFAULT_TOLERANCE)))
        for interval in isolate_positive_roots(p)
    ]
    assert signs == [1, -1, 1]


def test_null_scalar_csc_touches_zero():
    H = einstein_hilbert(NULL_SCALAR_CSC)
    root = Fraction(2, 3)
    assert H(root) == 0
    assert H(root - Fraction(1, 100)) > 0
    assert H(root + Fraction(1, 100)) > 0


def test_eh_he2_agrees_with_reduced_form():
    rng = np.random.RandomState(1)
    for params in random_join_params(rng, 25):
        H = einstein_hilbert(params)
        for b in (Fraction(1, 7), Fraction(5, 3), Fraction(11, 2)):
            if b != params.regular_slope:
                assert eh_he2(params, b) == H(b)


def test_eh_he2_out_of_domain():
    with pytest.raises(DomainError):
        eh_he2(genus_two(1), Fraction(2, 3))
    with pytest.raises(DomainError):
        eh_he2(genus_two(1), 0)


@pytest.mark.parametrize(
    "params, ray, scalar, volume",
    [
        (THREE_CSC, RayId(1, 1), 158, 19),
        (genus_two(7), RayId(1, 2), Fraction(2 - 28 + 12, 4), 2),
        (NULL_SCALAR_CSC, RayId(3, 2), 0, Fraction(5, 6)),
    ],
)
def test_totals(params, ray, scalar, volume):
    assert total_scalar(params, ray) == scalar
    assert total_volume(params, ray) == volume


def test_scale_invariance():
    """Totals scale with fixed weights and combine to H(b)."""
    rng = np.random.RandomState(50)
    for params in random_join_params(rng, 50):
        d = params.d_N
        ray = random_ray(rng)
        scale = Fraction(int(rng.randint(1, 20)), int(rng.randint(1, 20)))
        scalar = total_scalar_at(params, ray.v1, ray.v2)
        volume = total_volume_at(params, ray.v1, ray.v2)
        assert total_scalar_at(
            params, scale * ray.v1, scale * ray.v2
        ) == scalar * scale ** -(d + 1)
        assert total_volume_at(
            params, scale * ray.v1, scale * ray.v2
        ) == volume * scale ** -(d + 2)
        assert scalar ** (d + 2) / volume ** (d + 1) == einstein_hilbert(
            params
        )(ray.b)


def test_futaki_value_sign():
    assert futaki_value(NULL_SCALAR_CSC, RayId(3, 2)) == 0
    assert futaki_value(genus_two(101), RayId(2, 1)) < 0
    assert f_csc(genus_two(101))(Fraction(1, 2)) == Fraction(-249, 4)


def test_derivative_identity_suite():
    """Quotient-rule H' equals its factored form on random inputs."""
    rng = np.random.RandomState(2022)
    for params in random_join_params(rng, 100):
        bundle = FunctionalBundle.build(params)
        d = params.d_N
        assert bundle.dH == RationalFn.from_factors(
            [(bundle.S_num, d + 1), (bundle.f_csc, 1)],
            [(B, d + 2), (bundle.V_num, d + 2)],
        )


def test_functional_bundle_is_cached():
    assert functional_bundle(genus_two(1)) is functional_bundle(genus_two(1))
    bundle = functional_bundle(genus_two(1))
    assert bundle.critical_numerator == bundle.S_num**2 * bundle.f_csc
    assert bundle.to_dict()["f_csc"] == ["-8/1", "-28/1", "30/1", "18/1"]


def test_functional_bundle_validates():
    with pytest.raises(DomainError, match="gcd"):
        FunctionalBundle.build(genus_two(4))
