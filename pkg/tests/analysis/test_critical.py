"""Unit tests for critical rays of the Einstein-Hilbert functional."""

from fractions import Fraction

import numpy as np
import pytest

from sasakijoin.algebra.numbers import POS_INF, sign
from sasakijoin.algebra.polynomial import UniPoly
from sasakijoin.algebra.roots import sturm_count
from sasakijoin.analysis.critical import (
    Classification,
    Source,
    critical_points,
    csc_rays,
    null_scalar_rays,
)
from sasakijoin.analysis.sampling import random_join_params
from sasakijoin.functionals.bundle import functional_bundle
from sasakijoin.join.params import JoinParams


THREE_CSC = JoinParams(d_N=2, A=1, l1=1, l2=29, w1=3, w2=2)
NULL_SCALAR_CSC = JoinParams(d_N=1, A=-12, l1=1, l2=1, w1=9, w2=4)


# Utility method(s)
def genus_two(l2: int) -> JoinParams:
    return JoinParams(d_N=1, A=-2, l1=1, l2=l2, w1=3, w2=2)


def _near(value: Fraction, target: float, tol: float) -> bool:
    return abs(float(value) - target) <= tol


# Unit test(s)
def test_three_csc_rays():
    """Relative minimum, maximum, minimum: convexity fails."""
    assert len(csc_rays(THREE_CSC)) == 3
    assert null_scalar_rays(THREE_CSC) == []

    points = critical_points(THREE_CSC)
    assert [p.classification for p in points] == [
        Classification.LOCAL_MIN,
        Classification.LOCAL_MAX,
        Classification.LOCAL_MIN,
    ]
    assert all(p.source is Source.FUTAKI_ZERO for p in points)
    assert all(p.multiplicity_in_dH == 1 for p in points)


def test_genus_two_unique_minimum():
    (point,) = critical_points(genus_two(1))
    assert _near(point.approx, 0.835, 0.005)
    assert point.classification is Classification.LOCAL_MIN
    assert point.source is Source.FUTAKI_ZERO
    assert point.flank_signs == (-1, 1)


def test_genus_two_101_inflections():
    """A cscS minimum between two null-scalar inflection points."""
    small, csc, large = critical_points(genus_two(101))

    assert csc.source is Source.FUTAKI_ZERO
    assert csc.classification is Classification.LOCAL_MIN
    assert _near(csc.approx, 0.685, 0.005)
    assert csc.H_approx < 0

    for point in (small, large):
        assert point.source is Source.NULL_SCALAR
        assert point.classification is Classification.INFLECTION
        assert point.multiplicity_in_dH == 2
    assert _near(small.approx, 0.0099, 0.0001)
    assert _near(large.approx, 67.3, 0.5)

    # (1) Roots of 3b^2 - 202b + 2, exactly
    S = functional_bundle(genus_two(101)).S_num
    assert S == UniPoly([2, -202, 3])
    for point in (small, large):
        assert sign(S(point.interval.lo)) != sign(S(point.interval.hi))


def test_null_scalar_csc_is_degenerate():
    (point,) = critical_points(NULL_SCALAR_CSC)
    assert point.interval.is_exact
    assert point.approx == Fraction(2, 3)
    assert point.source is Source.BOTH
    assert point.classification is Classification.DEGENERATE
    assert point.multiplicity_in_dH == 5
    assert point.H_approx == 0

    (null,) = null_scalar_rays(NULL_SCALAR_CSC)
    assert null.lo == Fraction(2, 3)
    assert null.multiplicity == 2


def test_equal_weights_csc_ray_at_one():
    intervals = csc_rays(JoinParams(1, 0, 1, 1, 1, 1))
    assert any(iv.is_exact and iv.lo == 1 for iv in intervals)


def test_critical_set_is_union_of_zero_sets():
    """Critical rays are exactly the Futaki zeros and the null-scalar rays."""
    rng = np.random.RandomState(2022)
    for params in random_join_params(rng, 30, max_dN=3):
        bundle = functional_bundle(params)
        points = critical_points(params)
        union = bundle.S_num * bundle.f_csc
        assert len(points) == sturm_count(union, 0, POS_INF)
        futaki = [p for p in points if p.source is not Source.NULL_SCALAR]
        null = [p for p in points if p.source is not Source.FUTAKI_ZERO]
        assert len(futaki) == len(csc_rays(params))
        assert len(null) == len(null_scalar_rays(params))


def test_flank_signs_factor():
    """Flank signs of H' are sign(S)^(d_N+1) sign(f_csc) at the flanks."""
    rng = np.random.RandomState(8)
    for params in random_join_params(rng, 20, max_dN=3):
        bundle = functional_bundle(params)
        for point in critical_points(params):
            for flank, flank_sign in zip(point.flanks, point.flank_signs):
                assert flank > 0
                expected = (
                    sign(bundle.S_num(flank)) ** (params.d_N + 1)
                    * sign(bundle.f_csc(flank))
                )
                assert flank_sign == expected


def test_null_scalar_ray_count():
    """At most two, and none for non-negative A."""
    rng = np.random.RandomState(2022)
    for params in random_join_params(rng, 100):
        rays = null_scalar_rays(params)
        assert len(rays) <= 2
        if params.A >= 0:
            assert rays == []


@pytest.mark.parametrize("l2", [1, 101])
def test_critical_points_are_sorted(l2):
    points = critical_points(genus_two(l2))
    approxes = [p.approx for p in points]
    assert approxes == sorted(approxes)
    assert all(p.interval.contains(p.approx) for p in points)
