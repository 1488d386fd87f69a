"""The Einstein-Hilbert functional H(b) and per-ray totals."""

from fractions import Fraction
from typing import Optional

from sasakijoin.algebra.numbers import Scalar, as_rational
from sasakijoin.algebra.polynomial import UniPoly
from sasakijoin.algebra.rational_function import RationalFn
from sasakijoin.functionals.closed_forms import (
    f_csc,
    scalar_numerator,
    volume_numerator,
)
from sasakijoin.join.params import JoinParams
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import DomainError, InconsistencyError
from sasakijoin.utilities.logging import get_logger


logger = get_logger()


def einstein_hilbert(params: JoinParams) -> RationalFn:
    """`H(b) = S_num^(d_N+2) / (b V_num)^(d_N+1)` in reduced form."""
    d = params.d_N
    return RationalFn.from_factors(
        [(scalar_numerator(params), d + 2)],
        [(UniPoly.identity(), d + 1), (volume_numerator(params), d + 1)],
    )


def eh_derivative(
    params: JoinParams, H: Optional[RationalFn] = None
) -> RationalFn:
    """Quotient-rule derivative `H'(b)`, checked against its factored form.

    The derivative must equal `S_num^(d_N+1) f_csc / (b^(d_N+2)
    V_num^(d_N+2))` as reduced rational functions.

    Args:
        params: Join parameters.
        H: Precomputed `einstein_hilbert(params)`, if available.

    Raises:
        InconsistencyError: If the two forms differ.
    """
    d = params.d_N
    if H is None:
        H = einstein_hilbert(params)
    derivative = H.derivative()
    factored = RationalFn.from_factors(
        [(scalar_numerator(params), d + 1), (f_csc(params), 1)],
        [(UniPoly.identity(), d + 2), (volume_numerator(params), d + 2)],
    )
    if derivative != factored:
        raise InconsistencyError(
            "closed-form inconsistency: H' differs from its factored form",
            payload={"quotient_rule": derivative, "factored": factored},
        )
    return derivative


def eh_second_derivative(
    params: JoinParams, dH: Optional[RationalFn] = None
) -> RationalFn:
    if dH is None:
        dH = eh_derivative(params)
    return dH.derivative()


def eh_he2(params: JoinParams, b: Scalar) -> Fraction:
    """Value of H from the form that keeps the `(w1 b - w2)` factors.

    Only valid away from `b = 0` and the regular slope `w2 / w1`, where the
    form has a removable singularity.
    """
    b = as_rational(b)
    if b <= 0 or b == params.regular_slope:
        raise DomainError(f"out of domain: b = {b}")
    d, l1, w1, w2 = params.d_N, params.l1, params.w1, params.w2
    al2 = params.A * params.l2
    numerator = (
        l1 * w1 ** (d + 1) * b ** (d + 2)
        + (al2 - l1 * w2) * w1**d * b ** (d + 1)
        + (l1 * w1 - al2) * w2**d * b
        - l1 * w2 ** (d + 1)
    )
    denominator = (w1 * b - w2) * (
        w1 ** (d + 1) * b ** (d + 2) - w2 ** (d + 1) * b
    ) ** (d + 1)
    return numerator ** (d + 2) / denominator


def _positive_weights(v1: Scalar, v2: Scalar):
    v1, v2 = as_rational(v1), as_rational(v2)
    if v1 <= 0 or v2 <= 0:
        raise DomainError(f"out of domain: ray weights ({v1}, {v2})")
    return v1, v2


def total_scalar_at(params: JoinParams, v1: Scalar, v2: Scalar) -> Fraction:
    """Normalised total transverse scalar curvature of `v1 H1 + v2 H2`.

    Not scale invariant: the weights need not be coprime or integral.
    """
    v1, v2 = _positive_weights(v1, v2)
    b = v2 / v1
    return scalar_numerator(params)(b) / (v1 * b) ** (params.d_N + 1)


def total_volume_at(params: JoinParams, v1: Scalar, v2: Scalar) -> Fraction:
    """Normalised volume of `v1 H1 + v2 H2`; always positive."""
    v1, v2 = _positive_weights(v1, v2)
    b = v2 / v1
    d = params.d_N
    return volume_numerator(params)(b) / (v1 ** (d + 2) * b ** (d + 1))


def total_scalar(params: JoinParams, ray: RayId) -> Fraction:
    return total_scalar_at(params, ray.v1, ray.v2)


def total_volume(params: JoinParams, ray: RayId) -> Fraction:
    return total_volume_at(params, ray.v1, ray.v2)


def futaki_value(params: JoinParams, ray: RayId) -> Fraction:
    """Sasaki-Futaki invariant in the direction transversal to the ray.

    `f_csc(b) / (v2^(2 d_N + 3) V)`, up to a global positive constant, so it
    vanishes exactly on cscS rays and has the sign of `f_csc(b)`.
    """
    exponent = 2 * params.d_N + 3
    return f_csc(params)(ray.b) / (
        ray.v2**exponent * total_volume(params, ray)
    )
