"""Polynomial closed forms on the w-cone of a join.

All quantities are normalised by dropping the ray-independent positive factor
`2**(d_N + 1) * (l1 / l2)**d_N`, which leaves every sign, zero and critical
point unchanged.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict

from sasakijoin.algebra.polynomial import UniPoly, poly_divrem
from sasakijoin.join.params import JoinParams
from sasakijoin.utilities.exceptions import InconsistencyError
from sasakijoin.utilities.logging import get_logger


logger = get_logger()


def scalar_numerator(params: JoinParams) -> UniPoly:
    """Numerator `S_num(b)` of the total transverse scalar curvature.

    `S_num(b) = l2 A sum_{j=1}^{d_N} w1^(d_N-j) w2^(j-1) b^(d_N+1-j)
    + l1 (w1^d_N b^(d_N+1) + w2^d_N)`.
    """
    d, w1, w2 = params.d_N, params.w1, params.w2
    coefficients = [Fraction(0)] * (d + 2)
    coefficients[0] = Fraction(params.l1 * w2**d)
    coefficients[d + 1] = Fraction(params.l1 * w1**d)
    for j in range(1, d + 1):
        coefficients[d + 1 - j] += (
            params.l2 * params.A * w1 ** (d - j) * w2 ** (j - 1)
        )
    return UniPoly(coefficients)


def volume_numerator(params: JoinParams) -> UniPoly:
    """Numerator `V_num(b) = sum_{j=0}^{d_N} w1^(d_N-j) w2^j b^(d_N-j)`."""
    d, w1, w2 = params.d_N, params.w1, params.w2
    return UniPoly([w1**k * w2 ** (d - k) for k in range(d + 1)])


def f_polynomial(params: JoinParams) -> UniPoly:
    """The degree `2 d_N + 4` polynomial `f` with `f_csc = -f / (w1 b - w2)^3`.

    Built term by term from its seven coefficient groups; it serves as an
    independent route to `f_csc`.
    """
    d, l1, w1, w2 = params.d_N, params.l1, params.w1, params.w2
    al2 = params.A * params.l2

    terms: Dict[int, Fraction] = defaultdict(Fraction)
    terms[2 * d + 4] += -(d + 1) * l1 * w1 ** (2 * d + 3)
    terms[2 * d + 3] += w1 ** (2 * d + 2) * (al2 + l1 * (d + 1) * w2)
    terms[d + 3] += (
        -(w1 ** (d + 2))
        * w2**d
        * (d + 1)
        * (al2 * (d + 1) - l1 * ((d + 1) * w1 + (d + 2) * w2))
    )
    terms[d + 2] += (
        w1 ** (d + 1)
        * w2 ** (d + 1)
        * (2 * al2 * d * (d + 2) - (d + 1) * (2 * d + 3) * l1 * (w1 + w2))
    )
    terms[d + 1] += (
        -(w1**d)
        * w2 ** (d + 2)
        * (d + 1)
        * (al2 * (d + 1) - l1 * ((d + 2) * w1 + (d + 1) * w2))
    )
    terms[1] += w2 ** (2 * d + 2) * (al2 + l1 * (d + 1) * w1)
    terms[0] += -(d + 1) * l1 * w2 ** (2 * d + 3)

    coefficients = [terms.get(k, Fraction(0)) for k in range(2 * d + 5)]
    return UniPoly(coefficients)


def f_csc_variational(params: JoinParams) -> UniPoly:
    """`(d_N + 2) S_num' (b V_num) - (d_N + 1) S_num (b V_num)'`."""
    d = params.d_N
    s_num = scalar_numerator(params)
    bv = UniPoly.identity() * volume_numerator(params)
    return (d + 2) * s_num.derivative() * bv - (d + 1) * s_num * (
        bv.derivative()
    )


def f_csc_by_division(params: JoinParams) -> UniPoly:
    """`-f / (w1 b - w2)^3` by exact division.

    Raises:
        InconsistencyError: If the division leaves a remainder.
    """
    cube = UniPoly([-params.w2, params.w1]) ** 3
    quotient, remainder = poly_divrem(-f_polynomial(params), cube)
    if not remainder.is_zero:
        raise InconsistencyError(
            "closed-form inconsistency: (w1 b - w2)^3 does not divide f",
            payload={"remainder": remainder.to_list()},
        )
    return quotient


def f_csc(params: JoinParams) -> UniPoly:
    """Polynomial `f_csc` whose positive roots are the cscS rays.

    The variational identity is the primary construction; the exact division
    of `-f` by `(w1 b - w2)^3` must agree with it coefficient for coefficient.

    Raises:
        InconsistencyError: If the two constructions differ.
    """
    primary = f_csc_variational(params)
    check = f_csc_by_division(params)
    if primary != check:
        raise InconsistencyError(
            "closed-form inconsistency",
            payload={
                "variational": primary.to_list(),
                "division": check.to_list(),
            },
        )
    logger.debug(f"f_csc = {primary.to_string()}")
    return primary


def futaki_at_regular(params: JoinParams) -> Fraction:
    """Closed form of `f_csc(w2 / w1)`.

    Equals `-(d_N+1)^2 (d_N+2) l1 w2^(2 d_N) (w1 - w2) / (2 w1)`; it vanishes
    exactly when `w1 = w2`, which is why `f` has a root of order exactly
    three at `w2 / w1` whenever `w1 > w2`.
    """
    d = params.d_N
    return Fraction(
        -((d + 1) ** 2) * (d + 2) * params.l1 * params.w2 ** (2 * d)
        * (params.w1 - params.w2),
        2 * params.w1,
    )
