"""Admissible extremal ODE on the orbifold quotient of a quasi-regular ray.

On the quotient, the transverse scalar curvature of an admissible metric with
profile `F(z)`, `-1 <= z <= 1`, is

    Scal_B(z) = 2 d_N s_N r / (1 + r z) - F''(z) / (1 + r z)^d_N .

Requiring `Scal_B` to be affine, `alpha + beta z`, makes `F` a polynomial of
degree at most `d_N + 3`, fixed by the endpoint conditions

    F(-1) = F(1) = 0,  F'(-1) = 2 p(-1) / m2,  F'(1) = -2 p(1) / m1,

with `p(z) = (1 + r z)^d_N`. The metric exists on the ray exactly when `F > 0`
on the open interval (-1, 1).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from sasakijoin.algebra.linalg import solve_linear_system
from sasakijoin.algebra.numbers import Scalar, as_rational, render_exact
from sasakijoin.algebra.polynomial import UniPoly
from sasakijoin.algebra.roots import positive_on_open_interval
from sasakijoin.join.params import JoinParams, validated
from sasakijoin.join.rays import QuotientData, RayId, quotient_data
from sasakijoin.utilities.exceptions import DomainError, InconsistencyError
from sasakijoin.utilities.logging import get_logger


logger = get_logger()


@dataclass(frozen=True)
class ExtremalSolution:
    """Extremal profile `F` and affine scalar curvature `alpha + beta z`."""

    params: JoinParams
    ray: RayId
    quotient: QuotientData
    s_N: Fraction
    alpha: Fraction
    beta: Fraction
    F: UniPoly
    admissible: bool

    @property
    def b(self) -> Fraction:
        return self.ray.b

    @property
    def p(self) -> UniPoly:
        """`(1 + r z)^d_N`."""
        return UniPoly([1, self.quotient.r]) ** self.params.d_N

    def ode_residual(self) -> UniPoly:
        """`F'' + (alpha + beta z) p - 2 d_N s_N r (1 + r z)^(d_N - 1)`."""
        d, r = self.params.d_N, self.quotient.r
        return (
            self.F.derivative().derivative()
            + UniPoly([self.alpha, self.beta]) * self.p
            - UniPoly([1, r]) ** (d - 1) * (2 * d * self.s_N * r)
        )

    def endpoint_residuals(self) -> Tuple[Fraction, ...]:
        """Residuals of the four endpoint conditions; all zero when exact."""
        dF, p = self.F.derivative(), self.p
        return (
            self.F(-1),
            self.F(1),
            dF(-1) - 2 * p(-1) / self.quotient.m2,
            dF(1) + 2 * p(1) / self.quotient.m1,
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "F": self.F.to_list(),
            "admissible": self.admissible,
            "alpha": render_exact(self.alpha),
            "b": render_exact(self.b),
            "beta": render_exact(self.beta),
            "quotient": self.quotient.to_dict(),
            "ray": [self.ray.v1, self.ray.v2],
            "s_N": render_exact(self.s_N),
        }


def _double_antiderivative(p: UniPoly) -> UniPoly:
    return p.antiderivative().antiderivative()


def extremal_solution(params: JoinParams, ray: RayId) -> ExtremalSolution:
    """Solve the extremal ODE and endpoint conditions exactly for `ray`.

    Raises:
        DomainError: If `ray` is the regular ray.
        InconsistencyError: If the endpoint system is singular.
    """
    params = validated(params)
    quotient = quotient_data(params, ray)
    if quotient.regular:
        raise DomainError("extremal construction undefined at b = w2/w1")

    d, r = params.d_N, quotient.r
    s_N = params.A / quotient.n_deg
    linear = UniPoly([1, r])
    p = linear**d

    # F = c1 + c2 z + forced - alpha * by_alpha - beta * by_beta
    forced = _double_antiderivative(linear ** (d - 1) * (2 * d * s_N * r))
    by_alpha = _double_antiderivative(p)
    by_beta = _double_antiderivative(UniPoly.identity() * p)
    d_forced, d_alpha, d_beta = (
        forced.derivative(),
        by_alpha.derivative(),
        by_beta.derivative(),
    )

    # Unknowns: (alpha, beta, c1, c2)
    matrix = [
        [-by_alpha(1), -by_beta(1), 1, 1],
        [-by_alpha(-1), -by_beta(-1), 1, -1],
        [-d_alpha(-1), -d_beta(-1), 0, 1],
        [-d_alpha(1), -d_beta(1), 0, 1],
    ]
    rhs = [
        -forced(1),
        -forced(-1),
        Fraction(2) * p(-1) / quotient.m2 - d_forced(-1),
        Fraction(-2) * p(1) / quotient.m1 - d_forced(1),
    ]
    try:
        alpha, beta, c1, c2 = solve_linear_system(matrix, rhs)
    except InconsistencyError as e:
        raise InconsistencyError(
            "degenerate endpoint system",
            payload={"ray": str(ray), "matrix": matrix, "rhs": rhs},
        ) from e

    F = UniPoly([c1, c2]) + forced - alpha * by_alpha - beta * by_beta
    solution = ExtremalSolution(
        params=params,
        ray=ray,
        quotient=quotient,
        s_N=s_N,
        alpha=alpha,
        beta=beta,
        F=F,
        admissible=positive_on_open_interval(F, -1, 1),
    )
    logger.debug(
        f"Extremal profile at b = {ray.b}: alpha = {alpha}, beta = {beta}, "
        f"admissible = {solution.admissible}"
    )
    return solution


def is_admissible(solution: ExtremalSolution) -> bool:
    """Strict positivity of the extremal profile on (-1, 1)."""
    return positive_on_open_interval(solution.F, -1, 1)


def profile_at(params: JoinParams, b: Scalar) -> ExtremalSolution:
    """`extremal_solution` on the canonical ray of a rational slope."""
    return extremal_solution(params, RayId.from_slope(as_rational(b)))
