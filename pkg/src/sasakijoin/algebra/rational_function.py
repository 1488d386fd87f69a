"""Reduced univariate rational functions over the rationals."""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sasakijoin.algebra.numbers import Scalar, as_rational
from sasakijoin.algebra.polynomial import (
    UniPoly,
    exact_quotient,
    poly_gcd,
)


Factor = Tuple[UniPoly, int]


class RationalFn:
    """Quotient `num / den` of polynomials in canonical reduced form.

    The numerator and denominator are coprime and the denominator is monic,
    so two rational functions are equal exactly when their numerators and
    denominators are equal coefficient-for-coefficient. The zero function is
    `0 / 1`.

    Args:
        num: Numerator.
        den: Denominator, nonzero. Defaults to 1.
        reduced: Skip the gcd computation, when the caller guarantees that
            `num` and `den` are coprime.
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: UniPoly,
        den: Optional[UniPoly] = None,
        *,
        reduced: bool = False,
    ):
        if den is None:
            den = UniPoly.constant(1)

        # Check(s)
        if den.is_zero:
            raise ZeroDivisionError("zero divisor")

        if num.is_zero:
            num, den = UniPoly(), UniPoly.constant(1)
        elif not reduced:
            num, den = (
                UniPoly.from_sympy(q)
                for q in num.as_sympy().cancel(den.as_sympy(), include=True)
            )

        lead = den.leading_coefficient
        self._num = num / lead
        self._den = den / lead

    # Constructor(s)
    @classmethod
    def from_factors(
        cls,
        numerator: Sequence[Factor],
        denominator: Sequence[Factor],
        constant: Scalar = 1,
    ) -> "RationalFn":
        """Build `constant * prod(p**k) / prod(q**k)` in reduced form.

        Common factors are cancelled between the (small) bases before
        expanding, which avoids a gcd of the expanded, high-degree products.
        """
        constant = as_rational(constant)
        num: List[List] = [[p, k] for p, k in numerator if k > 0]
        den: List[List] = [[q, k] for q, k in denominator if k > 0]

        cancelled = True
        while cancelled:
            cancelled = False
            for n_factor in num:
                for d_factor in den:
                    if n_factor[1] == 0 or d_factor[1] == 0:
                        continue
                    common = poly_gcd(n_factor[0], d_factor[0])
                    if common.degree <= 0:
                        continue
                    n_factor[0] = exact_quotient(n_factor[0], common)
                    d_factor[0] = exact_quotient(d_factor[0], common)
                    k = min(n_factor[1], d_factor[1])
                    num.append([common, n_factor[1] - k])
                    den.append([common, d_factor[1] - k])
                    cancelled = True
                    break
                if cancelled:
                    break

        return cls(
            _expand(num).scale(constant), _expand(den), reduced=True
        )

    # Properties
    @property
    def num(self) -> UniPoly:
        return self._num

    @property
    def den(self) -> UniPoly:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    # Calculus
    def __call__(self, x: Scalar) -> Fraction:
        denominator = self._den(x)
        if denominator == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self._num(x) / denominator

    def derivative(self) -> "RationalFn":
        """Quotient-rule derivative, returned in reduced form.

        With `g = gcd(D, D')`, the derivative of the reduced `N / D` is
        `(N' (D/g) - N (D'/g)) / (D (D/g))`, which is again reduced: every
        irreducible factor of `D` gains exactly one power in the denominator
        and does not divide the new numerator.
        """
        num, den = self._num, self._den
        if den.degree == 0:
            return RationalFn(num.derivative() / den.leading_coefficient)
        d_den = den.derivative()
        common = poly_gcd(den, d_den)
        radical = exact_quotient(den, common)
        cofactor = exact_quotient(d_den, common)
        return RationalFn(
            num.derivative() * radical - num * cofactor,
            den * radical,
            reduced=True,
        )

    # Asymptotics
    def valuation_at_zero(self) -> int:
        """Order of vanishing at 0; negative for a pole."""
        assert not self.is_zero
        return self._num.trailing_degree - self._den.trailing_degree

    def coefficient_at_zero(self) -> Fraction:
        """Leading coefficient of the Laurent expansion at 0."""
        assert not self.is_zero
        return (
            self._num.coefficients[self._num.trailing_degree]
            / self._den.coefficients[self._den.trailing_degree]
        )

    def degree_at_infinity(self) -> int:
        """Growth order at infinity: `deg(num) - deg(den)`."""
        assert not self.is_zero
        return self._num.degree - self._den.degree

    def coefficient_at_infinity(self) -> Fraction:
        """Leading coefficient of the expansion at infinity."""
        assert not self.is_zero
        return self._num.leading_coefficient / self._den.leading_coefficient

    # Comparison and representation
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __getstate__(self):
        return self._num, self._den

    def __setstate__(self, state):
        self._num, self._den = state

    def __repr__(self) -> str:
        num, den = self._num.to_string(), self._den.to_string()
        return f"RationalFn(({num}) / ({den}))"


def _expand(factors: Sequence[Sequence]) -> UniPoly:
    result = UniPoly.constant(1)
    for base, exponent in factors:
        if exponent > 0:
            result = result * base**exponent
    return result
