"""Dense univariate polynomials with exact rational coefficients.

Ring arithmetic and evaluation run on `Fraction` coefficients. Division,
gcd and square-free decomposition are delegated to `sympy.Poly` over QQ.
"""

from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import sympy

from sasakijoin.algebra.numbers import (
    Scalar,
    as_rational,
    from_sympy,
    render_exact,
    to_sympy,
)
from sasakijoin.utilities.exceptions import DomainError


VARIABLE = sympy.Symbol("b")


class UniPoly:
    """Immutable polynomial in one variable over the rationals.

    Coefficients are stored in ascending order of degree with trailing zeros
    stripped, so the zero polynomial is the empty sequence and every nonzero
    polynomial has a nonzero leading coefficient.

    Args:
        coefficients: Coefficients in ascending order of degree.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coefficients = [as_rational(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    # Constructor(s)
    @classmethod
    def constant(cls, value: Scalar) -> "UniPoly":
        return cls([value])

    @classmethod
    def identity(cls) -> "UniPoly":
        """Return the polynomial `x`."""
        return cls([0, 1])

    @classmethod
    def linear_factor(cls, root: Scalar) -> "UniPoly":
        """Return `x - root`."""
        return cls([-as_rational(root), 1])

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "UniPoly":
        return cls(from_sympy(c) for c in reversed(poly.all_coeffs()))

    def as_sympy(self) -> sympy.Poly:
        """The same polynomial as a `sympy.Poly` in `b` over QQ."""
        if self.is_zero:
            return sympy.Poly(0, VARIABLE, domain=sympy.QQ)
        return sympy.Poly.from_list(
            [to_sympy(c) for c in reversed(self._coefficients)],
            VARIABLE,
            domain=sympy.QQ,
        )

    # Properties
    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self._coefficients[-1]

    @property
    def trailing_degree(self) -> int:
        """Order of vanishing at zero, with -1 for the zero polynomial."""
        for k, c in enumerate(self._coefficients):
            if c != 0:
                return k
        return -1

    # Arithmetic
    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate exactly using Horner's scheme."""
        result = Fraction(0)
        for c in reversed(self._coefficients):
            result = result * x + c
        return result

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._coefficients)

    def __add__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coefficients, other._coefficients
        if len(a) < len(b):
            a, b = b, a
        return UniPoly(
            [x + b[k] if k < len(b) else x for k, x in enumerate(a)]
        )

    __radd__ = __add__

    def __sub__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        a, b = self._coefficients, other._coefficients
        product = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                product[i + j] += x * y
        return UniPoly(product)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "UniPoly":
        """Divide by a nonzero scalar. Use `poly_divrem` for polynomials."""
        other = as_rational(other)
        if other == 0:
            raise ZeroDivisionError("zero divisor")
        return self.scale(1 / other)

    def __pow__(self, exponent: int) -> "UniPoly":
        assert isinstance(exponent, int) and exponent >= 0
        result, base = UniPoly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> "UniPoly":
        factor = as_rational(factor)
        return UniPoly(factor * c for c in self._coefficients)

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self._coefficients) if k)

    def antiderivative(self) -> "UniPoly":
        """Antiderivative with zero constant term."""
        return UniPoly(
            [0] + [c / (k + 1) for k, c in enumerate(self._coefficients)]
        )

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self / self.leading_coefficient

    def shift_down(self, k: int) -> "UniPoly":
        """Divide by `x**k`; the lowest `k` coefficients must vanish."""
        assert all(c == 0 for c in self._coefficients[:k])
        return UniPoly(self._coefficients[k:])

    # Comparison and representation
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __getstate__(self):
        return self._coefficients

    def __setstate__(self, state):
        self._coefficients = state

    def __repr__(self) -> str:
        return f"UniPoly({self.to_string()})"

    def to_string(self, variable: str = "b") -> str:
        """Human-readable form in descending powers, e.g. `3*b^2 - 2`."""
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self._coefficients[k]
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = variable if k == 1 else f"{variable}^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def to_list(self) -> List[str]:
        """Ascending coefficients rendered as "p/q" strings."""
        return [render_exact(c) for c in self._coefficients]


def _coerce(value: Union[UniPoly, Scalar]) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return UniPoly.constant(value)
    return NotImplemented


def poly_divrem(p: UniPoly, d: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Euclidean division `p = quotient * d + remainder`.

    Raises:
        ZeroDivisionError: If `d` is the zero polynomial.
    """
    if d.is_zero:
        raise ZeroDivisionError("zero divisor")
    quotient, remainder = p.as_sympy().div(d.as_sympy())
    return UniPoly.from_sympy(quotient), UniPoly.from_sympy(remainder)


def exact_quotient(p: UniPoly, d: UniPoly) -> UniPoly:
    """Quotient of a division known to leave no remainder."""
    quotient, remainder = poly_divrem(p, d)
    if not remainder.is_zero:
        raise DomainError(f"{d!r} does not divide {p!r}")
    return quotient


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor; zero only if both inputs are zero."""
    return UniPoly.from_sympy(a.as_sympy().gcd(b.as_sympy())).monic()


def square_free_part(p: UniPoly) -> UniPoly:
    """Return `p / gcd(p, p')`, which has the distinct roots of `p`.

    The leading coefficient of `p` is kept.
    """
    if p.degree <= 0:
        return p
    radical = UniPoly.from_sympy(p.as_sympy().sqf_part()).monic()
    return radical * p.leading_coefficient


def square_free_decomposition(p: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Monic, pairwise coprime factors with multiplicities, ascending.

    `p` equals its leading coefficient times the product of `factor**k` over
    the returned pairs; constant factors are omitted.
    """
    if p.is_zero:
        raise DomainError("square-free decomposition of the zero polynomial")
    _, factors = p.as_sympy().sqf_list()
    decomposition = [
        (UniPoly.from_sympy(factor).monic(), multiplicity)
        for factor, multiplicity in factors
        if factor.degree() > 0
    ]
    return sorted(decomposition, key=lambda pair: pair[1])


def root_multiplicity(p: UniPoly, x: Scalar) -> int:
    """Largest `k` such that `(b - x)**k` divides `p`.

    Raises:
        DomainError: For the zero polynomial.
    """
    if p.is_zero:
        raise DomainError("root multiplicity of the zero polynomial")
    factor = UniPoly.linear_factor(x)
    k = 0
    while p(x) == 0:
        p = exact_quotient(p, factor)
        k += 1
    return k
