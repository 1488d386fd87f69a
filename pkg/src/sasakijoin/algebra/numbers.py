"""Exact rational scalars: coercion, parsing and rendering.

`BigRational` is `fractions.Fraction`, which keeps numerator and denominator
coprime with a positive denominator and represents zero as 0/1.
"""

from decimal import Decimal, localcontext
from fractions import Fraction
import math
from typing import Union

import sympy

from sasakijoin.utilities.exceptions import DomainError


BigRational = Fraction
Scalar = Union[int, Fraction]

# Sentinels for unbounded interval endpoints
NEG_INF = -math.inf
POS_INF = math.inf

DEFAULT_TOLERANCE = Fraction(1, 10**12)
SIGNIFICANT_DIGITS = 17


def as_rational(value: Scalar) -> Fraction:
    """Coerce an exact scalar to `Fraction`, refusing inexact input."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(
        f"Expected an exact scalar (int or Fraction), got {type(value)}."
    )


def to_sympy(value: Scalar) -> sympy.Rational:
    """Exact `sympy.Rational` with the same value."""
    value = as_rational(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: sympy.Rational) -> Fraction:
    """Exact `Fraction` from a sympy (or ground-domain) rational."""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def parse_rational(text: Union[str, int, Fraction], field: str = "value"):
    """Parse "p/q", integer or decimal strings into an exact `Fraction`.

    Decimals are converted exactly, e.g. "0.835" -> 167/200.

    Args:
        text: The string (or exact number) to convert.
        field: Name of the field being parsed, used in error messages.

    Raises:
        DomainError: If `text` is not a well-formed rational.
    """
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise DomainError(f"{field}: malformed rational {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"{field}: malformed rational {text!r}") from e


def sign(value: Union[Fraction, float]) -> int:
    """Return -1, 0 or 1."""
    return (value > 0) - (value < 0)


def render_exact(value: Fraction) -> str:
    """Render as a "p/q" string, always with an explicit denominator."""
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"


def render_decimal(value: Fraction, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Render with `digits` significant digits, rounded half-even.

    The rendering is a pure function of the exact value, so identical inputs
    always produce identical strings.
    """
    value = as_rational(value)
    with localcontext() as context:
        context.prec = digits
        decimal = Decimal(value.numerator) / Decimal(value.denominator)
    return format(decimal, f".{digits}g")
