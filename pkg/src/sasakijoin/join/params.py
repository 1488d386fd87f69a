"""Join parameters of M_{l1,l2,w} and their admissibility conditions."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import math
from typing import List, Tuple, Union

from sasakijoin.algebra.numbers import as_rational, render_exact
from sasakijoin.utilities.exceptions import DomainError


class BaseKind(Enum):
    """Families of constant scalar curvature bases with a known `A`."""

    PROJECTIVE_SPACE = "projective-space"
    RIEMANN_SURFACE = "riemann-surface"


@dataclass(frozen=True)
class JoinParams:
    """Join datum (d_N, A, l1, l2, w1, w2).

    Args:
        d_N: Complex dimension of the regular base N.
        A: Normalised base scalar curvature; the scalar curvature of the base
            metric is `2 * d_N * A`.
        l1: First join weight.
        l2: Second join weight.
        w1: First weight of the weighted 3-sphere.
        w2: Second weight of the weighted 3-sphere.
    """

    d_N: int
    A: Fraction
    l1: int
    l2: int
    w1: int
    w2: int

    def __post_init__(self):
        object.__setattr__(self, "A", as_rational(self.A))

    @property
    def n_dim(self) -> int:
        """Transverse complex dimension, `d_N + 1`."""
        return self.d_N + 1

    @property
    def regular_slope(self) -> Fraction:
        """The slope `w2 / w1` of the regular (quotient-free) ray."""
        return Fraction(self.w2, self.w1)

    def with_l2(self, l2: int) -> "JoinParams":
        return JoinParams(self.d_N, self.A, self.l1, l2, self.w1, self.w2)

    def to_dict(self) -> dict:
        return {
            "A": render_exact(self.A),
            "d_N": self.d_N,
            "l1": self.l1,
            "l2": self.l2,
            "w1": self.w1,
            "w2": self.w2,
        }


def validate(params: JoinParams) -> List[str]:
    """Describe every violated join condition; empty when all hold.

    Raises:
        DomainError: If an integer parameter is not positive.
    """
    for name in ("d_N", "l1", "l2", "w1", "w2"):
        value = getattr(params, name)
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise DomainError(f"out of domain: {name} = {value!r}")

    violations = []
    if math.gcd(params.l1, params.l2) != 1:
        violations.append("gcd(l1, l2) ≠ 1")
    if math.gcd(params.w1, params.w2) != 1:
        violations.append("gcd(w1, w2) ≠ 1")
    if params.w1 < params.w2:
        violations.append("w1 ≥ w2 fails")
    if math.gcd(params.l2, params.w1 * params.w2) != 1:
        violations.append("gcd(l2, w1w2) ≠ 1")
    return violations


def validated(params: JoinParams) -> JoinParams:
    """Return `params` unchanged if valid, else raise `DomainError`."""
    violations = validate(params)
    if violations:
        raise DomainError("; ".join(violations))
    return params


def base_scalar_helper(kind: Union[BaseKind, str], value: int) -> Fraction:
    """Normalised scalar curvature `A` of a standard base.

    Args:
        kind: Projective space (value is d_N) or Riemann surface (value is
            the genus).
        value: Dimension or genus.
    """
    kind = BaseKind(kind)
    if kind is BaseKind.PROJECTIVE_SPACE:
        if value < 1:
            raise DomainError(f"out of domain: d_N = {value}")
        return Fraction(value + 1)
    if value < 0:
        raise DomainError(f"out of domain: genus = {value}")
    return Fraction(2 * (1 - value))


def is_sasaki_einstein_join(params: JoinParams) -> bool:
    """Whether the join has c1(D) = 0, i.e. l1 = 1 and l2 = w1 + w2."""
    return params.l1 == 1 and params.l2 == params.w1 + params.w2


def zero_scalar_family(
    l1: int, p1: int, r1: int, p2: int, r2: int
) -> Tuple[JoinParams, int, bool]:
    """Join over a genus-G surface with null scalar curvature and Futaki.

    Uses `w = (p1**(2 r1), p2**(2 r2))` (ordered), `l2 = 1` and
    `A = -2 * l1 * sqrt(w1 w2)`, so that `A = 2 (1 - G)` with
    `G = 1 + l1 * p1**r1 * p2**r2`.

    Returns:
        The parameters, the genus, and whether the bundle is the trivial
        product (`l1 (w1 + w2)` even).
    """
    if min(l1, p1, r1, p2, r2) < 1 or min(p1, p2) < 2:
        raise DomainError("out of domain: zero-scalar family parameters")
    if math.gcd(p1, p2) != 1:
        raise DomainError("gcd(p1, p2) ≠ 1")

    root = p1**r1 * p2**r2
    w1, w2 = sorted((p1 ** (2 * r1), p2 ** (2 * r2)), reverse=True)
    params = JoinParams(
        d_N=1, A=Fraction(-2 * l1 * root), l1=l1, l2=1, w1=w1, w2=w2
    )
    genus = 1 + l1 * root
    trivial = (l1 * (w1 + w2)) % 2 == 0
    return validated(params), genus, trivial
