"""Quasi-regular Reeb rays in the w-cone and their orbifold quotients."""

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
import math
from typing import Union

from sasakijoin.join.params import JoinParams
from sasakijoin.utilities.exceptions import DomainError


@dataclass(frozen=True)
class RayId:
    """Reeb ray `v1 H1 + v2 H2` with coprime positive integer weights."""

    v1: int
    v2: int

    def __post_init__(self):
        # Check(s)
        for value in (self.v1, self.v2):
            if not isinstance(value, int) or value < 1:
                raise DomainError(f"out of domain: ray weight {value!r}")
        if math.gcd(self.v1, self.v2) != 1:
            raise DomainError(
                f"Ray ({self.v1}, {self.v2}) is not canonical: "
                "weights must be coprime"
            )

    @property
    def b(self) -> Fraction:
        """Slope `v2 / v1` parametrising the ray."""
        return Fraction(self.v2, self.v1)

    @classmethod
    def from_slope(cls, b: Fraction) -> "RayId":
        b = Fraction(b)
        if b <= 0:
            raise DomainError(f"out of domain: slope {b}")
        return cls(v1=b.denominator, v2=b.numerator)

    def __str__(self) -> str:
        return f"({self.v1},{self.v2})"


def approximate_ray(
    b: Union[str, float, Decimal, Fraction], max_denominator: int
) -> RayId:
    """Quasi-regular ray approximating a (possibly irregular) slope.

    Irregular rays are limits of quasi-regular ones, so every per-ray
    operation applies to the returned ray verbatim.
    """
    if max_denominator < 1:
        raise DomainError("max_denominator must be positive")
    slope = Fraction(b).limit_denominator(max_denominator)
    if slope <= 0:
        raise DomainError(f"out of domain: slope {b}")
    return RayId.from_slope(slope)


@dataclass(frozen=True)
class QuotientData:
    """Orbifold quotient of the join by the flow of a quasi-regular ray.

    Args:
        s: `gcd(|w2 v1 - w1 v2|, l2)`.
        m: `l2 / s`.
        m1: Ramification index `v1 m` along the zero section.
        m2: Ramification index `v2 m` along the infinity section.
        n_deg: Degree `l1 (w1 v2 - w2 v1) / s` of the line bundle.
        r: Kähler class parameter `(w1 v2 - w2 v1) / (w1 v2 + w2 v1)`.
        regular: Whether the ray is the regular ray `v ∝ w`.
    """

    s: int
    m: int
    m1: int
    m2: int
    n_deg: int
    r: Fraction
    regular: bool

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "m1": self.m1,
            "m2": self.m2,
            "n_deg": self.n_deg,
            "r": f"{self.r.numerator}/{self.r.denominator}",
            "regular": self.regular,
            "s": self.s,
        }


def quotient_data(params: JoinParams, ray: RayId) -> QuotientData:
    """Quotient data of the ray; `gcd(0, l2) = l2` on the regular ray."""
    twist = params.w1 * ray.v2 - params.w2 * ray.v1
    s = math.gcd(abs(twist), params.l2)
    m = params.l2 // s
    return QuotientData(
        s=s,
        m=m,
        m1=ray.v1 * m,
        m2=ray.v2 * m,
        n_deg=params.l1 * twist // s,
        r=Fraction(twist, params.w1 * ray.v2 + params.w2 * ray.v1),
        regular=twist == 0,
    )
