"""Real-root counting, isolation and refinement over the rationals.

Counting uses Sturm sequences of the square-free part, so roots of any
multiplicity are counted once. The counting convention is the half-open
interval (lo, hi], which lets adjacent intervals be chained without double
counting. Sequences, counts, isolating intervals and refinement come from
`sympy.Poly` over QQ; rational roots are found exactly by factoring over QQ.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

import sympy

from sasakijoin.algebra.numbers import (
    NEG_INF,
    POS_INF,
    Scalar,
    as_rational,
    from_sympy,
    sign,
    to_sympy,
)
from sasakijoin.algebra.polynomial import UniPoly, square_free_part
from sasakijoin.utilities.exceptions import DomainError, NotIsolatingError
from sasakijoin.utilities.logging import get_logger


logger = get_logger()

Endpoint = Union[Fraction, int, float]


@dataclass(frozen=True)
class IsolatingInterval:
    """Closed interval [lo, hi] around exactly one distinct real root.

    When `lo == hi` the endpoint is the root itself, found exactly. Otherwise
    neither endpoint is a root and the interval contains exactly one distinct
    root of the polynomial it was computed for.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        # Check(s)
        if self.lo > self.hi:
            raise DomainError(f"Empty interval [{self.lo}, {self.hi}]")
        if self.multiplicity < 1:
            raise DomainError("Root multiplicity must be positive")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Scalar) -> bool:
        return self.lo <= x <= self.hi


class SturmChain:
    """Sturm sequence of the square-free part of a polynomial.

    Args:
        p: Nonzero polynomial.
    """

    def __init__(self, p: UniPoly):
        # Check(s)
        if p.is_zero:
            raise DomainError("Sturm sequence of the zero polynomial")

        # Member variable(s)
        if p.degree == 0:
            self._sequence = [p]
        else:
            self._sequence = [
                UniPoly.from_sympy(q) for q in p.as_sympy().sturm()
            ]

    @property
    def base(self) -> UniPoly:
        """The square-free polynomial the chain was built from."""
        return self._sequence[0]

    @property
    def sequence(self) -> List[UniPoly]:
        return list(self._sequence)

    def variations(self, x: Endpoint) -> int:
        """Number of sign changes of the sequence at `x`, zeros skipped."""
        signs = [
            s for s in (_sign_at(p, x) for p in self._sequence) if s != 0
        ]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Endpoint, hi: Endpoint) -> int:
        """Number of distinct real roots in (lo, hi]."""
        if not lo < hi:
            raise DomainError(f"Expected lo < hi, got ({lo}, {hi}]")
        return self.variations(lo) - self.variations(hi)


def _sign_at(p: UniPoly, x: Endpoint) -> int:
    """Sign of `p(x)`, with limits at the infinite sentinels."""
    if p.is_zero:
        return 0
    if x == POS_INF:
        return sign(p.leading_coefficient)
    if x == NEG_INF:
        return sign(p.leading_coefficient) * (-1) ** p.degree
    return sign(p(x))


def _sympy_endpoint(x: Endpoint) -> Optional[sympy.Rational]:
    if x in (NEG_INF, POS_INF):
        return None
    return to_sympy(x)


def sturm_count(p: UniPoly, lo: Endpoint, hi: Endpoint) -> int:
    """Number of distinct real roots of `p` in (lo, hi].

    `lo` and `hi` may be `NEG_INF` and `POS_INF` respectively.
    """
    if p.is_zero:
        raise DomainError("Sturm sequence of the zero polynomial")
    if not lo < hi:
        raise DomainError(f"Expected lo < hi, got ({lo}, {hi}]")
    # count_roots counts on the closed interval [lo, hi]
    closed = p.as_sympy().count_roots(_sympy_endpoint(lo), _sympy_endpoint(hi))
    at_lo = lo != NEG_INF and p(lo) == 0
    return int(closed) - int(at_lo)


def descartes_positive_bound(p: UniPoly) -> int:
    """Sign variations of the nonzero coefficients of `p`.

    This bounds the number of positive roots counted with multiplicity and
    has the same parity.
    """
    if p.is_zero:
        raise DomainError("Descartes bound of the zero polynomial")
    signs = [sign(c) for c in p.coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def isolate_positive_roots(p: UniPoly) -> List[IsolatingInterval]:
    """Isolate the distinct roots of `p` in (0, +inf).

    Intervals are pairwise disjoint, sorted ascending and carry the
    multiplicity of their root in `p`. Rational roots are reported exactly as
    degenerate intervals.
    """
    if p.is_zero:
        raise DomainError("Root isolation of the zero polynomial")
    if p.trailing_degree > 0:
        p = p.shift_down(p.trailing_degree)
    if p.degree <= 0:
        return []

    poly = p.as_sympy()
    radical = poly.sqf_part()
    rational_roots = [
        from_sympy(root) for root in poly.ground_roots() if root > 0
    ]
    intervals = []
    for (lo, hi), multiplicity in poly.intervals(inf=0):
        interval = IsolatingInterval(
            from_sympy(lo), from_sympy(hi), multiplicity
        )
        # A bracket around a rational root collapses onto it
        inside = [x for x in rational_roots if interval.contains(x)]
        if inside:
            interval = IsolatingInterval(inside[0], inside[0], multiplicity)
        while interval.lo <= 0:
            interval = _narrow(radical, interval)
        intervals.append(interval)
    intervals.sort(key=lambda iv: iv.lo)
    for k in range(len(intervals) - 1):
        while intervals[k].hi >= intervals[k + 1].lo:
            intervals[k] = _narrow(radical, intervals[k])
            intervals[k + 1] = _narrow(radical, intervals[k + 1])
    logger.debug(
        f"Isolated {len(intervals)} positive root(s) of degree-{p.degree} "
        "polynomial"
    )
    return intervals


def _narrow(
    radical: sympy.Poly, interval: IsolatingInterval
) -> IsolatingInterval:
    """Shrink a bracket around an irrational root to below half its width."""
    if interval.is_exact:
        return interval
    lo, hi = radical.refine_root(
        to_sympy(interval.lo),
        to_sympy(interval.hi),
        eps=to_sympy(interval.width / 2),
    )
    return IsolatingInterval(
        from_sympy(lo), from_sympy(hi), interval.multiplicity
    )


def refine_root(
    p: UniPoly, interval: IsolatingInterval, tol: Scalar
) -> Fraction:
    """Narrow `interval` to width below `tol` and return its midpoint.

    Raises:
        NotIsolatingError: If the square-free part of `p` does not change sign
            between the endpoints, or has more than one root between them.
    """
    tol = as_rational(tol)
    if tol <= 0:
        raise DomainError("Refinement tolerance must be positive")
    if interval.is_exact:
        return interval.lo

    base = square_free_part(p)
    lo, hi = interval.lo, interval.hi
    if sign(base(lo)) * sign(base(hi)) >= 0 or sturm_count(base, lo, hi) != 1:
        raise NotIsolatingError(
            f"not isolating: [{lo}, {hi}] does not bracket a sign change"
        )
    lo, hi = base.as_sympy().refine_root(
        to_sympy(lo), to_sympy(hi), eps=to_sympy(tol)
    )
    return (from_sympy(lo) + from_sympy(hi)) / 2


def positive_on_open_interval(p: UniPoly, lo: Scalar, hi: Scalar) -> bool:
    """Whether `p(z) > 0` for every `lo < z < hi`, decided exactly.

    Zeros at the endpoints are permitted. Any interior zero, of any
    multiplicity, violates strict positivity.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise DomainError(f"Expected lo < hi, got ({lo}, {hi})")
    if p.is_zero:
        logger.warning("Zero polynomial is not positive anywhere")
        return False
    if p.degree == 0:
        return p.leading_coefficient > 0

    interior = sturm_count(p, lo, hi) - (1 if p(hi) == 0 else 0)
    if interior > 0:
        return False
    return p((lo + hi) / 2) > 0
