"""Locating the window of rays that carry admissible extremal metrics."""

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
from typing import Iterator, List, Optional, Tuple

from sasakijoin.algebra.numbers import (
    Scalar,
    as_rational,
    render_decimal,
    render_exact,
)
from sasakijoin.extremal.ode import profile_at
from sasakijoin.join.params import JoinParams, validated
from sasakijoin.utilities.exceptions import DomainError, NoTransitionError
from sasakijoin.utilities.logging import get_logger


logger = get_logger()

Bracket = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class AdmissibilityWindow:
    """Brackets around the lower and upper admissibility transitions.

    `lower` brackets a change from not admissible to admissible as b grows,
    `upper` the change back. Either side is `None` when the scanned range
    shows no such transition. Unpacks as `(b1, b2)`.
    """

    lower: Optional[Bracket]
    upper: Optional[Bracket]

    @property
    def b1(self) -> Optional[Fraction]:
        return None if self.lower is None else sum(self.lower) / 2

    @property
    def b2(self) -> Optional[Fraction]:
        return None if self.upper is None else sum(self.upper) / 2

    def __iter__(self) -> Iterator[Optional[Fraction]]:
        return iter((self.b1, self.b2))

    def to_dict(self) -> dict:
        def _bracket(bracket: Optional[Bracket]):
            if bracket is None:
                return None
            return [render_exact(bracket[0]), render_exact(bracket[1])]

        def _approx(value: Optional[Fraction]):
            return None if value is None else render_decimal(value)

        return {
            "b1": _approx(self.b1),
            "b2": _approx(self.b2),
            "lower": _bracket(self.lower),
            "upper": _bracket(self.upper),
        }


def _admissible_at(params: JoinParams, b: Fraction) -> bool:
    return profile_at(params, b).admissible


def _avoid_regular(params: JoinParams, b: Fraction, step: Fraction):
    """Nudge a sample off the regular slope, where no quotient exists."""
    if b == params.regular_slope:
        return b + step / 3
    return b


def admissibility_scan(
    params: JoinParams,
    b_lo: Scalar,
    b_hi: Scalar,
    samples: int = 40,
    workers: int = 1,
) -> List[Tuple[Fraction, bool]]:
    """Admissibility at `samples` equally spaced rational slopes.

    Args:
        params: Join parameters.
        b_lo: Smallest slope sampled, positive.
        b_hi: Largest slope sampled.
        samples: Number of slopes, at least 2.
        workers: Number of worker processes evaluating samples.

    Returns:
        Pairs `(b, admissible)` sorted by `b`.
    """
    params = validated(params)
    b_lo, b_hi = as_rational(b_lo), as_rational(b_hi)
    if not 0 < b_lo < b_hi:
        raise DomainError(f"out of domain: scan range ({b_lo}, {b_hi})")
    if samples < 2:
        raise DomainError("admissibility scan needs at least 2 samples")

    step = (b_hi - b_lo) / (samples - 1)
    grid = [
        _avoid_regular(params, b_lo + k * step, step) for k in range(samples)
    ]
    if workers > 1:
        with Pool(workers) as p:
            flags = p.map(partial(_admissible_at, params), grid)
    else:
        flags = [_admissible_at(params, b) for b in grid]
    return list(zip(grid, flags))


def _bisect(
    params: JoinParams, lo: Fraction, hi: Fraction, tol: Fraction
) -> Bracket:
    """Shrink `[lo, hi]`, admissibility differing at the ends, to width tol."""
    flag_lo = _admissible_at(params, lo)
    while hi - lo > tol:
        mid = _avoid_regular(params, (lo + hi) / 2, hi - lo)
        if _admissible_at(params, mid) == flag_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def admissibility_boundary(
    params: JoinParams,
    b_lo: Scalar,
    b_hi: Scalar,
    tol: Scalar,
    samples: int = 40,
    workers: int = 1,
) -> AdmissibilityWindow:
    """Localise the boundaries of the admissible window to width `tol`.

    The sample grid of `admissibility_scan` brackets the first transition into
    admissibility and the last transition out of it; each bracket is then
    bisected over rational slopes, every midpoint being an exact solve.

    Raises:
        NoTransitionError: If admissibility is constant on the sample grid.
    """
    tol = as_rational(tol)
    if tol <= 0:
        raise DomainError("Window tolerance must be positive")
    scan = admissibility_scan(params, b_lo, b_hi, samples, workers)

    lower = upper = None
    for (b_a, ok_a), (b_b, ok_b) in zip(scan, scan[1:]):
        if not ok_a and ok_b and lower is None:
            lower = (b_a, b_b)
        if ok_a and not ok_b:
            upper = (b_a, b_b)

    if lower is None and upper is None:
        raise NoTransitionError(
            "no admissibility transition found in "
            f"({scan[0][0]}, {scan[-1][0]})"
        )

    window = AdmissibilityWindow(
        lower=None if lower is None else _bisect(params, *lower, tol),
        upper=None if upper is None else _bisect(params, *upper, tol),
    )
    logger.info(f"Admissibility transitions: {window.to_dict()}")
    return window
