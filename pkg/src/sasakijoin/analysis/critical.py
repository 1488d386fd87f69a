"""Critical rays of the Einstein-Hilbert functional and their nature.

On the w-cone the critical set of H is the union of the zeros of the
Sasaki-Futaki invariant (roots of `f_csc`) and of the total transverse scalar
curvature (roots of `S_num`).
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from sasakijoin.algebra.numbers import (
    DEFAULT_TOLERANCE,
    Scalar,
    as_rational,
    render_decimal,
    render_exact,
    sign,
)
from sasakijoin.algebra.polynomial import UniPoly
from sasakijoin.algebra.roots import (
    IsolatingInterval,
    SturmChain,
    isolate_positive_roots,
    refine_root,
)
from sasakijoin.functionals.bundle import FunctionalBundle, functional_bundle
from sasakijoin.join.params import JoinParams
from sasakijoin.utilities.logging import get_logger


logger = get_logger()


class Source(Enum):
    FUTAKI_ZERO = "futaki-zero"
    NULL_SCALAR = "null-scalar"
    BOTH = "both"


class Classification(Enum):
    LOCAL_MIN = "local-min"
    LOCAL_MAX = "local-max"
    INFLECTION = "inflection"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class CriticalPoint:
    """A critical ray of H, isolated exactly and classified by flank signs.

    Args:
        interval: Isolating interval of the root of the H' numerator.
        approx: Refined approximation of the root.
        source: Which factor of H' vanishes there.
        classification: Nature of the critical point.
        multiplicity_in_dH: Multiplicity of the root in the reduced numerator
            of H'.
        flanks: Rational slopes just left and right of the interval.
        flank_signs: Exact signs of H' at the flanks.
        H_approx: H evaluated at `approx`.
    """

    interval: IsolatingInterval
    approx: Fraction
    source: Source
    classification: Classification
    multiplicity_in_dH: int
    flanks: Tuple[Fraction, Fraction]
    flank_signs: Tuple[int, int]
    H_approx: Fraction

    def to_dict(self) -> dict:
        return {
            "H_approx": render_decimal(self.H_approx),
            "approx": render_decimal(self.approx),
            "classification": self.classification.value,
            "interval": interval_to_dict(self.interval),
            "multiplicity_in_dH": self.multiplicity_in_dH,
            "flank_signs": list(self.flank_signs),
            "flanks": [render_exact(p) for p in self.flanks],
            "source": self.source.value,
        }


def interval_to_dict(interval: IsolatingInterval) -> dict:
    """Exact endpoints with a decimal rendering of the midpoint."""
    return {
        "approx": render_decimal(interval.midpoint),
        "exact": interval.is_exact,
        "hi": render_exact(interval.hi),
        "lo": render_exact(interval.lo),
        "multiplicity": interval.multiplicity,
    }


def csc_rays(params: JoinParams) -> List[IsolatingInterval]:
    """Positive roots of `f_csc`: the rays carrying admissible cscS metrics."""
    return isolate_positive_roots(functional_bundle(params).f_csc)


def null_scalar_rays(params: JoinParams) -> List[IsolatingInterval]:
    """Positive roots of `S_num`: the rays of vanishing total scalar curvature.

    There are at most two, and none when `A >= 0`.
    """
    return isolate_positive_roots(functional_bundle(params).S_num)


def _vanishes_on(p: UniPoly, interval: IsolatingInterval) -> bool:
    if interval.is_exact:
        return p(interval.lo) == 0
    return SturmChain(p).count(interval.lo, interval.hi) > 0


def _flank_points(
    chain: SturmChain, interval: IsolatingInterval
) -> Tuple[Fraction, Fraction]:
    """Rational points outside the interval with no other root in between."""
    lo, hi = interval.lo, interval.hi
    delta = interval.width if not interval.is_exact else min(lo, 1) / 2
    while True:
        left, right = lo - delta, hi + delta
        if (
            left > 0
            and chain.base(left) != 0
            and chain.base(right) != 0
            and chain.count(left, right) == 1
        ):
            return left, right
        delta /= 2


def _classify(source: Source, signs: Tuple[int, int]) -> Classification:
    if source is Source.BOTH:
        return Classification.DEGENERATE
    if signs == (-1, 1):
        return Classification.LOCAL_MIN
    if signs == (1, -1):
        return Classification.LOCAL_MAX
    return Classification.INFLECTION


def critical_points(
    params: JoinParams,
    tol: Scalar = DEFAULT_TOLERANCE,
    bundle: Optional[FunctionalBundle] = None,
) -> List[CriticalPoint]:
    """All positive critical rays of H, sorted ascending.

    A root where both `f_csc` and `S_num` vanish is reported as degenerate;
    every other root is classified as a local minimum, local maximum or
    inflection from the exact signs of H' on its flanks.
    """
    tol = as_rational(tol)
    if bundle is None:
        bundle = functional_bundle(params)
    numerator = bundle.dH.num
    chain = SturmChain(numerator)

    points = []
    for interval in isolate_positive_roots(numerator):
        futaki = _vanishes_on(bundle.f_csc, interval)
        null = _vanishes_on(bundle.S_num, interval)
        source = (
            Source.BOTH
            if futaki and null
            else Source.FUTAKI_ZERO
            if futaki
            else Source.NULL_SCALAR
        )
        flanks = _flank_points(chain, interval)
        signs = (sign(bundle.dH(flanks[0])), sign(bundle.dH(flanks[1])))
        approx = refine_root(numerator, interval, tol)
        points.append(
            CriticalPoint(
                interval=interval,
                approx=approx,
                source=source,
                classification=_classify(source, signs),
                multiplicity_in_dH=interval.multiplicity,
                flanks=flanks,
                flank_signs=signs,
                H_approx=bundle.H(approx),
            )
        )
    logger.debug(
        f"{len(points)} critical point(s): "
        f"{[p.classification.value for p in points]}"
    )
    return points
