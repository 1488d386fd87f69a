"""K-(semi)stability verdicts for rays of the w-cone.

For these joins a ray is K-semistable exactly when it carries a cscS metric
(up to isotopy), i.e. when `f_csc(b) = 0`; every other ray is K-unstable.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sasakijoin.algebra.numbers import (
    Scalar,
    as_rational,
    render_decimal,
    render_exact,
)
from sasakijoin.algebra.roots import IsolatingInterval
from sasakijoin.analysis.critical import (
    CriticalPoint,
    Source,
    csc_rays,
    interval_to_dict,
    null_scalar_rays,
)
from sasakijoin.functionals.bundle import functional_bundle
from sasakijoin.functionals.einstein_hilbert import futaki_value
from sasakijoin.join.params import JoinParams
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import DomainError


class Verdict(Enum):
    K_SEMISTABLE_CSCS = "K-semistable-cscS"
    K_UNSTABLE = "K-unstable"


class Reason(Enum):
    CSC = "cscS ray (up to isotopy)"
    NON_CRITICAL = "non-critical"
    NULL_SCALAR = "critical-null-scalar-nonzero-Futaki"


@dataclass(frozen=True)
class StabilityVerdict:
    """Verdict for the ray of slope `b`.

    Args:
        b: Slope of the ray.
        verdict: K-semistable with a cscS metric, or K-unstable.
        reason: Why the verdict holds.
        futaki: Normalised Sasaki-Futaki invariant on the canonical ray.
        notes: Annotations, such as proximity to an irrational cscS ray.
        interval: Isolating interval, when the verdict concerns an
            irrational ray approximated by `b`.
    """

    b: Fraction
    verdict: Verdict
    reason: Reason
    futaki: Fraction
    notes: Tuple[str, ...] = field(default_factory=tuple)
    interval: Optional[IsolatingInterval] = None

    @property
    def ray(self) -> RayId:
        return RayId.from_slope(self.b)

    def to_dict(self) -> dict:
        return {
            "b": render_exact(self.b),
            "b_approx": render_decimal(self.b),
            "futaki": render_exact(self.futaki),
            "futaki_approx": render_decimal(self.futaki),
            "interval": None
            if self.interval is None
            else interval_to_dict(self.interval),
            "notes": list(self.notes),
            "reason": self.reason.value,
            "ray": [self.ray.v1, self.ray.v2],
            "verdict": self.verdict.value,
        }


def _near_notes(
    b: Fraction,
    intervals: Sequence[IsolatingInterval],
    tag: str,
    what: str,
) -> List[str]:
    return [
        f"{tag}: inside the isolating interval "
        f"[{render_exact(iv.lo)}, {render_exact(iv.hi)}] of {what}"
        for iv in intervals
        if not iv.is_exact and iv.contains(b)
    ]


def stability_verdict(
    params: JoinParams,
    b: Scalar,
    csc_intervals: Optional[Sequence[IsolatingInterval]] = None,
    null_intervals: Optional[Sequence[IsolatingInterval]] = None,
) -> StabilityVerdict:
    """Decide K-semistability of the ray of slope `b` exactly.

    A rational slope lying inside the isolating interval of an irrational
    cscS ray is K-unstable, annotated "near-csc": the verdict of the ray
    itself attaches to the interval. A slope inside the interval of an
    irrational null-scalar ray is annotated "near-null-scalar" likewise.

    Args:
        params: Join parameters.
        b: Positive rational slope.
        csc_intervals: Precomputed `csc_rays(params)`, if available.
        null_intervals: Precomputed `null_scalar_rays(params)`, if
            available.
    """
    b = as_rational(b)
    if b <= 0:
        raise DomainError(f"out of domain: b = {b}")
    bundle = functional_bundle(params)
    futaki = futaki_value(params, RayId.from_slope(b))

    if bundle.f_csc(b) == 0:
        return StabilityVerdict(
            b, Verdict.K_SEMISTABLE_CSCS, Reason.CSC, futaki
        )

    if csc_intervals is None:
        csc_intervals = csc_rays(params)
    if null_intervals is None:
        null_intervals = null_scalar_rays(params)
    notes = _near_notes(b, csc_intervals, "near-csc", "a cscS ray")
    notes += _near_notes(
        b,
        null_intervals,
        "near-null-scalar",
        f"a null-scalar ray ({Reason.NULL_SCALAR.value})",
    )

    reason = (
        Reason.NULL_SCALAR if bundle.S_num(b) == 0 else Reason.NON_CRITICAL
    )
    return StabilityVerdict(
        b, Verdict.K_UNSTABLE, reason, futaki, tuple(notes)
    )


def critical_point_verdict(
    params: JoinParams, point: CriticalPoint
) -> StabilityVerdict:
    """Verdict for the (possibly irrational) ray of a critical point.

    Decided from which factor of H' vanishes on the isolating interval, so it
    is exact even when the root itself is irrational.
    """
    if point.source is Source.NULL_SCALAR:
        futaki = futaki_value(params, RayId.from_slope(point.approx))
        return StabilityVerdict(
            point.approx,
            Verdict.K_UNSTABLE,
            Reason.NULL_SCALAR,
            futaki,
            interval=point.interval,
        )
    return StabilityVerdict(
        point.approx,
        Verdict.K_SEMISTABLE_CSCS,
        Reason.CSC,
        Fraction(0),
        interval=point.interval,
    )
