"""Aggregate per-manifold report."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from sasakijoin._version import __version__
from sasakijoin.algebra.numbers import (
    DEFAULT_TOLERANCE,
    Scalar,
    as_rational,
    render_exact,
)
from sasakijoin.algebra.roots import IsolatingInterval, isolate_positive_roots
from sasakijoin.analysis.critical import (
    Classification,
    CriticalPoint,
    critical_points,
    interval_to_dict,
)
from sasakijoin.analysis.stability import (
    StabilityVerdict,
    critical_point_verdict,
    stability_verdict,
)
from sasakijoin.extremal.ode import ExtremalSolution, extremal_solution
from sasakijoin.extremal.window import (
    AdmissibilityWindow,
    admissibility_boundary,
)
from sasakijoin.functionals.bundle import FunctionalBundle, functional_bundle
from sasakijoin.join.params import (
    JoinParams,
    is_sasaki_einstein_join,
    validated,
)
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import (
    InconsistencyError,
    NoTransitionError,
)
from sasakijoin.utilities.logging import get_logger


logger = get_logger()

FULL_FUTAKI_NOTE = (
    "The Sasaki-Futaki invariant vanishes on the w-subcone at every cscS ray; "
    "it then vanishes identically on the full Sasaki cone."
)
NORMALISATION_NOTE = (
    "Total scalar curvature, volume, H and the Futaki invariant are "
    "normalised up to a positive factor independent of the ray."
)


@dataclass(frozen=True)
class BoundaryCheck:
    """Leading behaviour of the reduced H at 0 and at infinity."""

    pole_order: int
    coefficient_at_zero: Fraction
    growth_degree: int
    coefficient_at_infinity: Fraction

    def to_dict(self) -> dict:
        return {
            "coefficient_at_infinity": render_exact(
                self.coefficient_at_infinity
            ),
            "coefficient_at_zero": render_exact(self.coefficient_at_zero),
            "growth_degree": self.growth_degree,
            "pole_order": self.pole_order,
        }


def boundary_check(
    params: JoinParams, bundle: Optional[FunctionalBundle] = None
) -> BoundaryCheck:
    """Confirm `H -> +inf` as `b -> 0` and as `b -> +inf`.

    Raises:
        InconsistencyError: If the pole at 0 or the growth at infinity does
            not have order `d_N + 1` and a positive coefficient.
    """
    if bundle is None:
        bundle = functional_bundle(params)
    H, order = bundle.H, params.d_N + 1
    check = BoundaryCheck(
        pole_order=-H.valuation_at_zero(),
        coefficient_at_zero=H.coefficient_at_zero(),
        growth_degree=H.degree_at_infinity(),
        coefficient_at_infinity=H.coefficient_at_infinity(),
    )
    if (
        check.pole_order != order
        or check.growth_degree != order
        or check.coefficient_at_zero <= 0
        or check.coefficient_at_infinity <= 0
    ):
        raise InconsistencyError(
            "boundary behaviour of H violated", payload=check.to_dict()
        )
    return check


@dataclass(frozen=True)
class ExtremalOptions:
    """Optional extremal analysis: a slope range to localise the window in."""

    b_lo: Fraction
    b_hi: Fraction
    tol: Fraction = Fraction(1, 100)
    samples: int = 40
    workers: int = 1


@dataclass(frozen=True)
class AnalysisReport:
    params: JoinParams
    bundle: FunctionalBundle
    critical_points: List[CriticalPoint]
    critical_verdicts: List[StabilityVerdict]
    csc_rays: List[IsolatingInterval]
    null_scalar_rays: List[IsolatingInterval]
    verdicts: List[StabilityVerdict]
    boundary: BoundaryCheck
    tolerance: Fraction
    extremal_solutions: List[ExtremalSolution] = field(default_factory=list)
    window: Optional[AdmissibilityWindow] = None
    window_note: Optional[str] = None

    @property
    def fails_convexity(self) -> bool:
        """Whether H has a local maximum on the w-cone."""
        return any(
            p.classification is Classification.LOCAL_MAX
            for p in self.critical_points
        )

    @property
    def negative_scalar_window(self) -> Optional[dict]:
        """Range between two distinct null-scalar rays, where S is negative."""
        if len(self.null_scalar_rays) != 2:
            return None
        lo, hi = self.null_scalar_rays
        return {"from": interval_to_dict(lo), "to": interval_to_dict(hi)}

    def notes(self) -> List[str]:
        notes = [NORMALISATION_NOTE]
        if self.csc_rays:
            notes.append(FULL_FUTAKI_NOTE)
        if self.window_note is not None:
            notes.append(self.window_note)
        return notes

    def to_dict(self) -> dict:
        """Serialisable report; keys are sorted on emission."""
        critical = []
        for point, verdict in zip(
            self.critical_points, self.critical_verdicts
        ):
            entry = point.to_dict()
            entry["verdict"] = verdict.verdict.value
            entry["reason"] = verdict.reason.value
            critical.append(entry)

        report = {
            "boundary": self.boundary.to_dict(),
            "convexity": {"fails_convexity": self.fails_convexity},
            "critical_points": critical,
            "csc_rays": [interval_to_dict(iv) for iv in self.csc_rays],
            "meta": {
                "notes": self.notes(),
                "tolerance": render_exact(self.tolerance),
                "tool": "sasakijoin",
                "version": __version__,
            },
            "negative_scalar_window": self.negative_scalar_window,
            "null_scalar_rays": [
                interval_to_dict(iv) for iv in self.null_scalar_rays
            ],
            "params": self.params.to_dict(),
            "polynomials": self.bundle.to_dict(),
            "sasaki_einstein": is_sasaki_einstein_join(self.params),
        }
        if self.verdicts:
            report["verdicts"] = [v.to_dict() for v in self.verdicts]
        if self.extremal_solutions or self.window is not None:
            report["extremal"] = {
                "rays": [s.to_dict() for s in self.extremal_solutions],
                "window": None
                if self.window is None
                else self.window.to_dict(),
            }
        return report


def full_report(
    params: JoinParams,
    rays: Sequence[RayId] = (),
    tol: Scalar = DEFAULT_TOLERANCE,
    extremal: Optional[ExtremalOptions] = None,
) -> AnalysisReport:
    """Run every analysis on one parameter set.

    Args:
        params: Join parameters.
        rays: Rays to issue stability verdicts (and, with `extremal`,
            admissibility) for.
        tol: Refinement tolerance for approximate roots.
        extremal: Enables the extremal analysis when given.
    """
    params = validated(params)
    tol = as_rational(tol)
    bundle = functional_bundle(params)
    points = critical_points(params, tol, bundle=bundle)
    csc = isolate_positive_roots(bundle.f_csc)
    null = isolate_positive_roots(bundle.S_num)

    solutions: List[ExtremalSolution] = []
    window, window_note = None, None
    if extremal is not None:
        solutions = [
            extremal_solution(params, ray)
            for ray in rays
            if ray.b != params.regular_slope
        ]
        try:
            window = admissibility_boundary(
                params,
                extremal.b_lo,
                extremal.b_hi,
                extremal.tol,
                samples=extremal.samples,
                workers=extremal.workers,
            )
        except NoTransitionError as e:
            logger.info(str(e))
            window_note = f"{e}: admissibility is constant on the sample grid"

    return AnalysisReport(
        params=params,
        bundle=bundle,
        critical_points=points,
        critical_verdicts=[critical_point_verdict(params, p) for p in points],
        csc_rays=csc,
        null_scalar_rays=null,
        verdicts=[
            stability_verdict(params, ray.b, csc, null) for ray in rays
        ],
        boundary=boundary_check(params, bundle),
        tolerance=tol,
        extremal_solutions=solutions,
        window=window,
        window_note=window_note,
    )
