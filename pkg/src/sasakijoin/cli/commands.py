"""Subcommands of the `sasakijoin` command-line tool."""

from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from sasakijoin.analysis.report import ExtremalOptions, full_report
from sasakijoin.analysis.sampling import sample_curves
from sasakijoin.analysis.scan import scan_l2
from sasakijoin.cli.config import RunConfig
from sasakijoin.cli.output import (
    critical_points_table,
    emit,
    extremal_table,
    report_to_text,
    to_csv,
    to_json,
    to_text_table,
)
from sasakijoin.cli.verification import FAIL, items_to_text, run_verification
from sasakijoin.extremal.ode import ExtremalSolution, extremal_solution
from sasakijoin.extremal.window import (
    AdmissibilityWindow,
    admissibility_boundary,
)
from sasakijoin.utilities.exceptions import NoTransitionError
from sasakijoin.utilities.logging import get_logger


logger = get_logger()

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INCONSISTENT = 3


def _render_table(table: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return to_json(table.to_dict(orient="records"))
    if fmt == "csv":
        return to_csv(table)
    return to_text_table(table)


def analyze(config: RunConfig) -> Tuple[str, int]:
    options = None
    if config.extremal:
        options = ExtremalOptions(
            b_lo=config.window_lo,
            b_hi=config.window_hi,
            tol=config.window_tol,
            workers=config.workers,
        )
    report = full_report(
        config.params, config.rays, config.tolerance, extremal=options
    )
    document = report.to_dict()
    if config.format == "json":
        return to_json(document), EXIT_OK
    if config.format == "csv":
        return to_csv(critical_points_table(document)), EXIT_OK
    return report_to_text(document), EXIT_OK


def scan(config: RunConfig) -> Tuple[str, int]:
    table = scan_l2(
        config.template, config.l2_from, config.l2_to, config.workers
    )
    return _render_table(table, config.format), EXIT_OK


def extremal(config: RunConfig) -> Tuple[str, int]:
    params = config.params
    solutions: List[ExtremalSolution] = []
    for ray in config.rays:
        if ray.b == params.regular_slope:
            logger.warning(f"Skipping the regular ray {ray}")
            continue
        solutions.append(extremal_solution(params, ray))

    window: Optional[AdmissibilityWindow] = None
    note = None
    try:
        window = admissibility_boundary(
            params,
            config.window_lo,
            config.window_hi,
            config.window_tol,
            workers=config.workers,
        )
    except NoTransitionError as e:
        note = str(e)

    rays = [s.to_dict() for s in solutions]
    if config.format == "json":
        document = {
            "note": note,
            "params": params.to_dict(),
            "rays": rays,
            "window": None if window is None else window.to_dict(),
        }
        return to_json(document), EXIT_OK
    if config.format == "csv":
        return to_csv(extremal_table(rays)), EXIT_OK

    lines = [to_text_table(extremal_table(rays))]
    if window is not None:
        rendered = window.to_dict()
        for side, key in (("lower", "b1"), ("upper", "b2")):
            if rendered[side] is not None:
                lo, hi = rendered[side]
                lines.append(f"{key} ~ {rendered[key]} in [{lo}, {hi}]")
    if note is not None:
        lines.append(note)
    return "\n".join(lines), EXIT_OK


def sample(config: RunConfig) -> Tuple[str, int]:
    table = sample_curves(
        config.params, config.b_min, config.b_max, config.count
    )
    return _render_table(table, config.format), EXIT_OK


def verify(config: RunConfig) -> Tuple[str, int]:
    items = run_verification()
    code = (
        EXIT_INCONSISTENT
        if any(i.status == FAIL for i in items)
        else EXIT_OK
    )
    if config.format == "json":
        return to_json([i.to_dict() for i in items]), code
    if config.format == "csv":
        table = pd.DataFrame(
            [i.to_dict() for i in items], columns=["status", "name", "detail"]
        )
        return to_csv(table), code
    return items_to_text(items), code


SUBCOMMANDS: Dict[str, Callable[[RunConfig], Tuple[str, int]]] = {
    "analyze": analyze,
    "scan": scan,
    "extremal": extremal,
    "sample": sample,
    "verify": verify,
    "verify-paper": verify,
}


def run_subcommand(config: RunConfig) -> int:
    """Run the configured subcommand, emit its artifact, return exit code."""
    content, code = SUBCOMMANDS[config.command](config)
    emit(content, config.output)
    return code
