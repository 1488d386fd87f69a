"""Deterministic rendering of reports and tables as text, JSON or CSV."""

import json
from typing import Any, Dict, List, Optional

import pandas as pd

from sasakijoin.utilities.logging import get_logger


logger = get_logger()


def to_json(document: Any) -> str:
    """Sorted keys and fixed indentation, so equal inputs give equal bytes."""
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)


def to_csv(table: pd.DataFrame) -> str:
    return table.to_csv(index=False)


def to_text_table(table: pd.DataFrame) -> str:
    if table.empty:
        return "(none)"
    return table.to_string(index=False)


def emit(content: str, output: Optional[str] = None):
    """Write `content` to `output`, or to standard output."""
    if not content.endswith("\n"):
        content += "\n"
    if output is None:
        print(content, end="")
        return
    with open(output, "w", newline="") as f:
        f.write(content)
    logger.info(f"Wrote {output}")


# Report rendering
def critical_points_table(report: Dict[str, Any]) -> pd.DataFrame:
    rows = [
        {
            "b": point["approx"],
            "lo": point["interval"]["lo"],
            "hi": point["interval"]["hi"],
            "source": point["source"],
            "classification": point["classification"],
            "multiplicity": point["multiplicity_in_dH"],
            "H": point["H_approx"],
            "verdict": point["verdict"],
            "reason": point["reason"],
        }
        for point in report["critical_points"]
    ]
    columns = [
        "b",
        "lo",
        "hi",
        "source",
        "classification",
        "multiplicity",
        "H",
        "verdict",
        "reason",
    ]
    return pd.DataFrame(rows, columns=columns)


def intervals_table(intervals: List[Dict[str, Any]]) -> pd.DataFrame:
    columns = ["approx", "lo", "hi", "multiplicity", "exact"]
    return pd.DataFrame(intervals, columns=columns)


def verdicts_table(verdicts: List[Dict[str, Any]]) -> pd.DataFrame:
    rows = [
        {
            "ray": f"({v['ray'][0]},{v['ray'][1]})",
            "b": v["b"],
            "verdict": v["verdict"],
            "reason": v["reason"],
            "futaki": v["futaki_approx"],
            "notes": "; ".join(v["notes"]),
        }
        for v in verdicts
    ]
    columns = ["ray", "b", "verdict", "reason", "futaki", "notes"]
    return pd.DataFrame(rows, columns=columns)


def extremal_table(solutions: List[Dict[str, Any]]) -> pd.DataFrame:
    rows = [
        {
            "ray": f"({s['ray'][0]},{s['ray'][1]})",
            "b": s["b"],
            "alpha": s["alpha"],
            "beta": s["beta"],
            "admissible": s["admissible"],
        }
        for s in solutions
    ]
    columns = ["ray", "b", "alpha", "beta", "admissible"]
    return pd.DataFrame(rows, columns=columns)


def _section(title: str, body: str) -> str:
    return f"{title}\n{'-' * len(title)}\n{body}\n"


def report_to_text(report: Dict[str, Any]) -> str:
    """Aligned plain-text sections for a serialised `AnalysisReport`."""
    params = report["params"]
    sections = [
        _section(
            "Parameters",
            to_text_table(pd.DataFrame([params], columns=sorted(params))),
        ),
        _section(
            "Polynomials (ascending coefficients)",
            "\n".join(
                f"{name}: [{', '.join(coefficients)}]"
                for name, coefficients in sorted(
                    report["polynomials"].items()
                )
            ),
        ),
        _section(
            "Critical points", to_text_table(critical_points_table(report))
        ),
        _section(
            "cscS rays", to_text_table(intervals_table(report["csc_rays"]))
        ),
        _section(
            "Null-scalar rays",
            to_text_table(intervals_table(report["null_scalar_rays"])),
        ),
    ]
    if "verdicts" in report:
        sections.append(
            _section(
                "Verdicts", to_text_table(verdicts_table(report["verdicts"]))
            )
        )
    boundary = report["boundary"]
    sections.append(
        _section(
            "Boundary behaviour",
            f"pole order at 0: {boundary['pole_order']} "
            f"(coefficient {boundary['coefficient_at_zero']})\n"
            f"growth degree at infinity: {boundary['growth_degree']} "
            f"(coefficient {boundary['coefficient_at_infinity']})",
        )
    )
    sections.append(
        _section(
            "Convexity",
            "H fails to be convex (local maximum present)"
            if report["convexity"]["fails_convexity"]
            else "no local maximum of H",
        )
    )
    if report["negative_scalar_window"] is not None:
        window = report["negative_scalar_window"]
        sections.append(
            _section(
                "Negative total scalar curvature",
                f"between b ~ {window['from']['approx']} and "
                f"b ~ {window['to']['approx']}",
            )
        )
    if "extremal" in report:
        extremal = report["extremal"]
        body = to_text_table(extremal_table(extremal["rays"]))
        window = extremal["window"]
        if window is not None:
            for side, key in (("lower", "b1"), ("upper", "b2")):
                if window[side] is not None:
                    lo, hi = window[side]
                    body += f"\n{key} ~ {window[key]} in [{lo}, {hi}]"
        sections.append(_section("Extremal", body))
    sections.append(
        _section(
            "Notes",
            "\n".join(
                [f"Sasaki-Einstein join: {report['sasaki_einstein']}"]
                + report["meta"]["notes"]
            ),
        )
    )
    sections.append(
        f"{report['meta']['tool']} {report['meta']['version']}, "
        f"tolerance {report['meta']['tolerance']}"
    )
    return "\n".join(sections)
