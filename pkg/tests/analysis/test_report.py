"""Unit tests for boundary behaviour and the aggregate report."""

from fractions import Fraction
import json

import numpy as np

from sasakijoin.analysis.report import (
    ExtremalOptions,
    boundary_check,
    full_report,
)
from sasakijoin.analysis.sampling import random_join_params
from sasakijoin.join.params import JoinParams
from sasakijoin.join.rays import RayId


THREE_CSC = JoinParams(d_N=2, A=1, l1=1, l2=29, w1=3, w2=2)
NULL_SCALAR_CSC = JoinParams(d_N=1, A=-12, l1=1, l2=1, w1=9, w2=4)


# Utility method(s)
def genus_two(l2: int) -> JoinParams:
    return JoinParams(d_N=1, A=-2, l1=1, l2=l2, w1=3, w2=2)


# Unit test(s)
def test_boundary_check_examples():
    check = boundary_check(THREE_CSC)
    assert check.pole_order == 3
    assert check.growth_degree == 3
    assert check.coefficient_at_zero == Fraction(4**4, 4**3)

    for l2 in (1, 101):
        check = boundary_check(genus_two(l2))
        assert check.pole_order == 2
        assert check.growth_degree == 2

    assert boundary_check(NULL_SCALAR_CSC).pole_order == 2


def test_boundary_check_random_suite():
    """H blows up to +inf at both ends of the w-cone."""
    rng = np.random.RandomState(2022)
    for params in random_join_params(rng, 100):
        check = boundary_check(params)
        assert check.pole_order == params.d_N + 1
        assert check.growth_degree == params.d_N + 1
        assert check.coefficient_at_zero > 0
        assert check.coefficient_at_infinity > 0


def test_three_csc_report():
    report = full_report(THREE_CSC)
    assert len(report.csc_rays) == 3
    assert report.fails_convexity
    assert report.negative_scalar_window is None

    rendered = report.to_dict()
    assert "verdicts" not in rendered
    assert "extremal" not in rendered
    assert [p["classification"] for p in rendered["critical_points"]] == [
        "local-min",
        "local-max",
        "local-min",
    ]
    assert rendered["polynomials"]["f_csc"] == [
        "-48/1",
        "88/1",
        "720/1",
        "-1242/1",
        "-459/1",
        "243/1",
    ]
    assert rendered["meta"]["tool"] == "sasakijoin"
    assert rendered["sasaki_einstein"] is False


def test_genus_two_report_with_extremal_window():
    report = full_report(
        genus_two(101),
        rays=[RayId(1, 1), RayId(3, 2), RayId(10, 1)],
        extremal=ExtremalOptions(
            b_lo=Fraction(1, 20), b_hi=Fraction(3), tol=Fraction(1, 100)
        ),
    )
    assert [p.classification.value for p in report.critical_points] == [
        "inflection",
        "local-min",
        "inflection",
    ]
    assert [v.verdict.value for v in report.critical_verdicts] == [
        "K-unstable",
        "K-semistable-cscS",
        "K-unstable",
    ]
    b1, b2 = report.window
    assert abs(float(b1) - 0.295) <= 0.02
    assert abs(float(b2) - 1.455) <= 0.02
    assert report.negative_scalar_window is not None

    # (1) The regular ray has no quotient and is skipped
    assert [s.ray for s in report.extremal_solutions] == [
        RayId(1, 1),
        RayId(10, 1),
    ]
    assert [s.admissible for s in report.extremal_solutions] == [True, False]
    assert len(report.verdicts) == 3


def test_window_note_without_transition():
    report = full_report(
        genus_two(1),
        extremal=ExtremalOptions(
            b_lo=Fraction(1, 20), b_hi=Fraction(4, 5), samples=20
        ),
    )
    assert report.window is None
    assert any(
        "no admissibility transition" in note for note in report.notes()
    )


def test_report_is_json_serialisable():
    rendered = full_report(NULL_SCALAR_CSC, rays=[RayId(3, 2)]).to_dict()
    text = json.dumps(rendered, sort_keys=True)
    assert json.loads(text) == rendered
    assert rendered["critical_points"][0]["classification"] == "degenerate"
    assert rendered["verdicts"][0]["verdict"] == "K-semistable-cscS"
