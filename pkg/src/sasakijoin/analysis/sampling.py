"""Random parameter sets and sampled curves for plotting."""

from fractions import Fraction
import math
from typing import List, Optional

import numpy as np
import pandas as pd

from sasakijoin.algebra.numbers import Scalar, as_rational, render_decimal
from sasakijoin.analysis.stability import Verdict
from sasakijoin.functionals.bundle import functional_bundle
from sasakijoin.join.params import JoinParams, validate
from sasakijoin.join.rays import RayId
from sasakijoin.utilities.exceptions import DomainError


SAMPLE_COLUMNS = ["b", "H", "dH", "f_csc", "S_num", "V_num", "verdict"]


def random_join_params(
    rng: np.random.RandomState,
    count: int,
    max_dN: int = 4,
    max_abs_A: int = 20,
    max_l: int = 50,
    max_w: int = 30,
    max_A_denominator: int = 12,
    equal_weights: bool = False,
) -> List[JoinParams]:
    """Draw `count` valid join parameter sets.

    Args:
        rng: Seeded random state; identical seeds give identical sets.
        count: Number of parameter sets.
        max_dN: Largest base dimension.
        max_abs_A: Bound on `|A|`.
        max_l: Largest join weight.
        max_w: Largest sphere weight.
        max_A_denominator: Largest denominator of `A`.
        equal_weights: Draw only `w = (1, 1)`.
    """
    params: List[JoinParams] = []
    while len(params) < count:
        denominator = int(rng.randint(1, max_A_denominator + 1))
        numerator = int(
            rng.randint(
                -max_abs_A * denominator, max_abs_A * denominator + 1
            )
        )
        if equal_weights:
            w1 = w2 = 1
        else:
            w1, w2 = sorted(
                (int(w) for w in rng.randint(1, max_w + 1, size=2)),
                reverse=True,
            )
        candidate = JoinParams(
            d_N=int(rng.randint(1, max_dN + 1)),
            A=Fraction(numerator, denominator),
            l1=int(rng.randint(1, max_l + 1)),
            l2=int(rng.randint(1, max_l + 1)),
            w1=w1,
            w2=w2,
        )
        if not validate(candidate):
            params.append(candidate)
    return params


def random_ray(rng: np.random.RandomState, max_v: int = 40) -> RayId:
    while True:
        v1, v2 = (int(v) for v in rng.randint(1, max_v + 1, size=2))
        if math.gcd(v1, v2) == 1:
            return RayId(v1, v2)


def sample_grid(b_min: Scalar, b_max: Scalar, count: int) -> List[Fraction]:
    """`count` equally spaced rational slopes from `b_min` to `b_max`."""
    b_min, b_max = as_rational(b_min), as_rational(b_max)
    if b_min <= 0 or b_max <= b_min:
        raise DomainError(f"out of domain: grid ({b_min}, {b_max})")
    if count < 2:
        raise DomainError("sample grid count must be at least 2")
    step = (b_max - b_min) / (count - 1)
    return [b_min + k * step for k in range(count)]


def sample_curves(
    params: JoinParams,
    b_min: Scalar,
    b_max: Scalar,
    count: int,
    digits: Optional[int] = None,
) -> pd.DataFrame:
    """Values of H, H', f_csc, S_num and V_num on a rational grid.

    Values are computed exactly and rendered to a fixed number of significant
    digits, so the table is identical for identical inputs.
    """
    bundle = functional_bundle(params)
    render = (
        render_decimal
        if digits is None
        else lambda x: render_decimal(x, digits)
    )
    rows = []
    for b in sample_grid(b_min, b_max, count):
        f_value = bundle.f_csc(b)
        rows.append(
            {
                "b": render(b),
                "H": render(bundle.H(b)),
                "dH": render(bundle.dH(b)),
                "f_csc": render(f_value),
                "S_num": render(bundle.S_num(b)),
                "V_num": render(bundle.V_num(b)),
                "verdict": (
                    Verdict.K_SEMISTABLE_CSCS
                    if f_value == 0
                    else Verdict.K_UNSTABLE
                ).value,
            }
        )
    return pd.DataFrame(rows, columns=SAMPLE_COLUMNS)
