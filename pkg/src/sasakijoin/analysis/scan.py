"""Sweeps over the join weight l2 for a fixed template."""

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
from typing import Dict, List

import pandas as pd
from tqdm import tqdm

from sasakijoin.algebra.roots import isolate_positive_roots
from sasakijoin.analysis.critical import critical_points
from sasakijoin.functionals.bundle import FunctionalBundle
from sasakijoin.join.params import JoinParams, validate
from sasakijoin.utilities.exceptions import DomainError
from sasakijoin.utilities.logging import get_logger


logger = get_logger()

SCAN_COLUMNS = [
    "l2",
    "csc_rays",
    "null_scalar_rays",
    "critical_points",
    "classifications",
]


@dataclass(frozen=True)
class JoinTemplate:
    """Join parameters with l2 left free."""

    d_N: int
    A: Fraction
    l1: int
    w1: int
    w2: int

    def with_l2(self, l2: int) -> JoinParams:
        return JoinParams(self.d_N, self.A, self.l1, l2, self.w1, self.w2)


def _scan_row(template: JoinTemplate, l2: int) -> Dict[str, object]:
    params = template.with_l2(l2)
    bundle = FunctionalBundle.build(params)
    points = critical_points(params, bundle=bundle)
    return {
        "l2": l2,
        "csc_rays": len(isolate_positive_roots(bundle.f_csc)),
        "null_scalar_rays": len(isolate_positive_roots(bundle.S_num)),
        "critical_points": len(points),
        "classifications": ",".join(p.classification.value for p in points),
    }


def scan_l2(
    template: JoinTemplate,
    l2_from: int,
    l2_to: int,
    workers: int = 1,
) -> pd.DataFrame:
    """One row per admissible l2 in `[l2_from, l2_to]`.

    Values of l2 violating any join condition (in particular smoothness,
    `gcd(l2, w1 w2) = 1`) are skipped. Rows are computed independently and
    returned sorted by l2, whatever the number of workers.
    """
    if l2_from < 1 or l2_to < l2_from:
        raise DomainError(f"out of domain: l2 range [{l2_from}, {l2_to}]")

    values: List[int] = [
        l2
        for l2 in range(l2_from, l2_to + 1)
        if not validate(template.with_l2(l2))
    ]
    logger.info(
        f"Scanning {len(values)} admissible value(s) of l2 in "
        f"[{l2_from}, {l2_to}]"
    )

    if workers > 1:
        logger.info(f"Starting pool of {workers} workers")
        with Pool(processes=workers) as p:
            rows = p.map(partial(_scan_row, template), values)
    else:
        rows = [
            _scan_row(template, l2) for l2 in tqdm(values, colour="green")
        ]

    table = pd.DataFrame(rows, columns=SCAN_COLUMNS)
    return table.sort_values("l2").reset_index(drop=True)
