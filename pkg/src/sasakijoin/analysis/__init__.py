"""Critical rays, stability verdicts, sweeps and reports."""

from sasakijoin.analysis.critical import (
    Classification,
    CriticalPoint,
    Source,
    critical_points,
    csc_rays,
    null_scalar_rays,
)
from sasakijoin.analysis.stability import (
    Reason,
    StabilityVerdict,
    Verdict,
    critical_point_verdict,
    stability_verdict,
)
from sasakijoin.analysis.scan import JoinTemplate, scan_l2
from sasakijoin.analysis.report import (
    AnalysisReport,
    BoundaryCheck,
    ExtremalOptions,
    boundary_check,
    full_report,
)
from sasakijoin.analysis.sampling import (
    random_join_params,
    random_ray,
    sample_curves,
    sample_grid,
)
