"""Admissible extremal profiles on quasi-regular quotients."""

from sasakijoin.extremal.ode import (
    ExtremalSolution,
    extremal_solution,
    is_admissible,
    profile_at,
)
from sasakijoin.extremal.window import (
    AdmissibilityWindow,
    admissibility_boundary,
    admissibility_scan,
)
