"""Join parameters, Reeb rays and orbifold quotient data."""

from sasakijoin.join.params import (
    BaseKind,
    JoinParams,
    base_scalar_helper,
    is_sasaki_einstein_join,
    validate,
    validated,
    zero_scalar_family,
)
from sasakijoin.join.rays import (
    QuotientData,
    RayId,
    approximate_ray,
    quotient_data,
)
