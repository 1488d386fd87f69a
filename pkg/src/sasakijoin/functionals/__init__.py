"""Closed forms of the Einstein-Hilbert functional on the w-cone."""

from sasakijoin.functionals.closed_forms import (
    f_csc,
    f_polynomial,
    futaki_at_regular,
    scalar_numerator,
    volume_numerator,
)
from sasakijoin.functionals.einstein_hilbert import (
    eh_derivative,
    eh_he2,
    eh_second_derivative,
    einstein_hilbert,
    futaki_value,
    total_scalar,
    total_scalar_at,
    total_volume,
    total_volume_at,
)
from sasakijoin.functionals.bundle import FunctionalBundle, functional_bundle
