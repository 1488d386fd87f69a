"""Exact rational arithmetic, polynomials and real-root tools."""

from sasakijoin.algebra.numbers import (
    BigRational,
    DEFAULT_TOLERANCE,
    NEG_INF,
    POS_INF,
    parse_rational,
    render_decimal,
    render_exact,
)
from sasakijoin.algebra.polynomial import (
    UniPoly,
    exact_quotient,
    poly_divrem,
    poly_gcd,
    root_multiplicity,
    square_free_decomposition,
    square_free_part,
)
from sasakijoin.algebra.rational_function import RationalFn
from sasakijoin.algebra.roots import (
    IsolatingInterval,
    SturmChain,
    descartes_positive_bound,
    isolate_positive_roots,
    positive_on_open_interval,
    refine_root,
    sturm_count,
)
from sasakijoin.algebra.linalg import solve_linear_system
