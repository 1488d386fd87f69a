"""Exact square linear systems over the rationals."""

from fractions import Fraction
from typing import List, Sequence

import sympy

from sasakijoin.algebra.numbers import Scalar, from_sympy, to_sympy
from sasakijoin.utilities.exceptions import InconsistencyError


def solve_linear_system(
    matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> List[Fraction]:
    """Solve the square system `matrix @ x = rhs` exactly.

    Raises:
        InconsistencyError: If the matrix is singular.
    """
    size = len(matrix)
    assert all(len(row) == size for row in matrix)
    assert len(rhs) == size

    lhs = sympy.Matrix([[to_sympy(a) for a in row] for row in matrix])
    if lhs.det() == 0:
        raise InconsistencyError(
            "singular linear system",
            payload={"matrix": [list(row) for row in matrix]},
        )
    solution = lhs.LUsolve(sympy.Matrix([to_sympy(b) for b in rhs]))
    return [from_sympy(x) for x in solution]
