"""Exact evaluators and cross-checks for permanent-family matrix functions.

The package computes permanents, determinants, symmetrized permanents over
noncommutative rings, and space-matrix determinants, each two ways: from the
definition and through a power-sum identity that trades multiplications for
additions and n-th powers.  Everything runs in exact arithmetic (rationals,
multivariate polynomials, small rational matrices), so all cross-checks are
equality tests, not tolerance tests.
"""

from .bench import (
    CountingRing,
    MethodDisagreement,
    OpCountReport,
    compare_methods,
    count_ops,
    evaluate_method,
)
from .combinatorics import (
    Permutation,
    SignedDiagonal,
    SubmatrixSelector,
    enumerate_diagonals,
    enumerate_permutations,
    enumerate_subdiagonals,
    enumerate_submatrices,
    symmetrize,
)
from .document import DocumentError, MatrixDocument, parse_document
from .identities import (
    check_diagonal_power_identity,
    check_submatrix_power_identity,
    determinant,
    determinant_identity,
    determinant_zero_criterion,
    diagonal_power_residual,
    permanent,
    permanent_identity,
    permanent_ryser,
    space_determinant,
    space_determinant_identity,
    submatrix_power_residual,
    symmetrized_permanent,
    symmetrized_permanent_identity,
    symmetrized_permanent_zero_criterion,
)
from .matrices import (
    CubeMatrix,
    SquareMatrix,
    symbolic_cube,
    symbolic_delta,
    symbolic_gammas,
    symbolic_matrix,
)
from .polarization import DiagonalFunction, componentwise_add, polarize
from .rings import (
    MATRIX2,
    RATIONAL,
    SYMBOLIC,
    MatrixElement,
    MatrixRing,
    Poly,
    PolynomialRing,
    RationalRing,
    Ring,
)
from .verify import SUITE_ORDER, SUITES, run_suites

__version__ = "0.1.0"

__all__ = [
    "CountingRing",
    "CubeMatrix",
    "DiagonalFunction",
    "DocumentError",
    "MATRIX2",
    "MatrixDocument",
    "MatrixElement",
    "MatrixRing",
    "MethodDisagreement",
    "OpCountReport",
    "Permutation",
    "Poly",
    "PolynomialRing",
    "RATIONAL",
    "RationalRing",
    "Ring",
    "SUITES",
    "SUITE_ORDER",
    "SYMBOLIC",
    "SignedDiagonal",
    "SquareMatrix",
    "SubmatrixSelector",
    "check_diagonal_power_identity",
    "check_submatrix_power_identity",
    "compare_methods",
    "componentwise_add",
    "count_ops",
    "determinant",
    "determinant_identity",
    "determinant_zero_criterion",
    "diagonal_power_residual",
    "enumerate_diagonals",
    "enumerate_permutations",
    "enumerate_subdiagonals",
    "enumerate_submatrices",
    "evaluate_method",
    "parse_document",
    "permanent",
    "permanent_identity",
    "permanent_ryser",
    "polarize",
    "run_suites",
    "space_determinant",
    "space_determinant_identity",
    "submatrix_power_residual",
    "symbolic_cube",
    "symbolic_delta",
    "symbolic_gammas",
    "symbolic_matrix",
    "symmetrize",
    "symmetrized_permanent",
    "symmetrized_permanent_identity",
    "symmetrized_permanent_zero_criterion",
    "__version__",
]
