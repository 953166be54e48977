"""Matrix functions in two forms: definitional sums and power-sum identities.

Each function family pairs a brute-force definitional evaluator (the oracle)
with an algebraic identity that rebuilds the same value from sums of entries
raised to the n-th power.  The identity forms use only addition, subtraction,
raising to the power n, and one exact division by n!; their agreement with
the definitional forms over every supported ring is the package's central
claim and is what the verify suites check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Sequence

from .combinatorics import (
    EVEN,
    ODD,
    element_sum,
    enumerate_permutations,
    enumerate_subdiagonals,
    enumerate_submatrices,
    symmetrize,
)
from .matrices import CubeMatrix, SquareMatrix
from .rings import RationalRing, Ring


def _require_commutative(ring: Ring, what: str) -> None:
    if not ring.commutative:
        raise ValueError(f"{what} requires a commutative ring, got {ring.name}")


def _checked_gammas(matrix: SquareMatrix, gammas: Sequence[Any] | None) -> tuple:
    ring = matrix.ring
    if gammas is None:
        return tuple(ring.zero() for _ in range(matrix.n))
    values = tuple(gammas)
    if len(values) != matrix.n:
        raise ValueError(f"expected {matrix.n} free parameters, got {len(values)}")
    for value in values:
        if not ring.is_element(value):
            raise ValueError(f"free parameter {value!r} is not an element of {ring.name}")
    return values


def _checked_param(matrix: SquareMatrix | CubeMatrix, value: Any) -> Any:
    ring = matrix.ring
    if value is None:
        return ring.zero()
    if not ring.is_element(value):
        raise ValueError(f"free parameter {value!r} is not an element of {ring.name}")
    return value


def permanent(matrix: SquareMatrix) -> Any:
    """Sum of products over all diagonals (the definitional permanent)."""
    ring = matrix.ring
    _require_commutative(ring, "permanent")
    n = matrix.n
    total = ring.zero()
    for perm in enumerate_permutations(n):
        term = ring.product(matrix.entry(i, perm.image(i)) for i in range(1, n + 1))
        total = ring.add(total, term)
    return total


def permanent_identity(matrix: SquareMatrix, gammas: Sequence[Any] | None = None) -> Any:
    """Division-free permanent from signed products of shifted column sums.

    Over all column subsets S (the empty one included) this accumulates
    (-1)**|S| times the product over rows i of (gamma_i - sum of the row-i
    entries in the columns of S).  The value is independent of the free
    parameters gamma_i; omitting them uses all zeros.
    """
    ring = matrix.ring
    _require_commutative(ring, "permanent")
    n = matrix.n
    params = _checked_gammas(matrix, gammas)
    total = ring.zero()
    for mask in range(1 << n):
        cols = [j + 1 for j in range(n) if mask >> j & 1]
        factors = []
        for i in range(1, n + 1):
            col_sum = element_sum(ring, (matrix.entry(i, j) for j in cols))
            factors.append(ring.sub(params[i - 1], col_sum))
        term = ring.product(factors)
        if mask.bit_count() % 2 == 0:
            total = ring.add(total, term)
        else:
            total = ring.sub(total, term)
    return total


def permanent_ryser(matrix: SquareMatrix) -> Any:
    """Inclusion-exclusion permanent from products of row sums over column subsets."""
    ring = matrix.ring
    _require_commutative(ring, "permanent")
    n = matrix.n
    total = ring.zero()
    for mask in range(1, 1 << n):
        cols = [j + 1 for j in range(n) if mask >> j & 1]
        row_sums = (
            element_sum(ring, (matrix.entry(i, j) for j in cols)) for i in range(1, n + 1)
        )
        term = ring.product(row_sums)
        if mask.bit_count() % 2 == 0:
            total = ring.add(total, term)
        else:
            total = ring.sub(total, term)
    return ring.neg(total) if n % 2 else total


def determinant(matrix: SquareMatrix) -> Any:
    """Alternating sum of products over all diagonals (the definitional determinant)."""
    ring = matrix.ring
    _require_commutative(ring, "determinant")
    n = matrix.n
    total = ring.zero()
    for perm in enumerate_permutations(n):
        term = ring.product(matrix.entry(i, perm.image(i)) for i in range(1, n + 1))
        if perm.is_even:
            total = ring.add(total, term)
        else:
            total = ring.sub(total, term)
    return total


def _signed_diagonal_bracket(matrix: SquareMatrix, k: int, exponent: int, gamma: Any) -> Any:
    """Sum of (gamma + element sum)**exponent over even length-k subdiagonals
    minus the same sum over odd ones."""
    ring = matrix.ring
    n = matrix.n
    total = ring.zero()
    for parity, positive in ((EVEN, True), (ODD, False)):
        for diagonal in enumerate_subdiagonals(n, k, parity):
            selected = element_sum(
                ring, (matrix.entry(i, j) for i, j in diagonal.positions)
            )
            powered = ring.power(ring.add(gamma, selected), exponent)
            if positive:
                total = ring.add(total, powered)
            else:
                total = ring.sub(total, powered)
    return total


def _all_integral(values) -> bool:
    return all(isinstance(v, Fraction) and v.denominator == 1 for v in values)


def determinant_identity(matrix: SquareMatrix, gamma: Any = None) -> Any:
    """Determinant from n-th powers of shifted diagonal sums.

    Takes the signed bracket over full diagonals minus the signed bracket
    over length-(n-1) subdiagonals and divides by n! once at the end.  The
    value is independent of the free parameter gamma (default zero).  Uses
    only addition, subtraction, n-th powers, and the final exact division.
    """
    ring = matrix.ring
    _require_commutative(ring, "determinant")
    n = matrix.n
    shift = _checked_param(matrix, gamma)
    bracket_full = _signed_diagonal_bracket(matrix, n, n, shift)
    bracket_short = _signed_diagonal_bracket(matrix, n - 1, n, shift)
    value = ring.div_int(ring.sub(bracket_full, bracket_short), math.factorial(n))
    if isinstance(ring, RationalRing):
        inputs = [entry for row in matrix.entries for entry in row] + [shift]
        if _all_integral(inputs) and value.denominator != 1:
            # The division by n! is exact for integer inputs; anything else is a bug.
            raise ArithmeticError(f"integer determinant came out non-integral: {value}")
    return value


def diagonal_power_residual(matrix: SquareMatrix, t: int) -> Any:
    """Signed sum of t-th powers of diagonal sums, full length minus length n-1.

    Zero for every t in 1..n-1; at t = n it equals n! times the determinant.
    """
    ring = matrix.ring
    _require_commutative(ring, "the diagonal power-sum identity")
    n = matrix.n
    if t < 1 or t > n:
        raise ValueError(f"power must be in 1..{n}, got {t}")
    zero = ring.zero()
    return ring.sub(
        _signed_diagonal_bracket(matrix, n, t, zero),
        _signed_diagonal_bracket(matrix, n - 1, t, zero),
    )


def check_diagonal_power_identity(matrix: SquareMatrix, t: int) -> tuple[bool, Any]:
    """Whether the length-n and length-(n-1) signed t-th power sums agree.

    Valid for t in 1..n-1; returns (holds, residual).
    """
    if t < 1 or t > matrix.n - 1:
        raise ValueError(f"power must be in 1..{matrix.n - 1}, got {t}")
    residual = diagonal_power_residual(matrix, t)
    return matrix.ring.is_zero(residual), residual


def determinant_zero_criterion(matrix: SquareMatrix) -> bool:
    """True iff the determinant vanishes, decided by n-th power sums alone."""
    return matrix.ring.is_zero(diagonal_power_residual(matrix, matrix.n))


def symmetrized_permanent(matrix: SquareMatrix) -> Any:
    """Sum over diagonals of the symmetrized product of their entries.

    Defined over noncommutative rings; for commuting entries it equals the
    permanent.
    """
    ring = matrix.ring
    n = matrix.n
    total = ring.zero()
    for perm in enumerate_permutations(n):
        factors = [matrix.entry(i, perm.image(i)) for i in range(1, n + 1)]
        total = ring.add(total, symmetrize(ring, factors))
    return total


def _signed_submatrix_power_sum(matrix: SquareMatrix, exponent: int, delta: Any) -> Any:
    """Sum of (-1)**(rows+cols) * (delta + submatrix element sum)**exponent
    over all nonempty row and column selections."""
    ring = matrix.ring
    total = ring.zero()
    for selector in enumerate_submatrices(matrix.n):
        selected = element_sum(
            ring,
            (matrix.entry(i, j) for i in selector.rows for j in selector.cols),
        )
        powered = ring.power(ring.add(delta, selected), exponent)
        if selector.sign > 0:
            total = ring.add(total, powered)
        else:
            total = ring.sub(total, powered)
    return total


def symmetrized_permanent_identity(matrix: SquareMatrix, delta: Any = None) -> Any:
    """Symmetrized permanent from n-th powers of shifted submatrix sums.

    Accumulates (-1)**(r+s) (delta + su(B))**n over all submatrix selections
    B with r rows and s columns; the expansion leaves exactly one spurious
    pure delta**n word behind, which is subtracted before the division by n!
    so the value is independent of the free parameter delta (default zero).
    Works over noncommutative rings; uses no ring products outside the
    n-th powers.
    """
    ring = matrix.ring
    n = matrix.n
    shift = _checked_param(matrix, delta)
    total = _signed_submatrix_power_sum(matrix, n, shift)
    total = ring.sub(total, ring.power(shift, n))
    return ring.div_int(total, math.factorial(n))


def submatrix_power_residual(matrix: SquareMatrix, m: int) -> Any:
    """Signed sum of m-th powers of submatrix element sums.

    Zero for every m in 1..n-1; at m = n it equals n! times the symmetrized
    permanent.
    """
    n = matrix.n
    if m < 1 or m > n:
        raise ValueError(f"power must be in 1..{n}, got {m}")
    return _signed_submatrix_power_sum(matrix, m, matrix.ring.zero())


def check_submatrix_power_identity(matrix: SquareMatrix, m: int) -> tuple[bool, Any]:
    """Whether the signed m-th power sum over submatrices vanishes.

    Valid for m in 1..n-1; returns (holds, residual).
    """
    if m < 1 or m > matrix.n - 1:
        raise ValueError(f"power must be in 1..{matrix.n - 1}, got {m}")
    residual = submatrix_power_residual(matrix, m)
    return matrix.ring.is_zero(residual), residual


def symmetrized_permanent_zero_criterion(matrix: SquareMatrix) -> bool:
    """True iff the symmetrized permanent vanishes, via n-th power sums alone."""
    return matrix.ring.is_zero(submatrix_power_residual(matrix, matrix.n))


def _assembled_rows(cube: CubeMatrix, perm) -> list[list]:
    """Rows of the matrix whose column i is column perm(i) of section i."""
    n = cube.n
    return [
        [cube.entry(t, perm.image(i), i) for i in range(1, n + 1)]
        for t in range(1, n + 1)
    ]


def space_determinant(cube: CubeMatrix) -> Any:
    """Alternating sum over permutations of permanents of assembled sections.

    For each permutation s the matrix whose i-th column is column s(i) of
    section i is assembled and its permanent weighted by the sign of s.
    """
    ring = cube.ring
    n = cube.n
    total = ring.zero()
    for perm in enumerate_permutations(n):
        value = permanent(SquareMatrix(ring, _assembled_rows(cube, perm)))
        if perm.is_even:
            total = ring.add(total, value)
        else:
            total = ring.sub(total, value)
    return total


def space_determinant_identity(cube: CubeMatrix) -> Any:
    """Space determinant from products of cross-section row sums.

    For each permutation s, row t of the assembled selection has the sum
    S_t = sum over i of the (t, s(i)) entry of section i.  The identity takes
    the alternating sum over s of prod_t S_t, minus the alternating sum over
    s of sum_r prod_t (S_t - the r-th summand), with no trailing division.
    """
    ring = cube.ring
    n = cube.n
    total = ring.zero()
    for perm in enumerate_permutations(n):
        rows = _assembled_rows(cube, perm)
        row_sums = [element_sum(ring, row) for row in rows]
        first = ring.product(row_sums)
        if perm.is_even:
            total = ring.add(total, first)
        else:
            total = ring.sub(total, first)
        for r in range(n):
            term = ring.product(
                ring.sub(row_sums[t], rows[t][r]) for t in range(n)
            )
            # The depleted-product bracket enters with the opposite sign.
            if perm.is_even:
                total = ring.sub(total, term)
            else:
                total = ring.add(total, term)
    return total
