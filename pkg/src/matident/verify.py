"""Randomized cross-check suites behind the ``verify`` command.

Each suite draws seeded random instances and compares an identity-based
evaluator against the definitional one, or checks that a claimed invariant
(vanishing power sums, zero criteria, reconstruction counts) holds exactly.
Trials are independent jobs keyed by (suite, n, seed, trial) so a pool of
workers can run them in any order while the report stays deterministic.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .identities import (
    check_diagonal_power_identity,
    check_submatrix_power_identity,
    determinant,
    determinant_identity,
    determinant_zero_criterion,
    permanent,
    permanent_identity,
    permanent_ryser,
    space_determinant,
    space_determinant_identity,
    symmetrized_permanent,
    symmetrized_permanent_identity,
    symmetrized_permanent_zero_criterion,
)
from .matrices import SquareMatrix
from .polarization import DiagonalFunction, componentwise_add, polarize
from .rings import MATRIX2, RATIONAL, MatrixElement
from .sampling import (
    derive_rng,
    random_integer_cube,
    random_integer_matrix,
    random_matrix2_element,
    random_matrix2_matrix,
    random_rational,
    random_rational_matrix,
    singular_matrix,
)

TrialFunction = Callable[[int, int, int], "tuple[bool, str]"]


def _trial_permanent(n: int, seed: int, trial: int) -> tuple[bool, str]:
    rng = derive_rng(seed, "thm2", n, trial)
    matrix = random_integer_matrix(rng, n)
    ring = matrix.ring
    reference = permanent(matrix)
    ryser = permanent_ryser(matrix)
    if not ring.eq(ryser, reference):
        return False, f"ryser gave {ryser}, definitional gave {reference}"
    shifts = [tuple(Fraction(0) for _ in range(n))]
    shifts.append(tuple(random_rational(rng) for _ in range(n)))
    shifts.append(tuple(random_rational(rng) for _ in range(n)))
    for gammas in shifts:
        value = permanent_identity(matrix, gammas)
        if not ring.eq(value, reference):
            note = ", ".join(str(g) for g in gammas)
            return False, f"identity gave {value} at gammas ({note}), expected {reference}"
    return True, ""


def _trial_determinant(n: int, seed: int, trial: int) -> tuple[bool, str]:
    rng = derive_rng(seed, "thm3", n, trial)
    matrix = random_rational_matrix(rng, n)
    ring = matrix.ring
    reference = determinant(matrix)
    for gamma in (Fraction(0), Fraction(1), Fraction(-3, 2), random_rational(rng)):
        value = determinant_identity(matrix, gamma)
        if not ring.eq(value, reference):
            return False, f"identity gave {value} at gamma {gamma}, expected {reference}"
    return True, ""


def _trial_symmetrized(n: int, seed: int, trial: int) -> tuple[bool, str]:
    rng = derive_rng(seed, "thm4", n, trial)
    matrix = random_matrix2_matrix(rng, n)
    ring = matrix.ring
    reference = symmetrized_permanent(matrix)
    deltas = [ring.zero(), random_matrix2_element(rng), random_matrix2_element(rng)]
    for delta in deltas:
        value = symmetrized_permanent_identity(matrix, delta)
        if not ring.eq(value, reference):
            return False, f"identity gave {value} at delta {delta}, expected {reference}"
    return True, ""


def _trial_space_determinant(n: int, seed: int, trial: int) -> tuple[bool, str]:
    rng = derive_rng(seed, "thm5", n, trial)
    cube = random_integer_cube(rng, n)
    reference = space_determinant(cube)
    value = space_determinant_identity(cube)
    if not cube.ring.eq(value, reference):
        return False, f"identity gave {value}, definitional gave {reference}"
    return True, ""


def _trial_diagonal_power_sums(n: int, seed: int, trial: int) -> tuple[bool, str]:
    rng = derive_rng(seed, "cor1", n, trial)
    matrix = random_rational_matrix(rng, n)
    for t in range(1, n):
        ok, residual = check_diagonal_power_identity(matrix, t)
        if not ok:
            return False, f"power sum residual {residual} at exponent {t}"
    claims_zero = determinant_zero_criterion(matrix)
    is_zero = matrix.ring.is_zero(determinant(matrix))
    if claims_zero != is_zero:
        return False, "zero criterion disagrees with the determinant"
    singular = singular_matrix(rng, n)
    for t in range(1, n):
        ok, residual = check_diagonal_power_identity(singular, t)
        if not ok:
            return False, f"power sum residual {residual} at exponent {t} on a singular matrix"
    if not determinant_zero_criterion(singular):
        return False, "zero criterion missed a singular matrix"
    return True, ""


def _vanishing_symmetrized_instance(rng, n: int) -> SquareMatrix:
    """Random matrix whose symmetrized permanent is exactly zero.

    For n = 2 the two diagonals are Sym(x, y) and Sym(x, -y), which cancel
    for any ring elements x, y.  For larger n the entries are scalar
    matrices (which commute, so the symmetrized permanent collapses to the
    plain permanent of the underlying rationals) and one entry is solved to
    make that permanent vanish.
    """
    if n == 2:
        x = random_matrix2_element(rng)
        y = random_matrix2_element(rng)
        return SquareMatrix(MATRIX2, [[x, x], [MATRIX2.neg(y), y]])
    while True:
        values = [[random_rational(rng) for _ in range(n)] for _ in range(n)]
        minor = SquareMatrix(RATIONAL, [row[1:] for row in values[1:]])
        cofactor = permanent(minor)
        if RATIONAL.is_zero(cofactor):
            continue
        values[0][0] = Fraction(0)
        rest = permanent(SquareMatrix(RATIONAL, values))
        values[0][0] = -rest / cofactor
        return SquareMatrix(
            MATRIX2, [[MatrixElement.scalar(2, value) for value in row] for row in values]
        )


def _trial_submatrix_power_sums(n: int, seed: int, trial: int) -> tuple[bool, str]:
    rng = derive_rng(seed, "cor2", n, trial)
    matrix = random_matrix2_matrix(rng, n)
    for m in range(1, n):
        ok, _ = check_submatrix_power_identity(matrix, m)
        if not ok:
            return False, f"submatrix power sum residual nonzero at exponent {m}"
    claims_zero = symmetrized_permanent_zero_criterion(matrix)
    is_zero = matrix.ring.is_zero(symmetrized_permanent(matrix))
    if claims_zero != is_zero:
        return False, "zero criterion disagrees with the definitional value"
    vanishing = _vanishing_symmetrized_instance(rng, n)
    if not matrix.ring.is_zero(symmetrized_permanent(vanishing)):
        return False, "constructed instance was not actually zero"
    if not symmetrized_permanent_zero_criterion(vanishing):
        return False, "zero criterion missed a vanishing instance"
    return True, ""


def _trial_polarization(n: int, seed: int, trial: int) -> tuple[bool, str]:
    rng = derive_rng(seed, "polarization", n, trial)
    matrix = random_rational_matrix(rng, n)
    ring = matrix.ring
    reference = permanent(matrix)
    shifts = [tuple(Fraction(0) for _ in range(n))]
    shifts.append(tuple(random_rational(rng) for _ in range(n)))
    shifts.append(tuple(random_rational(rng) for _ in range(n)))
    for which, gammas in enumerate(shifts):
        calls = 0

        def evaluate(point):
            nonlocal calls
            calls += 1
            duplicated = SquareMatrix(ring, [[point[i]] * n for i in range(n)])
            return permanent(duplicated)

        func = DiagonalFunction(arity=n, evaluate=evaluate)
        value = polarize(func, matrix.columns(), gammas, componentwise_add(ring), ring)
        if not ring.eq(value, reference):
            return False, f"reconstruction gave {value} at shift {which}, expected {reference}"
        if calls != 2**n:
            return False, f"made {calls} diagonal evaluations, expected {2**n}"
    return True, ""


@dataclass(frozen=True)
class SuiteSpec:
    """One named verification suite and its size envelope."""

    name: str
    default_ns: tuple[int, ...]
    max_n: int
    run_trial: TrialFunction


SUITES: dict[str, SuiteSpec] = {
    spec.name: spec
    for spec in (
        SuiteSpec("thm2", (2, 3, 4), 6, _trial_permanent),
        SuiteSpec("thm3", (2, 3, 4), 5, _trial_determinant),
        SuiteSpec("thm4", (2, 3), 3, _trial_symmetrized),
        SuiteSpec("thm5", (2, 3), 4, _trial_space_determinant),
        SuiteSpec("cor1", (2, 3, 4), 5, _trial_diagonal_power_sums),
        SuiteSpec("cor2", (2, 3), 3, _trial_submatrix_power_sums),
        SuiteSpec("polarization", (2, 3, 4), 5, _trial_polarization),
    )
}

SUITE_ORDER = ("thm2", "thm3", "thm4", "thm5", "cor1", "cor2", "polarization")


def _run_job(job: tuple[str, int, int, int]) -> tuple[bool, str]:
    suite, n, seed, trial = job
    return SUITES[suite].run_trial(n, seed, trial)


def _map_jobs(jobs, workers: int):
    if workers <= 1 or len(jobs) <= 1:
        return [_run_job(job) for job in jobs]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(_run_job, jobs)


def run_suites(
    suite_names,
    trials: int,
    seed: int,
    workers: int = 1,
    ns: "tuple[int, ...] | None" = None,
) -> tuple[list[str], bool]:
    """Run the named suites and return (report lines, overall pass flag).

    Trials regenerate their instances from (seed, suite, n, trial), so the
    report is byte-identical for any worker count.
    """
    jobs: list[tuple[str, int, int, int]] = []
    groups: list[tuple[str, int, int]] = []
    for name in suite_names:
        spec = SUITES[name]
        sizes = ns if ns is not None else spec.default_ns
        for n in sizes:
            if n > spec.max_n:
                raise ValueError(f"suite {name} supports n up to {spec.max_n}, got {n}")
            groups.append((name, n, len(jobs)))
            for trial in range(1, trials + 1):
                jobs.append((name, n, seed, trial))
    results = _map_jobs(jobs, workers)
    lines = []
    passed_total = 0
    for name, n, start in groups:
        chunk = results[start : start + trials]
        ok_count = sum(1 for ok, _ in chunk if ok)
        passed_total += ok_count
        line = f"{name} n={n}: {ok_count}/{trials} ok: {'PASS' if ok_count == trials else 'FAIL'}"
        if ok_count != trials:
            notes = "; ".join(
                f"trial {i}: {note}" for i, (ok, note) in enumerate(chunk, start=1) if not ok
            )
            line += f" [{notes}]"
        lines.append(line)
    all_ok = passed_total == len(jobs)
    verdict = "PASS" if all_ok else "FAIL"
    lines.append(f"result: {verdict} ({passed_total}/{len(jobs)} checks)")
    return lines, all_ok
