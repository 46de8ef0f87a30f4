"""Materialized-matrix oracles and the suites behind ``primeconv verify``.

Production code never builds these matrices; they exist so the optimized
paths can be checked against first principles: the shift operator as an
explicit matrix, the seed-column matrix behind the identity decomposition,
and the plain cyclic matrix form of convolution.
"""

import warnings
from dataclasses import dataclass
from random import Random

from .core import (
    Signal,
    as_signal,
    direct_cyclic_convolution,
    direct_predicted_counts,
    is_prime,
    max_relative_error,
    reverse_permute,
)
from .counting import OpTally
from .fast import (
    CompositeLengthWarning,
    FastPlan,
    fast_cyclic_convolution,
    plan_create,
    predicted_counts,
    trace_convolution,
)
from .polycrt import (
    Polynomial,
    coefficient_distance,
    crt_reconstruct,
    poly_mod,
    two_factor_system,
    winograd_two_factor_convolution,
)
from .transforms import ConvolutionEngine, dft_plan, naive_dft, rader_dft

RANK_PIVOT_TOL = 1e-9


def substream(seed: int, index: int) -> Random:
    """Deterministic per-task generator: Random((seed << 32) + index)."""
    return Random(((seed & 0xFFFFFFFFFFFFFFFF) << 32) + index)


def real_vector(rng: Random, n: int) -> list:
    return [rng.uniform(-1.0, 1.0) for _ in range(n)]


def complex_vector(rng: Random, n: int) -> list:
    return [complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) for _ in range(n)]


# ---------------------------------------------------------------------------
# Materialized-matrix oracles.

def shift_matrix(n: int) -> list:
    """The cyclic shift operator as an explicit n x n matrix."""
    return [[1.0 if r == (c + 1) % n else 0.0 for c in range(n)] for r in range(n)]


def seed_vector(n: int) -> list:
    """(1 - n, 1, ..., 1): all-ones minus n at position zero; sums to zero."""
    return [1.0 - n] + [1.0] * (n - 1)


def mat_vec(matrix, vector) -> list:
    return [sum(row[c] * vector[c] for c in range(len(vector))) for row in matrix]


def seed_column_matrix(n: int) -> list:
    """Matrix whose column i is the shift operator applied i times to the seed."""
    shift = shift_matrix(n)
    columns = []
    col = seed_vector(n)
    for i in range(n):
        if i:
            col = mat_vec(shift, col)
        columns.append(col)
    return [[columns[c][r] for c in range(n)] for r in range(n)]


def cyclic_matrix(kernel) -> list:
    """Matrix form of cyclic convolution: row r is the kernel rotated left r."""
    b = as_signal(kernel).samples
    n = len(b)
    return [[b[(r + c) % n] for c in range(n)] for r in range(n)]


def matrix_rank(matrix, pivot_tol: float = RANK_PIVOT_TOL) -> int:
    """Gaussian elimination with partial pivoting; pivots below pivot_tol
    are treated as zero."""
    work = [list(row) for row in matrix]
    rows = len(work)
    cols = len(work[0])
    rank = 0
    pivot_row = 0
    for col in range(cols):
        best = max(range(pivot_row, rows), key=lambda r: abs(work[r][col]), default=None)
        if best is None or abs(work[best][col]) <= pivot_tol:
            continue
        work[pivot_row], work[best] = work[best], work[pivot_row]
        pivot = work[pivot_row][col]
        for r in range(pivot_row + 1, rows):
            factor = work[r][col] / pivot
            for c in range(col, cols):
                work[r][c] -= factor * work[pivot_row][c]
        pivot_row += 1
        rank += 1
        if pivot_row == rows:
            break
    return rank


def identity_decomposition_residual(n: int) -> float:
    """Max entrywise residual of (ones*ones^T - seed_column_matrix) / n vs I."""
    f = seed_column_matrix(n)
    worst = 0.0
    for r in range(n):
        for c in range(n):
            value = (1.0 - f[r][c]) / n
            target = 1.0 if r == c else 0.0
            worst = max(worst, abs(value - target))
    return worst


def explicit_plan_weights(kernel) -> tuple:
    """Kernel weights from the materialized shift/seed matrices.

    weight[i] = (kernel . shift^i seed) / n, the definition the closed form
    in plan_create is checked against.
    """
    b = as_signal(kernel).samples
    n = len(b)
    shift = shift_matrix(n)
    col = seed_vector(n)
    weights = []
    for i in range(n):
        if i:
            col = mat_vec(shift, col)
        weights.append(sum(bv * cv for bv, cv in zip(b, col)) / n)
    return tuple(weights)


def correction_oracle(kernel, data) -> tuple:
    """All n correction components from materialized matrices.

    component[i] = kernel . shift^i (seed_column_matrix @ aligned) / n where
    aligned is the reversal-permuted data.
    """
    b = as_signal(kernel).samples
    n = len(b)
    y = list(reverse_permute(data).samples)
    shift = shift_matrix(n)
    vec = mat_vec(seed_column_matrix(n), y)
    out = []
    for i in range(n):
        if i:
            vec = mat_vec(shift, vec)
        out.append(sum(bv * vv for bv, vv in zip(b, vec)) / n)
    return tuple(out)


# ---------------------------------------------------------------------------
# Verification suites.

@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_error: float | None
    detail: str


def _perturbed(plan: FastPlan) -> FastPlan:
    weights = (plan.diff_weights[0] + 1e-3,) + plan.diff_weights[1:]
    return FastPlan(plan.length, weights, plan.kernel_mean)


def _fmt_sizes(sizes) -> str:
    return ",".join(str(n) for n in sizes)


def _equivalence_suite(name, sizes, trials, seed, stream_index, tol, inject_fault, complex_data):
    rng = substream(seed, stream_index)
    make = complex_vector if complex_data else real_vector
    worst = 0.0
    for n in sizes:
        kernel = make(rng, n)
        plan = plan_create(kernel)
        if inject_fault:
            plan = _perturbed(plan)
        for _ in range(trials):
            data = make(rng, n)
            want = direct_cyclic_convolution(kernel, data)
            got = fast_cyclic_convolution(plan, data)
            worst = max(worst, max_relative_error(got, want))
    return SuiteResult(
        name=name,
        passed=worst <= tol,
        max_error=worst,
        detail=f"sizes={_fmt_sizes(sizes)} trials={trials} tol={tol:.1e}",
    )


def _count_suite(sizes, seed, stream_index):
    rng = substream(seed, stream_index)
    mismatches = 0
    for n in sizes:
        kernel = real_vector(rng, n)
        data = real_vector(rng, n)
        tally = OpTally()
        direct_cyclic_convolution(kernel, data, tally)
        if tally.counts != direct_predicted_counts(n):
            mismatches += 1
        if n >= 2:
            tally = OpTally()
            fast_cyclic_convolution(plan_create(kernel), data, tally)
            if tally.counts != predicted_counts(n):
                mismatches += 1
        if n >= 2 and is_prime(n):
            tally = OpTally()
            winograd_two_factor_convolution(kernel, data, tally)
            if tally.mults != 1 + (n - 1) ** 2:
                mismatches += 1
    return SuiteResult(
        name="count-exactness",
        passed=mismatches == 0,
        max_error=None,
        detail=f"sizes={_fmt_sizes(sizes)} mismatches={mismatches}",
    )


def _antisymmetry_suite(seed, stream_index, tol):
    rng = substream(seed, stream_index)
    sizes = range(2, 17)
    worst = 0.0
    for n in sizes:
        plan = plan_create(real_vector(rng, n))
        y = [rng.uniform(-1.0, 1.0) for _ in range(n)]
        w = plan.diff_weights
        table = [[w[(i + j) % n] * (y[j] - y[i]) for j in range(n)] for i in range(n)]
        for i in range(n):
            worst = max(worst, abs(table[i][i]))
            for j in range(i + 1, n):
                worst = max(worst, abs(table[i][j] + table[j][i]))
    return SuiteResult(
        name="pair-table-antisymmetry",
        passed=worst <= tol,
        max_error=worst,
        detail=f"sizes=2-16 tol={tol:.1e}",
    )


def _component_sum_suite(seed, stream_index, tol):
    rng = substream(seed, stream_index)
    exact_failures = 0
    worst = 0.0
    for n in range(2, 17):
        kernel = real_vector(rng, n)
        data = real_vector(rng, n)
        trace = trace_convolution(plan_create(kernel), data)
        if sum(trace.component_sums) != 0.0:
            exact_failures += 1
        oracle = correction_oracle(kernel, data)
        scale = max(1.0, max(abs(v) for v in oracle))
        worst = max(
            worst,
            max(abs(a - b) for a, b in zip(trace.component_sums, oracle)) / scale,
        )
    return SuiteResult(
        name="component-sums-zero",
        passed=exact_failures == 0 and worst <= tol,
        max_error=worst,
        detail=f"sizes=2-16 exact_failures={exact_failures} oracle_tol={tol:.1e}",
    )


def _identity_suite(tol):
    worst = max(identity_decomposition_residual(n) for n in range(2, 13))
    return SuiteResult(
        name="identity-decomposition",
        passed=worst <= tol,
        max_error=worst,
        detail=f"sizes=2-12 tol={tol:.1e}",
    )


def _rank_suite(tol):
    worst_sum = 0.0
    rank_failures = 0
    for n in range(2, 13):
        f = seed_column_matrix(n)
        for c in range(n):
            worst_sum = max(worst_sum, abs(sum(f[r][c] for r in range(n))) / n)
        if matrix_rank(f) != n - 1:
            rank_failures += 1
    return SuiteResult(
        name="seed-matrix-rank",
        passed=rank_failures == 0 and worst_sum <= tol,
        max_error=worst_sum,
        detail=f"sizes=2-12 rank_failures={rank_failures} colsum_tol={tol:.1e}",
    )


def _crt_suite(seed, stream_index, tol):
    rng = substream(seed, stream_index)
    primes = (2, 3, 5, 7, 11, 13)
    worst = 0.0
    for p in primes:
        system = two_factor_system(p)
        for _ in range(10):
            target = Polynomial(real_vector(rng, p))
            residues = [poly_mod(target, m) for m in system.moduli]
            rebuilt = crt_reconstruct(residues, system)
            scale = max(1.0, max(abs(c) for c in target.coeffs))
            worst = max(worst, coefficient_distance(rebuilt, target) / scale)
    return SuiteResult(
        name="crt-round-trip",
        passed=worst <= tol,
        max_error=worst,
        detail=f"primes={_fmt_sizes(primes)} trials=10 tol={tol:.1e}",
    )


def _rader_suite(seed, stream_index, trials, tol):
    rng = substream(seed, stream_index)
    primes = (3, 5, 7, 11, 13)
    engines = list(ConvolutionEngine)
    worst = 0.0
    for p in primes:
        plan = dft_plan(p)
        for _ in range(trials):
            data = complex_vector(rng, p)
            want = naive_dft(data)
            for engine in engines:
                got = rader_dft(plan, data, engine)
                worst = max(worst, max_relative_error(got, want))
    return SuiteResult(
        name="rader-vs-naive",
        passed=worst <= tol,
        max_error=worst,
        detail=f"primes={_fmt_sizes(primes)} trials={trials} engines=3 tol={tol:.1e}",
    )


def run_suites(sizes, trials: int, seed: int, tolerance: float | None = None,
               inject_fault: bool = False) -> list:
    """Run every verification suite and return their results in fixed order.

    ``tolerance`` overrides the per-suite default for every floating-point
    suite when given; count checks always use exact integer equality.
    """
    sizes = tuple(sizes)
    if not sizes:
        raise ValueError("need at least one size")
    for n in sizes:
        if n < 2:
            raise ValueError(f"verification sizes must be >= 2, got {n}")

    def tol(default: float) -> float:
        return default if tolerance is None else tolerance

    with warnings.catch_warnings():
        # Composite sizes are deliberately part of the sweep here; the
        # advisory is for interactive callers, not for the suites.
        warnings.simplefilter("ignore", CompositeLengthWarning)
        return [
            _equivalence_suite("oracle-equivalence-real", sizes, trials, seed, 1,
                               tol(1e-10), inject_fault, complex_data=False),
            _equivalence_suite("oracle-equivalence-complex", sizes, trials, seed, 2,
                               tol(1e-9), inject_fault, complex_data=True),
            _count_suite(sizes, seed, 3),
            _antisymmetry_suite(seed, 4, tol(1e-12)),
            _component_sum_suite(seed, 5, tol(1e-10)),
            _identity_suite(tol(1e-12)),
            _rank_suite(tol(1e-12)),
            _crt_suite(seed, 6, tol(1e-9)),
            _rader_suite(seed, 7, max(1, trials // 2), tol(1e-9)),
        ]
