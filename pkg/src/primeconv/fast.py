"""Cyclic convolution in n(n-1)/2 + 1 multiplications for any length n >= 2.

For a fixed kernel ``b`` the cyclic product with data ``z`` splits into a
rank-one part and an antisymmetric correction:

    out[i] = base - correction[i]

where ``base = mean(b) * sum(z)`` costs the single general multiplication,
and the corrections are signed sums over the strictly upper triangular
table

    table[i][j] = w[(i + j) mod n] * (y[j] - y[i]),    0 <= i < j <= n-1,

with ``y`` the reversal-aligned data and ``w[k] = mean(b) - b[k]``
precomputed from the kernel alone.  Swapping i and j only flips the sign
of the difference, so the strict upper triangle carries the whole table;
that is where the multiplication count n(n-1)/2 comes from.  The
correction components also sum to zero, which pins the last one without
any new information.

The scheme is exact for every n >= 2.  Prime n is simply the regime where
the length cannot be factored into cheaper short convolutions, so the
count above is the interesting one; composite lengths work but trigger an
advisory warning.
"""

import warnings
from dataclasses import dataclass

from .counting import OpTally, Scalar, counted_add, counted_mul, counted_sub
from .core import Signal, as_signal, is_prime, reverse_permute


class CompositeLengthWarning(UserWarning):
    """Advisory: the requested length is composite.

    The engine stays correct, but composite lengths admit specialized
    factorizations with fewer multiplications than this scheme.
    """


@dataclass(frozen=True)
class FastPlan:
    """Precomputed kernel data for the reduced-multiplication engine.

    Attributes:
        length: signal length n (>= 2).
        diff_weights: w[k] = kernel_mean - kernel[k]; the weights multiply
            pairwise data differences.  They sum to zero up to roundoff.
        kernel_mean: sum(kernel) / n; multiplies the data sum to form the
            rank-one term.
    """

    length: int
    diff_weights: tuple
    kernel_mean: Scalar


def plan_create(kernel) -> FastPlan:
    """Build a FastPlan from a kernel of length n >= 2.

    All arithmetic here depends on the kernel only, so it is precomputation
    and contributes nothing to execution tallies.
    """
    b = as_signal(kernel)
    n = len(b)
    if n < 2:
        raise ValueError(f"the reduced-multiplication engine needs length >= 2, got {n}")
    if not is_prime(n):
        warnings.warn(
            f"length {n} is composite; results stay exact, but specialized "
            "composite-length factorizations need fewer multiplications",
            CompositeLengthWarning,
            stacklevel=2,
        )
    mean = sum(b.samples) / n
    weights = tuple(mean - value for value in b.samples)
    return FastPlan(n, weights, mean)


@dataclass(frozen=True)
class ConvolutionTrace:
    """Intermediate values of one engine run, for verification tooling.

    Fields mirror the execution: ``aligned`` is the reversal-aligned data,
    ``base`` the rank-one term, ``pair_table`` the strict upper triangle of
    weighted differences (row i holds entries for j = i+1 .. n-1),
    ``component_sums`` the correction vector whose entries sum to zero
    exactly as computed, and ``output`` the convolution result.
    """

    aligned: tuple
    base: Scalar
    pair_table: tuple
    component_sums: tuple
    output: Signal


def _execute(plan: FastPlan, z: Signal, tally: OpTally):
    n = plan.length
    w = plan.diff_weights
    y = reverse_permute(z).samples

    total = y[0]
    for j in range(1, n):
        total = counted_add(total, y[j], tally)
    base = counted_mul(plan.kernel_mean, total, tally)

    # Strict upper triangle of weighted pairwise differences.
    upper = []
    for i in range(n - 1):
        row = []
        for j in range(i + 1, n):
            diff = counted_sub(y[j], y[i], tally)
            row.append(counted_mul(w[(i + j) % n], diff, tally))
        upper.append(row)

    # Signed fold over row i: +table[i][j] for j > i, -table[j][i] for j < i,
    # ascending j.  The leading term seeds the accumulator (a sign flip is
    # bookkeeping, not arithmetic).
    sums = []
    for i in range(n - 1):
        acc = None
        for j in range(n):
            if j == i:
                continue
            if j > i:
                term = upper[i][j - i - 1]
                acc = term if acc is None else counted_add(acc, term, tally)
            else:
                term = upper[j][i - j - 1]
                acc = -term if acc is None else counted_sub(acc, term, tally)
        sums.append(acc)
    # The corrections are constrained to sum to zero; reconstructing the
    # last one resolves a linear dependency rather than computing anything
    # new, so it stays off the tally (see docs/counting_model.md).
    sums.append(-sum(sums))

    out = [counted_sub(base, value, tally) for value in sums]
    return y, base, upper, sums, out


def fast_cyclic_convolution(plan: FastPlan, data, tally: OpTally | None = None) -> Signal:
    """Run the reduced-multiplication engine against ``data``.

    Tallies exactly n(n-1)/2 + 1 multiplications and 3n(n-1)/2 + 1
    additions, matching predicted_counts(n).
    """
    z = as_signal(data)
    if len(z) != plan.length:
        raise ValueError(f"plan length {plan.length} does not match data length {len(z)}")
    if tally is None:
        tally = OpTally()
    *_, out = _execute(plan, z, tally)
    return Signal(out)


def trace_convolution(plan: FastPlan, data) -> ConvolutionTrace:
    """Run the engine and expose its intermediates (plain mode)."""
    z = as_signal(data)
    if len(z) != plan.length:
        raise ValueError(f"plan length {plan.length} does not match data length {len(z)}")
    y, base, upper, sums, out = _execute(plan, z, OpTally())
    return ConvolutionTrace(
        aligned=tuple(y),
        base=base,
        pair_table=tuple(tuple(row) for row in upper),
        component_sums=tuple(sums),
        output=Signal(out),
    )


def predicted_counts(n: int) -> tuple[int, int]:
    """Closed-form (multiplications, additions) for a length-n run."""
    if n < 2:
        raise ValueError(f"the reduced-multiplication engine needs length >= 2, got {n}")
    return (n * (n - 1) // 2 + 1, 3 * n * (n - 1) // 2 + 1)


def multiplication_lower_bound(n: int) -> int:
    """Proven lower bound 2(n-1) on multiplications for length-n cyclic
    convolution by a commutative bilinear algorithm.  Reported alongside
    measured counts; never used as a pass/fail gate."""
    if n < 2:
        raise ValueError(f"length must be >= 2, got {n}")
    return 2 * (n - 1)
