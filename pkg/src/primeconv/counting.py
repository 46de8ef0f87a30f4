"""Scalar arithmetic with explicit operation tallies.

Engines in this package route every data-dependent multiplication and
addition through the helpers below, so reported operation counts are
measured facts rather than estimates.  The unit of account is one scalar
field operation: a complex multiply counts as one multiplication, and a
subtraction counts as one addition.  Work that depends only on the fixed
convolution kernel (plan construction, recombination constants, twiddle
tables) is precomputation and deliberately bypasses these helpers; see
docs/counting_model.md for the exact boundary.
"""

from dataclasses import dataclass

Scalar = float | complex


@dataclass
class OpTally:
    """Mutable counter for scalar multiplications and additions.

    A tally is owned by a single execution at a time; counts only grow
    while an execution runs, and reset() is meant for reuse in between.
    """

    mults: int = 0
    adds: int = 0

    def reset(self) -> None:
        self.mults = 0
        self.adds = 0

    @property
    def counts(self) -> tuple[int, int]:
        return (self.mults, self.adds)


def counted_mul(a: Scalar, b: Scalar, tally: OpTally) -> Scalar:
    """Return a * b and charge one multiplication (no zero/one shortcuts)."""
    tally.mults += 1
    return a * b


def counted_add(a: Scalar, b: Scalar, tally: OpTally) -> Scalar:
    """Return a + b and charge one addition."""
    tally.adds += 1
    return a + b


def counted_sub(a: Scalar, b: Scalar, tally: OpTally) -> Scalar:
    """Return a - b and charge one addition; subtractions count as adds."""
    tally.adds += 1
    return a - b
