"""Shared helpers for the test suite: seeded substreams and sample makers."""

from random import Random

BASE_SEED = 42


def rng_for(index: int, seed: int = BASE_SEED) -> Random:
    """Independent generator per test concern: Random((seed << 32) + index)."""
    return Random(((seed & 0xFFFFFFFFFFFFFFFF) << 32) + index)


def real_samples(rng: Random, n: int) -> list:
    return [rng.uniform(-1.0, 1.0) for _ in range(n)]


def complex_samples(rng: Random, n: int) -> list:
    return [complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) for _ in range(n)]
