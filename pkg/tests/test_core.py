import math

import pytest

from helpers import complex_samples, real_samples, rng_for
from primeconv.core import (
    Length,
    Signal,
    as_signal,
    direct_cyclic_convolution,
    direct_predicted_counts,
    is_prime,
    max_relative_error,
    next_prime,
    prime_factors,
    reverse_permute,
    rotate,
)
from primeconv.counting import OpTally
from primeconv.verification import cyclic_matrix, mat_vec


# --- Signal -----------------------------------------------------------------

def test_signal_basics():
    s = Signal([1.0, 2.0, 3.0])
    assert len(s) == 3
    assert s[1] == 2.0
    assert s == (1.0, 2.0, 3.0)
    assert s == [1.0, 2.0, 3.0]
    assert s == Signal([1.0, 2.0, 3.0])
    assert hash(s) == hash(Signal([1.0, 2.0, 3.0]))
    assert tuple(s) == s.samples


def test_signal_slicing_returns_signal():
    s = Signal([1.0, 2.0, 3.0, 4.0])
    head = s[:2]
    assert isinstance(head, Signal)
    assert head == (1.0, 2.0)


def test_signal_rejects_empty_and_non_finite():
    with pytest.raises(ValueError):
        Signal([])
    with pytest.raises(ValueError):
        Signal([1.0, math.nan])
    with pytest.raises(ValueError):
        Signal([math.inf])
    with pytest.raises(ValueError):
        Signal([complex(0.0, math.nan)])


def test_signal_is_immutable():
    s = Signal([1.0])
    with pytest.raises((AttributeError, TypeError)):
        s.extra = 1  # __slots__ blocks new attributes
    with pytest.raises(TypeError):
        s[0] = 2.0


def test_signal_is_complex_flag():
    assert not Signal([1.0, 2.0]).is_complex
    assert Signal([1.0, complex(0.0, 1.0)]).is_complex


def test_as_signal_passthrough():
    s = Signal([1.0])
    assert as_signal(s) is s
    assert as_signal([1.0, 2.0]) == (1.0, 2.0)


# --- primes -----------------------------------------------------------------

def test_is_prime_small_values():
    primes_below_40 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}
    for n in range(-3, 40):
        assert is_prime(n) == (n in primes_below_40)


def test_next_prime():
    assert next_prime(1) == 2
    assert next_prime(2) == 2
    assert next_prime(8) == 11
    assert next_prime(14) == 17
    assert next_prime(100) == 101


def test_prime_factors():
    assert prime_factors(2) == (2,)
    assert prime_factors(12) == (2, 3)
    assert prime_factors(97) == (97,)
    assert prime_factors(360) == (2, 3, 5)
    with pytest.raises(ValueError):
        prime_factors(1)


def test_length_of():
    assert Length.of(7) == Length(7, True)
    assert Length.of(9) == Length(9, False)
    with pytest.raises(ValueError):
        Length.of(0)


# --- index maps -------------------------------------------------------------

def test_reverse_permute_fixed_example():
    assert reverse_permute([10.0, 11.0, 12.0, 13.0]) == (10.0, 13.0, 12.0, 11.0)
    assert reverse_permute([5.0]) == (5.0,)


def test_reverse_permute_is_involutive():
    rng = rng_for(1)
    for n in range(1, 20):
        z = Signal(real_samples(rng, n))
        assert reverse_permute(reverse_permute(z)) == z
        assert reverse_permute(z)[0] == z[0]


def test_rotate_moves_last_sample_to_front():
    assert rotate([1.0, 2.0, 3.0], 1) == (3.0, 1.0, 2.0)
    assert rotate([1.0, 2.0, 3.0], -1) == (2.0, 3.0, 1.0)
    assert rotate([1.0, 2.0, 3.0], 3) == (1.0, 2.0, 3.0)


def test_rotate_composes_mod_n():
    rng = rng_for(2)
    for n in range(1, 12):
        z = Signal(real_samples(rng, n))
        for steps in range(-2 * n, 2 * n + 1):
            assert rotate(z, steps) == rotate(z, steps % n)
        acc = z
        for _ in range(n):
            acc = rotate(acc, 1)
        assert acc == z


# --- direct convolution -----------------------------------------------------

def test_direct_convolution_fixed_example():
    out = direct_cyclic_convolution([1.0, 2.0, 3.0], [4.0, 5.0, 6.0])
    assert out == (31.0, 31.0, 28.0)
    assert sum(out) == pytest.approx(sum([1.0, 2.0, 3.0]) * sum([4.0, 5.0, 6.0]))


def test_direct_convolution_delta_kernel_is_identity():
    rng = rng_for(3)
    for n in range(1, 10):
        z = Signal(real_samples(rng, n))
        delta = [1.0] + [0.0] * (n - 1)
        assert direct_cyclic_convolution(delta, z) == z


def test_direct_convolution_counts_are_exact():
    rng = rng_for(4)
    for n in (1, 2, 3, 5, 8, 11, 16):
        tally = OpTally()
        direct_cyclic_convolution(real_samples(rng, n), real_samples(rng, n), tally)
        assert tally.counts == direct_predicted_counts(n) == (n * n, n * (n - 1))
    assert direct_predicted_counts(11) == (121, 110)


def test_direct_convolution_commutes():
    rng = rng_for(5)
    for n in range(1, 12):
        b = Signal(real_samples(rng, n))
        z = Signal(real_samples(rng, n))
        left = direct_cyclic_convolution(b, z)
        right = direct_cyclic_convolution(z, b)
        assert max_relative_error(left, right) < 1e-12


def test_direct_convolution_is_linear_in_data():
    rng = rng_for(6)
    for n in range(1, 10):
        b = real_samples(rng, n)
        u = real_samples(rng, n)
        v = real_samples(rng, n)
        alpha = rng.uniform(-2.0, 2.0)
        combined = direct_cyclic_convolution(b, [alpha * a + c for a, c in zip(u, v)])
        parts = [
            alpha * a + c
            for a, c in zip(direct_cyclic_convolution(b, u), direct_cyclic_convolution(b, v))
        ]
        assert max_relative_error(combined, parts) < 1e-12


def test_direct_convolution_commutes_with_rotation():
    rng = rng_for(7)
    for n in range(2, 10):
        b = Signal(real_samples(rng, n))
        z = Signal(real_samples(rng, n))
        for steps in range(n):
            rotated_first = direct_cyclic_convolution(b, rotate(z, steps))
            rotated_after = rotate(direct_cyclic_convolution(b, z), steps)
            assert max_relative_error(rotated_first, rotated_after) < 1e-12


def test_direct_convolution_matches_matrix_form():
    # out = cyclic_matrix(kernel) @ reverse_permute(data), entry for entry.
    rng = rng_for(8)
    for n in range(1, 9):
        b = real_samples(rng, n)
        z = real_samples(rng, n)
        via_matrix = mat_vec(cyclic_matrix(b), list(reverse_permute(z)))
        assert max_relative_error(direct_cyclic_convolution(b, z), via_matrix) < 1e-12


def test_direct_convolution_handles_complex_data():
    rng = rng_for(9)
    b = complex_samples(rng, 7)
    z = complex_samples(rng, 7)
    out = direct_cyclic_convolution(b, z)
    assert sum(out) == pytest.approx(sum(b) * sum(z))


def test_direct_convolution_length_mismatch():
    with pytest.raises(ValueError, match="3 does not match data length 4"):
        direct_cyclic_convolution([1.0] * 3, [1.0] * 4)


def test_max_relative_error_floors_scale_at_one():
    assert max_relative_error([1e-12, 0.0], [0.0, 0.0]) == pytest.approx(1e-12)
    assert max_relative_error([2.0], [4.0]) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        max_relative_error([1.0], [1.0, 2.0])
