"""Applications built on the convolution engines.

Provides the engine dispatcher, a naive DFT oracle, prime-length DFT via
the Rader reindexing (one length p-1 cyclic convolution against a fixed
twiddle kernel), and linear convolution by cyclic zero padding.
"""

import cmath
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .counting import OpTally
from .core import (
    Signal,
    as_signal,
    direct_cyclic_convolution,
    is_prime,
    next_prime,
    prime_factors,
)
from .fast import CompositeLengthWarning, FastPlan, fast_cyclic_convolution, plan_create
from .polycrt import winograd_two_factor_convolution


class ConvolutionEngine(Enum):
    DIRECT = "direct"
    FAST_PRIME = "fast-prime"
    WINOGRAD_TWO_FACTOR = "winograd-two-factor"

    @classmethod
    def from_name(cls, name: str) -> "ConvolutionEngine":
        for engine in cls:
            if engine.value == name:
                return engine
        names = ", ".join(engine.value for engine in cls)
        raise ValueError(f"unknown engine {name!r}; expected one of: {names}")


def cyclic_convolution(kernel, data, engine: ConvolutionEngine = ConvolutionEngine.DIRECT,
                       tally: OpTally | None = None) -> Signal:
    """Cyclic convolution through the selected engine.

    The dispatcher accepts any length the underlying engine can process;
    for the two-factor path that includes composite lengths, since the
    split x^n - 1 = (x - 1)(x^{n-1} + ... + 1) is valid for every n >= 2.
    """
    if engine is ConvolutionEngine.DIRECT:
        return direct_cyclic_convolution(kernel, data, tally)
    if engine is ConvolutionEngine.FAST_PRIME:
        return fast_cyclic_convolution(plan_create(kernel), data, tally)
    if engine is ConvolutionEngine.WINOGRAD_TWO_FACTOR:
        return winograd_two_factor_convolution(kernel, data, tally, require_prime=False)
    raise ValueError(f"unknown engine {engine!r}")


@lru_cache(maxsize=None)
def _unit_roots(n: int) -> tuple:
    """exp(-2*pi*i*t/n) for t = 0 .. n-1."""
    return tuple(cmath.exp(complex(0.0, -2.0 * math.pi * t / n)) for t in range(n))


def naive_dft(data) -> Signal:
    """Defining double-loop DFT, X[k] = sum_j x[j] * exp(-2*pi*i*j*k/n).

    Quadratic and plain on purpose: this is the oracle for the fast path.
    """
    x = as_signal(data).samples
    n = len(x)
    roots = _unit_roots(n)
    out = []
    for k in range(n):
        acc = complex(0.0, 0.0)
        for j, value in enumerate(x):
            acc += value * roots[(j * k) % n]
        out.append(acc)
    return Signal(out)


def find_primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group mod prime p >= 3.

    g generates iff g^((p-1)/q) != 1 (mod p) for every prime q dividing
    p - 1.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"need a prime p >= 3, got {p}")
    checks = [(p - 1) // q for q in prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in checks):
            return g
    raise ArithmeticError(f"no primitive root found for {p}")  # unreachable for prime p


@dataclass(frozen=True)
class DftPlan:
    """Fixed data for a prime-length DFT: index maps and twiddle kernel.

    input_order[m] = g^{-m} mod p selects the permuted samples that feed
    the convolution; output_order[l] = g^l mod p scatters convolution
    results onto DFT bins 1 .. p-1.  ``kernel`` holds twiddles
    exp(-2*pi*i*g^t/p); ``conv_plan`` is the prebuilt reduced-multiplication
    plan for it.  Construction is precomputation.
    """

    length: int
    root: int
    input_order: tuple
    output_order: tuple
    kernel: Signal
    conv_plan: FastPlan


def dft_plan(p: int) -> DftPlan:
    """Build the Rader reindexing plan for prime p >= 3."""
    g = find_primitive_root(p)
    g_inv = pow(g, p - 2, p)
    m = p - 1
    input_order = tuple(pow(g_inv, i, p) for i in range(m))
    output_order = tuple(pow(g, i, p) for i in range(m))
    roots = _unit_roots(p)
    kernel = Signal(roots[pow(g, t, p)] for t in range(m))
    with warnings.catch_warnings():
        # p - 1 is composite for every p >= 5; expected here, not advisory-worthy.
        warnings.simplefilter("ignore", CompositeLengthWarning)
        conv_plan = plan_create(kernel)
    return DftPlan(p, g, input_order, output_order, kernel, conv_plan)


def rader_dft(plan: DftPlan, data, engine: ConvolutionEngine = ConvolutionEngine.DIRECT) -> Signal:
    """DFT of prime length p through one (p-1)-point cyclic convolution.

    X[0] is the plain sample sum; for k >= 1 the bins are x[0] plus the
    cyclic convolution of the permuted input with the twiddle kernel.
    Any engine works: p - 1 is composite for p >= 5, which the fast and
    two-factor engines both accept.
    """
    x = as_signal(data)
    p = plan.length
    if len(x) != p:
        raise ValueError(f"plan length {p} does not match data length {len(x)}")
    xs = x.samples
    zero_bin = complex(sum(xs))
    permuted = Signal(xs[idx] for idx in plan.input_order)
    if engine is ConvolutionEngine.FAST_PRIME:
        conv = fast_cyclic_convolution(plan.conv_plan, permuted)
    else:
        conv = cyclic_convolution(plan.kernel, permuted, engine)
    out = [complex(0.0, 0.0)] * p
    out[0] = zero_bin
    first = xs[0]
    for l, bin_index in enumerate(plan.output_order):
        out[bin_index] = first + conv[l]
    return Signal(out)


def padded_length(n: int, padding: str = "prime") -> int:
    """Cyclic length used to embed a length-n linear convolution.

    "prime" picks the smallest prime >= 2n - 1 (so the fast engine runs in
    its best-understood regime); "double" pads to exactly 2n.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if padding == "prime":
        return next_prime(max(2, 2 * n - 1))
    if padding == "double":
        return max(2, 2 * n)
    raise ValueError(f"unknown padding policy {padding!r}; expected 'prime' or 'double'")


def schoolbook_linear_convolution(kernel, data, full: bool = False) -> Signal:
    """Quadratic linear convolution oracle.

    Returns the first n samples by default, or the full 2n - 1 product when
    full=True.
    """
    b = as_signal(kernel).samples
    z = as_signal(data).samples
    n = len(b)
    if len(z) != n:
        raise ValueError(f"kernel length {n} does not match data length {len(z)}")
    out = []
    for k in range(2 * n - 1):
        acc = 0.0
        for l in range(max(0, k - n + 1), min(k, n - 1) + 1):
            acc += b[l] * z[k - l]
        out.append(acc)
    return Signal(out if full else out[:n])


def linear_convolution(kernel, data, engine: ConvolutionEngine = ConvolutionEngine.DIRECT,
                       *, padding: str = "prime", full: bool = False) -> Signal:
    """Linear convolution via zero-padded cyclic convolution.

    Both inputs are zero padded to padded_length(n, padding), convolved
    cyclically with the chosen engine, and truncated to the first n samples
    (or the full 2n - 1 when full=True).
    """
    b = as_signal(kernel)
    z = as_signal(data)
    n = len(b)
    if len(z) != n:
        raise ValueError(f"kernel length {n} does not match data length {len(z)}")
    m = padded_length(n, padding)
    pad = (0.0,) * (m - n)
    conv = cyclic_convolution(Signal(b.samples + pad), Signal(z.samples + pad), engine)
    keep = 2 * n - 1 if full else n
    return Signal(conv.samples[:keep])
