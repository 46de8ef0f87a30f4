"""Cyclic convolution engines with exact operation counting.

The package provides three interchangeable engines for length-n cyclic
convolution — the schoolbook form, a reduced-multiplication form built for
prime lengths, and a polynomial residue (CRT) form — plus a prime-length
DFT that rides on top of them.  Every engine can run with an
:class:`~primeconv.counting.OpTally` attached, in which case each scalar
multiplication and addition performed on runtime data is counted exactly.
"""

from .counting import OpTally, Scalar, counted_add, counted_mul, counted_sub
from .core import (
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
from .fast import (
    CompositeLengthWarning,
    ConvolutionTrace,
    FastPlan,
    fast_cyclic_convolution,
    multiplication_lower_bound,
    plan_create,
    predicted_counts,
    trace_convolution,
)
from .polycrt import (
    Polynomial,
    ResidueSystem,
    build_residue_system,
    crt_reconstruct,
    extended_euclid_inverse,
    poly_divmod,
    poly_gcd,
    poly_mod,
    poly_mul,
    poly_mul_mod,
    two_factor_predicted_counts,
    two_factor_system,
    winograd_two_factor_convolution,
)
from .transforms import (
    ConvolutionEngine,
    DftPlan,
    cyclic_convolution,
    dft_plan,
    find_primitive_root,
    linear_convolution,
    naive_dft,
    padded_length,
    rader_dft,
    schoolbook_linear_convolution,
)

__version__ = "0.1.0"

__all__ = [
    "CompositeLengthWarning",
    "ConvolutionEngine",
    "ConvolutionTrace",
    "DftPlan",
    "FastPlan",
    "Length",
    "OpTally",
    "Polynomial",
    "ResidueSystem",
    "Scalar",
    "Signal",
    "__version__",
    "as_signal",
    "build_residue_system",
    "counted_add",
    "counted_mul",
    "counted_sub",
    "crt_reconstruct",
    "cyclic_convolution",
    "dft_plan",
    "direct_cyclic_convolution",
    "direct_predicted_counts",
    "extended_euclid_inverse",
    "fast_cyclic_convolution",
    "find_primitive_root",
    "is_prime",
    "linear_convolution",
    "max_relative_error",
    "multiplication_lower_bound",
    "naive_dft",
    "next_prime",
    "padded_length",
    "plan_create",
    "poly_divmod",
    "poly_gcd",
    "poly_mod",
    "poly_mul",
    "poly_mul_mod",
    "predicted_counts",
    "prime_factors",
    "rader_dft",
    "reverse_permute",
    "rotate",
    "schoolbook_linear_convolution",
    "trace_convolution",
    "two_factor_predicted_counts",
    "two_factor_system",
    "winograd_two_factor_convolution",
]
