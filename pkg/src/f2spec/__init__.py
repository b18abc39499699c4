"""Exact Fourier analysis and affine-subspace structure of Boolean functions
on F_2^n: bit-packed GF(2) algebra, integer Walsh-Hadamard spectra,
set-addition bounds, spectrum classification with verified decomposition,
and exhaustive/randomized theorem verification."""

from .addcomb import (
    LABA_NOT_APPLICABLE,
    LABA_SUBGROUP,
    LABA_VIOLATION,
    PointSet,
    doubling_constant,
    even_zohar_bound,
    even_zohar_s,
    is_sum_free,
    iterated_sumset,
    laba_check,
    sumset,
)
from .boolfunc import (
    BooleanFunction,
    apply_transform,
    restrict_first_bit,
    shift,
    tensor,
)
from .errors import InputFormatError, SpectrumScopeError, TheoremViolationError
from .families import generate
from .fourier import (
    Spectrum,
    boolean_cast,
    boolean_convolution_check,
    granularity,
    inverse_wht,
    is_boolean_spectrum,
    naive_wht,
    sparsity,
    wht,
)
from .gf2 import (
    AffineSubspace,
    GF2Matrix,
    Subspace,
    affine_span,
    dot,
    is_full_affine_subspace,
    linear_span,
    orthogonal_complement,
    transform_sending_to_e1,
)
from .harness import (
    SplitMix64,
    VerificationReport,
    enumerate_verify,
    merge_reports,
    random_verify,
)
from .structure import (
    Classification,
    Decomposition,
    ReductionTrace,
    SpectralSets,
    classify,
    decompose,
    is_irreducible,
    kill_number,
    reduce_to_core,
    spectral_sets,
    triangle_neighbors,
    verify_decomposition,
)

__all__ = [
    "AffineSubspace",
    "BooleanFunction",
    "Classification",
    "Decomposition",
    "GF2Matrix",
    "InputFormatError",
    "LABA_NOT_APPLICABLE",
    "LABA_SUBGROUP",
    "LABA_VIOLATION",
    "PointSet",
    "ReductionTrace",
    "SpectralSets",
    "Spectrum",
    "SpectrumScopeError",
    "SplitMix64",
    "Subspace",
    "TheoremViolationError",
    "VerificationReport",
    "affine_span",
    "apply_transform",
    "boolean_cast",
    "boolean_convolution_check",
    "classify",
    "decompose",
    "dot",
    "doubling_constant",
    "enumerate_verify",
    "even_zohar_bound",
    "even_zohar_s",
    "generate",
    "granularity",
    "inverse_wht",
    "is_boolean_spectrum",
    "is_full_affine_subspace",
    "is_irreducible",
    "is_sum_free",
    "iterated_sumset",
    "kill_number",
    "laba_check",
    "linear_span",
    "merge_reports",
    "naive_wht",
    "orthogonal_complement",
    "random_verify",
    "reduce_to_core",
    "restrict_first_bit",
    "shift",
    "sparsity",
    "spectral_sets",
    "sumset",
    "tensor",
    "transform_sending_to_e1",
    "triangle_neighbors",
    "verify_decomposition",
    "wht",
]

__version__ = "0.1.0"
