"""Spectral and harmonic analysis of convolution random walks on groups.

Finite groups (cyclic, dihedral, symmetric, quaternion, explicit tables,
products) and ball truncations of Z^d and free groups carry exact rational
probability measures.  The package computes convolution operators and their
peripheral spectra, harmonic / anti-harmonic / jointly bi-harmonic spaces,
sign characters via a GF(2) search, the peripheral boundary with its
projected product, and runs machine verifications of the structural claims
behind all of it.
"""

from .groups import (
    ConstructionError,
    CyclicGroup,
    DihedralGroup,
    FreeBall,
    GroupSpec,
    LatticeBall,
    ProductGroup,
    QuaternionGroup,
    SymmetricGroup,
    TableGroup,
    build_group,
    closure,
    format_element,
    parse_element,
)
from .measures import (
    GroupMeasure,
    MeasureError,
    convolve,
    delta,
    is_generating,
    is_symmetric,
    make_measure,
    measure_from_json,
    measure_to_json,
    min_return,
    power,
    tv_distance,
    uniform,
)
from .operators import (
    ComputationError,
    ConvolutionOperator,
    GroupFunction,
    OperatorOnMatrices,
    SpectralReport,
    apply,
    apply_truncated,
    conditional_expectation,
    eigen_operator_to_function,
    eigenspace,
    fourier_coefficient,
    left_operator,
    right_operator,
    spectrum,
    super_apply,
    superoperator,
)
from .harmonic import (
    BoundaryBasis,
    Character,
    Decomposition,
    anti_harmonic_space,
    char_multiply,
    character_from_extremal,
    decompose,
    diamond,
    factor_anti_harmonic,
    find_anti_character,
    harmonic_space,
    jensen_margins,
    jointly_biharmonic_space,
    monotone_abs_check,
    peripheral_boundary,
)
from .verify import (
    CheckRecord,
    CorpusSpec,
    VerificationReport,
    corpus_fixtures,
    exp_bound_check,
    foguel_decay,
    revuz_check,
    root_of_unity_check,
    run_theorem_suite,
    stirling_trend,
    verify_suite,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionError",
    "CyclicGroup",
    "DihedralGroup",
    "FreeBall",
    "GroupSpec",
    "LatticeBall",
    "ProductGroup",
    "QuaternionGroup",
    "SymmetricGroup",
    "TableGroup",
    "build_group",
    "closure",
    "format_element",
    "parse_element",
    "GroupMeasure",
    "MeasureError",
    "convolve",
    "delta",
    "is_generating",
    "is_symmetric",
    "make_measure",
    "measure_from_json",
    "measure_to_json",
    "min_return",
    "power",
    "tv_distance",
    "uniform",
    "ComputationError",
    "ConvolutionOperator",
    "GroupFunction",
    "OperatorOnMatrices",
    "SpectralReport",
    "apply",
    "apply_truncated",
    "conditional_expectation",
    "eigen_operator_to_function",
    "eigenspace",
    "fourier_coefficient",
    "left_operator",
    "right_operator",
    "spectrum",
    "super_apply",
    "superoperator",
    "BoundaryBasis",
    "Character",
    "Decomposition",
    "anti_harmonic_space",
    "char_multiply",
    "character_from_extremal",
    "decompose",
    "diamond",
    "factor_anti_harmonic",
    "find_anti_character",
    "harmonic_space",
    "jensen_margins",
    "jointly_biharmonic_space",
    "monotone_abs_check",
    "peripheral_boundary",
    "CheckRecord",
    "CorpusSpec",
    "VerificationReport",
    "corpus_fixtures",
    "exp_bound_check",
    "foguel_decay",
    "revuz_check",
    "root_of_unity_check",
    "run_theorem_suite",
    "stirling_trend",
    "verify_suite",
    "__version__",
]
