"""Effect-algebra toolkit: finite tables, matrix and fuzzy models,
spectral resolutions, and property-based verification suites."""

from .config import DEFAULT, Tolerances
from .fuzzy import (
    Context,
    FuzzyContext,
    FuzzySampler,
    FuzzySet,
    NotAFuzzySetError,
    SpaceMismatchError,
    mv_is_context_spectral,
    mv_is_sharp,
    mv_spectral_family,
    spectrum_representation,
)
from .linalg import (
    ConvergenceError,
    EigenDecomposition,
    NotHermitianError,
    eigh,
    frobenius,
    operator_norm,
)
from .matrices import (
    DimensionMismatchError,
    Effect,
    EffectSampler,
    NotAnEffectError,
    NotCommutingError,
    Projection,
    compression,
    floor,
    floor_iterates,
    projection_cover,
    rickart,
    seq_product,
    validate_effect,
)
from .report import CheckResult, SuiteReport, merge_reports
from .spectral import (
    MatrixContext,
    SpectralFamily,
    UnsupportedContextError,
    comparability_witness,
    eigenprojection,
    family_from_json,
    family_from_representation,
    orthogonal_decomposition,
    reconstruct,
    reduced_representation,
    simple_approximation,
    spectral_bounds,
    spectral_family,
)
from .tables import (
    FiniteEffectAlgebra,
    boolean_cube,
    builtin_table,
    check_ea_axioms,
    diamond,
    fuzzy_embedding,
    incompatible_pairs,
    lukasiewicz,
)
from .verify import (
    REQUIRED_STATEMENTS,
    covered_statements,
    run_all,
    run_compression_suite,
    run_context_suite,
    run_sea_suite,
    run_spectrality_suite,
    run_table_suite,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT",
    "Tolerances",
    "Context",
    "FuzzyContext",
    "FuzzySampler",
    "FuzzySet",
    "NotAFuzzySetError",
    "SpaceMismatchError",
    "mv_is_context_spectral",
    "mv_is_sharp",
    "mv_spectral_family",
    "spectrum_representation",
    "ConvergenceError",
    "EigenDecomposition",
    "NotHermitianError",
    "eigh",
    "frobenius",
    "operator_norm",
    "DimensionMismatchError",
    "Effect",
    "EffectSampler",
    "NotAnEffectError",
    "NotCommutingError",
    "Projection",
    "compression",
    "floor",
    "floor_iterates",
    "projection_cover",
    "rickart",
    "seq_product",
    "validate_effect",
    "CheckResult",
    "SuiteReport",
    "merge_reports",
    "MatrixContext",
    "SpectralFamily",
    "UnsupportedContextError",
    "comparability_witness",
    "eigenprojection",
    "family_from_json",
    "family_from_representation",
    "orthogonal_decomposition",
    "reconstruct",
    "reduced_representation",
    "simple_approximation",
    "spectral_bounds",
    "spectral_family",
    "FiniteEffectAlgebra",
    "boolean_cube",
    "builtin_table",
    "check_ea_axioms",
    "diamond",
    "fuzzy_embedding",
    "incompatible_pairs",
    "lukasiewicz",
    "REQUIRED_STATEMENTS",
    "covered_statements",
    "run_all",
    "run_compression_suite",
    "run_context_suite",
    "run_sea_suite",
    "run_spectrality_suite",
    "run_table_suite",
    "__version__",
]
