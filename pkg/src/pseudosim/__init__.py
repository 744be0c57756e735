"""Pseudo-similarity transforms of Hermitian matrices and the interlacing
properties of their compressed spectra, with seeded verification suites.

The short version: for Hermitian P (N x N) and any N x K matrix H of rank L,
the K x K product pinv(H) P H generally loses Hermiticity and may even be
bigger than P, but it keeps a real spectrum whose L nonzero values interlace
the eigenvalues of P.  Compressions through oblique projections enjoy no
such protection, and this package can hunt down explicit counterexamples.
"""

from .eigen import (
    Spectrum,
    eig_residual,
    eigvals_general,
    eigvals_hermitian,
    match_distance,
    sort_eigenvalues,
    spectral_scale,
)
from .ensembles import (
    EnsembleSpec,
    draw_spectrum,
    hermitian_with_spectrum,
    random_full_column_rank,
    random_invertible_nonunitary,
    random_rank_l,
    random_unitary,
    selection_matrix,
)
from .errors import (
    ClassificationError,
    ContractViolation,
    DimensionError,
    NumericalError,
    RealnessViolation,
)
from .experiments import (
    SUITES,
    ExperimentConfig,
    Tolerances,
    TrialRecord,
    counterexample_search,
    run_suite,
)
from .interlace import (
    InterlacingReport,
    check_interlacing,
    classify_real,
    extract_nonzero,
)
from .linalg import (
    QrFactors,
    SvdFactors,
    adjoint,
    is_hermitian,
    numerical_rank,
    penrose_residuals,
    pseudo_inverse,
    pseudo_inverse_qr,
    qr_economy_pivoted,
    svd,
)
from .oracles import characteristic_polynomial, charpoly_eigenvalues, polynomial_roots
from .reports import emit_report, parse_json_lines, render
from .rng import SplitMix64, derive_seed
from .transforms import (
    TransformResult,
    build_rank_deficient,
    inflate_transform,
    oblique_transform,
    pseudo_similarity,
    unitary_compression,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationError",
    "ContractViolation",
    "DimensionError",
    "EnsembleSpec",
    "ExperimentConfig",
    "InterlacingReport",
    "NumericalError",
    "QrFactors",
    "RealnessViolation",
    "SUITES",
    "Spectrum",
    "SplitMix64",
    "SvdFactors",
    "Tolerances",
    "TransformResult",
    "TrialRecord",
    "adjoint",
    "build_rank_deficient",
    "characteristic_polynomial",
    "charpoly_eigenvalues",
    "check_interlacing",
    "classify_real",
    "counterexample_search",
    "derive_seed",
    "draw_spectrum",
    "eig_residual",
    "eigvals_general",
    "eigvals_hermitian",
    "emit_report",
    "extract_nonzero",
    "hermitian_with_spectrum",
    "inflate_transform",
    "is_hermitian",
    "match_distance",
    "numerical_rank",
    "oblique_transform",
    "parse_json_lines",
    "penrose_residuals",
    "polynomial_roots",
    "pseudo_inverse",
    "pseudo_inverse_qr",
    "pseudo_similarity",
    "qr_economy_pivoted",
    "random_full_column_rank",
    "random_invertible_nonunitary",
    "random_rank_l",
    "random_unitary",
    "render",
    "run_suite",
    "selection_matrix",
    "sort_eigenvalues",
    "spectral_scale",
    "svd",
    "unitary_compression",
]
