"""Analytic disk representation of oscillator states, their inner/outer
factorisation, and number-phase statistics."""

from .barut_girardello import (
    BGFunction,
    bg_convolve,
    bg_factor_parts,
    bg_function,
    bg_measure_weight,
    bg_shifted,
    bg_shifted_from_outer,
    laplace_to_disk,
)
from .disk import (
    BoundarySamples,
    boundary,
    cauchy,
    conjugate,
    default_grid_size,
    eval_Z,
    midpoint_grid,
    phase_distribution,
    poisson,
    reconstruct_from_boundary,
)
from .errors import (
    AliasingError,
    DegenerateSuperpositionError,
    DiskPhaseError,
    DomainError,
    IllConditionedError,
    SpecError,
    TruncationError,
)
from .factorization import (
    DiskZeros,
    FactoredState,
    PhiSeries,
    blaschke_factor,
    blaschke_product,
    blaschke_zeros,
    compute_phi,
    factorization_report,
    factorize,
    inner_part,
    is_outer,
    outer_defect,
    outer_part,
    refined_phi,
)
from .states import (
    DEFAULT_TRUNCATION,
    FockState,
    make_bg,
    make_blaschke_state,
    make_number,
    make_pi_superposition,
    make_su11_cs,
    number_distribution,
    pi_superposition_norm,
    raw_state,
    superpose,
)
from .weyl import (
    IDENTITY,
    TransformationDiagnostics,
    WeylElement,
    apply,
    apply_adjoint,
    bg_eigen_residual,
    compose,
    cs_eigen_residual,
    shift,
    transformation_check,
    wrap_angle,
)
from .wigner import (
    WignerGrid,
    chebyshev_u,
    closed_form,
    shift_covariance_check,
    wigner,
    wigner_grid,
)

__version__ = "0.1.0"

__all__ = [
    "AliasingError",
    "BGFunction",
    "BoundarySamples",
    "DEFAULT_TRUNCATION",
    "DegenerateSuperpositionError",
    "DiskPhaseError",
    "DiskZeros",
    "DomainError",
    "FactoredState",
    "FockState",
    "IDENTITY",
    "IllConditionedError",
    "PhiSeries",
    "SpecError",
    "TransformationDiagnostics",
    "TruncationError",
    "WeylElement",
    "WignerGrid",
    "apply",
    "apply_adjoint",
    "bg_convolve",
    "bg_eigen_residual",
    "bg_factor_parts",
    "bg_function",
    "bg_measure_weight",
    "bg_shifted",
    "bg_shifted_from_outer",
    "blaschke_factor",
    "blaschke_product",
    "blaschke_zeros",
    "boundary",
    "cauchy",
    "chebyshev_u",
    "closed_form",
    "compose",
    "compute_phi",
    "conjugate",
    "cs_eigen_residual",
    "default_grid_size",
    "eval_Z",
    "factorization_report",
    "factorize",
    "inner_part",
    "is_outer",
    "laplace_to_disk",
    "make_bg",
    "make_blaschke_state",
    "make_number",
    "make_pi_superposition",
    "make_su11_cs",
    "midpoint_grid",
    "number_distribution",
    "outer_defect",
    "outer_part",
    "phase_distribution",
    "pi_superposition_norm",
    "poisson",
    "raw_state",
    "reconstruct_from_boundary",
    "refined_phi",
    "shift",
    "shift_covariance_check",
    "superpose",
    "transformation_check",
    "wigner",
    "wigner_grid",
    "wrap_angle",
]
