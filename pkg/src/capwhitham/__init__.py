"""Symmetry-breaking bifurcation toolkit for the capillary-gravity Whitham equation.

The package locates double bifurcation points of the dispersion symbol,
evaluates the sign function phi(T; k1, k2) whose zeros mark
symmetry-breaking tension values, expands phi exactly in the Fourier
multipliers, scans wavenumber pairs for admissibility, and constructs
small-amplitude asymmetric periodic travelling waves by a truncated
Lyapunov-Schmidt reduction with Newton refinement.
"""

from .coefficients import (
    LIMIT_HIGH_T,
    LIMIT_LOW_T,
    CoefficientSession,
    Monomial,
    MultiplierContext,
    PhiExpansion,
    coefficient_u,
    coefficient_u2,
    expand_symbolic,
    expansion_size,
    limit_ratio,
    limit_session,
    multiplier,
    numeric_session,
    phi_target_indices,
)
from .config import CONFIG_ENV_VAR, RunConfig, load_config_file, resolve_config
from .errors import (
    CapWhithamError,
    ConvergenceError,
    DegenerateDirectionError,
    DivergenceError,
    DomainError,
    NearResonanceError,
    SizeGuardError,
    TruncationError,
)
from .symbol import (
    WEAK_TENSION_LIMIT,
    BifurcationPoint,
    WaveNumberPair,
    double_bifurcation,
    eval_symbol,
    eval_symbol_deriv,
    kappa_asymptote_high_T,
    kappa_asymptote_low_T,
    turning_point,
)
from .symmetry_breaking import (
    STATUS_ADMITS,
    STATUS_EXCLUDED_DIFFERENCE,
    STATUS_EXCLUDED_DIVISOR,
    STATUS_PASSES,
    STATUS_UNDECIDED,
    PairVerdict,
    PhiRoot,
    PhiSample,
    exclusion_check,
    pair_scan,
    phi_curve,
    phi_eval,
    phi_limits,
    phi_root,
)
from .waves import (
    ModalParameters,
    SolveReport,
    SolverSettings,
    WaveProfile,
    asymmetry_test,
    inner_products,
    linear_dependence_residual,
    residual_j_inf,
    solve_w,
    solve_wave,
    symmetric_solve,
    synthesize_v,
    variational_identity,
)

__version__ = "0.1.0"

__all__ = [
    "BifurcationPoint",
    "CONFIG_ENV_VAR",
    "CapWhithamError",
    "CoefficientSession",
    "ConvergenceError",
    "DegenerateDirectionError",
    "DivergenceError",
    "DomainError",
    "LIMIT_HIGH_T",
    "LIMIT_LOW_T",
    "ModalParameters",
    "Monomial",
    "MultiplierContext",
    "NearResonanceError",
    "PairVerdict",
    "PhiExpansion",
    "PhiRoot",
    "PhiSample",
    "RunConfig",
    "STATUS_ADMITS",
    "STATUS_EXCLUDED_DIFFERENCE",
    "STATUS_EXCLUDED_DIVISOR",
    "STATUS_PASSES",
    "STATUS_UNDECIDED",
    "SizeGuardError",
    "SolveReport",
    "SolverSettings",
    "TruncationError",
    "WEAK_TENSION_LIMIT",
    "WaveNumberPair",
    "WaveProfile",
    "asymmetry_test",
    "coefficient_u",
    "coefficient_u2",
    "double_bifurcation",
    "eval_symbol",
    "eval_symbol_deriv",
    "exclusion_check",
    "expand_symbolic",
    "expansion_size",
    "inner_products",
    "kappa_asymptote_high_T",
    "kappa_asymptote_low_T",
    "limit_ratio",
    "limit_session",
    "linear_dependence_residual",
    "load_config_file",
    "multiplier",
    "numeric_session",
    "pair_scan",
    "phi_curve",
    "phi_eval",
    "phi_limits",
    "phi_root",
    "phi_target_indices",
    "resolve_config",
    "residual_j_inf",
    "solve_w",
    "solve_wave",
    "symmetric_solve",
    "synthesize_v",
    "turning_point",
    "variational_identity",
]
