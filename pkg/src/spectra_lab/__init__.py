"""Spectral statistics of Gaussian ensembles, determinantal kernels, and zeta zeros."""

from .ensembles import EnsembleConfig, sample_bilinear, sample_goe, sample_gue
from .eigensolve import (
    PairingError,
    SolverFailure,
    Spectrum,
    SymTriMatrix,
    eig_dense_sym,
    eig_herm,
    eig_symtri,
    sqrt_spectrum,
    tridiagonalize,
)
from .orthopoly import (
    KernelEval,
    Recurrence,
    cd_kernel,
    correlation_det,
    gauss_hermite,
    jacobi_matrix,
    polynomial_roots,
    psi,
    recurrence_coeffs,
)
from .spectral_stats import (
    SpacingSeries,
    UnfoldedSeries,
    check_spacing_bound,
    compare_spacing_distributions,
    decompose_fixed_variable,
    ks_distance,
    montgomery_reference,
    pair_correlation_estimator,
    spacings,
    unfold_semicircle,
    unfold_zeta,
    wigner_surmise,
)
from .zeta import (
    MissedZeroError,
    PrecisionError,
    ZeroList,
    find_zeros,
    hardy_z,
    load_zeros_file,
    rs_theta,
    write_zeros_file,
    zero_count_rvm,
    zeta_em,
)
from .zeromap import (
    CartanTriple,
    zero_map_residuals,
    build_alpha,
    build_d,
    build_epsilon,
    eigen2x2,
    elliptic_partial_sum,
    energy_from_gamma,
    kernel_bipoints,
    lambda_pm,
    on_critical_line,
    product_dea,
    trivial_zeros,
)

__version__ = "0.1.0"
