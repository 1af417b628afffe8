"""fracspec: explicit spectral theory of the fractional conformal
operator on products of a round sphere with a hyperbolic manifold.

The library computes the Gamma-ratio symbol and its eigenvalues, the
constant curvature of the trivial product solution, Morse index and
nullity counts against the Jacobi threshold, the bifurcation constants
c_n, and degeneracy instants along paths of surface spectra.
"""

from .bifurcation import (
    BifurcationReport,
    BreakpointTrack,
    Instant,
    SpectralPath,
    detect_instants,
    load_path_file,
    pinching_family,
    product_volume,
)
from .errors import (
    ConvergenceError,
    DomainError,
    EndpointDegenerateError,
    FracspecError,
    NumericalIntegrityError,
    PoleError,
    RegimeError,
)
from .morse import (
    ContributingPair,
    InequalityCheck,
    MorseReport,
    SurfaceSpectrum,
    check_bifurcation_inequality,
    jacobi_threshold,
    lambda_of_theta,
    morse_index_nullity,
)
from .specfun import digamma, gamma, log_gamma, psi_shift_series
from .symbol import (
    BCoordinate,
    HalfAxisPoint,
    SpectralParams,
    a_m,
    b_of_lambda,
    d_gamma_normalizer,
    dlog_theta,
    mu_m,
    q_gamma_trivial,
    theta,
    theta_complex,
    theta_eigenvalue,
    xi_const,
)
from .thresholds import CnRecord, F, cn_table, find_x0, solve_cn

__version__ = "0.1.0"

__all__ = [
    "BCoordinate",
    "BifurcationReport",
    "BreakpointTrack",
    "CnRecord",
    "ContributingPair",
    "ConvergenceError",
    "DomainError",
    "EndpointDegenerateError",
    "F",
    "FracspecError",
    "HalfAxisPoint",
    "InequalityCheck",
    "Instant",
    "MorseReport",
    "NumericalIntegrityError",
    "PoleError",
    "RegimeError",
    "SpectralParams",
    "SpectralPath",
    "SurfaceSpectrum",
    "a_m",
    "b_of_lambda",
    "check_bifurcation_inequality",
    "cn_table",
    "d_gamma_normalizer",
    "detect_instants",
    "digamma",
    "dlog_theta",
    "find_x0",
    "gamma",
    "jacobi_threshold",
    "lambda_of_theta",
    "load_path_file",
    "log_gamma",
    "morse_index_nullity",
    "mu_m",
    "pinching_family",
    "product_volume",
    "psi_shift_series",
    "q_gamma_trivial",
    "solve_cn",
    "theta",
    "theta_complex",
    "theta_eigenvalue",
    "xi_const",
]
