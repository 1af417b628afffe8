"""Spectral data of the fractional conformal operator on S^{n-k-1} x H^{k+1}.

The whole theory is carried by one function of two spectral coordinates,

    Theta(a, b) = 4^g * G((1+g)/2 + (a+bi)/2) G((1+g)/2 + (a-bi)/2)
                      / [G((1-g)/2 + (a+bi)/2) G((1-g)/2 + (a-bi)/2)],

with G = Gamma and g the fractional order. The first coordinate comes
from spherical harmonics, a_m = sqrt(m(m+n-k-2) + ((n-k-2)/2)^2); the
second from hyperbolic Laplace eigenvalues, b_l = sqrt(lambda_l -
(k/2)^2), purely imaginary when lambda_l < (k/2)^2. Operator
eigenvalues are Theta(a_m, b_l); the trivial constant-curvature value
is Theta at (a_0, i k/2).

For imaginary b = i*beta the two numerator (and denominator) arguments
are real, so the product is evaluated in real arithmetic; for real b
the two factors are complex conjugates, so only one complex log-Gamma
per factor pair is needed. Both routes are positive by construction;
the raw complex evaluation is kept (theta_complex) for cross-checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NumericalIntegrityError, PoleError, RegimeError
from .specfun import digamma, digamma_real, gamma_real, log_gamma, log_gamma_real

__all__ = [
    "SpectralParams",
    "BCoordinate",
    "HalfAxisPoint",
    "mu_m",
    "a_m",
    "b_of_lambda",
    "theta",
    "theta_complex",
    "theta_eigenvalue",
    "q_gamma_trivial",
    "xi_const",
    "dlog_theta",
    "d_gamma_normalizer",
]

_LN4 = math.log(4.0)

# Relative imaginary residue above which a complex evaluation that must
# be real is rejected instead of truncated.
REALITY_TOL = 1e-10


def _finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


@dataclass(frozen=True)
class SpectralParams:
    """The triple (n, k, gamma) fixing the geometry and the order.

    n >= 3 is the ambient dimension, 0 <= k < n the singular-set
    dimension, gamma in (0, n/2) the fractional order. The eigenvalue
    machinery additionally needs `admissible_spectrum` (1 <= k <
    n/2 - gamma); integer gamma is tolerated for comparison tables and
    exposed through the `extended` flag.
    """

    n: int
    k: int
    gamma: float

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise DomainError(f"n must be an integer, got {self.n!r}")
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise DomainError(f"k must be an integer, got {self.k!r}")
        if self.n < 3:
            raise DomainError(f"n >= 3 required, got n={self.n}")
        if not 0 <= self.k < self.n:
            raise DomainError(f"0 <= k < n required, got k={self.k}, n={self.n}")
        g = _finite(self.gamma, "gamma")
        object.__setattr__(self, "gamma", g)
        if not 0.0 < g < self.n / 2.0:
            raise DomainError(
                f"gamma in (0, n/2) required, got gamma={g:g} with n={self.n}"
            )

    @property
    def admissible_spectrum(self) -> bool:
        """True iff 1 <= k < n/2 - gamma, the eigenvalue regime."""
        return 1 <= self.k and self.k < self.n / 2.0 - self.gamma

    @property
    def extended(self) -> bool:
        """True iff gamma is an integer (scattering poles; tables only)."""
        return float(self.gamma).is_integer()

    @property
    def a0(self) -> float:
        """Smallest spherical coordinate, (n - k - 2)/2."""
        return (self.n - self.k - 2) / 2.0


@dataclass(frozen=True)
class BCoordinate:
    """Tagged second coordinate: real b >= 0 or imaginary i*beta, beta > 0."""

    kind: str  # "real" | "imaginary"
    value: float

    def __post_init__(self) -> None:
        v = _finite(self.value, "b-coordinate")
        object.__setattr__(self, "value", v)
        if self.kind == "real":
            if v < 0.0:
                raise DomainError(f"real b must be >= 0, got {v:g}")
        elif self.kind == "imaginary":
            if v <= 0.0:
                raise DomainError(f"imaginary part beta must be > 0, got {v:g}")
        else:
            raise DomainError(f"unknown b-coordinate kind {self.kind!r}")

    @classmethod
    def real_axis(cls, b: float) -> "BCoordinate":
        return cls("real", b)

    @classmethod
    def imaginary_axis(cls, beta: float) -> "BCoordinate":
        return cls("imaginary", beta)

    def as_complex(self) -> complex:
        return complex(0.0, self.value) if self.kind == "imaginary" else complex(self.value, 0.0)


@dataclass(frozen=True)
class HalfAxisPoint:
    """A point (a, b) at which the symbol Theta is evaluated."""

    a: float
    b: BCoordinate

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _finite(self.a, "a"))


def mu_m(m: int, params: SpectralParams) -> float:
    """Spherical harmonic eigenvalue m(m + n - k - 2) on S^{n-k-1}."""
    _require_spectrum_regime(params)
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    return float(m * (m + params.n - params.k - 2))


def a_m(m: int, params: SpectralParams) -> float:
    """First spectral coordinate sqrt(mu_m + ((n-k-2)/2)^2); increasing in m."""
    half = (params.n - params.k - 2) / 2.0
    return math.sqrt(mu_m(m, params) + half * half)


def b_of_lambda(lam: float, k: int) -> BCoordinate:
    """Second spectral coordinate sqrt(lambda - (k/2)^2).

    Purely imaginary with beta = sqrt((k/2)^2 - lambda) below the
    branch value (k/2)^2; lambda = (k/2)^2 maps to real 0.
    """
    lam = _finite(lam, "lambda")
    if lam < 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam:g}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    half_sq = (k / 2.0) ** 2
    if lam >= half_sq:
        return BCoordinate.real_axis(math.sqrt(lam - half_sq))
    return BCoordinate.imaginary_axis(math.sqrt(half_sq - lam))


def _require_spectrum_regime(params: SpectralParams) -> None:
    if not params.admissible_spectrum:
        raise RegimeError(
            f"eigenvalue regime requires 1 <= k < n/2 - gamma, got "
            f"(n, k, gamma) = ({params.n}, {params.k}, {params.gamma:g})"
        )


def _theta_arguments(point: HalfAxisPoint, params: SpectralParams):
    """The four Gamma arguments, validated for positive real part.

    Returns ('imag', p_plus, p_minus, q_plus, q_minus) with all real, or
    ('real', z_num, z_den) with the two conjugate-pair representatives.
    """
    a = point.a
    g = params.gamma
    if a < params.a0 - 1e-12:
        raise DomainError(
            f"a must be >= a_0 = {params.a0:g}, got {a:g}"
        )
    if point.b.kind == "imaginary":
        beta = point.b.value
        if beta > params.k / 2.0 + 1e-12:
            raise RegimeError(
                f"imaginary part beta must lie in (0, k/2] = (0, {params.k / 2.0:g}], got {beta:g}"
            )
        p_plus = (1.0 + g) / 2.0 + (a + beta) / 2.0
        p_minus = (1.0 + g) / 2.0 + (a - beta) / 2.0
        q_plus = (1.0 - g) / 2.0 + (a + beta) / 2.0
        q_minus = (1.0 - g) / 2.0 + (a - beta) / 2.0
        if min(p_plus, p_minus, q_plus, q_minus) <= 0.0:
            raise RegimeError(
                "a Gamma argument has nonpositive real part; "
                f"(n, k, gamma, a, beta) = ({params.n}, {params.k}, {g:g}, {a:g}, {beta:g})"
            )
        return ("imag", p_plus, p_minus, q_plus, q_minus)
    b = point.b.value
    z_num = complex((1.0 + g) / 2.0 + a / 2.0, b / 2.0)
    z_den = complex((1.0 - g) / 2.0 + a / 2.0, b / 2.0)
    if z_den.real <= 0.0 or z_num.real <= 0.0:
        raise RegimeError(
            "a Gamma argument has nonpositive real part; "
            f"(n, k, gamma, a, b) = ({params.n}, {params.k}, {g:g}, {a:g}, {b:g})"
        )
    return ("real", z_num, z_den)


def theta(point: HalfAxisPoint, params: SpectralParams, cross_check: bool = False) -> float:
    """The symbol Theta(a, b); strictly positive in the admissible regime.

    Real by construction: the imaginary-b branch multiplies four real
    Gamma values, the real-b branch pairs conjugate factors. With
    cross_check=True the raw complex product is evaluated as well and
    its imaginary residue vetted against REALITY_TOL.
    """
    args = _theta_arguments(point, params)
    g = params.gamma
    if args[0] == "imag":
        _, p_plus, p_minus, q_plus, q_minus = args
        log_ratio = (
            log_gamma_real(p_plus)
            + log_gamma_real(p_minus)
            - log_gamma_real(q_plus)
            - log_gamma_real(q_minus)
        )
    else:
        _, z_num, z_den = args
        log_ratio = 2.0 * (log_gamma(z_num).real - log_gamma(z_den).real)
    value = math.exp(g * _LN4 + log_ratio)
    if cross_check:
        raw = theta_complex(point, params)
        _assert_real(raw, context="theta cross-check")
        if abs(raw.real - value) > 1e-10 * abs(value):
            raise NumericalIntegrityError(
                f"real and complex Theta evaluations disagree: {value!r} vs {raw!r}"
            )
    return value


def theta_complex(point: HalfAxisPoint, params: SpectralParams) -> complex:
    """Theta(a, b) by direct complex arithmetic (no reality enforcement)."""
    _theta_arguments(point, params)  # regime validation only
    a = point.a
    g = params.gamma
    b = point.b.as_complex()
    zp = (a + b * 1j) / 2.0
    zm = (a - b * 1j) / 2.0
    log_ratio = (
        log_gamma((1.0 + g) / 2.0 + zp)
        + log_gamma((1.0 + g) / 2.0 + zm)
        - log_gamma((1.0 - g) / 2.0 + zp)
        - log_gamma((1.0 - g) / 2.0 + zm)
    )
    return cmath.exp(g * _LN4 + log_ratio)


def _assert_real(value: complex, context: str) -> float:
    if abs(value.imag) > REALITY_TOL * max(abs(value.real), 1e-300):
        raise NumericalIntegrityError(
            f"{context}: imaginary residue {value.imag:g} exceeds "
            f"{REALITY_TOL:g} relative to {value.real:g}"
        )
    return value.real


def theta_eigenvalue(m: int, lambda_l: float, params: SpectralParams) -> float:
    """Operator eigenvalue Theta(a_m, b(lambda_l)) on the compact quotient."""
    point = HalfAxisPoint(a_m(m, params), b_of_lambda(lambda_l, params.k))
    return theta(point, params)


def q_gamma_trivial(params: SpectralParams, allow_out_of_regime: bool = False) -> float:
    """Constant curvature of the trivial product solution,

        4^g G((n+2g)/4) G((n-2k+2g)/4) / [G((n-2g)/4) G((n-2k-2g)/4)],

    strictly positive for 0 <= k < n/2 - gamma. With
    allow_out_of_regime=True the same Gamma ratio is evaluated off the
    positivity regime (sign-correct, for comparison tables), raising
    PoleError when an argument hits a nonpositive integer.
    """
    n, k, g = params.n, params.k, params.gamma
    args = ((n + 2 * g) / 4.0, (n - 2 * k + 2 * g) / 4.0,
            (n - 2 * g) / 4.0, (n - 2 * k - 2 * g) / 4.0)
    in_regime = k < n / 2.0 - g
    if not in_regime and not allow_out_of_regime:
        raise RegimeError(
            f"positivity regime requires 0 <= k < n/2 - gamma, got "
            f"(n, k, gamma) = ({n}, {k}, {g:g})"
        )
    num1, num2, den1, den2 = args
    if in_regime:
        return math.exp(
            g * _LN4
            + log_gamma_real(num1)
            - log_gamma_real(den1)
            + log_gamma_real(num2)
            - log_gamma_real(den2)
        )
    return (4.0 ** g) * gamma_real(num1) * gamma_real(num2) / (
        gamma_real(den1) * gamma_real(den2)
    )


def xi_const(params: SpectralParams) -> float:
    """The accumulation level Xi = Theta(a_0, 0) for k = 1,

        4^g G(n/4 + g/2 - 1/4)^2 / G(n/4 - g/2 - 1/4)^2,

    defined for gamma < n/2 - 1."""
    if params.k != 1:
        raise RegimeError(f"Xi is defined for k = 1, got k={params.k}")
    if params.gamma >= params.n / 2.0 - 1.0:
        raise RegimeError(
            f"Xi requires gamma < n/2 - 1 = {params.n / 2.0 - 1.0:g}, got {params.gamma:g}"
        )
    return theta(HalfAxisPoint(params.a0, BCoordinate.real_axis(0.0)), params)


def dlog_theta(point: HalfAxisPoint, params: SpectralParams, direction: str) -> float:
    """Logarithmic derivative of Theta along 'a', 'b' (real b > 0 only),
    or 'beta' (imaginary b only), in terms of the digamma function.

    Signs in the admissible regime: d/da > 0 and d/dbeta < 0 on the
    imaginary branch with 0 < beta <= k/2, d/db > 0 on the real branch.
    """
    args = _theta_arguments(point, params)
    g = params.gamma
    if args[0] == "imag":
        _, p_plus, p_minus, q_plus, q_minus = args
        if direction == "a":
            return 0.5 * (
                digamma_real(p_plus)
                + digamma_real(p_minus)
                - digamma_real(q_plus)
                - digamma_real(q_minus)
            )
        if direction == "beta":
            return 0.5 * (
                (digamma_real(p_plus) - digamma_real(q_plus))
                - (digamma_real(p_minus) - digamma_real(q_minus))
            )
        if direction == "b":
            raise DomainError("direction 'b' needs a real b-coordinate")
        raise DomainError(f"unknown direction {direction!r}")
    _, z_num, z_den = args
    diff = digamma(z_num) - digamma(z_den)
    if direction == "a":
        return diff.real
    if direction == "b":
        if point.b.value <= 0.0:
            raise DomainError("direction 'b' requires b > 0")
        return -diff.imag
    if direction == "beta":
        raise DomainError("direction 'beta' needs an imaginary b-coordinate")
    raise DomainError(f"unknown direction {direction!r}")


def d_gamma_normalizer(gamma_order: float) -> float:
    """Scattering normalizer 4^g Gamma(g)/Gamma(-g), g > 0 non-integer.

    Evaluated through the reflection identity as
    -4^g Gamma(g) Gamma(1+g) sin(pi g) / pi.
    """
    g = _finite(gamma_order, "gamma")
    if g <= 0.0:
        raise DomainError(f"gamma must be > 0, got {g:g}")
    if float(g).is_integer():
        raise PoleError(f"Gamma(-gamma) pole at integer gamma = {g:g}")
    return -math.exp(
        g * _LN4 + log_gamma_real(g) + log_gamma_real(1.0 + g)
    ) * math.sin(math.pi * g) / math.pi
