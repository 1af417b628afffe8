"""Morse index and nullity of the trivial solution on S^{n-2} x Sigma^2.

For k = 1 and gamma < n/2 - 1, every eigenvalue at or below the Jacobi
comparison level ((n+2g)/(n-2g)) * Theta_{0,0} has spherical mode
m = 0, so the count reduces to a walk over the surface spectrum:

    index   = #{ l >= 1 : Theta_{0,l} <  threshold }
    nullity = #{ l >= 1 : Theta_{0,l} == threshold }

Exact equality is meaningless in floating point, so nullity is a band
of half-width null_tol around the threshold (ties are non-generic, by
the avoidance principle for the eigenvalue curves). Completeness of a
truncated spectrum is certified through monotonicity of Theta in
lambda: once Theta at the truncation bound clears the threshold, no
omitted eigenvalue can contribute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError, NumericalIntegrityError, RegimeError
from .symbol import (
    BCoordinate,
    HalfAxisPoint,
    SpectralParams,
    b_of_lambda,
    q_gamma_trivial,
    theta,
    theta_eigenvalue,
    xi_const,
)

__all__ = [
    "SurfaceSpectrum",
    "ContributingPair",
    "MorseReport",
    "jacobi_threshold",
    "morse_index_nullity",
    "lambda_of_theta",
    "check_bifurcation_inequality",
    "InequalityCheck",
    "DEFAULT_NULL_TOL_FACTOR",
]

# Default nullity band half-width, as a fraction of the threshold.
DEFAULT_NULL_TOL_FACTOR = 1e-9


@dataclass(frozen=True)
class SurfaceSpectrum:
    """A finite nondecreasing list of Laplace eigenvalues of a closed
    hyperbolic surface, multiplicities by repetition.

    lambda_0 = 0 < lambda_1 is enforced (connected closed surface).
    truncation_bound is a guaranteed lower bound for every omitted
    eigenvalue; it defaults to the last listed one. When a genus is
    given, at most 2*genus - 2 entries may sit below 1/4.
    """

    eigenvalues: tuple[float, ...]
    genus: int | None = None
    truncation_bound: float | None = None

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.eigenvalues)
        object.__setattr__(self, "eigenvalues", vals)
        if len(vals) < 2:
            raise DomainError("spectrum needs lambda_0 = 0 and at least one lambda_1 > 0")
        if any(not math.isfinite(v) for v in vals):
            raise DomainError("spectrum contains a non-finite eigenvalue")
        if vals[0] != 0.0:
            raise DomainError(f"lambda_0 must be 0, got {vals[0]:g}")
        if vals[1] <= 0.0:
            raise DomainError(f"lambda_1 must be positive, got {vals[1]:g}")
        if any(vals[i] > vals[i + 1] for i in range(len(vals) - 1)):
            raise DomainError("eigenvalues must be nondecreasing")
        if self.genus is not None:
            if not isinstance(self.genus, int) or self.genus < 2:
                raise DomainError(f"genus must be an integer >= 2, got {self.genus!r}")
            small = sum(1 for v in vals if v < 0.25)
            if small > 2 * self.genus - 2:
                raise DomainError(
                    f"{small} eigenvalues below 1/4 exceed the 2*genus-2 = "
                    f"{2 * self.genus - 2} allowed at genus {self.genus}"
                )
        if self.truncation_bound is not None:
            tb = float(self.truncation_bound)
            if not math.isfinite(tb) or tb < vals[-1]:
                raise DomainError(
                    f"truncation_bound must be finite and >= lambda_L = {vals[-1]:g}"
                )
            object.__setattr__(self, "truncation_bound", tb)

    @property
    def effective_truncation_bound(self) -> float:
        return self.truncation_bound if self.truncation_bound is not None else self.eigenvalues[-1]

    def scaled(self, factor: float) -> "SurfaceSpectrum":
        """Spectrum with every nonzero eigenvalue multiplied by factor > 0."""
        if factor <= 0.0:
            raise DomainError(f"scale factor must be positive, got {factor:g}")
        vals = (0.0,) + tuple(v * factor for v in self.eigenvalues[1:])
        tb = None if self.truncation_bound is None else self.truncation_bound * factor
        # scaling can push entries across 1/4, so the genus cap may no
        # longer hold; drop the genus rather than fail
        return SurfaceSpectrum(vals, genus=None, truncation_bound=tb)

    def extended(self, extra: tuple[float, ...]) -> "SurfaceSpectrum":
        """Spectrum with eigenvalues above the truncation bound appended."""
        tb = self.effective_truncation_bound
        if any(v < tb for v in extra):
            raise DomainError("appended eigenvalues must be >= the truncation bound")
        vals = self.eigenvalues + tuple(sorted(float(v) for v in extra))
        new_tb = max([tb, *extra]) if extra else tb
        return SurfaceSpectrum(vals, genus=self.genus, truncation_bound=new_tb)

    @classmethod
    def from_file(cls, path: str | Path) -> "SurfaceSpectrum":
        """Parse the spectrum file format: '#'-prefixed metadata/comment
        lines ('# key: value'), one 'lambda' header, one eigenvalue per row."""
        meta: dict[str, str] = {}
        values: list[float] = []
        header_seen = False
        text = Path(path).read_text()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body:
                    key, _, val = body.partition(":")
                    meta[key.strip()] = val.strip()
                continue
            if not header_seen:
                if line != "lambda":
                    raise DomainError(
                        f"{path}:{lineno}: expected header 'lambda', got {line!r}"
                    )
                header_seen = True
                continue
            try:
                values.append(float(line))
            except ValueError as exc:
                raise DomainError(f"{path}:{lineno}: bad eigenvalue {line!r}") from exc
        if not header_seen:
            raise DomainError(f"{path}: missing 'lambda' header")
        genus = None
        if "genus" in meta:
            try:
                genus = int(meta["genus"])
            except ValueError as exc:
                raise DomainError(f"{path}: bad genus {meta['genus']!r}") from exc
        tb = None
        if "truncation_bound" in meta:
            try:
                tb = float(meta["truncation_bound"])
            except ValueError as exc:
                raise DomainError(
                    f"{path}: bad truncation_bound {meta['truncation_bound']!r}"
                ) from exc
        return cls(tuple(values), genus=genus, truncation_bound=tb)

    def to_file(self, path: str | Path) -> None:
        lines = []
        if self.genus is not None:
            lines.append(f"# genus: {self.genus}")
        if self.truncation_bound is not None:
            lines.append(f"# truncation_bound: {self.truncation_bound!r}")
        lines.append("lambda")
        lines.extend(repr(v) for v in self.eigenvalues)
        Path(path).write_text("\n".join(lines) + "\n")


@dataclass(frozen=True)
class ContributingPair:
    m: int
    ell: int
    kind: str  # "negative" | "null"
    theta_value: float


@dataclass(frozen=True)
class MorseReport:
    index: int
    nullity: int
    threshold: float
    null_tol: float
    contributing_pairs: tuple[ContributingPair, ...]
    complete: bool

    def __post_init__(self) -> None:
        neg = sum(1 for p in self.contributing_pairs if p.kind == "negative")
        nul = sum(1 for p in self.contributing_pairs if p.kind == "null")
        if neg != self.index or nul != self.nullity:
            raise NumericalIntegrityError("contributing pairs disagree with counts")

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "nullity": self.nullity,
            "threshold": self.threshold,
            "null_tol": self.null_tol,
            "complete": self.complete,
            "contributing_pairs": [
                {"m": p.m, "ell": p.ell, "kind": p.kind, "theta": p.theta_value}
                for p in self.contributing_pairs
            ],
        }


def _require_morse_regime(params: SpectralParams) -> None:
    if params.k != 1:
        raise RegimeError(
            f"Morse counting is established for k = 1 only, got k={params.k}"
        )
    if params.gamma >= params.n / 2.0 - 1.0:
        raise RegimeError(
            f"Morse counting requires gamma < n/2 - 1 = {params.n / 2.0 - 1.0:g}, "
            f"got gamma={params.gamma:g}"
        )


def jacobi_threshold(params: SpectralParams) -> float:
    """Comparison level ((n+2g)/(n-2g)) * Theta_{0,0} of the Jacobi operator."""
    _require_morse_regime(params)
    n, g = params.n, params.gamma
    return (n + 2.0 * g) / (n - 2.0 * g) * q_gamma_trivial(params)


def morse_index_nullity(
    spectrum: SurfaceSpectrum,
    params: SpectralParams,
    null_tol: float | None = None,
) -> MorseReport:
    """Morse index and nullity of the trivial solution for the given
    surface spectrum; every contributing pair has m = 0 and l >= 1."""
    _require_morse_regime(params)
    threshold = jacobi_threshold(params)
    if null_tol is None:
        null_tol = DEFAULT_NULL_TOL_FACTOR * threshold
    if null_tol < 0.0:
        raise DomainError(f"null_tol must be >= 0, got {null_tol:g}")
    pairs: list[ContributingPair] = []
    for ell, lam in enumerate(spectrum.eigenvalues):
        if ell == 0:
            continue  # the constant mode (0,0) lives outside L^2_0
        value = theta_eigenvalue(0, lam, params)
        if abs(value - threshold) <= null_tol:
            pairs.append(ContributingPair(0, ell, "null", value))
        elif value < threshold - null_tol:
            pairs.append(ContributingPair(0, ell, "negative", value))
    tail_theta = theta(
        HalfAxisPoint(params.a0, b_of_lambda(spectrum.effective_truncation_bound, params.k)),
        params,
    )
    complete = tail_theta > threshold + null_tol
    index = sum(1 for p in pairs if p.kind == "negative")
    nullity = sum(1 for p in pairs if p.kind == "null")
    return MorseReport(
        index=index,
        nullity=nullity,
        threshold=threshold,
        null_tol=null_tol,
        contributing_pairs=tuple(pairs),
        complete=complete,
    )


@dataclass(frozen=True)
class InequalityCheck:
    holds: bool
    margin: float
    threshold: float
    xi: float

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "margin": self.margin,
            "threshold": self.threshold,
            "xi": self.xi,
        }


def check_bifurcation_inequality(params: SpectralParams) -> InequalityCheck:
    """Whether Xi < ((n+2g)/(n-2g)) * Theta_{0,0}; margin = threshold - Xi.

    This is the gateway to index-jump paths: pinching drives eigenvalue
    curves down to Xi, so crossings below the threshold exist iff the
    inequality holds."""
    threshold = jacobi_threshold(params)
    xi = xi_const(params)
    margin = threshold - xi
    return InequalityCheck(holds=xi < threshold, margin=margin, threshold=threshold, xi=xi)


def lambda_of_theta(
    vartheta: float,
    params: SpectralParams,
    rel_tol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """The unique lambda > 1/4 with Theta(a_0, sqrt(lambda - 1/4)) = vartheta.

    Requires vartheta > Xi. The root is bracketed in the b-coordinate
    (Theta is strictly increasing there) by geometric growth and then
    bisected; the residual is verified to 1e-10 relative.
    """
    _require_morse_regime(params)
    vartheta = float(vartheta)
    xi = xi_const(params)
    if not (math.isfinite(vartheta) and vartheta > xi):
        raise DomainError(
            f"vartheta must exceed Xi = {xi!r}, got {vartheta!r}"
        )
    a0 = params.a0
    target = math.log(vartheta)

    def f(b: float) -> float:
        return math.log(theta(HalfAxisPoint(a0, BCoordinate.real_axis(b)), params)) - target

    b_lo, f_lo = 0.0, math.log(xi) - target  # < 0 by the domain check
    b_hi = 1.0
    for _ in range(80):
        f_hi = f(b_hi)
        if f_hi > 0.0:
            break
        b_lo, f_lo = b_hi, f_hi
        b_hi *= 2.0
    else:
        raise NumericalIntegrityError(
            f"failed to bracket lambda(vartheta) for vartheta={vartheta:g}"
        )
    for _ in range(max_iter):
        mid = 0.5 * (b_lo + b_hi)
        if mid <= b_lo or mid >= b_hi:
            break  # no representable midpoint left
        f_mid = f(mid)
        if f_mid == 0.0:
            b_lo = b_hi = mid
            break
        if f_mid < 0.0:
            b_lo, f_lo = mid, f_mid
        else:
            b_hi = mid
        if (b_hi - b_lo) <= rel_tol * max(1.0, b_hi):
            # keep halving a little past the request for residual slack
            if (b_hi - b_lo) <= 1e-15 * max(1.0, b_hi):
                break
    b_root = 0.5 * (b_lo + b_hi)
    lam = 0.25 + b_root * b_root
    achieved = theta(HalfAxisPoint(a0, BCoordinate.real_axis(b_root)), params)
    if abs(achieved - vartheta) > 1e-10 * vartheta:
        raise NumericalIntegrityError(
            f"lambda_of_theta residual {abs(achieved - vartheta):g} exceeds "
            f"1e-10 relative at vartheta={vartheta:g}"
        )
    return lam
