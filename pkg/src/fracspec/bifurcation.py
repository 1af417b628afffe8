"""Parametric spectral paths, degeneracy instants, and index jumps.

The existence proofs move a hyperbolic metric along a path that pinches
the surface, driving chosen Laplace eigenvalues down toward 1/4 so the
corresponding eigenvalue curves Theta_{0,l}(t) sink below the Jacobi
threshold. Spectra along genuine Teichmueller paths are not computable
in closed form, so this module works directly on eigenvalue tracks:
piecewise-linear breakpoint tables lambda_l(t) on [0, 1], with the
pinching family as the canonical synthetic construction.

A degeneracy instant is a t where some Theta_{0,l}(t) crosses the
threshold; each downward crossing raises the Morse index by one.
Tangential touches produce no index jump and are only warned about
(qualifying as non-generic by the avoidance principle).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from pathlib import Path

from .errors import DomainError, EndpointDegenerateError, NumericalIntegrityError
from .morse import DEFAULT_NULL_TOL_FACTOR, SurfaceSpectrum, jacobi_threshold
from .specfun import gamma_real
from .symbol import SpectralParams, theta_eigenvalue

__all__ = [
    "BreakpointTrack",
    "SpectralPath",
    "Instant",
    "BifurcationReport",
    "pinching_family",
    "detect_instants",
    "product_volume",
    "load_path_file",
    "DEFAULT_SCAN_RESOLUTION",
    "DEFAULT_REFINE_TOL",
]

DEFAULT_SCAN_RESOLUTION = 1024
DEFAULT_REFINE_TOL = 1e-10


@dataclass(frozen=True)
class BreakpointTrack:
    """One eigenvalue track t -> lambda(t): linear interpolation between
    breakpoints; times must start at 0, end at 1, strictly increase."""

    times: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        ts = tuple(float(t) for t in self.times)
        vs = tuple(float(v) for v in self.values)
        object.__setattr__(self, "times", ts)
        object.__setattr__(self, "values", vs)
        if len(ts) != len(vs) or len(ts) < 2:
            raise DomainError("track needs matching times/values with >= 2 breakpoints")
        if ts[0] != 0.0 or ts[-1] != 1.0:
            raise DomainError("track must span [0, 1]")
        if any(t1 >= t2 for t1, t2 in zip(ts, ts[1:])):
            raise DomainError("breakpoint times must strictly increase")
        if any(not math.isfinite(v) or v <= 0.0 for v in vs):
            raise DomainError("track values must be finite and positive")

    def __call__(self, t: float) -> float:
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"t must lie in [0, 1], got {t!r}")
        if t == 0.0:
            return self.values[0]
        if t == 1.0:
            return self.values[-1]
        i = bisect_right(self.times, t) - 1
        t0, t1 = self.times[i], self.times[i + 1]
        v0, v1 = self.values[i], self.values[i + 1]
        w = (t - t0) / (t1 - t0)
        return v0 + w * (v1 - v0)

    @classmethod
    def constant(cls, value: float) -> "BreakpointTrack":
        return cls((0.0, 1.0), (value, value))

    @classmethod
    def linear(cls, start: float, end: float) -> "BreakpointTrack":
        return cls((0.0, 1.0), (start, end))


@dataclass(frozen=True)
class SpectralPath:
    """A family t -> {lambda_l(t)} of surface spectra on [0, 1].

    Tracks carry l >= 1; lambda_0(t) = 0 is implicit. Tracks may cross
    each other (global sorting is not preserved along the path). The
    truncation bound certifies every unlisted eigenvalue from below,
    uniformly in t.
    """

    kind: str  # "piecewise-linear" | "pinching-family" | "user-sampled"
    tracks: tuple[BreakpointTrack, ...]
    truncation_bound: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("piecewise-linear", "pinching-family", "user-sampled"):
            raise DomainError(f"unknown path kind {self.kind!r}")
        if not self.tracks:
            raise DomainError("a spectral path needs at least one track")

    def values_at(self, t: float) -> list[float]:
        return [track(t) for track in self.tracks]

    def spectrum_at(self, t: float) -> SurfaceSpectrum:
        vals = sorted(self.values_at(t))
        tb = self.truncation_bound
        if tb is not None:
            tb = max(tb, vals[-1])
        return SurfaceSpectrum((0.0, *vals), truncation_bound=tb)


def pinching_family(
    J: int,
    lambda_end: float,
    spectrum_base: SurfaceSpectrum,
) -> SpectralPath:
    """Synthetic pinching path: the first J nonzero eigenvalues descend
    linearly from their base values to lambda_end in (1/4, base value);
    the rest stay put. Models driving J eigenvalues toward the 1/4
    accumulation level by degenerating the surface."""
    if not isinstance(J, int) or isinstance(J, bool) or J < 1:
        raise DomainError(f"J must be a positive integer, got {J!r}")
    lambda_end = float(lambda_end)
    if not (math.isfinite(lambda_end) and lambda_end > 0.25):
        raise DomainError(f"lambda_end must exceed 1/4, got {lambda_end!r}")
    nonzero = spectrum_base.eigenvalues[1:]
    if J > len(nonzero):
        raise DomainError(
            f"J={J} exceeds the {len(nonzero)} nonzero base eigenvalues"
        )
    if any(v <= lambda_end for v in nonzero[:J]):
        raise DomainError(
            "pinched tracks must descend: every pinched base eigenvalue "
            f"must exceed lambda_end={lambda_end:g}"
        )
    tracks = [BreakpointTrack.linear(v, lambda_end) for v in nonzero[:J]]
    tracks += [BreakpointTrack.constant(v) for v in nonzero[J:]]
    return SpectralPath(
        kind="pinching-family",
        tracks=tuple(tracks),
        truncation_bound=spectrum_base.truncation_bound,
    )


@dataclass(frozen=True)
class Instant:
    """One threshold crossing: track `ell` passes the Jacobi level at
    t_star; direction +1 when Theta drops below (index gain), -1 when
    it rises above."""

    t_star: float
    ell: int
    direction: int
    theta_value: float
    residual: float

    def to_dict(self) -> dict:
        return {
            "t_star": self.t_star,
            "ell": self.ell,
            "direction": self.direction,
            "theta": self.theta_value,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class BifurcationReport:
    instants: tuple[Instant, ...]
    index_profile: tuple[tuple[float, float, int], ...]  # (t_from, t_to, index)
    jump_total: int
    threshold: float
    warnings: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.index_profile:
            first = self.index_profile[0][2]
            last = self.index_profile[-1][2]
            if self.jump_total != last - first:
                raise NumericalIntegrityError(
                    "jump_total disagrees with the endpoint indices"
                )

    def to_dict(self) -> dict:
        return {
            "jump_total": self.jump_total,
            "threshold": self.threshold,
            "instants": [i.to_dict() for i in self.instants],
            "index_profile": [
                {"t_from": a, "t_to": b, "index": idx} for a, b, idx in self.index_profile
            ],
            "warnings": list(self.warnings),
        }


def _refine_crossing(phi, t_lo: float, t_hi: float, s_lo: float, refine_tol: float):
    """Bisect a sign change of phi to width refine_tol in t."""
    for _ in range(200):
        if (t_hi - t_lo) <= refine_tol:
            break
        mid = 0.5 * (t_lo + t_hi)
        if mid <= t_lo or mid >= t_hi:
            break
        s_mid = phi(mid)
        if s_mid == 0.0:
            return mid
        if (s_mid > 0.0) == (s_lo > 0.0):
            t_lo, s_lo = mid, s_mid
        else:
            t_hi = mid
    return 0.5 * (t_lo + t_hi)


def _refine_touch(phi_abs, t_lo: float, t_hi: float, tol: float) -> float:
    """Golden-section minimum of |phi| over [t_lo, t_hi]."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = t_lo, t_hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = phi_abs(c), phi_abs(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = phi_abs(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = phi_abs(d)
    return min(fc, fd)


def detect_instants(
    path: SpectralPath,
    params: SpectralParams,
    scan_resolution: int = DEFAULT_SCAN_RESOLUTION,
    refine_tol: float = DEFAULT_REFINE_TOL,
    null_tol: float | None = None,
) -> BifurcationReport:
    """Locate every threshold crossing of every track and build the
    Morse-index step profile over [0, 1].

    Endpoints must be nondegenerate (no track within null_tol of the
    threshold at t = 0 or 1). The profile reconstructed from crossing
    counts is validated against direct counts at the midpoint of each
    step; a mismatch flags the scan as too coarse. Scanning is
    sequential and the report ordering is (t_star, ell), so identical
    inputs give identical reports.
    """
    if not isinstance(scan_resolution, int) or scan_resolution < 2:
        raise DomainError(f"scan_resolution must be an integer >= 2, got {scan_resolution!r}")
    if not (math.isfinite(refine_tol) and 0.0 < refine_tol < 1.0):
        raise DomainError(f"refine_tol must lie in (0, 1), got {refine_tol!r}")
    threshold = jacobi_threshold(params)
    if null_tol is None:
        null_tol = DEFAULT_NULL_TOL_FACTOR * threshold

    def phi_for(track: BreakpointTrack):
        def phi(t: float) -> float:
            return theta_eigenvalue(0, track(t), params) - threshold

        return phi

    phis = [phi_for(tr) for tr in path.tracks]
    for ell, phi in enumerate(phis, start=1):
        for t_end in (0.0, 1.0):
            if abs(phi(t_end)) <= null_tol:
                raise EndpointDegenerateError(
                    f"track {ell} sits on the threshold at t={t_end:g}"
                )

    warnings: list[str] = []
    instants: list[Instant] = []
    ts = [i / scan_resolution for i in range(scan_resolution + 1)]
    touch_scan_tol = 1e-3 * threshold
    for ell, phi in enumerate(phis, start=1):
        samples = [phi(t) for t in ts]
        # exact zeros at interior samples: nudge so the sign test is decisive
        for i in range(1, scan_resolution):
            if samples[i] == 0.0:
                samples[i] = phi(ts[i] + min(1e-12, refine_tol))
        for i in range(scan_resolution):
            s0, s1 = samples[i], samples[i + 1]
            if s0 == 0.0 or s1 == 0.0:
                continue  # endpoint zeros excluded by nondegeneracy
            if (s0 > 0.0) != (s1 > 0.0):
                t_star = _refine_crossing(phi, ts[i], ts[i + 1], s0, refine_tol)
                value = theta_eigenvalue(0, path.tracks[ell - 1](t_star), params)
                instants.append(
                    Instant(
                        t_star=t_star,
                        ell=ell,
                        direction=+1 if s0 > 0.0 else -1,
                        theta_value=value,
                        residual=abs(value - threshold),
                    )
                )
        # tangential contacts: same-sign local minima of |phi| near zero
        for i in range(1, scan_resolution):
            if (
                abs(samples[i]) <= touch_scan_tol
                and abs(samples[i]) <= abs(samples[i - 1])
                and abs(samples[i]) <= abs(samples[i + 1])
                and (samples[i - 1] > 0.0) == (samples[i + 1] > 0.0)
                and (samples[i] > 0.0) == (samples[i + 1] > 0.0)
            ):
                touched = _refine_touch(
                    lambda t: abs(phi(t)), ts[max(i - 1, 0)], ts[min(i + 1, scan_resolution)],
                    tol=refine_tol,
                )
                if touched <= 10.0 * null_tol:
                    warnings.append(
                        f"track {ell} grazes the threshold near t={ts[i]:.6f} "
                        "without crossing (tangency; no index jump)"
                    )

    instants.sort(key=lambda inst: (inst.t_star, inst.ell))

    index_start = sum(1 for phi in phis if phi(0.0) < -null_tol)
    profile: list[tuple[float, float, int]] = []
    current = index_start
    t_prev = 0.0
    for inst in instants:
        profile.append((t_prev, inst.t_star, current))
        current += inst.direction
        t_prev = inst.t_star
    profile.append((t_prev, 1.0, current))

    # validate the reconstructed profile by direct counting at midpoints;
    # zero-width steps (simultaneous crossings of repeated tracks) have
    # no interior point to test
    for t_from, t_to, idx in profile:
        if (t_to - t_from) <= 2.0 * refine_tol:
            continue
        t_mid = 0.5 * (t_from + t_to)
        direct = sum(1 for phi in phis if phi(t_mid) < 0.0)
        if direct != idx:
            warnings.append(
                f"profile mismatch at t={t_mid:.6f}: crossing count gives {idx}, "
                f"direct count gives {direct}; scan resolution too coarse"
            )

    return BifurcationReport(
        instants=tuple(instants),
        index_profile=tuple(profile),
        jump_total=current - index_start,
        threshold=threshold,
        warnings=tuple(warnings),
    )


def product_volume(n: int, genus: int) -> float:
    """Volume of the normalized product S^{n-2} x Sigma^2,

        8 pi^{(n+1)/2} / Gamma((n-1)/2) * (genus - 1),

    the unit-sphere volume times the Gauss-Bonnet area 4 pi (genus-1).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 4:
        raise DomainError(f"n must be an integer >= 4, got {n!r}")
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 2:
        raise DomainError(f"genus must be an integer >= 2, got {genus!r}")
    return 8.0 * math.pi ** ((n + 1) / 2.0) / gamma_real((n - 1) / 2.0) * (genus - 1)


def load_path_file(path: str | Path) -> tuple[SpectralPath, dict[str, str]]:
    """Parse the path file format: '#'-prefixed metadata lines
    ('# key: value'), a 't,lambda_1,lambda_2,...' header, breakpoint
    rows, linear interpolation between them. Returns the path and the
    raw metadata (n, k, gamma defaults are the CLI's business)."""
    meta: dict[str, str] = {}
    header: list[str] | None = None
    rows: list[list[float]] = []
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
        cells = [c.strip() for c in line.split(",")]
        if header is None:
            if cells[0] != "t" or len(cells) < 2 or any(
                not c.startswith("lambda_") for c in cells[1:]
            ):
                raise DomainError(
                    f"{path}:{lineno}: expected header 't,lambda_1,...', got {line!r}"
                )
            header = cells
            continue
        if len(cells) != len(header):
            raise DomainError(
                f"{path}:{lineno}: expected {len(header)} cells, got {len(cells)}"
            )
        try:
            rows.append([float(c) for c in cells])
        except ValueError as exc:
            raise DomainError(f"{path}:{lineno}: bad number in {line!r}") from exc
    if header is None or len(rows) < 2:
        raise DomainError(f"{path}: need a header and at least two breakpoint rows")
    times = tuple(r[0] for r in rows)
    tracks = tuple(
        BreakpointTrack(times, tuple(r[j] for r in rows)) for j in range(1, len(header))
    )
    tb = None
    if "truncation_bound" in meta:
        try:
            tb = float(meta["truncation_bound"])
        except ValueError as exc:
            raise DomainError(
                f"{path}: bad truncation_bound {meta['truncation_bound']!r}"
            ) from exc
    return SpectralPath(kind="user-sampled", tracks=tracks, truncation_bound=tb), meta
