"""Brute-force Morse counts over the full (m, l) eigenvalue grid.

The fast path in the primary package only walks m = 0; the oracle
enumerates every Theta_{m,l} with m <= m_max, l <= L at working
precision and counts cells below / on the Jacobi threshold. Omitted
cells are certified through monotonicity: the first omitted m-row is
checked at l = 0 (rows grow with m), and the m = 0 tail is checked at
the spectrum's truncation bound (the curve grows with lambda).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from mpmath import mpf

from .funcs import a_m, b_of_lambda, jacobi_threshold, theta

# mirrors the primary default: nullity band of 1e-9 * threshold
NULL_TOL_FACTOR = mpf(10) ** -9


class CertificationError(RuntimeError):
    """Caps too small to certify that omitted cells stay above threshold."""


@dataclass(frozen=True)
class SpectrumFile:
    eigenvalues: tuple[float, ...]
    genus: int | None
    truncation_bound: float | None

    @property
    def effective_truncation_bound(self) -> float:
        if self.truncation_bound is not None:
            return self.truncation_bound
        return self.eigenvalues[-1]


def read_spectrum(path: str | Path) -> SpectrumFile:
    """Independent parser for the surface-spectrum file format."""
    meta: dict[str, str] = {}
    values: list[float] = []
    header_seen = False
    for raw in Path(path).read_text().splitlines():
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
                raise ValueError(f"{path}: expected 'lambda' header, got {line!r}")
            header_seen = True
            continue
        values.append(float(line))
    if not header_seen or len(values) < 2:
        raise ValueError(f"{path}: missing header or too few eigenvalues")
    if values[0] != 0.0 or values[1] <= 0.0:
        raise ValueError(f"{path}: spectrum must start 0 < lambda_1")
    if any(a > b for a, b in zip(values, values[1:])):
        raise ValueError(f"{path}: eigenvalues must be nondecreasing")
    genus = int(meta["genus"]) if "genus" in meta else None
    tb = float(meta["truncation_bound"]) if "truncation_bound" in meta else None
    return SpectrumFile(tuple(values), genus, tb)


@dataclass(frozen=True)
class BruteForceCounts:
    index: int
    nullity: int
    m_ge_1: int  # contributing cells with m >= 1 (zero if the reduction holds)


def brute_force_morse(
    spectrum_path: str | Path,
    n: int,
    k: int,
    gamma: float,
    m_max: int,
) -> BruteForceCounts:
    if k != 1:
        raise ValueError(f"brute force mirrors the k = 1 theory, got k={k}")
    if m_max < 1:
        raise CertificationError(
            "m_max must enumerate at least the m = 1 row to certify the reduction"
        )
    surface = read_spectrum(spectrum_path)
    thr = jacobi_threshold(n, gamma)
    band = NULL_TOL_FACTOR * thr
    g = mpf(gamma)

    # certification of omitted cells
    kind0, b0 = b_of_lambda(surface.eigenvalues[0], k)
    first_omitted_row = theta(a_m(m_max + 1, n, k), kind0, b0, g)
    if not first_omitted_row > thr + band:
        raise CertificationError(
            f"row m={m_max + 1} does not clear the threshold; raise m_max"
        )
    kind_t, b_t = b_of_lambda(surface.effective_truncation_bound, k)
    tail = theta(a_m(0, n, k), kind_t, b_t, g)
    if not tail > thr + band:
        raise CertificationError(
            "truncation bound does not clear the threshold; spectrum too short"
        )

    index = nullity = m_ge_1 = 0
    for m in range(0, m_max + 1):
        am = a_m(m, n, k)
        for ell, lam in enumerate(surface.eigenvalues):
            if m == 0 and ell == 0:
                continue  # the constant mode is excluded
            kind, bv = b_of_lambda(lam, k)
            value = theta(am, kind, bv, g)
            if abs(value - thr) <= band:
                nullity += 1
                if m >= 1:
                    m_ge_1 += 1
            elif value < thr - band:
                index += 1
                if m >= 1:
                    m_ge_1 += 1
    return BruteForceCounts(index=index, nullity=nullity, m_ge_1=m_ge_1)
