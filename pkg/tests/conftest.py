"""Shared test plumbing: golden-file access and the brute-force Morse
count used as the in-suite oracle for the m = 0 fast path."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from fracspec import SpectralParams, SurfaceSpectrum, jacobi_threshold, theta_eigenvalue
from fracspec.morse import DEFAULT_NULL_TOL_FACTOR

TESTS_DIR = Path(__file__).parent
GOLDEN_DIR = TESTS_DIR / "goldens"
SPECTRA_DIR = TESTS_DIR / "data" / "spectra"
MANIFEST_PATH = TESTS_DIR.parent / "oracle" / "manifest.json"


@dataclass(frozen=True)
class Golden:
    value: float
    tol: float


@lru_cache(maxsize=None)
def load_goldens(module: str) -> dict[str, Golden]:
    path = GOLDEN_DIR / f"{module}.txt"
    table: dict[str, Golden] = {}
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key_part, _, rest = line.partition("=")
        value_part, _, tol_part = rest.partition("#")
        table[key_part.strip()] = Golden(float(value_part.strip()), float(tol_part.strip()))
    if not table:
        raise AssertionError(f"no golden values found in {path}")
    return table


def golden(module: str, key: str) -> Golden:
    return load_goldens(module)[key]


def assert_matches_golden(actual: float, module: str, key: str) -> None:
    g = golden(module, key)
    scale = max(abs(g.value), 1.0) if g.tol > 0 else 1.0
    assert math.isfinite(actual), f"{module}/{key}: non-finite {actual!r}"
    assert abs(actual - g.value) <= g.tol * scale, (
        f"{module}/{key}: got {actual!r}, golden {g.value!r}, tol {g.tol:g}"
    )


@lru_cache(maxsize=1)
def manifest_entries() -> tuple[dict, ...]:
    manifest = json.loads(MANIFEST_PATH.read_text())
    return tuple(manifest["entries"])


def brute_force_morse_counts(
    spectrum: SurfaceSpectrum,
    params: SpectralParams,
    m_max: int,
    null_tol: float | None = None,
) -> tuple[int, int, int]:
    """Full (m, l) enumeration: (index, nullity, contributing cells with
    m >= 1). The certificates mirror the fast path: the first omitted
    m-row and the truncation tail must clear the threshold."""
    assert m_max >= 1, "need at least the m = 1 row to check the reduction"
    thr = jacobi_threshold(params)
    if null_tol is None:
        null_tol = DEFAULT_NULL_TOL_FACTOR * thr
    assert theta_eigenvalue(m_max + 1, spectrum.eigenvalues[0], params) > thr + null_tol
    assert (
        theta_eigenvalue(0, spectrum.effective_truncation_bound, params) > thr + null_tol
    )
    index = nullity = m_ge_1 = 0
    for m in range(0, m_max + 1):
        for ell, lam in enumerate(spectrum.eigenvalues):
            if m == 0 and ell == 0:
                continue
            value = theta_eigenvalue(m, lam, params)
            if abs(value - thr) <= null_tol:
                nullity += 1
                m_ge_1 += m >= 1
            elif value < thr - null_tol:
                index += 1
                m_ge_1 += m >= 1
    return index, nullity, m_ge_1


def spectra_files() -> list[Path]:
    files = sorted(SPECTRA_DIR.glob("synth_*.csv"))
    assert len(files) == 20, f"expected 20 committed spectra, found {len(files)}"
    return files
