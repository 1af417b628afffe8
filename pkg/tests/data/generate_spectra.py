"""Regenerate the committed synthetic surface spectra (deterministic).

Run from the repository root:

    PYTHONPATH=src python3 tests/data/generate_spectra.py

Twenty spectra with a mix of pinched (< 1/4), mid-range, and large
eigenvalues. Eigenvalues are kept away from the threshold-crossing
levels of the two acceptance parameter sets (lambda* = 1.0 for
n=5,k=1,gamma=1 and lambda* ~ 0.64973 for n=4,k=1,gamma=1/2) so the
Morse counts are unambiguous at every tolerance in play.
"""

from __future__ import annotations

import random
from pathlib import Path

OUT_DIR = Path(__file__).parent / "spectra"

# crossing levels of the acceptance parameter sets; keep clear of them
CROSSING_LEVELS = (1.0, 0.6497313846380288)
CLEARANCE = 5e-3


def _clear_of_levels(value: float) -> float:
    for level in CROSSING_LEVELS:
        if abs(value - level) < CLEARANCE:
            value = level + CLEARANCE * (1.5 if value >= level else -1.5)
    return value


def make_spectrum(seed: int) -> tuple[list[float], int | None, float]:
    rng = random.Random(seed)
    n_small = rng.choice([0, 0, 0, 1, 2, 3])
    n_mid = rng.randint(3, 7)
    n_high = rng.randint(2, 5)
    values = [rng.uniform(0.04, 0.24) for _ in range(n_small)]
    values += [_clear_of_levels(rng.uniform(0.30, 2.50)) for _ in range(n_mid)]
    values += [rng.uniform(2.60, 8.00) for _ in range(n_high)]
    values.sort()
    genus = None
    if seed % 2 == 0:
        # lambda_0 = 0 also counts against the 2g-2 cap on entries below 1/4
        genus = max(2, (n_small + 1 + 3) // 2 + 1)
    truncation = values[-1] + rng.uniform(1.0, 4.0)
    return values, genus, truncation


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for i in range(20):
        values, genus, truncation = make_spectrum(1000 + i)
        lines = []
        if genus is not None:
            lines.append(f"# genus: {genus}")
        lines.append(f"# truncation_bound: {truncation!r}")
        lines.append("lambda")
        lines.append("0.0")
        lines.extend(repr(v) for v in values)
        path = OUT_DIR / f"synth_{i:02d}.csv"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path} ({len(values)} nonzero eigenvalues, genus={genus})")


if __name__ == "__main__":
    main()
