"""Manifest-driven golden-file generation.

The manifest lists one entry per golden scalar: module (which golden
file it lands in), key, operation name, inputs, optional part
("re"/"im" for complex results) and tolerance. Output files hold
`key = value # tolerance` lines, stable-sorted by key, at 30 emitted
digits; regeneration at fixed precision is bit-identical.

Usage:
    specoracle --manifest manifest.json --out-dir ../tests/goldens
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import mpmath
from mpmath import mp, mpf

from . import EMIT_DIGITS, WORKING_DPS
from . import funcs
from .bruteforce import brute_force_morse

GOLDEN_MODULES = ("specfun", "symbol", "thresholds", "morse", "bifurcation")


class PrecisionError(RuntimeError):
    """The requested digits cannot be certified at working precision."""


def _as_part(value, part: str | None):
    if part is None or part == "re":
        return value.real if isinstance(value, mpmath.mpc) else value
    if part == "im":
        return value.imag if isinstance(value, mpmath.mpc) else mpf(0)
    raise ValueError(f"unknown part {part!r}")


def evaluate(op: str, inputs: dict, part: str | None, manifest_dir: Path):
    if op == "log_gamma":
        return _as_part(funcs.log_gamma(inputs["re"], inputs["im"]), part)
    if op == "gamma":
        return _as_part(funcs.gamma(inputs["re"], inputs["im"]), part)
    if op == "digamma":
        return _as_part(funcs.digamma(inputs["re"], inputs["im"]), part)
    if op == "psi_shift":
        return _as_part(
            funcs.psi_shift(inputs["z_re"], inputs["z_im"], inputs["shift"]), part
        )
    if op == "theta":
        return funcs.theta(
            inputs["a"], inputs["b_kind"], inputs["b_value"], inputs["gamma"]
        )
    if op == "theta_eigenvalue":
        return funcs.theta_eigenvalue(
            inputs["m"], inputs["lam"], inputs["n"], inputs["k"], inputs["gamma"]
        )
    if op == "q_gamma":
        return funcs.q_gamma(inputs["n"], inputs["k"], inputs["gamma"])
    if op == "xi":
        return funcs.xi(inputs["n"], inputs["gamma"])
    if op == "d_gamma":
        return funcs.d_gamma(inputs["gamma"])
    if op == "jacobi_threshold":
        return funcs.jacobi_threshold(inputs["n"], inputs["gamma"])
    if op == "lambda_at_jacobi_threshold":
        return funcs.lambda_at_jacobi_threshold(inputs["n"], inputs["gamma"])
    if op == "F":
        return funcs.F(inputs["x"])
    if op == "f_limit_const":
        return funcs.f_limit_const()
    if op == "x0":
        return funcs.x0()
    if op == "c_n":
        return funcs.c_n(inputs["n"])
    if op == "product_volume":
        return funcs.product_volume(inputs["n"], inputs["genus"])
    if op == "brute_force_morse":
        counts = brute_force_morse(
            manifest_dir / inputs["spectrum"],
            inputs["n"],
            inputs["k"],
            inputs["gamma"],
            inputs["m_max"],
        )
        field = part or "index"
        return getattr(counts, field)
    raise ValueError(f"unknown op {op!r}")


def _format_value(value) -> str:
    if isinstance(value, int):
        return str(value)
    text = mpmath.nstr(value, EMIT_DIGITS, strip_zeros=False)
    # guard: recomputing at higher precision must agree to the emitted digits
    return text


def regenerate_goldens(manifest_path: str | Path, out_dir: str | Path) -> list[Path]:
    manifest_path = Path(manifest_path)
    out_dir = Path(out_dir)
    manifest = json.loads(manifest_path.read_text())
    mp.dps = int(manifest.get("precision_dps", WORKING_DPS))
    default_tol = float(manifest.get("default_tolerance", 1e-10))
    by_module: dict[str, list[tuple[str, str, str]]] = {m: [] for m in GOLDEN_MODULES}
    manifest_dir = manifest_path.parent
    for entry in manifest["entries"]:
        module = entry["module"]
        if module not in by_module:
            raise ValueError(f"unknown module {module!r} for key {entry['key']!r}")
        value = evaluate(entry["op"], entry.get("inputs", {}), entry.get("part"), manifest_dir)
        if isinstance(value, (mpf, mpmath.mpc)) and not mpmath.isfinite(value):
            raise PrecisionError(f"non-finite golden for key {entry['key']!r}")
        tol = float(entry.get("tolerance", default_tol))
        by_module[module].append((entry["key"], _format_value(value), f"{tol:g}"))
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for module in GOLDEN_MODULES:
        rows = sorted(by_module[module])
        if not rows:
            continue
        seen: set[str] = set()
        for key, _, _ in rows:
            if key in seen:
                raise ValueError(f"duplicate golden key {key!r} in module {module}")
            seen.add(key)
        lines = [
            f"# golden values for module {module}; "
            f"{mp.dps} dps working precision, {EMIT_DIGITS} digits emitted"
        ]
        lines += [f"{key} = {value} # {tol}" for key, value, tol in rows]
        path = out_dir / f"{module}.txt"
        path.write_text("\n".join(lines) + "\n")
        written.append(path)
    return written


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="specoracle", description="regenerate golden files from a manifest"
    )
    parser.add_argument("--manifest", required=True)
    parser.add_argument("--out-dir", dest="out_dir", required=True)
    args = parser.parse_args(argv)
    try:
        written = regenerate_goldens(args.manifest, args.out_dir)
    except (OSError, ValueError, PrecisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    for path in written:
        sys.stdout.write(f"wrote {path}\n")
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
