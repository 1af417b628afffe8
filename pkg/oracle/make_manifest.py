"""Rebuild manifest.json (deterministic; run from oracle/).

One entry per golden scalar. The morse block enumerates the committed
synthetic spectra under both acceptance parameter sets with the full
(m <= 10, l <= L) brute-force counts.
"""

from __future__ import annotations

import json
from pathlib import Path

HERE = Path(__file__).parent
SPECTRA_REL = "../tests/data/spectra"


def entry(module, key, op, inputs=None, part=None, tolerance=None):
    e = {"module": module, "key": key, "op": op}
    if inputs:
        e["inputs"] = inputs
    if part:
        e["part"] = part
    if tolerance is not None:
        e["tolerance"] = tolerance
    return e


def main() -> None:
    entries = []

    # --- specfun ---
    entries += [
        entry("specfun", "log_gamma_0.5", "log_gamma", {"re": 0.5, "im": 0.0}, tolerance=1e-13),
        entry("specfun", "log_gamma_2+3i_re", "log_gamma", {"re": 2.0, "im": 3.0}, "re", 1e-12),
        entry("specfun", "log_gamma_2+3i_im", "log_gamma", {"re": 2.0, "im": 3.0}, "im", 1e-12),
        entry("specfun", "gamma_0.25", "gamma", {"re": 0.25, "im": 0.0}, tolerance=1e-13),
        entry("specfun", "gamma_1+2i_re", "gamma", {"re": 1.0, "im": 2.0}, "re", 1e-13),
        entry("specfun", "gamma_1+2i_im", "gamma", {"re": 1.0, "im": 2.0}, "im", 1e-13),
        entry("specfun", "digamma_1", "digamma", {"re": 1.0, "im": 0.0}, tolerance=1e-12),
        entry("specfun", "digamma_1.5+0.5i_re", "digamma", {"re": 1.5, "im": 0.5}, "re", 1e-11),
        entry("specfun", "digamma_1.5+0.5i_im", "digamma", {"re": 1.5, "im": 0.5}, "im", 1e-11),
        entry("specfun", "psi_shift_0.75_s0.5", "psi_shift",
              {"z_re": 0.75, "z_im": 0.0, "shift": 0.5}, tolerance=1e-10),
        entry("specfun", "psi_shift_2+1i_s0.9_re", "psi_shift",
              {"z_re": 2.0, "z_im": 1.0, "shift": 0.9}, "re", 1e-10),
        entry("specfun", "psi_shift_2+1i_s0.9_im", "psi_shift",
              {"z_re": 2.0, "z_im": 1.0, "shift": 0.9}, "im", 1e-10),
    ]

    # --- symbol ---
    entries += [
        entry("symbol", "theta_a0.5_b0_g0.5", "theta",
              {"a": 0.5, "b_kind": "real", "b_value": 0.0, "gamma": 0.5,
               "n": 4, "k": 1}, tolerance=1e-12),
        entry("symbol", "theta_a2_b1_g0.6", "theta",
              {"a": 2.0, "b_kind": "real", "b_value": 1.0, "gamma": 0.6,
               "n": 5, "k": 1}, tolerance=1e-10),
        entry("symbol", "theta_a1.75_beta0.4_g1.1", "theta",
              {"a": 1.75, "b_kind": "imaginary", "b_value": 0.4, "gamma": 1.1,
               "n": 6, "k": 1}, tolerance=1e-11),
        entry("symbol", "q_gamma_n4_k1_g0.5", "q_gamma",
              {"n": 4, "k": 1, "gamma": 0.5}, tolerance=1e-12),
        entry("symbol", "q_gamma_n6_k1_g0.9", "q_gamma",
              {"n": 6, "k": 1, "gamma": 0.9}, tolerance=1e-10),
        entry("symbol", "q_gamma_n7_k2_g0.8", "q_gamma",
              {"n": 7, "k": 2, "gamma": 0.8}, tolerance=1e-10),
        entry("symbol", "q_gamma_n5_k0_g0.7", "q_gamma",
              {"n": 5, "k": 0, "gamma": 0.7}, tolerance=1e-10),
        entry("symbol", "xi_n4_g0.5", "xi", {"n": 4, "gamma": 0.5}, tolerance=1e-12),
        entry("symbol", "xi_n5_g1", "xi", {"n": 5, "gamma": 1.0}, tolerance=1e-12),
        entry("symbol", "xi_n6_g0.9", "xi", {"n": 6, "gamma": 0.9}, tolerance=1e-10),
        entry("symbol", "d_gamma_0.5", "d_gamma", {"gamma": 0.5}, tolerance=1e-12),
        entry("symbol", "d_gamma_1.5", "d_gamma", {"gamma": 1.5}, tolerance=1e-11),
        entry("symbol", "d_gamma_0.999", "d_gamma", {"gamma": 0.999}, tolerance=1e-10),
        entry("symbol", "theta_eig_m1_lam0_n5_k1_g1", "theta_eigenvalue",
              {"m": 1, "lam": 0.0, "n": 5, "k": 1, "gamma": 1.0}, tolerance=1e-12),
        entry("symbol", "theta_eig_m2_lam1.7_n6_k1_g1.3", "theta_eigenvalue",
              {"m": 2, "lam": 1.7, "n": 6, "k": 1, "gamma": 1.3}, tolerance=1e-10),
        entry("symbol", "theta_eig_m0_lam0.1_n5_k1_g0.8", "theta_eigenvalue",
              {"m": 0, "lam": 0.1, "n": 5, "k": 1, "gamma": 0.8}, tolerance=1e-10),
    ]

    # --- thresholds ---
    entries += [
        entry("thresholds", "F_2", "F", {"x": 2.0}, tolerance=1e-12),
        entry("thresholds", "F_3", "F", {"x": 3.0}, tolerance=1e-12),
        entry("thresholds", "F_50", "F", {"x": 50.0}, tolerance=1e-12),
        entry("thresholds", "F_1.001", "F", {"x": 1.001}, tolerance=1e-10),
        entry("thresholds", "f_limit_const", "f_limit_const", tolerance=1e-12),
        entry("thresholds", "x0", "x0", tolerance=1e-9),
    ]
    for n in range(4, 13):
        entries.append(entry("thresholds", f"c_{n}", "c_n", {"n": n}, tolerance=1e-12))

    # --- morse ---
    entries += [
        entry("morse", "jacobi_threshold_n5_g1", "jacobi_threshold",
              {"n": 5, "gamma": 1.0}, tolerance=1e-12),
        entry("morse", "jacobi_threshold_n4_g0.5", "jacobi_threshold",
              {"n": 4, "gamma": 0.5}, tolerance=1e-12),
        entry("morse", "lambda_at_threshold_n4_g0.5", "lambda_at_jacobi_threshold",
              {"n": 4, "gamma": 0.5}, tolerance=1e-8),
        entry("morse", "lambda_at_threshold_n5_g1", "lambda_at_jacobi_threshold",
              {"n": 5, "gamma": 1.0}, tolerance=1e-9),
    ]
    psets = [("n5k1g1", {"n": 5, "k": 1, "gamma": 1.0}), ("n4k1g0.5", {"n": 4, "k": 1, "gamma": 0.5})]
    for i in range(20):
        for tag, ps in psets:
            for field in ("index", "nullity", "m_ge_1"):
                entries.append(
                    entry(
                        "morse",
                        f"morse_synth_{i:02d}_{tag}_{field}",
                        "brute_force_morse",
                        {
                            "spectrum": f"{SPECTRA_REL}/synth_{i:02d}.csv",
                            "m_max": 10,
                            **ps,
                        },
                        part=field,
                        tolerance=0.0,
                    )
                )

    # --- bifurcation ---
    entries += [
        entry("bifurcation", "volume_n4_gen2", "product_volume",
              {"n": 4, "genus": 2}, tolerance=1e-12),
        entry("bifurcation", "volume_n5_gen3", "product_volume",
              {"n": 5, "genus": 3}, tolerance=1e-12),
        entry("bifurcation", "volume_n7_gen2", "product_volume",
              {"n": 7, "genus": 2}, tolerance=1e-12),
    ]

    manifest = {
        "version": 1,
        "precision_dps": 50,
        "emit_digits": 30,
        "default_tolerance": 1e-10,
        "entries": entries,
    }
    out = HERE / "manifest.json"
    out.write_text(json.dumps(manifest, indent=1) + "\n")
    print(f"wrote {out} with {len(entries)} entries")


if __name__ == "__main__":
    main()
