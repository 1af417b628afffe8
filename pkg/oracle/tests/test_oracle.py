"""Oracle self-tests: deterministic regeneration, closed-form anchors,
and the brute-force certification contract."""

from __future__ import annotations

import math
from pathlib import Path

import pytest
from mpmath import mp, mpf

from specoracle import funcs
from specoracle.bruteforce import CertificationError, brute_force_morse, read_spectrum
from specoracle.generate import GOLDEN_MODULES, regenerate_goldens

ORACLE_DIR = Path(__file__).parent.parent
MANIFEST = ORACLE_DIR / "manifest.json"
COMMITTED_GOLDENS = ORACLE_DIR.parent / "tests" / "goldens"
SPECTRA_DIR = ORACLE_DIR.parent / "tests" / "data" / "spectra"


class TestRegeneration:
    def test_bit_identical_across_two_runs(self, tmp_path):
        dir_a = tmp_path / "a"
        dir_b = tmp_path / "b"
        written_a = regenerate_goldens(MANIFEST, dir_a)
        written_b = regenerate_goldens(MANIFEST, dir_b)
        assert [p.name for p in written_a] == [p.name for p in written_b]
        for pa, pb in zip(written_a, written_b):
            assert pa.read_bytes() == pb.read_bytes()

    def test_matches_committed_goldens(self, tmp_path):
        for path in regenerate_goldens(MANIFEST, tmp_path):
            committed = COMMITTED_GOLDENS / path.name
            assert committed.exists(), f"{committed} missing"
            assert path.read_bytes() == committed.read_bytes(), (
                f"{path.name} drifted from the committed golden file; "
                f"regenerate tests/goldens from the manifest"
            )

    def test_every_module_has_a_file(self, tmp_path):
        names = {p.name for p in regenerate_goldens(MANIFEST, tmp_path)}
        assert names == {f"{m}.txt" for m in GOLDEN_MODULES}


class TestClosedFormAnchors:
    def test_q_gamma(self):
        assert abs(funcs.q_gamma(4, 1, 0.5) - mpf(1) / 2) < mpf(10) ** -40

    def test_xi(self):
        assert abs(funcs.xi(5, 1.0) - 1) < mpf(10) ** -40
        assert abs(funcs.xi(4, 1.0) - mpf(1) / 4) < mpf(10) ** -40

    def test_d_gamma(self):
        assert abs(funcs.d_gamma(0.5) + 1) < mpf(10) ** -40

    def test_volume(self):
        expected = 16 * mp.pi**2
        assert abs(funcs.product_volume(4, 2) - expected) < mpf(10) ** -40 * expected

    def test_theta_identity_with_q(self):
        # Theta at (a_0, i k/2) equals the trivial curvature constant
        for n, k, g in ((5, 1, 1.0), (6, 2, 0.7), (9, 3, 1.4)):
            a0 = mpf(n - k - 2) / 2
            lhs = funcs.theta(a0, "imaginary", mpf(k) / 2, g)
            rhs = funcs.q_gamma(n, k, g)
            assert abs(lhs - rhs) < mpf(10) ** -40 * abs(rhs)

    def test_threshold_and_lambda_inverse(self):
        lam = funcs.lambda_at_jacobi_threshold(5, 1.0)
        assert abs(lam - 1) < mpf(10) ** -35

    def test_x0_and_c4_digits(self):
        assert abs(funcs.x0() - mpf("1.51362491430659307809621919923")) < mpf(10) ** -25
        assert abs(funcs.c_n(4) - mpf("0.857117424215654699459119990210")) < mpf(10) ** -25

    def test_f_limit(self):
        assert abs(funcs.f_limit_const() - mpf("0.134838150297094839166983930589")) < mpf(10) ** -25


class TestBruteForce:
    def test_all_large_spectrum(self, tmp_path):
        path = tmp_path / "big.csv"
        path.write_text("# truncation_bound: 50.0\nlambda\n0.0\n30.0\n40.0\n")
        counts = brute_force_morse(path, 5, 1, 1.0, m_max=4)
        assert (counts.index, counts.nullity, counts.m_ge_1) == (0, 0, 0)

    def test_committed_spectra_have_no_m_ge_1_cells(self):
        for path in sorted(SPECTRA_DIR.glob("synth_*.csv"))[:4]:
            counts = brute_force_morse(path, 5, 1, 1.0, m_max=10)
            assert counts.m_ge_1 == 0

    def test_m_cap_zero_fails_certification(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("# truncation_bound: 9.0\nlambda\n0.0\n2.0\n")
        with pytest.raises(CertificationError):
            brute_force_morse(path, 5, 1, 1.0, m_max=0)

    def test_short_truncation_fails_certification(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("# truncation_bound: 0.6\nlambda\n0.0\n0.5\n")
        with pytest.raises(CertificationError):
            brute_force_morse(path, 5, 1, 1.0, m_max=3)

    def test_read_spectrum_errors(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("eigs\n0.0\n1.0\n")
        with pytest.raises(ValueError):
            read_spectrum(bad)
        unsorted = tmp_path / "unsorted.csv"
        unsorted.write_text("lambda\n0.0\n2.0\n1.0\n")
        with pytest.raises(ValueError):
            read_spectrum(unsorted)

    def test_gamma_one_analytic_counts(self, tmp_path):
        # at gamma = 1 the m = 0 curve is lambda + 3/4: index = #{lambda_l < 1}
        path = tmp_path / "s.csv"
        path.write_text("# truncation_bound: 8.0\nlambda\n0.0\n0.1\n0.5\n0.99\n1.01\n2.0\n")
        counts = brute_force_morse(path, 5, 1, 1.0, m_max=6)
        assert counts.index == 3 and counts.nullity == 0


class TestPrecisionPolicy:
    def test_emitted_digits_stable_under_higher_precision(self):
        # recompute a representative value at twice the working digits;
        # the first 30 digits must not move
        import mpmath

        baseline = mpmath.nstr(funcs.c_n(7), 30, strip_zeros=False)
        old = mp.dps
        try:
            mp.dps = 100
            refined = mpmath.nstr(funcs.c_n(7), 30, strip_zeros=False)
        finally:
            mp.dps = old
        assert baseline == refined

    def test_theta_reality_assertion_active(self):
        value = funcs.theta(mpf(2), "real", mpf(3), mpf("0.7"))
        assert value > 0
        assert math.isfinite(float(value))
