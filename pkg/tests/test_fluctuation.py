import math

import numpy as np
import pytest

import centrolab as cl
from centrolab.fluctuation import _splitmix64


class TestLesPolynomial:
    def test_identity_gives_trace(self):
        m = cl.sample_centro(6, "gaussian", 3)
        assert cl.les_polynomial(m, cl.Polynomial([0, 1])) == float(
            np.trace(m.entries)
        )

    def test_fixed_draw_matches_direct_multiplication(self):
        m = cl.sample_centro(4, "gaussian", 123)
        f = cl.Polynomial([0, 0, 1, 0, 0, 4])
        direct = np.trace(np.linalg.matrix_power(m.entries, 2)) + 4.0 * np.trace(
            np.linalg.matrix_power(m.entries, 5)
        )
        assert cl.les_polynomial(m, f) == pytest.approx(direct, rel=1e-13)

    def test_constant_term_contributes_a0_times_n(self):
        m = cl.sample_centro(5, "gaussian", 8)
        with_const = cl.les_polynomial(m, cl.Polynomial([2.5, 1]))
        without = cl.les_polynomial(m, cl.Polynomial([0, 1]))
        assert with_const == pytest.approx(without + 2.5 * 5, rel=1e-14)

    def test_complex_coefficients_give_complex_value(self):
        m = cl.sample_centro(4, "gaussian", 8)
        v = cl.les_polynomial(m, cl.Polynomial([0, 1j]))
        assert isinstance(v, complex)
        assert v == pytest.approx(1j * np.trace(m.entries))

    def test_two_path_agreement(self):
        f = cl.Polynomial([0, 0, 1])
        for seed in range(100):
            n = 2 + seed % 11
            m = cl.sample_centro(n, "gaussian", seed)
            trace_path = cl.les_polynomial(m, f)
            eig_path = cl.les_analytic(cl.eigenvalues(m.entries), lambda z: z**2)
            assert abs(trace_path - eig_path) <= 1e-7 * max(1.0, abs(trace_path))


class TestLesAnalytic:
    def test_identity_gives_trace(self):
        m = cl.sample_centro(8, "gaussian", 4)
        s = cl.eigenvalues(m.entries)
        assert cl.les_analytic(s, lambda z: z) == pytest.approx(
            np.trace(m.entries), abs=1e-8
        )

    def test_square_on_conjugate_pair(self):
        s = cl.Spectrum(values=np.array([1j, -1j]), iterations=0, converged=True)
        assert cl.les_analytic(s, lambda z: z**2) == pytest.approx(-2.0)

    def test_exponential_matches_series_truncation(self):
        m = cl.sample_centro(8, "gaussian", 21)
        s = cl.eigenvalues(m.entries)
        analytic = cl.les_analytic(s, np.exp)
        series = cl.Polynomial([1.0 / math.factorial(k) for k in range(31)])
        truncated = cl.les_polynomial(m, series)
        assert abs(analytic - truncated) < 1e-8

    def test_unconverged_spectrum_rejected(self):
        s = cl.Spectrum(values=np.array([0j]), iterations=5, converged=False)
        with pytest.raises(cl.DiagnosticError):
            cl.les_analytic(s, lambda z: z)


class TestKsStatistic:
    def test_normal_samples_small_statistic(self):
        x = np.random.default_rng(1).standard_normal(1000)
        assert cl.ks_statistic(x) < 0.06

    def test_shift_invariance(self):
        x = np.random.default_rng(2).standard_normal(500)
        assert cl.ks_statistic(x) == pytest.approx(cl.ks_statistic(x + 7.5), abs=1e-9)

    def test_two_point_sample_far_from_normal(self):
        assert cl.ks_statistic(np.array([-1.0, 1.0] * 50)) >= 0.3

    def test_zero_variance_rejected(self):
        with pytest.raises(cl.DiagnosticError):
            cl.ks_statistic(np.ones(10))

    def test_too_few_samples_rejected(self):
        with pytest.raises(cl.DiagnosticError):
            cl.ks_statistic(np.array([1.0]))


class TestTrialSeeds:
    def test_splitmix64_known_vector(self):
        # published first output of splitmix64 for state 0
        assert _splitmix64(0) == 0xE220A8397B1DCDAF

    def test_distinct_and_in_range(self):
        seeds = {cl.trial_seed(5, t) for t in range(10_000)}
        assert len(seeds) == 10_000
        assert all(0 <= s < 2**64 for s in seeds)

    def test_deterministic(self):
        assert cl.trial_seed(99, 3) == cl.trial_seed(99, 3)


class TestRunClt:
    def test_linear_statistic_variance_window(self):
        r = cl.run_clt(400, 400, cl.Polynomial([0, 1]), "gaussian", 424)
        assert 1.7 <= r.empirical_variance <= 2.3
        assert r.theoretical_variance == 2.0

    def test_cubic_statistic_variance_window(self):
        r = cl.run_clt(400, 400, cl.Polynomial([0, 0, 0, 1]), "gaussian", 9)
        assert 6.0 * 0.8 <= r.empirical_variance <= 6.0 * 1.2

    def test_centering(self):
        r = cl.run_clt(50, 80, cl.Polynomial([0, 0, 1]), "gaussian", 5)
        scale = np.abs(r.samples).max()
        assert abs(r.samples.mean()) <= 1e-12 * max(1.0, scale)

    def test_requires_two_trials(self):
        with pytest.raises(cl.ConfigError):
            cl.run_clt(10, 1, cl.Polynomial([0, 1]))

    def test_thread_count_does_not_change_samples(self):
        f = cl.Polynomial([0, 0, 1])
        r1 = cl.run_clt(40, 36, f, "gaussian", 77, threads=1)
        r2 = cl.run_clt(40, 36, f, "gaussian", 77, threads=2)
        r8 = cl.run_clt(40, 36, f, "gaussian", 77, threads=8)
        assert np.array_equal(r1.samples, r2.samples)
        assert np.array_equal(r1.samples, r8.samples)

    def test_universality_probe_gaussian_vs_uniform(self):
        f = cl.Polynomial([0, 0, 1])
        trials = 600
        rg = cl.run_clt(256, trials, f, "gaussian", 31)
        ru = cl.run_clt(256, trials, f, "uniform", 31)
        se = 4.0 * np.sqrt(2.0 / (trials - 1))
        assert abs(rg.empirical_variance - ru.empirical_variance) <= 3.0 * (se + se)

    def test_complex_coefficients_report_part_variances(self):
        r = cl.run_clt(30, 50, cl.Polynomial([0, 1j, 1]), "gaussian", 3)
        assert r.variance_real is not None and r.variance_imag is not None
        assert r.empirical_variance >= 0.0
        assert np.iscomplexobj(r.samples)

    def test_report_carries_provenance(self):
        f = cl.Polynomial([0, 1])
        r = cl.run_clt(20, 10, f, "uniform", 123)
        assert (r.n, r.trials, r.dist, r.seed) == (20, 10, "uniform", 123)
        assert r.samples.shape == (10,)
        assert r.runtime_seconds > 0


class TestMomentSuite:
    def test_targets_table(self):
        assert cl.moment_target(2) == 2.0
        assert cl.moment_target(3) == 0.0
        assert cl.moment_target(2, 4) == 4.0
        assert cl.moment_target(2, 3) == 0.0
        assert cl.moment_target(3, 3) == 6.0
        assert cl.moment_target(2, 2) == 8.0
        assert cl.moment_target(4, 4) == 12.0

    def test_requires_kmax_at_least_two(self):
        with pytest.raises(cl.ConfigError):
            cl.moment_suite(10, 10, 1)

    def test_entries_cover_singles_and_ordered_pairs(self):
        r = cl.moment_suite(30, 40, 3, "gaussian", 11)
        singles = [(e.k, e.l) for e in r.entries if e.l is None]
        doubles = [(e.k, e.l) for e in r.entries if e.l is not None]
        assert singles == [(1, None), (2, None), (3, None)]
        assert doubles == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
        assert all(e.standard_error > 0 for e in r.entries)

    def test_deterministic(self):
        a = cl.moment_suite(25, 30, 2, "gaussian", 13)
        b = cl.moment_suite(25, 30, 2, "gaussian", 13)
        assert [e.estimate for e in a.entries] == [e.estimate for e in b.entries]

    def test_statistically_consistent_at_moderate_size(self):
        r = cl.moment_suite(300, 400, 4, "gaussian", 47)
        for e in r.entries:
            assert abs(e.z_score) < 6.0, (e.k, e.l, e.z_score)

    def test_entry_accessor(self):
        r = cl.moment_suite(20, 20, 2, "gaussian", 1)
        assert r.entry(2).target == 2.0
        assert r.entry(1, 2).l == 2
        with pytest.raises(KeyError):
            r.entry(9)
