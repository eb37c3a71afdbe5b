"""
Unit tests for the model rate functions.

Rate functions are checked against hand-evaluated constants and against
an independent straight-line re-evaluation of every formula.
"""

import math
import random
import unittest

from core.rates import (
    derivatives,
    export_modulation,
    proliferation_dilution,
    thymic_output,
    thymic_output_terms,
    thymic_source,
    trec_death_factor,
)
from core.value_objects.model_params import default_params
from core.value_objects.state_vector import StateVector

REL_TOL = 1e-12


def reference_s0(t):
    return 0.82 * (
        7024.0 * math.exp(-((t - 12.02) ** 2) / 3.623 ** 2)
        + 5.203e5 * math.exp(-((t + 127.8) ** 2) / 64.47 ** 2)
        + 1937.0 * math.exp(-((t - 7.357) ** 2) / 6.03 ** 2)
        + 1.259e18 * math.exp(-((t - 1309.0) ** 2) / 214.4 ** 2)
    )


def reference_g(n_p, b=4.2, n_p_bar=392.0):
    return 1.0 + (b * n_p / n_p_bar) / (1.0 + n_p / n_p_bar)


def reference_h(n, n_p, n_b=392.0):
    return 1.0 / (1.0 + (n + n_p) / n_b)


def reference_s(n_p, s_bar, n_p_bar=392.0):
    return 1.0 / (1.0 + s_bar * n_p / n_p_bar)


class TestThymicOutput(unittest.TestCase):
    """Thymic output s0(t)."""

    def setUp(self):
        self.p = default_params()

    def test_first_term_full_amplitude_at_its_center(self):
        """Test first term full amplitude at its center."""
        terms = thymic_output_terms(12.02, self.p)
        self.assertEqual(terms[0], 0.82 * 7024.0)
        others = sum(terms[1:])
        self.assertTrue(math.isclose(thymic_output(12.02, self.p) - others, 0.82 * 7024.0, rel_tol=1e-12))

    def test_terms_sum_to_output(self):
        """Test terms sum to output."""
        for t in (0.0, 20.0, 60.0, 100.0):
            with self.subTest(t=t):
                self.assertTrue(math.isclose(sum(thymic_output_terms(t, self.p)), thymic_output(t, self.p),
                                             rel_tol=1e-12))

    def test_golden_ages(self):
        """Test golden ages."""
        for t in (0.0, 20.0, 60.0, 100.0):
            with self.subTest(t=t):
                self.assertTrue(math.isclose(thymic_output(t, self.p), reference_s0(t), rel_tol=REL_TOL))

    def test_output_at_birth(self):
        """Test output at birth."""
        self.assertAlmostEqual(thymic_output(0.0, self.p), 8810.0, delta=20.0)

    def test_decline_after_childhood(self):
        """Test decline after childhood."""
        self.assertLess(thymic_output(60.0, self.p), thymic_output(12.0, self.p))

    def test_source_applies_involution(self):
        """Test source applies involution."""
        self.assertEqual(thymic_source(0.0, self.p), thymic_output(0.0, self.p))
        expected = thymic_output(40.0, self.p) * math.exp(-math.log(2) / 15.7 * 40.0)
        self.assertTrue(math.isclose(thymic_source(40.0, self.p), expected, rel_tol=REL_TOL))

    def test_source_without_involution(self):
        """Test source without involution."""
        p = default_params(lambda_thymic=0.0)
        self.assertEqual(thymic_source(30.0, p), thymic_output(30.0, p))

    def test_random_points_match_reference(self):
        """Test random points match reference."""
        rng = random.Random(7)
        for _ in range(100):
            t = rng.uniform(0.0, 100.0)
            self.assertTrue(math.isclose(thymic_output(t, self.p), reference_s0(t), rel_tol=REL_TOL))


class TestModulationFunctions(unittest.TestCase):
    """Export modulation s(Np), TREC factor g(Np) and dilution h(N, Np)."""

    def setUp(self):
        self.p = default_params()

    def test_export_modulation_examples(self):
        """Test export modulation examples."""
        self.assertEqual(export_modulation(0.0, self.p), 1.0)
        self.assertEqual(export_modulation(1e6, self.p), 1.0)
        self.assertEqual(export_modulation(392.0, default_params(s_bar=1.0)), 0.5)

    def test_trec_death_factor_examples(self):
        """Test trec death factor examples."""
        self.assertEqual(trec_death_factor(0.0, self.p), 1.0)
        self.assertAlmostEqual(trec_death_factor(392.0, self.p), 3.1, places=12)
        self.assertAlmostEqual(trec_death_factor(1e15, self.p), 5.2, places=9)

    def test_trec_death_factor_bounded_and_monotone(self):
        """Test trec death factor bounded and monotone."""
        rng = random.Random(11)
        for _ in range(200):
            a, b = sorted(rng.uniform(0.0, 1e5) for _ in range(2))
            g_a, g_b = trec_death_factor(a, self.p), trec_death_factor(b, self.p)
            self.assertGreaterEqual(g_a, 1.0)
            self.assertLess(g_b, 5.2)
            self.assertLessEqual(g_a, g_b)

    def test_proliferation_dilution_examples(self):
        """Test proliferation dilution examples."""
        self.assertEqual(proliferation_dilution(0.0, 0.0, self.p), 1.0)
        self.assertEqual(proliferation_dilution(200.0, 192.0, self.p), 0.5)
        self.assertAlmostEqual(proliferation_dilution(2000.0, 0.0, self.p), 0.16388, places=5)

    def test_proliferation_dilution_range_and_antitone(self):
        """Test proliferation dilution range and antitone."""
        rng = random.Random(13)
        for _ in range(200):
            small, large = sorted(rng.uniform(0.0, 1e4) for _ in range(2))
            h_small = proliferation_dilution(small, 0.0, self.p)
            h_large = proliferation_dilution(0.0, large, self.p)
            self.assertGreater(h_large, 0.0)
            self.assertLessEqual(h_small, 1.0)
            self.assertGreaterEqual(h_small, h_large)

    def test_random_points_match_reference(self):
        """Test random points match reference."""
        rng = random.Random(3)
        p = default_params(s_bar=0.7)
        for _ in range(100):
            n, n_p = rng.uniform(0.0, 5000.0), rng.uniform(0.0, 5000.0)
            self.assertTrue(math.isclose(export_modulation(n_p, p), reference_s(n_p, 0.7), rel_tol=REL_TOL))
            self.assertTrue(math.isclose(trec_death_factor(n_p, p), reference_g(n_p), rel_tol=REL_TOL))
            self.assertTrue(math.isclose(proliferation_dilution(n, n_p, p), reference_h(n, n_p), rel_tol=REL_TOL))


class TestDerivatives(unittest.TestCase):
    """Right-hand side of the compartment model."""

    def setUp(self):
        self.p = default_params()

    def test_origin(self):
        """Test origin."""
        d = derivatives(StateVector(0.0, 0.0, 0.0, 0.0, 0.0), self.p)
        self.assertEqual(d.dn, thymic_output(0.0, self.p))
        self.assertEqual((d.dn_p, d.dm, d.da), (0.0, 0.0, 0.0))

    def test_default_initial_state(self):
        """Test default initial state."""
        d = derivatives(StateVector(0.0, 2000.0, 0.0, 0.0, 0.0), self.p)
        expected_dn = thymic_output(0.0, self.p) - (0.003 + 4.4) * 2000.0
        self.assertTrue(math.isclose(d.dn, expected_dn, rel_tol=1e-9, abs_tol=1e-9))
        self.assertAlmostEqual(d.dn_p, 6.0, places=12)
        self.assertEqual(d.dm, 0.0)
        self.assertEqual(d.da, 0.0)

    def test_active_only(self):
        """Test active only."""
        lambda_a = math.log(2) / 15.7
        d = derivatives(StateVector(0.0, 0.0, 0.0, 100.0, 0.0), default_params(s0_global_scale=0.0))
        self.assertAlmostEqual(d.dm, lambda_a * 100.0, places=12)
        self.assertAlmostEqual(d.da, -(lambda_a + 44.4) * 100.0, places=10)
        self.assertEqual(d.dn, 0.0)
        self.assertEqual(d.dn_p, 0.0)

    def test_activation_needs_proliferated_cells(self):
        """Test activation needs proliferated cells."""
        d = derivatives(StateVector(10.0, 500.0, 0.0, 0.0, 0.0), self.p)
        self.assertEqual(d.da, 0.0)
        self.assertEqual(d.dm, 0.0)

    def test_boundary_derivatives_non_negative(self):
        """Test boundary derivatives non negative."""
        rng = random.Random(17)
        for _ in range(200):
            values = [rng.uniform(0.0, 3000.0) for _ in range(4)]
            zero = rng.randrange(4)
            values[zero] = 0.0
            t = rng.uniform(0.0, 100.0)
            d = derivatives(StateVector(t, *values), self.p)
            component = (d.dn, d.dn_p, d.da, d.dm)[zero]
            self.assertGreaterEqual(component, 0.0)

    def test_random_states_match_reference(self):
        """Test random states match reference."""
        rng = random.Random(5)
        p = self.p
        for _ in range(10):
            t = rng.uniform(0.0, 100.0)
            n, n_p, a, m = (rng.uniform(0.0, 3000.0) for _ in range(4))
            d = derivatives(StateVector(t, n, n_p, a, m), p)
            source = reference_s0(t) * math.exp(-p.lambda_thymic * t) * reference_s(n_p, 0.0)
            expected = (
                source - (0.003 + 4.4 * reference_g(n_p)) * n,
                0.003 * n + (p.c * reference_h(n, n_p) - 4.4) * n_p,
                p.lambda_a * a - 0.05 * m,
                0.1 * n_p - (p.lambda_a + 44.4) * a,
            )
            for got, want in zip((d.dn, d.dn_p, d.dm, d.da), expected):
                self.assertTrue(math.isclose(got, want, rel_tol=1e-9, abs_tol=1e-6))


if __name__ == '__main__':
    unittest.main()
