"""
Unit tests for comparison, feature extraction and the memory estimate.
"""

import math
import unittest

import numpy as np

from backend.services.analysis_service import (
    compare,
    compare_trajectories,
    extract_features,
    late_death_rate,
    memory_estimate,
)
from core.entities.ensemble_stats import EnsembleStats
from core.entities.reports import ToleranceProfile
from core.entities.trajectory import EngineType, Trajectory
from core.exceptions import AnalysisError, GridAlignmentError
from core.value_objects.model_params import default_params
from core.value_objects.scenario import default_scenario


def yearly_trajectory(t_end=100.0, n=None, n_p=None, a=None, m=None, engine=EngineType.ODE):
    """Trajectory sampled once a year with compartments given as functions of t."""
    sc = default_scenario(t_end=t_end, dt=1.0, record_every=1)
    times = np.arange(0.0, t_end + 1.0)
    zero = lambda t: np.zeros_like(t)
    values = np.column_stack([(f or zero)(times) for f in (n, n_p, a, m)])
    return Trajectory.from_arrays(engine, sc, times, values)


def constant(value):
    return lambda t: np.full_like(t, float(value))


class TestCompareTrajectories(unittest.TestCase):
    """Error metrics between two trajectories."""

    def setUp(self):
        self.reference = yearly_trajectory(n=constant(1000), n_p=constant(200))

    def test_identical_inputs(self):
        """Test identical inputs."""
        report = compare_trajectories(self.reference, self.reference)
        self.assertTrue(report.passed)
        for metric in report.metrics:
            self.assertEqual(metric.rmse, 0.0)
            self.assertEqual(metric.max_abs_error, 0.0)
            self.assertEqual(metric.max_rel_error, 0.0)

    def test_constant_offset(self):
        """Test constant offset."""
        shifted = yearly_trajectory(n=constant(1010), n_p=constant(200))
        report = compare_trajectories(self.reference, shifted)
        n = report.for_compartment('N')
        self.assertAlmostEqual(n.max_abs_error, 10.0)
        self.assertAlmostEqual(n.rmse, 10.0)
        self.assertAlmostEqual(n.max_rel_error, 0.01)
        self.assertEqual(report.for_compartment('Np').max_abs_error, 0.0)

    def test_symmetric_metrics(self):
        """Test symmetric metrics."""
        other = yearly_trajectory(n=lambda t: 1000 + 3 * np.sin(t), n_p=constant(190))
        forward = compare_trajectories(self.reference, other)
        backward = compare_trajectories(other, self.reference)
        for name in ('N', 'Np', 'A', 'M'):
            self.assertAlmostEqual(forward.for_compartment(name).rmse, backward.for_compartment(name).rmse)
            self.assertAlmostEqual(
                forward.for_compartment(name).max_abs_error, backward.for_compartment(name).max_abs_error
            )

    def test_time_of_max_error(self):
        """Test time of max error."""
        spiked = yearly_trajectory(n=lambda t: 1000 + np.where(t == 37, 50.0, 0.0), n_p=constant(200))
        report = compare_trajectories(self.reference, spiked)
        self.assertEqual(report.for_compartment('N').time_of_max_error, 37.0)

    def test_relative_tolerance_boundary(self):
        """Test relative tolerance boundary."""
        inside = yearly_trajectory(n=constant(1040), n_p=constant(200))
        outside = yearly_trajectory(n=constant(1060), n_p=constant(200))
        self.assertTrue(compare_trajectories(self.reference, inside).passed)
        report = compare_trajectories(self.reference, outside)
        self.assertFalse(report.passed)
        self.assertFalse(report.for_compartment('N').passed)
        self.assertTrue(report.for_compartment('Np').passed)

    def test_absolute_tolerance_near_zero(self):
        """Test absolute tolerance near zero."""
        noisy = yearly_trajectory(n=constant(1000), n_p=constant(200), a=constant(3))
        report = compare_trajectories(self.reference, noisy)
        a = report.for_compartment('A')
        self.assertTrue(a.passed)
        # Denominator is floored at 1 where the reference vanishes
        self.assertAlmostEqual(a.max_rel_error, 3.0)

    def test_custom_tolerance(self):
        """Test custom tolerance."""
        outside = yearly_trajectory(n=constant(1060), n_p=constant(200))
        report = compare_trajectories(self.reference, outside, ToleranceProfile(relative=0.1, absolute=0.0))
        self.assertTrue(report.passed)

    def test_misaligned_grids(self):
        """Test misaligned grids."""
        shorter = yearly_trajectory(t_end=50.0, n=constant(1000), n_p=constant(200))
        with self.assertRaises(GridAlignmentError):
            compare_trajectories(self.reference, shorter)


class TestCompareWithEnsemble(unittest.TestCase):

    def test_uses_ensemble_mean(self):
        """Test uses ensemble mean."""
        ode = yearly_trajectory(n=constant(1000))
        replicates = [
            yearly_trajectory(n=constant(990), engine=EngineType.ABM),
            yearly_trajectory(n=constant(1010), engine=EngineType.ABM),
        ]
        report = compare(ode, EnsembleStats.from_trajectories(replicates, seed=1))
        self.assertTrue(report.passed)
        self.assertEqual(report.replicates, 2)
        self.assertAlmostEqual(report.for_compartment('N').max_abs_error, 0.0)

    def test_rejects_different_grid(self):
        """Test rejects different grid."""
        ode = yearly_trajectory(n=constant(1000))
        abm = EnsembleStats.from_trajectories([yearly_trajectory(t_end=60.0, engine=EngineType.ABM)])
        with self.assertRaises(GridAlignmentError):
            compare(ode, abm)


class TestExtractFeatures(unittest.TestCase):
    """Lifespan feature extraction."""

    def test_exponential_decay_halflife(self):
        """Test exponential decay halflife."""
        rate = math.log(2.0) / 15.7
        traj = yearly_trajectory(n=lambda t: 2000.0 * np.exp(-rate * t))
        features = extract_features(traj)
        self.assertAlmostEqual(features.late_decay_halflife, 15.7, places=6)
        self.assertIsNone(features.crossover_age)
        self.assertEqual(features.thymic_peak_age, 0.0)
        self.assertEqual(features.window, (40.0, 90.0))

    def test_planted_crossover(self):
        """Test planted crossover."""
        traj = yearly_trajectory(n=lambda t: 1000.0 - 10.0 * t, n_p=lambda t: 10.0 * t)
        features = extract_features(traj)
        # Equal at t = 50; the crossing is strict
        self.assertEqual(features.crossover_age, 51.0)
        self.assertAlmostEqual(features.total_naive_drift, 0.0)
        self.assertAlmostEqual(features.thymic_naive_drift, 100.0 / 600.0 - 1.0)

    def test_tie_is_not_a_crossover(self):
        """Test tie is not a crossover."""
        traj = yearly_trajectory(n=constant(500), n_p=constant(500))
        self.assertIsNone(extract_features(traj).crossover_age)

    def test_growing_series_has_no_halflife(self):
        """Test growing series has no halflife."""
        traj = yearly_trajectory(n=lambda t: 100.0 + t)
        features = extract_features(traj)
        self.assertIsNone(features.late_decay_halflife)
        self.assertEqual(features.thymic_peak_age, 100.0)

    def test_peak_age(self):
        """Test peak age."""
        traj = yearly_trajectory(n=lambda t: 3000.0 - (t - 12.0) ** 2)
        self.assertEqual(extract_features(traj).thymic_peak_age, 12.0)

    def test_short_trajectory_rejected(self):
        """Test short trajectory rejected."""
        with self.assertRaises(AnalysisError):
            extract_features(yearly_trajectory(t_end=20.0, n=constant(100)))

    def test_reversed_window_rejected(self):
        """Test reversed window rejected."""
        with self.assertRaises(AnalysisError):
            extract_features(yearly_trajectory(n=constant(100)), window=(90.0, 40.0))

    def test_window_beyond_horizon(self):
        """Test window beyond horizon."""
        traj = yearly_trajectory(t_end=50.0, n=lambda t: 1000.0 - t)
        features = extract_features(traj, window=(60.0, 90.0))
        self.assertIsNone(features.late_decay_halflife)
        self.assertIsNone(features.total_naive_drift)


class TestLateDeathRate(unittest.TestCase):

    def test_without_proliferated_cells(self):
        """Test without proliferated cells."""
        p = default_params()
        traj = yearly_trajectory(n=constant(100))
        self.assertAlmostEqual(late_death_rate(traj, p), 4.403)

    def test_saturated_dilution(self):
        """Test saturated dilution."""
        p = default_params()
        traj = yearly_trajectory(n=constant(100), n_p=constant(392))
        # g = 1 + b/2 at Np = Np_bar
        self.assertAlmostEqual(late_death_rate(traj, p), 0.003 + 4.4 * (1 + 4.2 / 2))

    def test_empty_window(self):
        """Test empty window."""
        traj = yearly_trajectory(t_end=30.0, n=constant(100))
        self.assertIsNone(late_death_rate(traj, default_params()))


class TestMemoryEstimate(unittest.TestCase):
    """Memory extrapolation from the active compartment."""

    def test_scales_active_compartment(self):
        """Test scales active compartment."""
        traj = yearly_trajectory(a=constant(10), m=constant(30))
        estimate = memory_estimate(traj, 0.10)
        np.testing.assert_allclose(estimate.estimated_total, 100.0)
        np.testing.assert_allclose(estimate.model_memory, 30.0)
        np.testing.assert_allclose(estimate.memory_share, 0.3)

    def test_linear_in_inverse_fraction(self):
        """Test linear in inverse fraction."""
        traj = yearly_trajectory(a=lambda t: 1.0 + t)
        tenth = memory_estimate(traj, 0.10).estimated_total
        fifth = memory_estimate(traj, 0.20).estimated_total
        np.testing.assert_allclose(tenth, 2.0 * fifth)

    def test_absent_without_active_cells(self):
        """Test absent without active cells."""
        estimate = memory_estimate(yearly_trajectory(n=constant(100)))
        self.assertIsNone(estimate.estimated_total)
        self.assertIsNone(estimate.memory_share)
        self.assertTrue(np.all(np.isnan(estimate.to_columns()['estimated_total'])))

    def test_invalid_fraction(self):
        """Test invalid fraction."""
        traj = yearly_trajectory(a=constant(10))
        for fraction in (0.0, 1.0, -0.1, 1.5):
            with self.assertRaises(AnalysisError):
                memory_estimate(traj, fraction)


if __name__ == '__main__':
    unittest.main()
