"""
Unit tests for the Trajectory entity.
"""

import unittest

import numpy as np

from core.entities.trajectory import EngineType, Trajectory
from core.exceptions import InvalidStateError
from core.value_objects.scenario import default_scenario
from core.value_objects.state_vector import StateVector


class TestTrajectoryEntity(unittest.TestCase):
    """Test cases for Trajectory entity."""

    def setUp(self):
        self.scenario = default_scenario(t_end=1.0)
        self.times = [0.0, 0.5, 1.0]
        self.values = np.array([
            [2000.0, 0.0, 0.0, 0.0],
            [1500.0, 1.0, 0.1, 0.0],
            [1200.0, 2.0, 0.2, 0.01],
        ])

    def test_from_arrays(self):
        """Test from arrays."""
        traj = Trajectory.from_arrays(EngineType.ODE, self.scenario, self.times, self.values)
        self.assertEqual(len(traj), 3)
        self.assertEqual(traj.engine, 'ode')
        self.assertEqual(traj.first, StateVector(0.0, 2000.0, 0.0, 0.0, 0.0))
        np.testing.assert_array_equal(traj.times(), self.times)
        np.testing.assert_array_equal(traj.values(), self.values)
        np.testing.assert_array_equal(traj.compartment('Np'), [0.0, 1.0, 2.0])

    def test_unknown_compartment(self):
        """Test unknown compartment."""
        traj = Trajectory.from_arrays(EngineType.ODE, self.scenario, self.times, self.values)
        with self.assertRaises(KeyError):
            traj.compartment('X')

    def test_unknown_engine_rejected(self):
        """Test unknown engine rejected."""
        with self.assertRaises(InvalidStateError):
            Trajectory.from_arrays('pde', self.scenario, self.times, self.values)

    def test_empty_rejected(self):
        """Test empty rejected."""
        with self.assertRaises(InvalidStateError):
            Trajectory(EngineType.ODE, self.scenario, [])

    def test_non_increasing_times_rejected(self):
        """Test non increasing times rejected."""
        with self.assertRaises(InvalidStateError):
            Trajectory.from_arrays(EngineType.ODE, self.scenario, [0.0, 0.5, 0.5], self.values)

    def test_negative_sample_rejected(self):
        """Test negative sample rejected."""
        values = self.values.copy()
        values[1, 2] = -0.1
        with self.assertRaises(InvalidStateError):
            Trajectory.from_arrays(EngineType.ODE, self.scenario, self.times, values)

    def test_equality_ignores_metadata(self):
        """Test equality ignores metadata."""
        a = Trajectory.from_arrays(EngineType.ABM, self.scenario, self.times, self.values, seed=1)
        b = Trajectory.from_arrays(EngineType.ABM, self.scenario, self.times, self.values, seed=2)
        c = Trajectory.from_arrays(EngineType.ODE, self.scenario, self.times, self.values)
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)

    def test_metadata(self):
        """Test metadata."""
        traj = Trajectory.from_arrays(
            EngineType.ABM, self.scenario, self.times, self.values, seed=9, replicate_index=3
        )
        metadata = traj.metadata()
        self.assertEqual(metadata['seed'], 9)
        self.assertEqual(metadata['replicate_index'], 3)
        self.assertEqual(metadata['clamp_count'], 0)


if __name__ == '__main__':
    unittest.main()
