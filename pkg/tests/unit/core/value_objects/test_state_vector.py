"""
Unit tests for StateVector and StateDerivative.
"""

import unittest

import numpy as np

from core.exceptions import InvalidStateError
from core.value_objects.state_vector import COMPARTMENTS, StateDerivative, StateVector


class TestStateVector(unittest.TestCase):
    """Test cases for StateVector value object."""

    def test_valid_state(self):
        """Test valid state."""
        s = StateVector(t=1.5, n=2000.0, n_p=10.0, a=1.0, m=0.5)
        self.assertEqual(s.total_naive, 2010.0)
        np.testing.assert_array_equal(s.as_array(), [2000.0, 10.0, 1.0, 0.5])

    def test_negative_compartment_rejected(self):
        """Test negative compartment rejected."""
        with self.assertRaises(InvalidStateError):
            StateVector(t=0.0, n=-1.0, n_p=0.0, a=0.0, m=0.0)

    def test_nan_rejected(self):
        """Test nan rejected."""
        with self.assertRaises(InvalidStateError):
            StateVector(t=0.0, n=0.0, n_p=float('nan'), a=0.0, m=0.0)

    def test_infinite_time_rejected(self):
        """Test infinite time rejected."""
        with self.assertRaises(InvalidStateError):
            StateVector(t=float('inf'), n=0.0, n_p=0.0, a=0.0, m=0.0)

    def test_from_array(self):
        """Test from array."""
        s = StateVector.from_array(2.0, np.array([1.0, 2.0, 3.0, 4.0]))
        self.assertEqual(s, StateVector(2.0, 1.0, 2.0, 3.0, 4.0))
        self.assertIsInstance(s.n, float)

    def test_to_dict_uses_compartment_names(self):
        """Test to dict uses compartment names."""
        s = StateVector(0.0, 1.0, 2.0, 3.0, 4.0)
        self.assertEqual(list(s.to_dict()), ['t'] + list(COMPARTMENTS))


class TestStateDerivative(unittest.TestCase):
    """Test cases for StateDerivative value object."""

    def test_orderings(self):
        """Test orderings."""
        d = StateDerivative(dn=1.0, dn_p=2.0, dm=3.0, da=4.0)
        self.assertEqual(d.as_tuple(), (1.0, 2.0, 3.0, 4.0))
        np.testing.assert_array_equal(d.as_array(), [1.0, 2.0, 4.0, 3.0])


if __name__ == '__main__':
    unittest.main()
