"""
Unit tests for the AgentPopulation entity.
"""

import unittest

from core.entities.agent_population import AgentPopulation
from core.exceptions import InvalidStateError
from core.value_objects.state_vector import StateVector


class TestAgentPopulation(unittest.TestCase):
    """Test cases for AgentPopulation entity."""

    def test_counts_and_total(self):
        """Test counts and total."""
        pop = AgentPopulation(0.0, 2000, 5, 1, 0)
        self.assertEqual(pop.counts, (2000, 5, 1, 0))
        self.assertEqual(pop.total, 2006)

    def test_negative_count_rejected(self):
        """Test negative count rejected."""
        with self.assertRaises(InvalidStateError):
            AgentPopulation(0.0, -1, 0, 0, 0)

    def test_fractional_count_rejected(self):
        """Test fractional count rejected."""
        with self.assertRaises(InvalidStateError):
            AgentPopulation(0.0, 1.5, 0, 0, 0)

    def test_rounding_half_to_even(self):
        """Test rounding half to even."""
        pop = AgentPopulation.from_state(StateVector(0.0, 2.5, 3.5, 0.4, 0.6))
        self.assertEqual(pop.counts, (2, 4, 0, 1))

    def test_scaled_round_trip(self):
        """Test scaled round trip."""
        state = StateVector(1.0, 2000.0, 10.0, 0.0, 3.0)
        pop = AgentPopulation.from_state(state, scale=10.0)
        self.assertEqual(pop.counts, (20000, 100, 0, 30))
        self.assertEqual(pop.to_state(scale=10.0), state)

    def test_to_state_with_new_time(self):
        """Test to state with new time."""
        pop = AgentPopulation(0.0, 4, 0, 0, 0)
        self.assertEqual(pop.to_state(t=2.0).t, 2.0)


if __name__ == '__main__':
    unittest.main()
