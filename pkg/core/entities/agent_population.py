"""
Agent population domain entity.

Counts-by-state representation of the agent ensemble at one time.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from core.exceptions import InvalidStateError
from core.value_objects.state_vector import StateVector


@dataclass(frozen=True)
class AgentPopulation:
    """
    Number of agents in each of the four states at time ``t``.

    Agents are T cells; initially all are naive of thymic origin.
    """

    t: float
    naive_thymic: int
    naive_proliferated: int
    active: int
    memory: int

    def __post_init__(self):
        for name in ('naive_thymic', 'naive_proliferated', 'active', 'memory'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidStateError(f"{name} must be an integer count, got {value!r}")
            if value < 0:
                raise InvalidStateError(f"{name} must be non-negative, got {value}")

    @classmethod
    def from_state(cls, state: StateVector, scale: float = 1.0) -> 'AgentPopulation':
        """
        Round a density state to agent counts, half to even.

        Args:
            state: Densities in cells per mm^3
            scale: Agents per (cell per mm^3)
        """
        counts = np.rint(state.as_array() * scale).astype(np.int64)
        return cls(state.t, *(int(c) for c in counts))

    @property
    def counts(self) -> Tuple[int, int, int, int]:
        return (self.naive_thymic, self.naive_proliferated, self.active, self.memory)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_state(self, scale: float = 1.0, t: Optional[float] = None) -> StateVector:
        """Convert counts back to densities (count / scale)."""
        stamp = self.t if t is None else t
        return StateVector.from_array(stamp, np.array(self.counts, dtype=float) / scale)
