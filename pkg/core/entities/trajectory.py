"""
Trajectory domain entity.

An ordered time series of compartment states produced by one engine run,
together with the metadata needed to reproduce it.
"""

from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from core.exceptions import InvalidStateError
from core.value_objects.scenario import Scenario
from core.value_objects.state_vector import COMPARTMENTS, StateVector


class EngineType:
    """Enumeration of simulation engines."""

    ODE = "ode"
    ABM = "abm"

    @classmethod
    def is_valid(cls, engine: str) -> bool:
        return engine in (cls.ODE, cls.ABM)


class Trajectory:
    """
    Recorded samples of a single simulation run.

    Samples are strictly increasing in time and all satisfy the
    StateVector invariants.
    """

    def __init__(
        self,
        engine: str,
        scenario: Scenario,
        samples: Sequence[StateVector],
        clamp_count: int = 0,
        seed: Optional[int] = None,
        replicate_index: Optional[int] = None,
    ):
        """
        Initialize trajectory.

        Args:
            engine: Engine tag (ode | abm)
            scenario: Scenario the run was made for
            samples: Recorded states, in time order
            clamp_count: Number of negative values clamped to zero
            seed: Root seed (ABM runs only)
            replicate_index: Replicate index (ABM runs only)

        Raises:
            InvalidStateError: If samples are empty or not strictly increasing in t
        """
        if not EngineType.is_valid(engine):
            raise InvalidStateError(f"Unknown engine tag: {engine}")
        if not samples:
            raise InvalidStateError("A trajectory needs at least one sample")
        times = [s.t for s in samples]
        if any(later <= earlier for earlier, later in zip(times, times[1:])):
            raise InvalidStateError("Trajectory samples must be strictly increasing in t")
        if clamp_count < 0:
            raise InvalidStateError("clamp_count must be non-negative")

        self._engine = engine
        self._scenario = scenario
        self._samples: List[StateVector] = list(samples)
        self._clamp_count = int(clamp_count)
        self._seed = seed
        self._replicate_index = replicate_index

    @classmethod
    def from_arrays(
        cls,
        engine: str,
        scenario: Scenario,
        times: Sequence[float],
        values: np.ndarray,
        **metadata: Any,
    ) -> 'Trajectory':
        """Build from a time vector and a (k, 4) value array in (N, Np, A, M) order."""
        samples = [StateVector.from_array(t, row) for t, row in zip(times, np.asarray(values, dtype=float))]
        return cls(engine, scenario, samples, **metadata)

    @property
    def engine(self) -> str:
        return self._engine

    @property
    def scenario(self) -> Scenario:
        return self._scenario

    @property
    def samples(self) -> List[StateVector]:
        return list(self._samples)

    @property
    def clamp_count(self) -> int:
        return self._clamp_count

    @property
    def seed(self) -> Optional[int]:
        return self._seed

    @property
    def replicate_index(self) -> Optional[int]:
        return self._replicate_index

    def times(self) -> np.ndarray:
        """Sample times as an array."""
        return np.array([s.t for s in self._samples], dtype=float)

    def values(self) -> np.ndarray:
        """Sample values as a (k, 4) array in (N, Np, A, M) order."""
        return np.array([(s.n, s.n_p, s.a, s.m) for s in self._samples], dtype=float)

    def compartment(self, name: str) -> np.ndarray:
        """Time series of a single compartment (N, Np, A or M)."""
        if name not in COMPARTMENTS:
            raise KeyError(f"Unknown compartment {name!r}; expected one of {COMPARTMENTS}")
        return self.values()[:, COMPARTMENTS.index(name)]

    @property
    def first(self) -> StateVector:
        return self._samples[0]

    @property
    def last(self) -> StateVector:
        return self._samples[-1]

    def metadata(self) -> Dict[str, Any]:
        return {
            'engine': self._engine,
            'scenario': self._scenario.to_dict(),
            'clamp_count': self._clamp_count,
            'seed': self._seed,
            'replicate_index': self._replicate_index,
        }

    def __len__(self) -> int:
        return len(self._samples)

    def __iter__(self):
        return iter(self._samples)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trajectory):
            return False
        return self._engine == other._engine and self._samples == other._samples

    def __repr__(self) -> str:
        return (
            f"Trajectory(engine='{self._engine}', samples={len(self._samples)}, "
            f"t=[{self.first.t}, {self.last.t}], clamp_count={self._clamp_count})"
        )
