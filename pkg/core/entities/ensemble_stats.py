"""
Ensemble statistics domain entities.

ReplicateBatch collects replicate results keyed by replicate index;
EnsembleStats is the per-time-point summary across replicates.
"""

from typing import Dict, Iterable, Mapping, Optional

import numpy as np

from core.entities.trajectory import EngineType, Trajectory
from core.exceptions import GridAlignmentError, InvalidStateError
from core.value_objects.scenario import Scenario
from core.value_objects.state_vector import COMPARTMENTS

STATISTICS = ('mean', 'var', 'min', 'max')


class EnsembleStats:
    """
    Mean, sample variance, minimum and maximum per recorded time and compartment.

    All statistic arrays have shape (k, 4) in (N, Np, A, M) column order.
    """

    def __init__(
        self,
        scenario: Scenario,
        times: np.ndarray,
        mean: np.ndarray,
        var: np.ndarray,
        minimum: np.ndarray,
        maximum: np.ndarray,
        replicates: int,
        seed: Optional[int] = None,
    ):
        times = np.asarray(times, dtype=float)
        arrays = [np.asarray(a, dtype=float) for a in (mean, var, minimum, maximum)]
        expected = (len(times), len(COMPARTMENTS))
        for name, array in zip(STATISTICS, arrays):
            if array.shape != expected:
                raise InvalidStateError(f"{name} has shape {array.shape}, expected {expected}")
        if replicates < 1:
            raise InvalidStateError("An ensemble needs at least one replicate")
        if np.any(arrays[1] < 0):
            raise InvalidStateError("Variance must be non-negative")

        self._scenario = scenario
        self._times = times
        self._mean, self._var, self._min, self._max = arrays
        self._replicates = int(replicates)
        self._seed = seed

    @classmethod
    def from_trajectories(cls, trajectories: Iterable[Trajectory], seed: Optional[int] = None) -> 'EnsembleStats':
        """
        Aggregate replicate trajectories recorded on a common time grid.

        Raises:
            GridAlignmentError: If the replicates do not share recording times
        """
        trajectories = list(trajectories)
        if not trajectories:
            raise InvalidStateError("Cannot aggregate an empty set of trajectories")
        times = trajectories[0].times()
        for trajectory in trajectories[1:]:
            if not np.array_equal(trajectory.times(), times):
                raise GridAlignmentError("Replicates were recorded on different time grids")
        stacked = np.stack([t.values() for t in trajectories])
        count = stacked.shape[0]
        mean = stacked.mean(axis=0)
        var = stacked.var(axis=0, ddof=1) if count > 1 else np.zeros_like(mean)
        return cls(
            scenario=trajectories[0].scenario,
            times=times,
            mean=mean,
            var=var,
            minimum=stacked.min(axis=0),
            maximum=stacked.max(axis=0),
            replicates=count,
            seed=seed,
        )

    @property
    def scenario(self) -> Scenario:
        return self._scenario

    @property
    def times(self) -> np.ndarray:
        return self._times.copy()

    @property
    def mean(self) -> np.ndarray:
        return self._mean.copy()

    @property
    def var(self) -> np.ndarray:
        return self._var.copy()

    @property
    def minimum(self) -> np.ndarray:
        return self._min.copy()

    @property
    def maximum(self) -> np.ndarray:
        return self._max.copy()

    @property
    def replicates(self) -> int:
        return self._replicates

    @property
    def seed(self) -> Optional[int]:
        return self._seed

    def statistic(self, name: str) -> np.ndarray:
        """One of mean, var, min, max as a (k, 4) array."""
        lookup = {'mean': self._mean, 'var': self._var, 'min': self._min, 'max': self._max}
        if name not in lookup:
            raise KeyError(f"Unknown statistic {name!r}; expected one of {STATISTICS}")
        return lookup[name].copy()

    def mean_trajectory(self) -> Trajectory:
        """Ensemble mean as an ABM-tagged trajectory on the same grid."""
        return Trajectory.from_arrays(EngineType.ABM, self._scenario, self._times, self._mean, seed=self._seed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnsembleStats):
            return False
        return (
            self._replicates == other._replicates
            and np.array_equal(self._times, other._times)
            and all(
                np.array_equal(a, b)
                for a, b in zip(
                    (self._mean, self._var, self._min, self._max),
                    (other._mean, other._var, other._min, other._max),
                )
            )
        )

    def __repr__(self) -> str:
        return f"EnsembleStats(replicates={self._replicates}, samples={len(self._times)})"


class ReplicateBatch:
    """
    Replicate trajectories keyed by replicate index.

    Batches computed on different workers merge commutatively; statistics
    are always aggregated in replicate-index order, so the partitioning of
    work never changes the result.
    """

    def __init__(self, trajectories: Mapping[int, Trajectory], seed: Optional[int] = None):
        self._trajectories: Dict[int, Trajectory] = dict(trajectories)
        self._seed = seed

    @property
    def indices(self):
        return sorted(self._trajectories)

    @property
    def seed(self) -> Optional[int]:
        return self._seed

    def trajectory(self, replicate_index: int) -> Trajectory:
        return self._trajectories[replicate_index]

    def merge(self, other: 'ReplicateBatch') -> 'ReplicateBatch':
        """
        Union of two batches with disjoint replicate indices.

        Raises:
            InvalidStateError: If the batches overlap or use different seeds
        """
        overlap = set(self._trajectories) & set(other._trajectories)
        if overlap:
            raise InvalidStateError(f"Replicate indices present in both batches: {sorted(overlap)}")
        if self._seed is not None and other._seed is not None and self._seed != other._seed:
            raise InvalidStateError("Cannot merge batches produced from different seeds")
        merged = dict(self._trajectories)
        merged.update(other._trajectories)
        return ReplicateBatch(merged, seed=self._seed if self._seed is not None else other._seed)

    def to_stats(self) -> EnsembleStats:
        """Aggregate in replicate-index order."""
        return EnsembleStats.from_trajectories(
            (self._trajectories[i] for i in self.indices), seed=self._seed
        )

    def __len__(self) -> int:
        return len(self._trajectories)
