"""
Result repository interface.

Defines the contract for persisting simulation results and analysis reports.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence, Union

from core.entities.ensemble_stats import EnsembleStats
from core.entities.reports import ComparisonReport, MemoryEstimate
from core.entities.trajectory import Trajectory
from core.value_objects.scenario import Scenario

PathLike = Union[str, Path]


class ResultRepository(ABC):
    """
    Abstract repository for simulation results.

    Implementations decide the on-disk format; callers only depend on
    this contract.
    """

    @abstractmethod
    def save_trajectory(self, trajectory: Trajectory, path: PathLike) -> Path:
        """
        Write a trajectory table.

        Args:
            trajectory: Trajectory to persist
            path: Destination file

        Returns:
            Path that was written

        Raises:
            ExportError: If the file cannot be written
        """
        pass

    @abstractmethod
    def load_trajectory(self, path: PathLike, scenario: Scenario, engine: str) -> Trajectory:
        """
        Read a trajectory table written by save_trajectory.

        Raises:
            ExportError: If the file cannot be read or is malformed
        """
        pass

    @abstractmethod
    def save_ensemble(self, stats: EnsembleStats, path: PathLike) -> Path:
        """Write per-compartment mean, variance, minimum and maximum."""
        pass

    @abstractmethod
    def save_comparison(self, report: ComparisonReport, path: PathLike) -> Path:
        """Write a comparison report in machine-readable form."""
        pass

    @abstractmethod
    def save_summary(self, rows: Sequence[Mapping[str, Any]], path: PathLike) -> Path:
        """Write a summary table, one row per mapping."""
        pass

    @abstractmethod
    def save_memory_estimate(self, estimate: MemoryEstimate, path: PathLike) -> Path:
        """Write the memory-cell extrapolation series."""
        pass

    @abstractmethod
    def load_table(self, path: PathLike) -> List[Dict[str, Any]]:
        """Read any table written by this repository as a list of rows."""
        pass
