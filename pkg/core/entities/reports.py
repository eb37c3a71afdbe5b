"""
Analysis report entities.

Cross-engine comparison reports, lifespan feature reports and the
memory-cell extrapolation series.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from core.exceptions import AnalysisError
from core.value_objects.state_vector import COMPARTMENTS


@dataclass(frozen=True)
class ToleranceProfile:
    """
    Pointwise acceptance band for cross-engine comparison.

    A point passes when |difference| <= max(relative * |reference|, absolute).
    ``floor`` is the minimum denominator used for relative error metrics.
    """

    relative: float = 0.05
    absolute: float = 5.0
    floor: float = 1.0

    def __post_init__(self):
        if self.relative < 0 or self.absolute < 0:
            raise AnalysisError("Tolerances must be non-negative")
        if self.floor <= 0:
            raise AnalysisError("Relative-error floor must be positive")


@dataclass(frozen=True)
class CompartmentMetrics:
    """Error metrics of one compartment."""

    compartment: str
    rmse: float
    max_abs_error: float
    max_rel_error: float
    time_of_max_error: float
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class ComparisonReport:
    """Per-compartment agreement between a reference and a candidate series."""

    metrics: Tuple[CompartmentMetrics, ...]
    tolerance: ToleranceProfile
    replicates: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(m.passed for m in self.metrics)

    def for_compartment(self, name: str) -> CompartmentMetrics:
        for metric in self.metrics:
            if metric.compartment == name:
                return metric
        raise KeyError(f"Unknown compartment {name!r}; expected one of {COMPARTMENTS}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'replicates': self.replicates,
            'tolerance': asdict(self.tolerance),
            'compartments': {m.compartment: m.to_dict() for m in self.metrics},
        }

    def to_text(self) -> str:
        """Human-readable table."""
        lines = [
            f"{'compartment':<12}{'rmse':>14}{'max_abs':>14}{'max_rel':>12}{'t_max':>10}  result",
        ]
        for m in self.metrics:
            lines.append(
                f"{m.compartment:<12}{m.rmse:>14.6g}{m.max_abs_error:>14.6g}"
                f"{m.max_rel_error:>12.4g}{m.time_of_max_error:>10.4g}  {'PASS' if m.passed else 'FAIL'}"
            )
        lines.append(
            f"overall: {'PASS' if self.passed else 'FAIL'} "
            f"(relative {self.tolerance.relative:g}, absolute {self.tolerance.absolute:g})"
        )
        return "\n".join(lines)


@dataclass(frozen=True)
class FeatureReport:
    """
    Qualitative lifespan features of a trajectory.

    Absent features are None: no crossover, no detectable decay, or an
    empty late window.
    """

    crossover_age: Optional[float]
    thymic_peak_age: float
    late_decay_halflife: Optional[float]
    total_naive_drift: Optional[float]
    thymic_naive_drift: Optional[float]
    window: Tuple[float, float] = field(default=(40.0, 90.0))

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['window_start'], data['window_end'] = data.pop('window')
        return data


class MemoryEstimate:
    """
    Memory-cell extrapolation series.

    Reports the model's own M(t) next to the total T cell population
    implied by assuming a fixed fraction of it is active.
    """

    def __init__(
        self,
        times: np.ndarray,
        active: np.ndarray,
        model_memory: np.ndarray,
        active_fraction: float,
        estimated_total: Optional[np.ndarray],
    ):
        self._times = np.asarray(times, dtype=float)
        self._active = np.asarray(active, dtype=float)
        self._model_memory = np.asarray(model_memory, dtype=float)
        self._active_fraction = float(active_fraction)
        self._estimated_total = None if estimated_total is None else np.asarray(estimated_total, dtype=float)

    @property
    def times(self) -> np.ndarray:
        return self._times.copy()

    @property
    def active(self) -> np.ndarray:
        return self._active.copy()

    @property
    def model_memory(self) -> np.ndarray:
        return self._model_memory.copy()

    @property
    def active_fraction(self) -> float:
        return self._active_fraction

    @property
    def estimated_total(self) -> Optional[np.ndarray]:
        return None if self._estimated_total is None else self._estimated_total.copy()

    @property
    def memory_share(self) -> Optional[np.ndarray]:
        """M(t) as a fraction of the estimated total; NaN where the estimate is 0."""
        if self._estimated_total is None:
            return None
        with np.errstate(divide='ignore', invalid='ignore'):
            share = np.where(self._estimated_total > 0, self._model_memory / self._estimated_total, np.nan)
        return share

    def to_columns(self) -> Dict[str, np.ndarray]:
        """Column mapping for tabular export."""
        nan = np.full_like(self._times, np.nan)
        return {
            't': self._times,
            'A': self._active,
            'M': self._model_memory,
            'estimated_total': nan if self._estimated_total is None else self._estimated_total,
            'memory_share': nan if self._estimated_total is None else self.memory_share,
        }
