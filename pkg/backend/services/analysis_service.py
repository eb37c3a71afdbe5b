"""
Analysis of simulation results.

Cross-engine comparison metrics, lifespan feature extraction and the
memory-cell extrapolation. All functions are pure.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from core.entities.ensemble_stats import EnsembleStats
from core.entities.reports import (
    CompartmentMetrics,
    ComparisonReport,
    FeatureReport,
    MemoryEstimate,
    ToleranceProfile,
)
from core.entities.trajectory import Trajectory
from core.exceptions import AnalysisError, GridAlignmentError
from core.rates import trec_death_factor
from core.value_objects.model_params import ModelParams
from core.value_objects.state_vector import COMPARTMENTS

logger = logging.getLogger(__name__)

DEFAULT_WINDOW: Tuple[float, float] = (40.0, 90.0)
DEFAULT_ACTIVE_FRACTION = 0.10
MIN_FEATURE_SPAN = 30.0

# Absolute tolerance when matching recording times of two results
TIME_MATCH_ATOL = 1e-9


def _check_alignment(reference_times: np.ndarray, candidate_times: np.ndarray) -> None:
    if reference_times.shape != candidate_times.shape or not np.allclose(
        reference_times, candidate_times, rtol=0.0, atol=TIME_MATCH_ATOL
    ):
        raise GridAlignmentError(
            f"Recording grids differ ({len(reference_times)} vs {len(candidate_times)} samples); "
            "both results must come from the same scenario"
        )


def compare_trajectories(
    reference: Trajectory,
    candidate: Trajectory,
    tolerance: Optional[ToleranceProfile] = None,
    replicates: Optional[int] = None,
) -> ComparisonReport:
    """
    Per-compartment error metrics of ``candidate`` against ``reference``.

    RMSE and maximum absolute error are symmetric in the two inputs; the
    relative error uses max(|reference|, floor) as denominator.

    Raises:
        GridAlignmentError: If the two trajectories are recorded at different times
    """
    tolerance = tolerance or ToleranceProfile()
    times = reference.times()
    _check_alignment(times, candidate.times())

    ref = reference.values()
    diff = candidate.values() - ref
    abs_diff = np.abs(diff)
    denominator = np.maximum(np.abs(ref), tolerance.floor)
    band = np.maximum(tolerance.relative * np.abs(ref), tolerance.absolute)

    metrics = []
    for column, name in enumerate(COMPARTMENTS):
        errors = abs_diff[:, column]
        worst = int(np.argmax(errors))
        metrics.append(CompartmentMetrics(
            compartment=name,
            rmse=float(np.sqrt(np.mean(diff[:, column] ** 2))),
            max_abs_error=float(errors[worst]),
            max_rel_error=float(np.max(errors / denominator[:, column])),
            time_of_max_error=float(times[worst]),
            passed=bool(np.all(errors <= band[:, column])),
        ))
    return ComparisonReport(metrics=tuple(metrics), tolerance=tolerance, replicates=replicates)


def compare(
    ode: Trajectory,
    abm: EnsembleStats,
    tolerance: Optional[ToleranceProfile] = None,
) -> ComparisonReport:
    """
    Compare an ODE trajectory with the mean of an ABM ensemble.

    Args:
        ode: Deterministic trajectory
        abm: Ensemble statistics on the same scenario
        tolerance: Acceptance band (default 5% relative / 5 cells absolute)

    Raises:
        GridAlignmentError: If the recording times differ (no resampling)
    """
    _check_alignment(ode.times(), abm.times)
    report = compare_trajectories(ode, abm.mean_trajectory(), tolerance, replicates=abm.replicates)
    logger.info(f"Comparison over {len(ode)} samples: {'pass' if report.passed else 'fail'}")
    return report


def _value_at(times: np.ndarray, values: np.ndarray, t: float) -> float:
    return float(np.interp(t, times, values))


def _window_mask(times: np.ndarray, window: Tuple[float, float]) -> np.ndarray:
    return (times >= window[0]) & (times <= window[1])


def extract_features(traj: Trajectory, window: Tuple[float, float] = DEFAULT_WINDOW) -> FeatureReport:
    """
    Qualitative lifespan features of a trajectory.

    - crossover age: first recorded t with Np > N (strict)
    - thymic peak age: time of the largest N
    - late decay half-life: ln 2 over minus the slope of a least-squares
      line through ln N(t) inside the window
    - drifts: relative change of N + Np and of N between the window ends

    Raises:
        AnalysisError: If the trajectory spans less than 30 years or the window is empty
    """
    times = traj.times()
    if times[-1] - times[0] < MIN_FEATURE_SPAN:
        raise AnalysisError(
            f"Feature extraction needs at least {MIN_FEATURE_SPAN:g} years, got {times[-1] - times[0]:g}"
        )
    start, end = window
    if not start < end:
        raise AnalysisError(f"Invalid window {window}")
    end = min(end, float(times[-1]))
    start = max(start, float(times[0]))

    n = traj.compartment('N')
    n_p = traj.compartment('Np')

    crossing = np.nonzero(n_p > n)[0]
    crossover_age = float(times[crossing[0]]) if crossing.size else None
    thymic_peak_age = float(times[int(np.argmax(n))])

    halflife = None
    total_drift = None
    thymic_drift = None
    if start < end:
        mask = _window_mask(times, (start, end)) & (n > 0)
        if np.count_nonzero(mask) >= 2:
            slope = np.polyfit(times[mask], np.log(n[mask]), 1)[0]
            if slope < 0:
                halflife = math.log(2.0) / -slope

        total = n + n_p
        total_start = _value_at(times, total, start)
        if total_start > 0:
            total_drift = _value_at(times, total, end) / total_start - 1.0
        n_start = _value_at(times, n, start)
        if n_start > 0:
            thymic_drift = _value_at(times, n, end) / n_start - 1.0

    return FeatureReport(
        crossover_age=crossover_age,
        thymic_peak_age=thymic_peak_age,
        late_decay_halflife=halflife,
        total_naive_drift=total_drift,
        thymic_naive_drift=thymic_drift,
        window=(float(window[0]), float(window[1])),
    )


def late_death_rate(traj: Trajectory, p: ModelParams, window: Tuple[float, float] = DEFAULT_WINDOW) -> Optional[float]:
    """
    Mean per-capita loss rate of thymic-naive cells, lambda_n + mu_n * g(Np), over the window.

    Returns None when no sample falls inside the window.
    """
    times = traj.times()
    mask = _window_mask(times, window)
    if not mask.any():
        return None
    n_p = traj.compartment('Np')[mask]
    rates = [p.lambda_n + p.mu_n * trec_death_factor(value, p) for value in n_p]
    return float(np.mean(rates))


def memory_estimate(traj: Trajectory, active_fraction: float = DEFAULT_ACTIVE_FRACTION) -> MemoryEstimate:
    """
    Memory-cell extrapolation from the active compartment.

    Assumes ``active_fraction`` of all T cells are active, so the total
    population is A(t) / active_fraction. The model's own M(t) is reported
    alongside; the rescaled total is absent when A is zero throughout.

    Raises:
        AnalysisError: If active_fraction is not in (0, 1)
    """
    if not 0.0 < active_fraction < 1.0:
        raise AnalysisError(f"active_fraction must lie in (0, 1), got {active_fraction}")
    active = traj.compartment('A')
    estimated_total = None if not np.any(active > 0) else active / active_fraction
    return MemoryEstimate(
        times=traj.times(),
        active=active,
        model_memory=traj.compartment('M'),
        active_fraction=active_fraction,
        estimated_total=estimated_total,
    )
