"""
Parameter sweep use case.

Runs the deterministic engine once per value of a single model parameter,
writes one trajectory table per value and a feature summary table.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from backend.services import analysis_service
from backend.services.ode_service import OdeSimulationService
from core.entities.reports import FeatureReport
from core.entities.trajectory import Trajectory
from core.exceptions import ConfigurationError, InvalidParameterError
from core.value_objects.model_params import ModelParams
from core.value_objects.run_config import RunConfig
from interfaces.repositories.result_repository import PathLike, ResultRepository

logger = logging.getLogger(__name__)

SWEEPABLE = tuple(name for name in ModelParams.model_fields if name != 's0_coefficients')


def value_label(value: float) -> str:
    """Shortest exact text for a value, used in file names (4.2 -> '4.2', 0.0 -> '0')."""
    text = repr(float(value))
    return text[:-2] if text.endswith('.0') else text


def parse_values(text: str) -> List[float]:
    """
    Parse a comma-separated value list.

    Raises:
        ConfigurationError: If the list is empty or holds a non-number
    """
    values: List[float] = []
    for chunk in text.split(','):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            values.append(float(chunk))
        except ValueError:
            raise ConfigurationError(f"--values: cannot parse {chunk!r} as a number", key='--values')
    if not values:
        raise ConfigurationError("--values: at least one value is required", key='--values')
    return values


@dataclass(frozen=True)
class SweepPoint:
    """Result of one sweep value."""

    value: float
    trajectory: Trajectory
    features: Optional[FeatureReport]
    late_death_rate: Optional[float]
    path: Optional[Path] = None

    def summary_row(self, param: str) -> Dict[str, Any]:
        row: Dict[str, Any] = {'param': param, 'value': self.value}
        if self.features is not None:
            row.update(self.features.to_dict())
        else:
            row.update({
                'crossover_age': None,
                'thymic_peak_age': None,
                'late_decay_halflife': None,
                'total_naive_drift': None,
                'thymic_naive_drift': None,
                'window_start': None,
                'window_end': None,
            })
        last = self.trajectory.last
        row.update({
            'late_death_rate': self.late_death_rate,
            'final_N': last.n,
            'final_Np': last.n_p,
            'clamp_count': self.trajectory.clamp_count,
        })
        return row


class SweepParameterUseCase:
    """Use case for a one-parameter sweep of the deterministic engine."""

    def __init__(self, ode_service: OdeSimulationService, result_repository: ResultRepository):
        self._ode_service = ode_service
        self._result_repository = result_repository

    def execute(
        self,
        config: RunConfig,
        param: str,
        values: Sequence[float],
        output_dir: Optional[PathLike] = None,
    ) -> List[SweepPoint]:
        """
        Execute the sweep.

        Each value replaces ``param`` in the configured parameter set; a
        derived proliferation rate is re-derived when mu_n or n_p_bar is swept.

        Args:
            config: Validated run configuration
            param: ModelParams field to sweep
            values: Values to try, in order (duplicates are skipped)
            output_dir: Directory for ``sweep_<param>_<value>.csv`` files and
                ``sweep_<param>_summary.csv``; nothing is written when None

        Returns:
            One SweepPoint per distinct value

        Raises:
            ConfigurationError: If ``param`` is unknown, any value violates its
                invariant or the value list is empty
        """
        if param not in SWEEPABLE:
            raise ConfigurationError(
                f"--param: unknown or non-scalar parameter '{param}'", key='--param'
            )
        distinct: List[float] = []
        for value in values:
            if float(value) not in distinct:
                distinct.append(float(value))
        if not distinct:
            raise ConfigurationError("--values: at least one value is required", key='--values')

        window = config.analysis.window
        span = config.scenario.span
        candidates = []
        for value in distinct:
            try:
                candidates.append((value, config.params.with_overrides(**{param: value})))
            except InvalidParameterError as e:
                raise ConfigurationError(f"--values: {param} = {value!r} is invalid: {e}", key=param)

        points: List[SweepPoint] = []
        for value, params in candidates:
            trajectory = self._ode_service.integrate(config.scenario, params)

            features = None
            if span >= analysis_service.MIN_FEATURE_SPAN:
                features = analysis_service.extract_features(trajectory, window)
            else:
                logger.warning(f"Horizon of {span:g} years is too short for feature extraction")
            death_rate = analysis_service.late_death_rate(trajectory, params, window)

            path = None
            if output_dir is not None:
                path = Path(output_dir) / f"sweep_{param}_{value_label(value)}.csv"
                self._result_repository.save_trajectory(trajectory, path)
            points.append(SweepPoint(value, trajectory, features, death_rate, path))
            logger.info(f"Sweep {param} = {value:g} done")

        if output_dir is not None:
            self._result_repository.save_summary(
                [point.summary_row(param) for point in points],
                Path(output_dir) / f"sweep_{param}_summary.csv",
            )
        return points
