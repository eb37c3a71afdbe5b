"""
Compare engines use case.

Runs both engines on the same configuration and scores the ensemble mean
against the deterministic trajectory.
"""

import logging
from pathlib import Path
from typing import Optional

from backend.services import analysis_service
from backend.services.abm_service import AbmSimulationService
from backend.services.ode_service import OdeSimulationService
from core.entities.reports import ComparisonReport
from core.value_objects.run_config import RunConfig
from interfaces.repositories.result_repository import PathLike, ResultRepository

logger = logging.getLogger(__name__)


def report_path(output_path: PathLike) -> Path:
    """``<out>.json`` unless the path already ends in .json."""
    path = Path(output_path)
    if path.suffix == '.json':
        return path
    return path.with_name(f"{path.name}.json")


class CompareEnginesUseCase:
    """Use case for the cross-engine agreement check."""

    def __init__(
        self,
        ode_service: OdeSimulationService,
        abm_service: AbmSimulationService,
        result_repository: ResultRepository,
    ):
        self._ode_service = ode_service
        self._abm_service = abm_service
        self._result_repository = result_repository

    def execute(self, config: RunConfig, output_path: Optional[PathLike] = None) -> ComparisonReport:
        """
        Execute the comparison.

        Args:
            config: Validated run configuration; tolerances come from its analysis settings
            output_path: Report stem; the JSON report goes to ``<out>.json``

        Returns:
            ComparisonReport of the ensemble mean against the ODE trajectory
        """
        ode = self._ode_service.integrate(config.scenario, config.params)
        stats = self._abm_service.run_ensemble(config.scenario, config.params, config.abm)
        report = analysis_service.compare(ode, stats, config.analysis.tolerance)
        if output_path is not None:
            self._result_repository.save_comparison(report, report_path(output_path))
        return report
