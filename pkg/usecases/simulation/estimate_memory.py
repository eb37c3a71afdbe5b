"""
Estimate memory use case.
"""

import logging
from typing import Optional

from backend.services import analysis_service
from backend.services.ode_service import OdeSimulationService
from core.entities.reports import MemoryEstimate
from core.value_objects.run_config import RunConfig
from interfaces.repositories.result_repository import PathLike, ResultRepository

logger = logging.getLogger(__name__)


class EstimateMemoryUseCase:
    """
    Use case for the memory-cell extrapolation.

    Integrates the scenario and rescales the active compartment by the
    configured active fraction; the model's own M(t) is kept alongside.
    """

    def __init__(self, ode_service: OdeSimulationService, result_repository: ResultRepository):
        self._ode_service = ode_service
        self._result_repository = result_repository

    def execute(self, config: RunConfig, output_path: Optional[PathLike] = None) -> MemoryEstimate:
        trajectory = self._ode_service.integrate(config.scenario, config.params)
        estimate = analysis_service.memory_estimate(trajectory, config.analysis.active_fraction)
        if estimate.estimated_total is None:
            logger.warning("Active compartment is empty throughout; no total-population estimate")
        if output_path is not None:
            self._result_repository.save_memory_estimate(estimate, output_path)
        return estimate
