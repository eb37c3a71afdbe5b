"""
Run ABM use case.
"""

import logging
from typing import Optional

from backend.services.abm_service import AbmSimulationService
from core.entities.ensemble_stats import EnsembleStats
from core.value_objects.run_config import RunConfig
from interfaces.repositories.result_repository import PathLike, ResultRepository

logger = logging.getLogger(__name__)


class RunAbmUseCase:
    """Use case for a stochastic ensemble run written as summary statistics."""

    def __init__(self, abm_service: AbmSimulationService, result_repository: ResultRepository):
        self._abm_service = abm_service
        self._result_repository = result_repository

    def execute(self, config: RunConfig, output_path: Optional[PathLike] = None) -> EnsembleStats:
        """
        Run ``config.abm.replicates`` replicates and aggregate them.

        Raises:
            ReplicateFaultError: If a replicate fails
            ExportError: If the table cannot be written
        """
        stats = self._abm_service.run_ensemble(config.scenario, config.params, config.abm)
        if output_path is not None:
            self._result_repository.save_ensemble(stats, output_path)
        return stats
