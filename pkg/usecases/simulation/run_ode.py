"""
Run ODE use case.

Integrates the configured scenario deterministically and optionally
writes the trajectory table.
"""

import logging
from typing import Optional

from backend.services.ode_service import OdeSimulationService
from core.entities.trajectory import Trajectory
from core.value_objects.run_config import RunConfig
from interfaces.repositories.result_repository import PathLike, ResultRepository

logger = logging.getLogger(__name__)


class RunOdeUseCase:
    """Use case for a single deterministic run."""

    def __init__(self, ode_service: OdeSimulationService, result_repository: ResultRepository):
        """
        Initialize use case with required services.

        Args:
            ode_service: Deterministic engine
            result_repository: Destination of the trajectory table
        """
        self._ode_service = ode_service
        self._result_repository = result_repository

    def execute(self, config: RunConfig, output_path: Optional[PathLike] = None) -> Trajectory:
        """
        Execute the run.

        Args:
            config: Validated run configuration
            output_path: Trajectory file; nothing is written when None

        Returns:
            ODE trajectory

        Raises:
            StepLimitExceededError: If the scenario needs too many steps
            IntegrationFaultError: If integration produces a non-finite value
            ExportError: If the table cannot be written
        """
        trajectory = self._ode_service.integrate(config.scenario, config.params)
        if output_path is not None:
            self._result_repository.save_trajectory(trajectory, output_path)
        logger.info(f"ODE run finished: {trajectory!r}")
        return trajectory
