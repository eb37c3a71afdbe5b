"""
Base service class for simulation backend services.

Provides common logging and the step cap for the engines.
"""

from abc import ABC, abstractmethod
import logging
from typing import Any, Dict, Optional

from backend.core.config import Settings, get_settings
from core.exceptions import StepLimitExceededError


class BaseService(ABC):
    """Abstract base class for all simulation services."""

    def __init__(self, service_name: str, settings: Optional[Settings] = None):
        """
        Initialize base service.

        Args:
            service_name: Name of the service for logging
            settings: Runtime settings (default: read from the environment)
        """
        self.service_name = service_name
        self.settings = settings or get_settings()
        self.logger = logging.getLogger(f"{__name__}.{service_name}")
        self.logger.debug(f"Initializing {service_name} service")

    @abstractmethod
    def get_service_info(self) -> Dict[str, Any]:
        """
        Get service information.

        Returns:
            Dictionary with service information
        """
        pass

    def log_operation(self, operation: str, details: Optional[Dict[str, Any]] = None) -> None:
        """
        Log service operations consistently.

        Args:
            operation: Name of the operation
            details: Additional details about the operation
        """
        log_msg = f"{self.service_name} - {operation}"
        if details:
            log_msg += f" - {details}"

        self.logger.info(log_msg)

    def check_step_budget(self, steps: int) -> None:
        """
        Reject runs longer than the configured safety cap.

        Raises:
            StepLimitExceededError: If ``steps`` exceeds settings.MAX_STEPS
        """
        if steps > self.settings.MAX_STEPS:
            raise StepLimitExceededError(
                f"{self.service_name}: {steps} steps exceed the cap of {self.settings.MAX_STEPS}"
            )
