"""
Domain exceptions for the naive T cell repertoire simulator.

These exceptions represent violated model invariants and simulation faults.
"""

from typing import Optional


class DomainException(Exception):
    """Base exception for domain-related errors."""
    pass


class InvalidParameterError(DomainException):
    """Raised when a model parameter violates its invariants."""
    pass


class InvalidStateError(DomainException):
    """Raised when a compartment state is negative or non-finite."""
    pass


class InvalidScenarioError(DomainException):
    """Raised when a scenario or ABM configuration is inconsistent."""
    pass


class IntegrationFaultError(DomainException):
    """Raised when a step produces a non-finite compartment value."""

    def __init__(self, compartment: str, t: float, value: float):
        self.compartment = compartment
        self.t = t
        self.value = value
        super().__init__(
            f"Non-finite value {value!r} in compartment {compartment} at t={t!r}"
        )


class StepLimitExceededError(DomainException):
    """Raised when a run would take more steps than the configured cap."""
    pass


class GridAlignmentError(DomainException):
    """Raised when two results do not share the same recording times."""
    pass


class AnalysisError(DomainException):
    """Raised when a trajectory cannot support the requested analysis."""
    pass


class ConfigurationError(DomainException):
    """Raised for an invalid run configuration document."""

    def __init__(self, message: str, line_number: Optional[int] = None, key: Optional[str] = None):
        self.line_number = line_number
        self.key = key
        location = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{location}{message}")
