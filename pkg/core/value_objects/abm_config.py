"""
Agent-based engine configuration value object.
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from core.exceptions import InvalidScenarioError

# First-order stochastic stepping needs a finer step than RK4
DEFAULT_ABM_DT = 0.001

SEED_MAX = 2 ** 64 - 1


class AbmConfig(BaseModel):
    """
    Settings of the stochastic engine.

    Attributes:
        dt: Stochastic step in years
        seed: Root seed shared by all replicates
        replicates: Number of independent replicates in an ensemble
        scale: Agents per (cell per mm^3)
    """

    model_config = ConfigDict(frozen=True, extra='forbid')

    dt: float = Field(DEFAULT_ABM_DT, gt=0)
    seed: int = Field(0, ge=0, le=SEED_MAX)
    replicates: int = Field(1, ge=1)
    scale: float = Field(1.0, gt=0)

    @classmethod
    def create(cls, **values: Any) -> 'AbmConfig':
        """
        Build a configuration, converting validation failures to domain errors.

        Raises:
            InvalidScenarioError: If any value violates its invariant
        """
        try:
            return cls(**values)
        except ValidationError as exc:
            raise InvalidScenarioError(str(exc)) from exc
