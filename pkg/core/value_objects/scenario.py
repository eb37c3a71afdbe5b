"""
Scenario value object.

A scenario fixes the simulated horizon, the integration step, the
recording stride and the initial compartment state.
"""

import math
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from core.exceptions import InvalidScenarioError
from core.value_objects.state_vector import StateVector

# Relative tolerance when checking that the horizon is a whole number of steps
GRID_TOLERANCE = 1e-9

DEFAULT_INITIAL_THYMIC_NAIVE = 2000.0
DEFAULT_HORIZON_YEARS = 100.0
DEFAULT_ODE_DT = 0.01


class Scenario(BaseModel):
    """Simulation horizon and initial state shared by both engines."""

    model_config = ConfigDict(frozen=True, extra='forbid', arbitrary_types_allowed=True)

    t_start: float = 0.0
    t_end: float = DEFAULT_HORIZON_YEARS
    dt: float = Field(DEFAULT_ODE_DT, gt=0)
    record_every: int = Field(10, ge=1)
    initial_state: StateVector = StateVector(t=0.0, n=DEFAULT_INITIAL_THYMIC_NAIVE, n_p=0.0, a=0.0, m=0.0)
    name: str = 'default'

    @model_validator(mode='after')
    def _check_horizon(self) -> 'Scenario':
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end) and math.isfinite(self.dt)):
            raise ValueError("t_start, t_end and dt must be finite")
        span = self.t_end - self.t_start
        if span <= 0:
            raise ValueError(f"t_end ({self.t_end}) must be greater than t_start ({self.t_start})")
        if self.dt > span * (1.0 + GRID_TOLERANCE):
            raise ValueError(f"dt ({self.dt}) must not exceed the horizon ({span})")
        steps = round(span / self.dt)
        if abs(steps * self.dt - span) > GRID_TOLERANCE * span:
            raise ValueError(f"horizon {span} is not a whole number of steps of {self.dt}")
        if self.initial_state.t != self.t_start:
            raise ValueError(
                f"initial_state.t ({self.initial_state.t}) must equal t_start ({self.t_start})"
            )
        return self

    @classmethod
    def create(cls, **values: Any) -> 'Scenario':
        """
        Build a scenario, converting validation failures to domain errors.

        Raises:
            InvalidScenarioError: If the horizon or step is inconsistent
        """
        try:
            return cls(**values)
        except ValidationError as exc:
            raise InvalidScenarioError(str(exc)) from exc

    @property
    def span(self) -> float:
        return self.t_end - self.t_start

    @property
    def step_count(self) -> int:
        """Number of integration steps from t_start to t_end."""
        return max(1, round(self.span / self.dt))

    def time_at(self, step_index: int) -> float:
        """Time stamp of a step boundary; shared by both engines."""
        if step_index == self.step_count:
            return self.t_end
        return self.t_start + step_index * self.dt

    def is_recorded(self, step_index: int) -> bool:
        """Whether the state after ``step_index`` steps is sampled."""
        return step_index % self.record_every == 0 or step_index == self.step_count

    def recorded_steps(self):
        """Indices of every sampled step boundary, in order."""
        return [i for i in range(0, self.step_count + 1) if self.is_recorded(i)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            't_start': self.t_start,
            't_end': self.t_end,
            'dt': self.dt,
            'record_every': self.record_every,
            'initial_state': self.initial_state.to_dict(),
        }


def default_scenario(**overrides: Any) -> Scenario:
    """
    Return the published lifespan scenario.

    100 years from birth with 2000 thymic-naive cells/mm^3 and empty
    proliferated, active and memory compartments, stepped at 0.01 year.
    """
    return Scenario.create(**overrides)
