"""
Run configuration value objects.

A RunConfig bundles everything one CLI invocation needs: the effective
model parameters, the scenario, the stochastic engine settings, the
output destination and the analysis settings.
"""

from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.entities.reports import ToleranceProfile
from core.value_objects.abm_config import AbmConfig
from core.value_objects.model_params import ModelParams
from core.value_objects.scenario import Scenario

OUTPUT_FORMATS = ('csv', 'tsv')


class AnalysisSettings(BaseModel):
    """Settings of the comparison and feature analyses."""

    model_config = ConfigDict(frozen=True, extra='forbid')

    active_fraction: float = Field(0.10, gt=0, lt=1)
    window_start: float = 40.0
    window_end: float = 90.0
    rel_tol: float = Field(0.05, ge=0)
    abs_tol: float = Field(5.0, ge=0)

    @model_validator(mode='after')
    def _check_window(self) -> 'AnalysisSettings':
        if not self.window_start < self.window_end:
            raise ValueError(
                f"window_start ({self.window_start}) must be less than window_end ({self.window_end})"
            )
        return self

    @property
    def window(self) -> Tuple[float, float]:
        return (self.window_start, self.window_end)

    @property
    def tolerance(self) -> ToleranceProfile:
        return ToleranceProfile(relative=self.rel_tol, absolute=self.abs_tol)


class RunConfig(BaseModel):
    """
    Fully validated configuration of one run.

    ``param_overrides`` keeps the parameter values that were set
    explicitly; ``params`` is the effective parameter set built from them.
    """

    model_config = ConfigDict(frozen=True, extra='forbid')

    params: ModelParams = Field(default_factory=ModelParams)
    param_overrides: Dict[str, Any] = Field(default_factory=dict)
    scenario: Scenario = Field(default_factory=Scenario)
    abm: AbmConfig = Field(default_factory=AbmConfig)
    output_path: Optional[str] = None
    output_format: Literal['csv', 'tsv'] = 'csv'
    analysis: AnalysisSettings = Field(default_factory=AnalysisSettings)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'params': self.params.to_dict(),
            'param_overrides': dict(self.param_overrides),
            'scenario': self.scenario.to_dict(),
            'abm': self.abm.model_dump(),
            'output_path': self.output_path,
            'output_format': self.output_format,
            'analysis': self.analysis.model_dump(),
        }
