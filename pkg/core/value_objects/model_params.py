"""
Model parameter value object.

Holds every rate constant and scaling value of the naive T cell
compartment model together with the thymic output coefficients.
"""

import math
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from core.exceptions import InvalidParameterError

LN2 = math.log(2.0)

# Thymic involution half-life in years
THYMIC_HALF_LIFE = 15.7

# (amplitude cells/mm^3/year, center years, width years)
DEFAULT_S0_COEFFICIENTS: Tuple[Tuple[float, float, float], ...] = (
    (7024.0, 12.02, 3.623),
    (5.203e5, -127.8, 64.47),
    (1937.0, 7.357, 6.03),
    (1.259e18, 1309.0, 214.4),
)

DEFAULT_S0_GLOBAL_SCALE = 0.82

RATE_FIELDS = (
    'lambda_thymic', 'lambda_n', 'mu_n', 'c', 'lambda_mn', 'mu_m',
    'lambda_Na', 'lambda_NpA', 'lambda_a', 'mu_a',
)


def proliferation_rate_for(mu_n: float, n_p_bar: float) -> float:
    """Peripheral proliferation rate c = mu_n * (1 - ln 2 / n_p_bar)."""
    return mu_n * (1.0 - LN2 / n_p_bar)


class ModelParams(BaseModel):
    """
    Immutable parameter set of the compartment model.

    When ``c`` is omitted it is derived from the effective ``mu_n`` and
    ``n_p_bar``, so overriding either keeps the proliferation rate tied to
    them unless ``c`` is given explicitly.
    """

    model_config = ConfigDict(frozen=True, extra='forbid')

    lambda_thymic: float = Field(LN2 / THYMIC_HALF_LIFE, ge=0)
    lambda_n: float = Field(0.003, ge=0)
    mu_n: float = Field(4.4, ge=0)
    c: float = Field(..., ge=0)
    lambda_mn: float = Field(0.0, ge=0)
    mu_m: float = Field(0.05, ge=0)
    lambda_Na: float = Field(0.0, ge=0)
    lambda_NpA: float = Field(0.1, ge=0)
    lambda_a: float = Field(LN2 / THYMIC_HALF_LIFE, ge=0)
    mu_a: float = Field(44.4, ge=0)
    s_bar: float = Field(0.0, ge=0)
    n_p_bar: float = Field(392.0, gt=0)
    b: float = Field(4.2, ge=0)
    # Not in the published parameter table; defaults to n_p_bar
    n_b: float = Field(392.0, gt=0)
    s0_coefficients: Tuple[Tuple[float, float, float], ...] = DEFAULT_S0_COEFFICIENTS
    s0_global_scale: float = Field(DEFAULT_S0_GLOBAL_SCALE, ge=0)

    @model_validator(mode='before')
    @classmethod
    def _derive_proliferation_rate(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get('c') is None:
            data = dict(data)
            mu_n = data.get('mu_n', 4.4)
            n_p_bar = data.get('n_p_bar', 392.0)
            try:
                data['c'] = proliferation_rate_for(float(mu_n), float(n_p_bar))
            except (TypeError, ValueError, ZeroDivisionError):
                # Left for field validation to report
                data.pop('c', None)
        return data

    @field_validator('s0_coefficients')
    @classmethod
    def _check_gaussian_terms(cls, terms):
        for index, (amplitude, _center, width) in enumerate(terms):
            if width <= 0:
                raise ValueError(f"Gaussian term {index} has non-positive width {width}")
            if amplitude < 0:
                raise ValueError(f"Gaussian term {index} has negative amplitude {amplitude}")
        return terms

    @model_validator(mode='after')
    def _check_finite(self) -> 'ModelParams':
        for name in RATE_FIELDS + ('s_bar', 'n_p_bar', 'b', 'n_b', 's0_global_scale'):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        return self

    @classmethod
    def create(cls, **values: Any) -> 'ModelParams':
        """
        Build a parameter set, converting validation failures to domain errors.

        Raises:
            InvalidParameterError: If any value violates its invariant
        """
        try:
            return cls(**values)
        except ValidationError as exc:
            raise InvalidParameterError(str(exc)) from exc

    def with_overrides(self, **overrides: Any) -> 'ModelParams':
        """
        Return a copy with the given fields replaced.

        ``c`` is re-derived from ``mu_n``/``n_p_bar`` only when the current
        value is the derived one and no explicit ``c`` is supplied.
        """
        values = self.model_dump()
        derived = self.c == proliferation_rate_for(self.mu_n, self.n_p_bar)
        if 'c' not in overrides and derived and ({'mu_n', 'n_p_bar'} & overrides.keys()):
            values['c'] = None
        values.update(overrides)
        return ModelParams.create(**values)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a plain dictionary."""
        return self.model_dump()

    @property
    def uses_default_n_b(self) -> bool:
        """True when the dilution scale is the assumed default."""
        return self.n_b == self.n_p_bar


def default_params(**overrides: Any) -> ModelParams:
    """
    Return the published parameter set, optionally overridden.

    Args:
        **overrides: Field values replacing the published ones

    Returns:
        ModelParams instance
    """
    return ModelParams.create(**overrides)


def describe_default(field_name: str) -> Optional[str]:
    """Short provenance note for fields that are not read directly off the parameter table."""
    notes = {
        'c': 'derived: mu_n * (1 - ln 2 / n_p_bar)',
        'n_b': 'assumed: equal to n_p_bar (not given in the parameter table)',
        'lambda_a': 'assumed: shares ln 2 / 15.7 with lambda_thymic',
    }
    return notes.get(field_name)
