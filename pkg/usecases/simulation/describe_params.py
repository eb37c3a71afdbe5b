"""
Describe parameters use case.

Reports the effective parameter set of a configuration with provenance
notes and the contribution of each thymic output term over the lifespan.
"""

from typing import Any, Dict, Sequence

from core.rates import thymic_output, thymic_output_terms
from core.value_objects.model_params import describe_default
from core.value_objects.run_config import RunConfig

REPORT_AGES = (0.0, 20.0, 60.0, 100.0)


class DescribeParamsUseCase:
    """Use case for inspecting the effective model parameters."""

    def execute(self, config: RunConfig, ages: Sequence[float] = REPORT_AGES) -> Dict[str, Any]:
        """
        Execute the use case.

        Returns:
            Dictionary with ``params``, ``notes`` (provenance of values not set
            explicitly), ``uses_default_n_b`` and ``thymic_terms`` keyed by age
        """
        params = config.params
        notes = {}
        for name in params.to_dict():
            note = describe_default(name)
            if note is not None and name not in config.param_overrides:
                notes[name] = note
        terms = {}
        for age in ages:
            values = thymic_output_terms(age, params)
            terms[age] = {
                'terms': list(values),
                'total': thymic_output(age, params),
            }
        return {
            'params': params.to_dict(),
            'notes': notes,
            'uses_default_n_b': params.uses_default_n_b,
            'thymic_terms': terms,
        }
