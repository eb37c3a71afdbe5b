"""
Print the effective model parameters.
"""

from apps.cli.base import BaseCommand
from usecases.simulation.describe_params import DescribeParamsUseCase


class Command(BaseCommand):
    help = 'Show the effective parameter set and the thymic output terms over the lifespan'

    def handle(self, **options):
        config = self.load_config(options)
        description = DescribeParamsUseCase().execute(config)

        for name, value in description['params'].items():
            if name == 's0_coefficients':
                continue
            note = description['notes'].get(name)
            self.write(f"{name:<16}{value!s:<24}{'  # ' + note if note else ''}")
        if description['uses_default_n_b']:
            self.write("note: n_b is not given in the parameter table; using n_b = n_p_bar")

        self.write()
        self.write("thymic output terms (cells/mm^3/year):")
        labels = [f"term {i + 1}" for i in range(len(config.params.s0_coefficients))] + ["total"]
        self.write(f"{'age':>6}" + "".join(f"{label:>14}" for label in labels))
        for age, row in description['thymic_terms'].items():
            self.write(f"{age:>6g}" + ''.join(f"{value:>14.6g}" for value in row['terms']) + f"{row['total']:>14.6g}")
        return 0
