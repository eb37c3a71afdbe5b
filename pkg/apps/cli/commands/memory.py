"""
Write the memory-cell extrapolation table.
"""

from apps.cli.base import BaseCommand
from usecases.simulation.estimate_memory import EstimateMemoryUseCase


class Command(BaseCommand):
    help = 'Estimate memory cells from the active compartment (t,A,M,estimated_total,memory_share)'
    default_output = 'memory_estimate.csv'

    def handle(self, **options):
        config = self.load_config(options)
        path = self.output_path(config, options)
        estimate = EstimateMemoryUseCase(self.ode_service(), self.repository(config)).execute(config, path)
        self.write(
            f"Wrote {len(estimate.times)} samples to {path} "
            f"(active fraction {estimate.active_fraction:g})"
        )
        return 0
