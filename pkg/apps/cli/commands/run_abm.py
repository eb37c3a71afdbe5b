"""
Run an ensemble of the agent-based engine and write its statistics.
"""

from apps.cli.base import BaseCommand
from usecases.simulation.run_abm import RunAbmUseCase


class Command(BaseCommand):
    help = 'Run ABM replicates and write per-compartment mean, var, min and max'
    default_output = 'abm_ensemble.csv'

    def handle(self, **options):
        config = self.load_config(options)
        path = self.output_path(config, options)
        stats = RunAbmUseCase(self.abm_service(options), self.repository(config)).execute(config, path)
        self.write(f"Wrote {len(stats.times)} samples of {stats.replicates} replicate(s) to {path}")
        return 0
