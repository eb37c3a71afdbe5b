"""
Integrate the deterministic model and write the trajectory table.
"""

from apps.cli.base import BaseCommand
from usecases.simulation.run_ode import RunOdeUseCase


class Command(BaseCommand):
    help = 'Run the ODE engine and write t,N,Np,A,M,total_naive'
    default_output = 'ode_trajectory.csv'

    def handle(self, **options):
        config = self.load_config(options)
        path = self.output_path(config, options)
        trajectory = RunOdeUseCase(self.ode_service(), self.repository(config)).execute(config, path)
        self.write(f"Wrote {len(trajectory)} samples to {path}")
        if trajectory.clamp_count:
            self.write(f"Warning: {trajectory.clamp_count} negative value(s) clamped; use a smaller dt")
        return 0
