"""
Sweep one model parameter with the deterministic engine.
"""

from apps.cli.base import BaseCommand
from usecases.simulation.sweep_parameter import SweepParameterUseCase, parse_values


class Command(BaseCommand):
    help = 'Run the ODE engine once per parameter value and summarise the lifespan features'
    default_output = 'sweep'

    def add_arguments(self, parser):
        parser.add_argument('--param', required=True, help='Model parameter to sweep, e.g. b')
        parser.add_argument('--values', required=True, help='Comma-separated values, e.g. 0,4.2')

    def handle(self, **options):
        config = self.load_config(options)
        values = parse_values(options['values'])
        output_dir = self.output_path(config, options)
        points = SweepParameterUseCase(self.ode_service(), self.repository(config)).execute(
            config, options['param'], values, output_dir
        )

        param = options['param']
        self.write(f"{param:>12}{'final N':>14}{'death rate':>14}{'crossover':>12}")
        for point in points:
            crossover = point.features.crossover_age if point.features else None
            death_rate = '-' if point.late_death_rate is None else f"{point.late_death_rate:.6g}"
            self.write(
                f"{point.value:>12g}{point.trajectory.last.n:>14.6g}{death_rate:>14}"
                f"{'-' if crossover is None else f'{crossover:g}':>12}"
            )
        self.write(f"Wrote {len(points)} trajectories and a summary to {output_dir}")
        return 0
