"""
Compare the ODE trajectory with the ABM ensemble mean.
"""

from apps.cli.base import BaseCommand
from usecases.simulation.compare_engines import CompareEnginesUseCase, report_path


class Command(BaseCommand):
    help = 'Run both engines and report per-compartment agreement'
    default_output = 'comparison'

    def handle(self, **options):
        config = self.load_config(options)
        path = self.output_path(config, options)
        use_case = CompareEnginesUseCase(self.ode_service(), self.abm_service(options), self.repository(config))
        report = use_case.execute(config, path)
        self.write(report.to_text())
        self.write(f"Report written to {report_path(path)}")
        return 0
