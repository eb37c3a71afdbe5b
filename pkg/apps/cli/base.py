"""
Base class for CLI commands.

Every command module under apps/cli/commands defines a ``Command`` class
that declares its arguments and implements ``handle``. Shared options
(configuration document, output path, seed, replicates, jobs and
``--set`` overrides) are added here.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, TextIO

from backend.core.config import Settings, get_settings
from backend.services.abm_service import AbmSimulationService
from backend.services.ode_service import OdeSimulationService
from core.exceptions import ConfigurationError
from core.value_objects.run_config import RunConfig
from infrastructure.repositories.csv_result_repository import CsvResultRepository
from usecases.config.parse_run_config import ConfigEntry, ParseRunConfigUseCase, flag_entry

logger = logging.getLogger(__name__)


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a non-negative integer, got {text}")
    return value


def job_count(text: str) -> int:
    value = int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be non-zero (negative values count back from the CPU count)")
    return value


class BaseCommand:
    """
    Base class for simulator commands.

    Subclasses set ``help`` and ``default_output`` and implement ``handle``,
    which returns the process exit code.
    """

    help = ''
    default_output = 'output.csv'

    def __init__(
        self,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
        settings: Optional[Settings] = None,
    ):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.settings = settings or get_settings()

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Hook for command-specific arguments."""
        pass

    def add_base_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('--config', help='Run configuration document (key = value lines)')
        parser.add_argument('--out', help='Output path (overrides output.path)')
        parser.add_argument(
            '--set',
            dest='overrides',
            action='append',
            default=[],
            metavar='KEY=VALUE',
            help='Override one configuration key; may be repeated',
        )
        # Accepted by every command; only the ABM commands act on them
        parser.add_argument('--seed', type=non_negative_int, help='Root seed (overrides abm.seed; ABM commands)')
        parser.add_argument(
            '--replicates', type=positive_int, help='Replicate count (overrides abm.replicates; ABM commands)'
        )
        parser.add_argument('--jobs', type=job_count, help='Parallel workers for replicates (ABM commands)')

    def create_parser(self, prog: str) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=prog, description=self.help)
        self.add_base_arguments(parser)
        self.add_arguments(parser)
        return parser

    def write(self, text: str = '') -> None:
        self.stdout.write(f"{text}\n")

    def load_config(self, options: dict) -> RunConfig:
        """
        Build the run configuration from the document and the command-line overrides.

        Raises:
            ConfigurationError: If the document cannot be read or any entry is invalid
        """
        text = ''
        if options.get('config'):
            path = Path(options['config'])
            try:
                text = path.read_text(encoding='utf-8')
            except (OSError, UnicodeDecodeError) as e:
                raise ConfigurationError(f"cannot read configuration {path}: {e}", key='--config')

        overrides: List[ConfigEntry] = []
        if options.get('seed') is not None:
            overrides.append(flag_entry('abm.seed', options['seed'], '--seed'))
        if options.get('replicates') is not None:
            overrides.append(flag_entry('abm.replicates', options['replicates'], '--replicates'))
        overrides.extend(ConfigEntry.from_override(text) for text in options.get('overrides') or [])
        return ParseRunConfigUseCase().execute(text, overrides)

    def output_path(self, config: RunConfig, options: dict) -> str:
        """``--out``, then ``output.path``, then the command default."""
        return options.get('out') or config.output_path or self.default_output

    def repository(self, config: RunConfig) -> CsvResultRepository:
        return CsvResultRepository(config.output_format)

    def ode_service(self) -> OdeSimulationService:
        return OdeSimulationService(self.settings)

    def abm_service(self, options: dict) -> AbmSimulationService:
        return AbmSimulationService(self.settings, n_jobs=options.get('jobs'))

    def handle(self, **options: Any) -> int:
        """
        Run the command.

        Returns:
            Exit code (0 on success)
        """
        raise NotImplementedError('subclasses of BaseCommand must provide a handle() method')
