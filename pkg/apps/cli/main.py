"""
Command dispatcher.

Usage: simulate.py <command> [options]

Exit codes: 0 success, 1 simulation or I/O fault, 2 usage or
configuration error.
"""

import importlib
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from backend.core.config import APP_DESCRIPTION, APP_NAME, APP_VERSION, Settings, get_settings
from backend.core.exceptions import TCellSimException
from backend.core.logging import configure_logging
from core.exceptions import ConfigurationError, DomainException

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAULT = 1
EXIT_USAGE = 2

COMMANDS = {
    'run-ode': 'run_ode',
    'run-abm': 'run_abm',
    'compare': 'compare',
    'sweep': 'sweep',
    'memory': 'memory',
    'params': 'params',
}


def load_command_class(name: str):
    """Import apps.cli.commands.<module> and return its Command class."""
    module = importlib.import_module(f"apps.cli.commands.{COMMANDS[name]}")
    return module.Command


def usage() -> str:
    lines = [f"usage: {APP_NAME} <command> [options]", "", APP_DESCRIPTION, "", "commands:"]
    for name in COMMANDS:
        lines.append(f"  {name:<10}{load_command_class(name).help}")
    lines.append("")
    lines.append(f"Run '{APP_NAME} <command> --help' for the options of a command.")
    return "\n".join(lines)


def main(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    settings: Optional[Settings] = None,
) -> int:
    """
    Run one CLI command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        stdout: Destination of command output
        stderr: Destination of logs and error messages
        settings: Runtime settings (default: read from the environment)

    Returns:
        Exit code
    """
    argv: List[str] = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if not argv or argv[0] in ('-h', '--help'):
        stdout.write(usage() + "\n")
        return EXIT_OK if argv else EXIT_USAGE
    if argv[0] == '--version':
        stdout.write(f"{APP_NAME} {APP_VERSION}\n")
        return EXIT_OK

    name, args = argv[0], argv[1:]
    if name not in COMMANDS:
        stderr.write(f"{APP_NAME}: unknown command '{name}'\n\n{usage()}\n")
        return EXIT_USAGE

    if settings is None:
        try:
            settings = get_settings()
        except ValueError as e:
            stderr.write(f"{APP_NAME}: configuration error: {e}\n")
            return EXIT_USAGE

    configure_logging(settings.LOG_LEVEL, stderr)
    command = load_command_class(name)(stdout=stdout, stderr=stderr, settings=settings)
    parser = command.create_parser(f"{APP_NAME} {name}")
    try:
        options = vars(parser.parse_args(args))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        return command.handle(**options)
    except ConfigurationError as e:
        stderr.write(f"{APP_NAME} {name}: configuration error: {e}\n")
        return EXIT_USAGE
    except (DomainException, TCellSimException) as e:
        logger.error(f"{name} failed: {e}")
        stderr.write(f"{APP_NAME} {name}: {e}\n")
        return EXIT_FAULT
    except OSError as e:
        stderr.write(f"{APP_NAME} {name}: I/O error: {e}\n")
        return EXIT_FAULT
    except Exception as e:
        logger.exception(f"Unexpected error in {name}")
        stderr.write(f"{APP_NAME} {name}: unexpected error: {e}\n")
        return EXIT_FAULT


if __name__ == '__main__':
    sys.exit(main())
