"""
Logging configuration for backend services.
"""

import logging
import sys

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Create logger
logger = logging.getLogger('tcellsim')


def configure_logging(level: str = 'INFO', stream=None) -> logging.Logger:
    """
    Configure root logging for command-line runs.

    Logs go to stderr by default so that stdout only carries command output.

    Args:
        level: Logging level name
        stream: Destination stream (default: sys.stderr)

    Returns:
        The application logger
    """
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(stream or sys.stderr)],
        force=True,
    )
    logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))
    return logger
