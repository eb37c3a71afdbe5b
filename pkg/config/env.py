"""
Environment variable configuration for the simulator.

This module centralises environment variable handling and provides
defaults suitable for local runs. Variables are read when Settings are
built, not at import; values may come from a `.env` file in
the project root or from the process environment.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Project root
PROJECT_ROOT = Path(__file__).resolve().parent.parent

load_dotenv(PROJECT_ROOT / '.env')


def get_env_var(key, default=None, required=False):
    """
    Read an environment variable with error handling.

    Args:
        key (str): Environment variable name
        default: Value returned when the variable is not set
        required (bool): If True, raise when the variable is missing

    Returns:
        str: Environment variable value

    Raises:
        ValueError: If the variable is required but missing
    """
    value = os.environ.get(key, default)

    if required and value is None:
        raise ValueError(f"Missing required environment variable: {key}")

    return value


def get_int_env_var(key, default):
    """Read an integer environment variable, falling back to the default."""
    raw = get_env_var(key, default=None)
    if raw is None or str(raw).strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {key} must be an integer, got {raw!r}")


# =============================================================================
# LOGGING
# =============================================================================

LOG_LEVEL_VAR = 'TCELLSIM_LOG_LEVEL'
DEFAULT_LOG_LEVEL = 'INFO'

# =============================================================================
# SIMULATION LIMITS
# =============================================================================

# Upper bound on steps per ODE integration or per ABM replicate
MAX_STEPS_VAR = 'TCELLSIM_MAX_STEPS'
DEFAULT_MAX_STEPS = 10_000_000

# =============================================================================
# ENSEMBLE EXECUTION
# =============================================================================

N_JOBS_VAR = 'TCELLSIM_N_JOBS'
DEFAULT_N_JOBS = 1
JOBLIB_BACKEND_VAR = 'TCELLSIM_JOBLIB_BACKEND'
DEFAULT_JOBLIB_BACKEND = 'loky'
