"""
Configuration settings for backend services.
"""

from typing import Optional

from config import env

PROJECT_ROOT = env.PROJECT_ROOT

APP_NAME = "tcellsim"
APP_DESCRIPTION = "Naive T cell repertoire simulator (ODE and agent-based engines)"
APP_VERSION = "1.0.0"


class Settings:
    """
    Settings class for backend services.

    Arguments left as None are read from the environment.

    Raises:
        ValueError: If a value is malformed, max_steps is below 1 or n_jobs is 0
    """

    def __init__(
        self,
        log_level: Optional[str] = None,
        max_steps: Optional[int] = None,
        n_jobs: Optional[int] = None,
        joblib_backend: Optional[str] = None,
    ):
        if log_level is None:
            log_level = env.get_env_var(env.LOG_LEVEL_VAR, default=env.DEFAULT_LOG_LEVEL)
        if max_steps is None:
            max_steps = env.get_int_env_var(env.MAX_STEPS_VAR, env.DEFAULT_MAX_STEPS)
        if n_jobs is None:
            n_jobs = env.get_int_env_var(env.N_JOBS_VAR, env.DEFAULT_N_JOBS)
        if joblib_backend is None:
            joblib_backend = env.get_env_var(env.JOBLIB_BACKEND_VAR, default=env.DEFAULT_JOBLIB_BACKEND)

        if max_steps < 1:
            raise ValueError(f"max_steps must be positive, got {max_steps}")
        if n_jobs == 0:
            raise ValueError("n_jobs must be non-zero")
        self.APP_NAME = APP_NAME
        self.APP_VERSION = APP_VERSION
        self.LOG_LEVEL = log_level.upper()
        self.MAX_STEPS = max_steps
        self.N_JOBS = n_jobs
        self.JOBLIB_BACKEND = joblib_backend

    def __repr__(self) -> str:
        return (
            f"Settings(log_level={self.LOG_LEVEL!r}, max_steps={self.MAX_STEPS}, "
            f"n_jobs={self.N_JOBS}, joblib_backend={self.JOBLIB_BACKEND!r})"
        )


def get_settings() -> Settings:
    """Build settings from the current environment."""
    return Settings()
