"""
Deterministic ODE engine.

Fixed-step classical Runge-Kutta integration of the compartment model.
Negative components are clamped to zero and counted; with exact dynamics
this never happens, so a non-zero count means the step is too coarse.
"""

import logging
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from backend.core.config import Settings
from backend.services.base_service import BaseService
from core.entities.trajectory import EngineType, Trajectory
from core.exceptions import IntegrationFaultError, InvalidScenarioError
from core.rates import derivative_components
from core.value_objects.model_params import ModelParams
from core.value_objects.scenario import Scenario
from core.value_objects.state_vector import COMPARTMENTS, StateVector

logger = logging.getLogger(__name__)

# rhs(t, y) -> dy/dt with y in (N, Np, A, M) order
RightHandSide = Callable[[float, np.ndarray], np.ndarray]


def model_rhs(p: ModelParams) -> RightHandSide:
    """Right-hand side of the compartment model as an array function."""

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return np.array(derivative_components(t, y[0], y[1], y[2], y[3], p))

    return rhs


def _rk4_increment(t: float, y: np.ndarray, dt: float, rhs: RightHandSide) -> np.ndarray:
    k1 = rhs(t, y)
    k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1)
    k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2)
    k4 = rhs(t + dt, y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def advance(t: float, y: np.ndarray, dt: float, rhs: RightHandSide) -> Tuple[np.ndarray, int]:
    """
    One RK4 step on a raw array.

    Returns:
        (clamped new state, number of components clamped)

    Raises:
        IntegrationFaultError: If any component is not finite
    """
    y_new = _rk4_increment(t, y, dt, rhs)
    finite = np.isfinite(y_new)
    if not finite.all():
        index = int(np.argmin(finite))
        name = COMPARTMENTS[index] if index < len(COMPARTMENTS) else f"y[{index}]"
        raise IntegrationFaultError(name, t + dt, float(y_new[index]))
    negative = y_new < 0.0
    clamps = int(negative.sum())
    if clamps:
        y_new[negative] = 0.0
    return y_new, clamps


def step_rk4(
    s: StateVector,
    dt: float,
    p: ModelParams,
    rhs: Optional[RightHandSide] = None,
) -> StateVector:
    """
    Advance a state by one classical Runge-Kutta step.

    Args:
        s: Current state
        dt: Step in years (> 0)
        p: Model parameters
        rhs: Optional replacement right-hand side

    Returns:
        State at s.t + dt with negative components clamped to 0

    Raises:
        InvalidScenarioError: If dt is not positive
        IntegrationFaultError: If the step overflows or produces NaN
    """
    if not dt > 0:
        raise InvalidScenarioError(f"dt must be positive, got {dt}")
    y_new, clamps = advance(s.t, s.as_array(), dt, rhs or model_rhs(p))
    if clamps:
        logger.warning(f"Clamped {clamps} negative component(s) at t={s.t + dt}")
    return StateVector.from_array(s.t + dt, y_new)


class OdeSimulationService(BaseService):
    """Forward integration of a scenario into a trajectory."""

    def __init__(self, settings: Optional[Settings] = None):
        super().__init__("ode", settings)

    def get_service_info(self) -> Dict[str, Any]:
        return {
            'name': self.service_name,
            'method': 'rk4-fixed-step',
            'max_steps': self.settings.MAX_STEPS,
        }

    def integrate(self, sc: Scenario, p: ModelParams, rhs: Optional[RightHandSide] = None) -> Trajectory:
        """
        Integrate from the initial state to t_end.

        Samples are recorded every ``record_every`` steps plus the final
        state. Identical inputs give bit-identical trajectories.

        Args:
            sc: Scenario
            p: Model parameters
            rhs: Optional replacement right-hand side

        Returns:
            ODE-tagged Trajectory

        Raises:
            StepLimitExceededError: If the step count exceeds the cap
            IntegrationFaultError: If a step produces a non-finite value
        """
        steps = sc.step_count
        self.check_step_budget(steps)
        self.log_operation("integrate", {'steps': steps, 'dt': sc.dt, 'scenario': sc.name})

        rhs = rhs or model_rhs(p)
        y = sc.initial_state.as_array()
        times = [sc.time_at(0)]
        rows = [y.copy()]
        clamp_count = 0

        for i in range(steps):
            y, clamps = advance(sc.time_at(i), y, sc.dt, rhs)
            if clamps:
                clamp_count += clamps
                self.logger.warning(f"Clamped {clamps} negative component(s) at t={sc.time_at(i + 1)}")
            if sc.is_recorded(i + 1):
                times.append(sc.time_at(i + 1))
                rows.append(y.copy())

        if clamp_count:
            self.logger.warning(f"{clamp_count} clamp(s) in total; consider a smaller dt than {sc.dt}")
        self.logger.debug(f"Integration finished with {len(rows)} samples")
        return Trajectory.from_arrays(EngineType.ODE, sc, times, np.array(rows), clamp_count=clamp_count)
