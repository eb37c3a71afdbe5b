"""
Stochastic agent-based engine.

Each T cell is an agent in one of four states (thymic naive, proliferated
naive, active, memory). Per step every agent faces the model's per-capita
hazards as competing risks, thymic influx arrives as Poisson-distributed
new agents and peripheral proliferation adds Poisson-distributed births.
All hazards use the counts frozen at the start of the step.
"""

import logging
import math
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from backend.core.config import Settings
from backend.core.exceptions import ReplicateFaultError
from backend.services.base_service import BaseService
from core.entities.agent_population import AgentPopulation
from core.entities.ensemble_stats import EnsembleStats, ReplicateBatch
from core.entities.trajectory import EngineType, Trajectory
from core.exceptions import InvalidParameterError, InvalidScenarioError, StepLimitExceededError
from core.rates import export_modulation, proliferation_dilution, thymic_source, trec_death_factor
from core.value_objects.abm_config import AbmConfig
from core.value_objects.model_params import ModelParams
from core.value_objects.scenario import GRID_TOLERANCE, Scenario

logger = logging.getLogger(__name__)

Counts = Tuple[int, int, int, int]


def hazard_to_prob(rate: float, dt: float) -> float:
    """
    Probability that an exponential event with hazard ``rate`` fires within ``dt``.

    Args:
        rate: Hazard in events per year (>= 0, may be infinite)
        dt: Interval in years (> 0)

    Returns:
        1 - exp(-rate * dt)
    """
    if rate < 0 or math.isnan(rate):
        raise InvalidParameterError(f"Hazard rate must be non-negative, got {rate}")
    if not dt > 0:
        raise InvalidParameterError(f"dt must be positive, got {dt}")
    if math.isinf(rate):
        return 1.0
    return -math.expm1(-rate * dt)


def competing_exits(rng: np.random.Generator, count: int, rates: Sequence[float], dt: float) -> np.ndarray:
    """
    Split ``count`` agents' exits among competing exponential hazards.

    Draws how many agents experience any event with probability
    1 - exp(-sum(rates) * dt), then assigns each event to hazard i with
    probability rates[i] / sum(rates).

    Returns:
        Integer array with the number of agents taking each exit
    """
    rates = np.asarray(rates, dtype=float)
    total = float(rates.sum())
    if count <= 0 or total <= 0.0:
        return np.zeros(len(rates), dtype=np.int64)
    exits = int(rng.binomial(count, hazard_to_prob(total, dt)))
    if exits == 0:
        return np.zeros(len(rates), dtype=np.int64)
    return rng.multinomial(exits, rates / total)


def _poisson(rng: np.random.Generator, mean: float) -> int:
    return int(rng.poisson(mean)) if mean > 0.0 else 0


def _step_counts(
    t: float,
    counts: Counts,
    p: ModelParams,
    dt: float,
    rng: np.random.Generator,
    scale: float,
) -> Counts:
    n0, np0, a0, m0 = counts
    n_density = n0 / scale
    np_density = np0 / scale

    influx = _poisson(rng, thymic_source(t, p) * export_modulation(np_density, p) * dt * scale)

    n_death, n_to_np, n_to_a = competing_exits(
        rng, n0, (p.mu_n * trec_death_factor(np_density, p), p.lambda_n, p.lambda_Na), dt
    )
    np_death, np_to_a = competing_exits(rng, np0, (p.mu_n, p.lambda_NpA), dt)
    births = _poisson(rng, p.c * proliferation_dilution(n_density, np_density, p) * np0 * dt)
    a_death, a_to_m = competing_exits(rng, a0, (p.mu_a, p.lambda_a), dt)
    m_death, m_to_np = competing_exits(rng, m0, (p.mu_m, p.lambda_mn), dt)

    n1 = n0 - (n_death + n_to_np + n_to_a) + influx
    np1 = np0 - (np_death + np_to_a) + n_to_np + births + m_to_np
    a1 = a0 - (a_death + a_to_m) + n_to_a + np_to_a
    m1 = m0 - (m_death + m_to_np) + a_to_m
    return int(n1), int(np1), int(a1), int(m1)


def step_population(
    pop: AgentPopulation,
    p: ModelParams,
    dt: float,
    rng: np.random.Generator,
    scale: float = 1.0,
) -> AgentPopulation:
    """
    Advance the agent population by one synchronous stochastic step.

    Args:
        pop: Current population
        p: Model parameters
        dt: Step in years (> 0)
        rng: Random stream
        scale: Agents per (cell per mm^3)

    Returns:
        Population at pop.t + dt
    """
    if not dt > 0:
        raise InvalidScenarioError(f"dt must be positive, got {dt}")
    counts = _step_counts(pop.t, pop.counts, p, dt, rng, scale)
    return AgentPopulation(pop.t + dt, *counts)


def replicate_rng(seed: int, replicate_index: int) -> np.random.Generator:
    """Independent, reproducible stream for one replicate."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(replicate_index,)))


def substeps_per_scenario_step(sc: Scenario, cfg: AbmConfig) -> int:
    """
    Number of ABM steps per scenario step.

    Raises:
        InvalidScenarioError: If the scenario step is not a whole multiple of the ABM step
    """
    ratio = sc.dt / cfg.dt
    substeps = round(ratio)
    if substeps < 1 or abs(substeps * cfg.dt - sc.dt) > GRID_TOLERANCE * sc.dt:
        raise InvalidScenarioError(
            f"Scenario dt {sc.dt} must be a whole multiple of the ABM dt {cfg.dt}"
        )
    return substeps


def simulate_replicate(
    sc: Scenario,
    p: ModelParams,
    cfg: AbmConfig,
    replicate_index: int,
    max_steps: int,
) -> Trajectory:
    """
    Run one replicate; recordings share the scenario's time grid.

    Raises:
        StepLimitExceededError: If the replicate needs more than ``max_steps`` steps
    """
    substeps = substeps_per_scenario_step(sc, cfg)
    total_steps = sc.step_count * substeps
    if total_steps > max_steps:
        raise StepLimitExceededError(f"ABM replicate needs {total_steps} steps, cap is {max_steps}")

    rng = replicate_rng(cfg.seed, replicate_index)
    scale = cfg.scale
    counts = AgentPopulation.from_state(sc.initial_state, scale).counts

    times = [sc.time_at(0)]
    rows = [counts]
    for j in range(total_steps):
        counts = _step_counts(sc.t_start + j * cfg.dt, counts, p, cfg.dt, rng, scale)
        done = j + 1
        if done % substeps == 0 and sc.is_recorded(done // substeps):
            times.append(sc.time_at(done // substeps))
            rows.append(counts)

    values = np.array(rows, dtype=float) / scale
    return Trajectory.from_arrays(
        EngineType.ABM, sc, times, values, seed=cfg.seed, replicate_index=replicate_index
    )


def _run_indexed(sc, p, cfg, replicate_index, max_steps):
    try:
        return replicate_index, simulate_replicate(sc, p, cfg, replicate_index, max_steps), None
    except Exception as exc:
        return replicate_index, None, f"{type(exc).__name__}: {exc}"


class AbmSimulationService(BaseService):
    """Replicate and ensemble runs of the agent-based engine."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        n_jobs: Optional[int] = None,
        backend: Optional[str] = None,
    ):
        super().__init__("abm", settings)
        self.n_jobs = n_jobs if n_jobs is not None else self.settings.N_JOBS
        self.backend = backend or self.settings.JOBLIB_BACKEND

    def get_service_info(self) -> Dict[str, Any]:
        return {
            'name': self.service_name,
            'method': 'fixed-step competing hazards',
            'n_jobs': self.n_jobs,
            'backend': self.backend,
            'max_steps': self.settings.MAX_STEPS,
        }

    def run_replicate(self, sc: Scenario, p: ModelParams, cfg: AbmConfig, replicate_index: int) -> Trajectory:
        """
        Run a single replicate.

        The random stream is derived from (cfg.seed, replicate_index), so
        the result is reproducible and independent of other replicates.
        """
        self.logger.debug(f"Replicate {replicate_index} (seed {cfg.seed})")
        return simulate_replicate(sc, p, cfg, replicate_index, self.settings.MAX_STEPS)

    def run_batch(
        self,
        sc: Scenario,
        p: ModelParams,
        cfg: AbmConfig,
        replicate_indices: Iterable[int],
    ) -> ReplicateBatch:
        """
        Run the given replicates, in parallel when n_jobs != 1.

        Raises:
            ReplicateFaultError: If any replicate fails (lowest failing index reported)
        """
        indices = sorted(set(int(i) for i in replicate_indices))
        substeps = substeps_per_scenario_step(sc, cfg)
        self.check_step_budget(sc.step_count * substeps)

        results = Parallel(n_jobs=self.n_jobs, backend=self.backend)(
            delayed(_run_indexed)(sc, p, cfg, i, self.settings.MAX_STEPS) for i in indices
        )

        trajectories = {}
        for index, trajectory, failure in sorted(results, key=lambda r: r[0]):
            if failure is not None:
                self.logger.error(f"Replicate {index} failed: {failure}")
                raise ReplicateFaultError(index, failure)
            trajectories[index] = trajectory
        return ReplicateBatch(trajectories, seed=cfg.seed)

    def run_ensemble(self, sc: Scenario, p: ModelParams, cfg: AbmConfig) -> EnsembleStats:
        """
        Run cfg.replicates independent replicates and aggregate them.

        Returns:
            EnsembleStats on the scenario's recording grid
        """
        self.log_operation("run_ensemble", {
            'replicates': cfg.replicates,
            'dt': cfg.dt,
            'seed': cfg.seed,
            'n_jobs': self.n_jobs,
        })
        batch = self.run_batch(sc, p, cfg, range(cfg.replicates))
        stats = batch.to_stats()
        self.logger.info(f"Ensemble of {stats.replicates} replicates aggregated")
        return stats
