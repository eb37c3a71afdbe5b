"""
Rate functions of the naive T cell compartment model.

All functions are pure and operate on scalar densities (cells per mm^3)
and times in years. Both simulation engines evaluate the model through
this module only.
"""

import math
from typing import Tuple

from core.value_objects.model_params import ModelParams
from core.value_objects.state_vector import StateDerivative, StateVector


def thymic_output_terms(t: float, p: ModelParams) -> Tuple[float, ...]:
    """
    Scaled Gaussian terms of the thymic output s0(t).

    Every term is a negative-exponent Gaussian and the global scale
    multiplies each of them, so the terms sum to ``thymic_output``.
    """
    scale = p.s0_global_scale
    return tuple(
        scale * amplitude * math.exp(-((t - center) / width) ** 2)
        for amplitude, center, width in p.s0_coefficients
    )


def thymic_output(t: float, p: ModelParams) -> float:
    """
    Thymic output s0(t), cells/mm^3/year.

    Args:
        t: Age in years (t >= 0)
        p: Model parameters

    Returns:
        s0_global_scale times the sum of the Gaussian terms at t
    """
    total = 0.0
    for amplitude, center, width in p.s0_coefficients:
        total += amplitude * math.exp(-((t - center) / width) ** 2)
    return p.s0_global_scale * total


def thymic_source(t: float, p: ModelParams) -> float:
    """Thymic output damped by involution: s0(t) * exp(-lambda_thymic * t)."""
    return thymic_output(t, p) * math.exp(-p.lambda_thymic * t)


def export_modulation(n_p: float, p: ModelParams) -> float:
    """Export rate s(Np) = 1 / (1 + s_bar * Np / Np_bar)."""
    return 1.0 / (1.0 + p.s_bar * n_p / p.n_p_bar)


def trec_death_factor(n_p: float, p: ModelParams) -> float:
    """
    TREC-dilution death amplification g(Np).

    Saturates from 1 at Np = 0 towards 1 + b as Np grows.
    """
    ratio = n_p / p.n_p_bar
    return 1.0 + p.b * ratio / (1.0 + ratio)


def proliferation_dilution(n: float, n_p: float, p: ModelParams) -> float:
    """Dilution h(N, Np) = 1 / (1 + (N + Np) / n_b), in (0, 1]."""
    return 1.0 / (1.0 + (n + n_p) / p.n_b)


def derivative_components(t: float, n: float, n_p: float, a: float, m: float, p: ModelParams):
    """
    Right-hand side in (N, Np, A, M) order as a plain tuple.

    This is the hot path of both integrators; ``derivatives`` wraps it in
    value objects.
    """
    dn = thymic_source(t, p) * export_modulation(n_p, p) - (
        p.lambda_n + p.mu_n * trec_death_factor(n_p, p)
    ) * n
    dn_p = p.lambda_n * n + (p.c * proliferation_dilution(n, n_p, p) - p.mu_n) * n_p + p.lambda_mn * m
    dm = p.lambda_a * a - p.mu_m * m - p.lambda_mn * m
    da = p.lambda_Na * n + p.lambda_NpA * n_p - (p.lambda_a + p.mu_a) * a
    return dn, dn_p, da, dm


def derivatives(s: StateVector, p: ModelParams) -> StateDerivative:
    """
    Rates of change of all four compartments at state ``s``.

    Args:
        s: Current state
        p: Model parameters

    Returns:
        StateDerivative with dN/dt, dNp/dt, dM/dt and dA/dt
    """
    dn, dn_p, da, dm = derivative_components(s.t, s.n, s.n_p, s.a, s.m, p)
    return StateDerivative(dn=dn, dn_p=dn_p, dm=dm, da=da)
