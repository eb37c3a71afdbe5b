"""
State vector value objects.

A StateVector is the four compartment densities (cells per mm^3 of
peripheral blood) at one time point; a StateDerivative holds their rates
of change.
"""

import math
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from core.exceptions import InvalidStateError

# Column order used for arrays and CSV output
COMPARTMENTS: Tuple[str, ...] = ('N', 'Np', 'A', 'M')


@dataclass(frozen=True)
class StateVector:
    """
    Compartment densities at time ``t`` (years).

    Attributes:
        t: Time in years
        n: Naive cells of direct thymic origin
        n_p: Naive cells that have proliferated
        a: Activated cells
        m: Memory cells
    """

    t: float
    n: float
    n_p: float
    a: float
    m: float

    def __post_init__(self):
        if not math.isfinite(self.t):
            raise InvalidStateError(f"Time must be finite, got {self.t!r}")
        for name, value in zip(COMPARTMENTS, (self.n, self.n_p, self.a, self.m)):
            if not math.isfinite(value):
                raise InvalidStateError(f"Compartment {name} must be finite, got {value!r}")
            if value < 0:
                raise InvalidStateError(f"Compartment {name} must be non-negative, got {value!r}")

    @classmethod
    def from_array(cls, t: float, values: Sequence[float]) -> 'StateVector':
        """Build from an (N, Np, A, M) sequence."""
        n, n_p, a, m = (float(v) for v in values)
        return cls(t=float(t), n=n, n_p=n_p, a=a, m=m)

    def as_array(self) -> np.ndarray:
        """Compartments as a float array in (N, Np, A, M) order."""
        return np.array([self.n, self.n_p, self.a, self.m], dtype=float)

    @property
    def total_naive(self) -> float:
        """N + Np."""
        return self.n + self.n_p

    def to_dict(self) -> Dict[str, float]:
        return {'t': self.t, 'N': self.n, 'Np': self.n_p, 'A': self.a, 'M': self.m}


@dataclass(frozen=True)
class StateDerivative:
    """Rates of change of the four compartments, cells/mm^3/year."""

    dn: float
    dn_p: float
    dm: float
    da: float

    def as_array(self) -> np.ndarray:
        """Rates as a float array in (N, Np, A, M) order."""
        return np.array([self.dn, self.dn_p, self.da, self.dm], dtype=float)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        """Rates as (dN/dt, dNp/dt, dM/dt, dA/dt)."""
        return (self.dn, self.dn_p, self.dm, self.da)
