"""Doppler wavelength maps and the momentum/energy relations built on them.

Angle convention: phi = 0 puts the observer ahead of the moving source, where
the observed wavelength is shortest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from wftlab.core import DEFAULT, Constants, DomainError, check_beta


def doppler_factor(beta, phi):
    """Ratio of observed to emitted wavelength, sqrt(1 - beta^2) / (1 + beta cos phi)."""
    beta = np.asarray(beta, dtype=float)
    denom = 1.0 + beta * np.cos(phi)
    if np.any(np.abs(beta) >= 1):
        raise DomainError("|beta| must be < 1")
    if np.any(denom <= 0):
        raise DomainError("1 + beta*cos(phi) must be positive")
    out = np.sqrt(1.0 - beta * beta) / denom
    return float(out) if out.ndim == 0 else out


def doppler_wavelength(lambda_emit, beta, phi):
    if np.any(np.asarray(lambda_emit) <= 0):
        raise DomainError("emitted wavelength must be positive")
    return lambda_emit * doppler_factor(beta, phi)


@dataclass(frozen=True)
class DopplerObservation:
    lambda_emit: float
    beta: float
    phi: float

    def __post_init__(self):
        if not self.lambda_emit > 0:
            raise DomainError("emitted wavelength must be positive")
        check_beta(self.beta)

    @property
    def lambda_obs(self) -> float:
        return doppler_wavelength(self.lambda_emit, self.beta, self.phi)


def rsp_push_velocity(lambda_i, lambda0):
    """Speed fraction a particle acquires when a photon of wavelength lambda_i arrives.

    Solves 1/lambda_i = 2 beta / (lambda0 sqrt(1 - beta^2)) for beta.
    """
    lambda_i = np.asarray(lambda_i, dtype=float)
    if np.any(lambda_i <= 0) or np.any(np.asarray(lambda0) <= 0):
        raise DomainError("wavelengths must be positive")
    out = lambda0 / np.hypot(2.0 * lambda_i, lambda0)
    return float(out) if np.ndim(out) == 0 else out


def gamma(beta: float) -> float:
    check_beta(beta)
    return 1.0 / math.sqrt(1.0 - beta * beta)


def wave_momentum(m0: float, beta: float, const: Constants = DEFAULT) -> float:
    if not m0 > 0:
        raise DomainError("mass must be positive")
    return m0 * const.c * beta * gamma(beta)


def de_broglie_wavelength(lambda0: float, beta: float) -> float:
    """lambda0 sqrt(1 - beta^2) / beta; ``math.inf`` for a source at rest."""
    if not lambda0 > 0:
        raise DomainError("rest wavelength must be positive")
    check_beta(beta)
    if beta == 0:
        return math.inf
    return lambda0 * math.sqrt(1.0 - beta * beta) / abs(beta)


@dataclass(frozen=True)
class EnergyPair:
    E1: float
    E2: float
    dE: float
    Em: float


def energy_pair(lambda0: float, beta: float, const: Constants = DEFAULT) -> EnergyPair:
    """Forward/backward wave energies and their half-difference and mean.

    The half-difference is formed from 1/lambda(0) - 1/lambda(pi) =
    2 beta / (lambda0 sqrt(1 - beta^2)) rather than by subtracting E2 from E1,
    which would lose all digits as beta -> 0.
    """
    if not 0 <= beta < 1:
        raise DomainError("beta must lie in [0, 1)")
    hc = const.h * const.c
    E1 = hc / doppler_wavelength(lambda0, beta, 0.0)
    E2 = hc / doppler_wavelength(lambda0, beta, math.pi)
    dE = hc * beta / (lambda0 * math.sqrt(1.0 - beta * beta))
    return EnergyPair(E1, E2, dE, (E1 + E2) / 2.0)


def lorentz_force_residual(q, E_field, B_field, times, velocities, m0, const: Constants = DEFAULT):
    """q(E + v x B) - d/dt(m0 gamma v) at the interior samples of a trajectory.

    ``times`` must be uniformly spaced; the derivative is a central difference.
    Returns an array of shape (n - 2, 3).
    """
    t = np.asarray(times, dtype=float)
    v = np.asarray(velocities, dtype=float)
    if t.ndim != 1 or v.shape != (t.size, 3) or t.size < 3:
        raise DomainError("need >= 3 samples with 3-component velocities")
    dt = np.diff(t)
    if np.any(dt <= 0) or not np.allclose(dt, dt[0], rtol=1e-9, atol=0):
        raise DomainError("trajectory must be uniformly sampled in increasing time")
    beta2 = np.einsum("ij,ij->i", v, v) / const.c**2
    if np.any(beta2 >= 1):
        raise DomainError("superluminal sample in trajectory")
    p = m0 * v / np.sqrt(1.0 - beta2)[:, None]
    dpdt = (p[2:] - p[:-2]) / (t[2:] - t[:-2])[:, None]
    E = np.broadcast_to(np.asarray(E_field, dtype=float), (t.size, 3))
    B = np.broadcast_to(np.asarray(B_field, dtype=float), (t.size, 3))
    force = q * (E[1:-1] + np.cross(v[1:-1], B[1:-1]))
    return force - dpdt
