"""Stationary plane waves of a moving source and finite-difference checks
that the phase wave obeys the Hamilton-Jacobi and Klein-Gordon equations.

Everything is one-dimensional along the direction of motion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from wftlab.core import DEFAULT, Constants, DomainError, ResourceError, check_beta

# cap on grid nodes; each node costs several float64 work arrays
MAX_GRID_POINTS = 10_000_000


@dataclass(frozen=True)
class WaveField:
    lambda0: float
    beta: float = 0.0
    c: float = DEFAULT.c

    def __post_init__(self):
        if not self.lambda0 > 0:
            raise DomainError("rest wavelength must be positive")
        check_beta(self.beta)

    @classmethod
    def create(cls, lambda0: float, beta: float = 0.0, const: Constants = DEFAULT) -> "WaveField":
        return cls(lambda0, beta, const.c)

    @property
    def K0(self) -> float:
        return 2.0 * math.pi / self.lambda0

    @property
    def omega0(self) -> float:
        return self.c * self.K0

    @property
    def gamma(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.beta**2)

    @property
    def K(self) -> float:
        return self.gamma * self.K0

    @property
    def omega(self) -> float:
        return self.gamma * self.omega0

    @property
    def k0(self) -> float:
        # omega0 / c, kept separate from K0 to mirror the equations
        return self.omega0 / self.c

    def phase(self, x, t, branch: int = 1):
        """Phase S = branch*omega*t - beta*K*x of the phase wave."""
        return branch * self.omega * t - self.beta * self.K * x


def rest_field(field: WaveField, x, t):
    return np.cos(field.K0 * x) * np.cos(field.omega0 * t)


def boosted_field(field: WaveField, x, t):
    b = field.beta
    return np.cos(field.K * x - b * field.omega * t) * np.cos(field.omega * t - b * field.K * x)


def phase_wave(field: WaveField, x, t, branch: int = 1):
    """psi = cos(S); ``branch=-1`` selects the negative-frequency solution."""
    return np.cos(field.phase(x, t, branch))


@dataclass(frozen=True)
class Grid:
    """Rectangular (x, t) grid; the time step is h / c so both axes share one length step."""

    x0: float
    x1: float
    t0: float
    t1: float
    h: float

    def axes(self, c: float):
        if not self.h > 0 or self.x1 <= self.x0 or self.t1 <= self.t0:
            raise DomainError("degenerate grid")
        nx = int(math.floor((self.x1 - self.x0) / self.h + 1e-9)) + 1
        dt = self.h / c
        nt = int(math.floor((self.t1 - self.t0) / dt + 1e-9)) + 1
        if nx < 3 or nt < 3:
            raise DomainError("grid needs at least 3 points along each axis")
        if nx * nt > MAX_GRID_POINTS:
            raise ResourceError(f"grid of {nx} x {nt} points exceeds {MAX_GRID_POINTS}")
        x = self.x0 + self.h * np.arange(nx)
        t = self.t0 + dt * np.arange(nt)
        return x, t, dt


def wavelength_grid(field: WaveField, h: float, wavelengths: float = 3.0, x0: float = 0.0, t0: float = 0.0) -> Grid:
    """Grid spanning ``wavelengths`` rest wavelengths in x and the matching light time in t."""
    span = wavelengths * field.lambda0
    return Grid(x0, x0 + span, t0, t0 + span / field.c, h)


def _check_coverage(field: WaveField, grid: Grid):
    if grid.x1 - grid.x0 < 3 * field.lambda0 * (1 - 1e-12):
        raise DomainError("grid must cover at least 3 wavelengths in x")


def hamilton_jacobi_residual(field: WaveField, grid: Grid, branch: int = 1) -> float:
    """max |(1/c^2) S_t^2 - S_x^2 - k0^2| with S's derivatives by central differences."""
    _check_coverage(field, grid)
    x, t, dt = grid.axes(field.c)
    X, T = np.meshgrid(x, t, indexing="ij")
    S = field.phase(X, T, branch)
    S_x = (S[2:, 1:-1] - S[:-2, 1:-1]) / (2 * grid.h)
    S_t = (S[1:-1, 2:] - S[1:-1, :-2]) / (2 * dt)
    res = S_t**2 / field.c**2 - S_x**2 - field.k0**2
    return float(np.max(np.abs(res)))


def hamilton_jacobi_analytic(field: WaveField) -> float:
    """The same residual with exact derivatives S_t = omega, S_x = -beta K."""
    return field.omega**2 / field.c**2 - (field.beta * field.K) ** 2 - field.k0**2


def _kg_residual(field: WaveField, grid: Grid, branch: int) -> float:
    x, t, dt = grid.axes(field.c)
    X, T = np.meshgrid(x, t, indexing="ij")
    psi = phase_wave(field, X, T, branch)
    core = psi[1:-1, 1:-1]
    psi_xx = (psi[2:, 1:-1] - 2 * core + psi[:-2, 1:-1]) / grid.h**2
    psi_tt = (psi[1:-1, 2:] - 2 * core + psi[1:-1, :-2]) / dt**2
    res = -psi_xx + psi_tt / field.c**2 + field.k0**2 * core
    return float(np.max(np.abs(res)))


@dataclass(frozen=True)
class KleinGordonResult:
    residual_h: float
    residual_h2: float
    order: float


def klein_gordon_residual(field: WaveField, grid: Grid, branch: int = 1) -> KleinGordonResult:
    """Klein-Gordon residual of the phase wave at steps h and h/2, plus the empirical order."""
    _check_coverage(field, grid)
    r1 = _kg_residual(field, grid, branch)
    half = Grid(grid.x0, grid.x1, grid.t0, grid.t1, grid.h / 2)
    r2 = _kg_residual(field, half, branch)
    return KleinGordonResult(r1, r2, empirical_order(r1, r2))


def klein_gordon_analytic(field: WaveField) -> float:
    """beta^2 K^2 - omega^2/c^2 + k0^2, the residual coefficient with exact derivatives."""
    return (field.beta * field.K) ** 2 - field.omega**2 / field.c**2 + field.k0**2


def empirical_order(residual_h: float, residual_h2: float) -> float:
    if residual_h <= 0 or residual_h2 <= 0:
        return math.nan
    return math.log2(residual_h / residual_h2)
