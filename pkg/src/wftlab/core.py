"""Constants registry, shared domain types and mass/wavelength conversions.

All quantities are SI. CODATA values come from scipy.constants; the terminal
length L and the two calibration numbers of the wave-gravity law are
configured defaults that a constants file may override.
"""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from scipy import constants as sp

CONSTANTS_ENV = "WFTLAB_CONSTANTS"


class DomainError(ValueError):
    """An input lies outside the domain of a formula."""


class SingularityError(DomainError):
    """A formula is evaluated at (or past) one of its poles."""


class ResourceError(RuntimeError):
    """A requested computation exceeds the configured size limits."""


@dataclass(frozen=True)
class Constants:
    """Physical constants in SI units."""

    # Planck constant (J*s)
    h: float = sp.h
    # speed of light (m/s)
    c: float = sp.c
    # Newtonian constant (m^3 kg^-1 s^-2)
    G: float = sp.G
    # terminal discrete length (m)
    L: float = 4.884356e-84
    # effective-wavefront coefficient, N = N_coeff / L
    N_coeff: float = 1.8777557e14
    # number identified with the inverse fine-structure constant
    alpha_inv: float = 137.024

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise DomainError(f"constant {f.name} must be a finite positive number, got {value!r}")

    @property
    def N(self) -> float:
        """Effective wavefront number N_coeff / L (pure number)."""
        return self.N_coeff / self.L

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


DEFAULT = Constants()

_KEYS = {f.name for f in fields(Constants)}


def parse_constants(text: str) -> Constants:
    """Parse ``name = value`` lines; ``#`` starts a comment, absent keys keep defaults."""
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"line {lineno}: expected 'name = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KEYS:
            raise DomainError(f"line {lineno}: unknown constant {key!r}")
        if key in values:
            raise DomainError(f"line {lineno}: duplicate constant {key!r}")
        try:
            values[key] = float(value)
        except ValueError:
            raise DomainError(f"line {lineno}: {key} is not a number: {value!r}") from None
    return Constants(**values)


def load_constants(path: str | os.PathLike | None = None) -> Constants:
    """Load a constants file, falling back to ``$WFTLAB_CONSTANTS`` and then the defaults."""
    if path is None:
        path = os.environ.get(CONSTANTS_ENV) or None
    if path is None:
        return DEFAULT
    return parse_constants(Path(path).read_text(encoding="utf-8"))


# rest masses used by the CLI ``--particle`` flag
PARTICLE_MASSES = {
    "electron": sp.m_e,
    "proton": sp.m_p,
    "neutron": sp.m_n,
    "muon": sp.physical_constants["muon mass"][0],
}


def rest_wavelength(m0: float, const: Constants = DEFAULT) -> float:
    """Compton wavelength h/(c*m0) of a rest mass."""
    if not m0 > 0:
        raise DomainError(f"mass must be positive, got {m0!r}")
    return const.h / (const.c * m0)


def mass_from_wavelength(lam: float, const: Constants = DEFAULT) -> float:
    """Rest mass whose Compton wavelength is ``lam``; inverse of rest_wavelength."""
    if not lam > 0:
        raise DomainError(f"wavelength must be positive, got {lam!r}")
    return const.h / (const.c * lam)


def check_beta(beta: float) -> None:
    if not abs(beta) < 1:
        raise DomainError(f"|beta| must be < 1, got {beta!r}")


@dataclass(frozen=True)
class Particle:
    m0: float
    lambda0: float
    beta: float = 0.0

    def __post_init__(self):
        if not (self.m0 > 0 and self.lambda0 > 0):
            raise DomainError("particle mass and wavelength must be positive")
        check_beta(self.beta)

    @classmethod
    def from_mass(cls, m0: float, beta: float = 0.0, const: Constants = DEFAULT) -> "Particle":
        return cls(m0, rest_wavelength(m0, const), beta)

    @classmethod
    def named(cls, name: str, beta: float = 0.0, const: Constants = DEFAULT) -> "Particle":
        try:
            m0 = PARTICLE_MASSES[name]
        except KeyError:
            raise DomainError(f"unknown particle {name!r}; choose from {sorted(PARTICLE_MASSES)}") from None
        return cls.from_mass(m0, beta, const)


@dataclass(frozen=True)
class Photon:
    lambda_i: float
    direction: tuple[float, float, float] = (1.0, 0.0, 0.0)

    def __post_init__(self):
        if not self.lambda_i > 0:
            raise DomainError(f"photon wavelength must be positive, got {self.lambda_i!r}")
        if len(self.direction) != 3:
            raise DomainError("direction must have three components")
        norm = math.sqrt(sum(d * d for d in self.direction))
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"direction must be a unit vector, |d| = {norm!r}")
