"""Light-deflection angles: the classical point-mass form, the same angle
written through the deflector's rest wavelength, and the two-term extension
that adds a photon-wavelength term lambda_i / r.
"""

from __future__ import annotations

from dataclasses import dataclass

from wftlab.core import DEFAULT, Constants, DomainError


def _positive(**kw):
    for name, value in kw.items():
        if not value > 0:
            raise DomainError(f"{name} must be positive, got {value!r}")


def gr_deflection(m: float, r: float, const: Constants = DEFAULT) -> float:
    _positive(m=m, r=r)
    return 4.0 * const.G * m / (const.c**2 * r)


def wave_deflection(lambda_mass: float, r: float, const: Constants = DEFAULT) -> float:
    _positive(lambda_mass=lambda_mass, r=r)
    return 4.0 * const.G * const.h / (const.c**3 * lambda_mass * r)


@dataclass(frozen=True)
class ExtendedDeflection:
    term1: float
    term2: float
    total: float
    # lambda_mass * lambda_i at which both terms are equal; independent of r
    crossover_product: float

    @property
    def dominant(self) -> str:
        return "mass" if self.term1 >= self.term2 else "photon"


def crossover_product(const: Constants = DEFAULT) -> float:
    return 4.0 * const.G * const.h / const.c**3


def extended_deflection(lambda_mass: float, lambda_i: float, r: float, const: Constants = DEFAULT) -> ExtendedDeflection:
    if not lambda_i >= 0:
        raise DomainError("photon wavelength must be non-negative")
    term1 = wave_deflection(lambda_mass, r, const)
    term2 = lambda_i / r
    return ExtendedDeflection(term1, term2, term1 + term2, crossover_product(const))


@dataclass(frozen=True)
class DeflectionCase:
    m_deflector: float
    lambda_mass: float
    r: float
    lambda_i: float | None = None

    def __post_init__(self):
        _positive(m_deflector=self.m_deflector, lambda_mass=self.lambda_mass, r=self.r)
        if self.lambda_i is not None and self.lambda_i < 0:
            raise DomainError("photon wavelength must be non-negative")

    @classmethod
    def from_mass(cls, m: float, r: float, lambda_i: float | None = None, const: Constants = DEFAULT):
        return cls(m, const.h / (m * const.c), r, lambda_i)
