"""Numerical laboratory for the wave field theory formulas and their standard-physics cross-checks."""

from wftlab.core import (
    DEFAULT,
    Constants,
    DomainError,
    Particle,
    Photon,
    ResourceError,
    SingularityError,
    load_constants,
    mass_from_wavelength,
    rest_wavelength,
)

__version__ = "0.1.0"
