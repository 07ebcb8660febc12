"""Two-push wave model of Compton scattering.

The photon first pushes the particle (speed v1) and is Doppler-lengthened in
the particle's receding frame; it is then diffracted through alpha, pushes the
particle again through its transverse wavelength (speed v2) and is lengthened
a second time. The result is compared with the standard shift
(h / m0 c)(1 - cos alpha).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from wftlab.core import DomainError
from wftlab.kinematics import doppler_wavelength, rsp_push_velocity

# the photon chases the receding particle in both stages
CHASE_ANGLE = math.pi


def stage1_velocity(lambda_i: float, lambda0: float) -> float:
    return rsp_push_velocity(lambda_i, lambda0)


def stage1_decay(lambda_i: float, v1: float) -> float:
    return doppler_wavelength(lambda_i, v1, CHASE_ANGLE)


def diffraction_radius(lambda_i1: float, alpha: float) -> float:
    if not alpha > 0:
        raise DomainError(f"deflection angle must be positive, got {alpha!r}")
    return lambda_i1 / alpha


def max_deflection(lambda_i: float, lambda0: float, phi: float) -> float:
    """Evaluate the printed maximum-deviation expression as it stands.

    Note the result carries the dimension of a length, not of an angle.
    """
    if not (lambda_i > 0 and lambda0 > 0):
        raise DomainError("wavelengths must be positive")
    root = math.hypot(2.0 * lambda_i, lambda0)
    denom = 1.0 - lambda0 * math.cos(phi) / root
    if denom <= 0:
        raise DomainError("denominator 1 - lambda0 cos(phi)/sqrt(4 lambda_i^2 + lambda0^2) must be positive")
    return 2.0 * lambda_i**2 / (2.0 * root) / denom


def transverse_wavelength(lambda_e: float, v1: float) -> float:
    return doppler_wavelength(lambda_e, v1, math.pi / 2)


def stage2_velocity(lambda_i1: float, lambda_e1: float) -> float:
    return rsp_push_velocity(lambda_i1, lambda_e1)


def stage2_decay(lambda_i1: float, v2: float) -> float:
    return doppler_wavelength(lambda_i1, v2, CHASE_ANGLE)


def compton_shift(lambda0: float, alpha: float) -> float:
    """Standard Compton shift lambda0 (1 - cos alpha)."""
    return lambda0 * (1.0 - math.cos(alpha))


@dataclass(frozen=True)
class ComptonTrace:
    lambda_i: float
    lambda0: float
    alpha: float
    v1: float
    lambda_i1: float
    r: float
    lambda_e1: float
    v2: float
    lambda_i2: float
    dlambda_paper: float
    dlambda_total: float
    # standard-physics comparison
    dlambda_oracle: float
    rel_dev_paper: float
    rel_dev_total: float
    # radius for the undecayed component diffracted through the same angle
    r_undecayed: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


def run_pipeline(lambda_i: float, lambda0: float, alpha: float) -> ComptonTrace:
    if not (lambda_i > 0 and lambda0 > 0):
        raise DomainError("wavelengths must be positive")
    v1 = stage1_velocity(lambda_i, lambda0)
    lambda_i1 = stage1_decay(lambda_i, v1)
    r = diffraction_radius(lambda_i1, alpha)
    lambda_e1 = transverse_wavelength(lambda0, v1)
    v2 = stage2_velocity(lambda_i1, lambda_e1)
    lambda_i2 = stage2_decay(lambda_i1, v2)
    oracle = compton_shift(lambda0, alpha)
    d_paper = lambda_i2 - lambda_i1
    d_total = lambda_i2 - lambda_i
    return ComptonTrace(
        lambda_i=lambda_i,
        lambda0=lambda0,
        alpha=alpha,
        v1=v1,
        lambda_i1=lambda_i1,
        r=r,
        lambda_e1=lambda_e1,
        v2=v2,
        lambda_i2=lambda_i2,
        dlambda_paper=d_paper,
        dlambda_total=d_total,
        dlambda_oracle=oracle,
        rel_dev_paper=(d_paper - oracle) / oracle if oracle else math.nan,
        rel_dev_total=(d_total - oracle) / oracle if oracle else math.nan,
        r_undecayed=diffraction_radius(lambda_i, alpha),
    )


def half_wavelength_push(lambda0: float) -> dict[str, float]:
    """First push by a photon of wavelength lambda0 / 2.

    The narrative value of the decayed wavelength is lambda0 itself; the Doppler
    formula gives (1 + sqrt 2)/2 * lambda0. Both are returned unreconciled.
    """
    lambda_i = lambda0 / 2
    v1 = stage1_velocity(lambda_i, lambda0)
    return {"lambda_i": lambda_i, "v1": v1, "lambda_i1_formula": stage1_decay(lambda_i, v1), "lambda_i1_narrative": lambda0}
