"""Wave-gravity force law, its calibration constants, terminal velocities and
the repulsive fifth-interaction correction.

Formulas are evaluated as unit-bound SI expressions; several are not
dimensionally homogeneous and are reproduced numerically rather than fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from wftlab.core import DEFAULT, Constants, DomainError, SingularityError, check_beta

SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True)
class MassPair:
    m_a: float
    m_b: float
    r: float
    lambda_a: float
    lambda_b: float

    @classmethod
    def from_masses(cls, m_a: float, m_b: float, r: float, const: Constants = DEFAULT) -> "MassPair":
        if not (m_a > 0 and m_b > 0):
            raise DomainError("masses must be positive")
        if not r > 0:
            raise DomainError("separation must be positive")
        return cls(m_a, m_b, r, const.h / (m_a * const.c), const.h / (m_b * const.c))


def characteristic_period(lambda1: float, const: Constants = DEFAULT) -> float:
    if not lambda1 > 0:
        raise DomainError("wavelength must be positive")
    return lambda1 / (4.0 * const.c)


def first_impulse(F_g: float, t_g: float) -> float:
    """Momentum gained from rest over one characteristic period."""
    if F_g < 0 or t_g < 0:
        raise DomainError("force and period must be non-negative")
    return F_g * t_g


def base_force_component(lambda_a: float, lambda_b: float, const: Constants = DEFAULT) -> float:
    if not (lambda_a > 0 and lambda_b > 0):
        raise DomainError("wavelengths must be positive")
    return 4.0 * const.h * const.c / (lambda_a * lambda_b)


def parallel_wavefront_speed(N: float, r: float, const: Constants = DEFAULT) -> float:
    if not (N > 0 and r > 0):
        raise DomainError("N and r must be positive")
    return N * const.L**2 * const.c / (r**2 * SQRT5)


@dataclass(frozen=True)
class GravityForce:
    force: float
    newton: float
    ratio: float
    rel_dev: float
    N: float
    t_g_a: float
    t_g_b: float
    base_component: float
    wavefront_speed: float


def wave_gravity_force(pair: MassPair, const: Constants = DEFAULT) -> GravityForce:
    """Wave-gravity force with N = N_coeff / L, next to the Newtonian value."""
    N = const.N
    force = 4.0 * const.h * const.L**2 * const.c / SQRT5 * N / (pair.r**2 * pair.lambda_a * pair.lambda_b)
    newton = const.G * pair.m_a * pair.m_b / pair.r**2
    return GravityForce(
        force=force,
        newton=newton,
        ratio=force / newton,
        rel_dev=(force - newton) / newton,
        N=N,
        t_g_a=characteristic_period(pair.lambda_a, const),
        t_g_b=characteristic_period(pair.lambda_b, const),
        base_component=base_force_component(pair.lambda_a, pair.lambda_b, const),
        wavefront_speed=parallel_wavefront_speed(N, pair.r, const),
    )


def effective_G(const: Constants = DEFAULT) -> float:
    """The constant the wave law puts in place of G: 4 L c^3 N_coeff / (sqrt 5 h)."""
    return 4.0 * const.L * const.c**3 * const.N_coeff / (SQRT5 * const.h)


@dataclass(frozen=True)
class NDecomposition:
    N_coeff: float
    alpha_inv: float
    reconstruction: float
    rel_diff: float
    implied_alpha_inv: float
    note: str


def decompose_N(const: Constants = DEFAULT) -> NDecomposition:
    """Compare N_coeff with alpha_inv^2 * 100^5."""
    rec = const.alpha_inv**2 * 100.0**5
    rel = (const.N_coeff - rec) / const.N_coeff
    implied = math.sqrt(const.N_coeff / 100.0**5)
    note = (
        f"{const.alpha_inv:g}^2 * 100^5 = {rec:.8g} differs from N_coeff = {const.N_coeff:.8g} "
        f"by {100 * abs(rel):.3f}%; the coefficient implies alpha_inv = {implied:.6f}"
    )
    return NDecomposition(const.N_coeff, const.alpha_inv, rec, rel, implied, note)


@dataclass(frozen=True)
class TerminalReport:
    lambda0: float
    beta_deficit: float
    log10_beta_deficit: float
    v_terminal_description: str


def terminal_report(lambda0: float, const: Constants = DEFAULT) -> TerminalReport:
    """Speed at which the forward-emitted wavelength shrinks to L.

    Solves lambda0 sqrt((1 - b)/(1 + b)) = L; 1 - b = 2 q / (1 + q) with
    q = (L / lambda0)^2, never formed as 1 minus a number close to 1.
    """
    if not lambda0 >= const.L:
        raise DomainError(f"rest wavelength {lambda0!r} m is below the terminal length L = {const.L!r} m")
    ratio = const.L / lambda0
    q = ratio * ratio
    deficit = 2.0 * q / (1.0 + q)
    if deficit >= 1e-300:
        log10_deficit = math.log10(deficit)
    else:
        log10_deficit = math.log10(2.0) + 2.0 * math.log10(ratio) - math.log1p(q) / math.log(10.0)
    if deficit == 1.0:
        text = "terminal speed 0: a maximass stays at rest"
    else:
        mant, exp = _split_log10(log10_deficit)
        text = f"1 - v/c = {mant:.6f}e{exp:+d}"
    return TerminalReport(lambda0, deficit, log10_deficit, text)


def _split_log10(lg: float) -> tuple[float, int]:
    exp = math.floor(lg)
    return 10.0 ** (lg - exp), exp


def maximass(const: Constants = DEFAULT) -> float:
    """The mass whose rest wavelength equals L."""
    return const.h / (const.L * const.c)


@dataclass(frozen=True)
class FifthForce:
    prefactor: float
    attraction_term: float
    repulsion_term: float
    bracket: float
    attraction: float
    repulsion: float
    total: float


def fifth_interaction_force(lambda_a: float, lambda_b: float, r: float, phi: float,
                            const: Constants = DEFAULT) -> FifthForce:
    """Wave-gravity force with its repulsive angular correction.

    The prefactor is 4 h L^2 c N / sqrt(5 r), taken literally.
    """
    if not (lambda_a > 0 and lambda_b > 0 and r > 0):
        raise DomainError("wavelengths and separation must be positive")
    prod = lambda_a * lambda_b
    x = const.L**2 / prod
    if not x < 1:
        raise SingularityError(f"lambda_a * lambda_b = {prod!r} must exceed L^2 = {const.L**2!r}")
    pref = 4.0 * const.h * const.L**2 * const.c * const.N / math.sqrt(5.0 * r)
    attr = 1.0 / (r * prod)
    rep = (1.0 / lambda_a) * (1.0 / lambda_b) * math.cos(phi) / (r * math.sqrt(1.0 - x))
    return FifthForce(pref, attr, rep, attr - rep, pref * attr, pref * rep, pref * (attr - rep))


def angular_wave_mass(m: float, beta: float, phi: float) -> float:
    check_beta(beta)
    return m * (1.0 - beta * math.cos(phi)) / math.sqrt(1.0 - beta * beta)
