import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wftlab.core import DEFAULT, DomainError
from wftlab.deflection import (
    DeflectionCase,
    crossover_product,
    extended_deflection,
    gr_deflection,
    wave_deflection,
)

M_SUN, R_SUN = 1.989e30, 6.96e8
G, h, c = DEFAULT.G, DEFAULT.h, DEFAULT.c


def test_solar_value():
    assert gr_deflection(M_SUN, R_SUN) == pytest.approx(8.48886941107875e-6, rel=1e-13)
    arcsec = math.degrees(gr_deflection(M_SUN, R_SUN)) * 3600
    assert arcsec == pytest.approx(1.75, abs=0.01)


def test_solar_through_wave_form():
    assert wave_deflection(h / (M_SUN * c), R_SUN) == pytest.approx(8.48886941107875e-6, rel=1e-13)


def test_identity_log_grid():
    ms = np.logspace(-30, 40, 10)
    rs = np.logspace(-15, 20, 10)
    worst = 0.0
    for m in ms:
        for r in rs:
            a = gr_deflection(float(m), float(r))
            b = wave_deflection(h / (float(m) * c), float(r))
            worst = max(worst, abs(b / a - 1))
    assert worst < 1e-13


def test_scaling():
    base = gr_deflection(1.0, 1.0)
    assert gr_deflection(2.0, 1.0) == 2 * base
    assert gr_deflection(1.0, 2.0) == base / 2
    assert wave_deflection(2.0, 1.0) == wave_deflection(1.0, 1.0) / 2


def test_extended_solar_ratio():
    lam = h / (M_SUN * c)
    e = extended_deflection(lam, 5e-7, R_SUN)
    assert e.term2 / e.term1 == pytest.approx(8.46273832014e-11, rel=1e-9)
    assert e.dominant == "mass"
    assert e.total == pytest.approx(e.term1, rel=1e-10)


def test_edge_regime():
    e = extended_deflection(1e30, 5e-7, 1e-5)
    assert e.total == pytest.approx(0.05, rel=1e-12)
    assert e.dominant == "photon"


def test_zero_photon_wavelength():
    e = extended_deflection(1e-40, 0.0, 3.0)
    assert e.term2 == 0.0
    assert e.total == wave_deflection(1e-40, 3.0)


@given(st.floats(-60, 10), st.floats(-15, 0), st.floats(-10, 15))
def test_terms_match_standalone(log_lm, log_li, log_r):
    lm, li, r = 10.0**log_lm, 10.0**log_li, 10.0**log_r
    e = extended_deflection(lm, li, r)
    assert e.term1 == wave_deflection(lm, r)
    assert e.term2 == li / r
    assert e.total == e.term1 + e.term2


def test_crossover_is_r_independent():
    x = crossover_product()
    assert x == pytest.approx(4 * G * h / c**3, rel=1e-15)
    lm = 1e-30
    for r in (1e-3, 1.0, 1e9):
        e = extended_deflection(lm, x / lm, r)
        assert e.term1 == pytest.approx(e.term2, rel=1e-12)


def test_case_type():
    case = DeflectionCase.from_mass(M_SUN, R_SUN, 5e-7)
    assert case.lambda_mass * case.m_deflector * c == pytest.approx(h, rel=1e-15)
    with pytest.raises(DomainError):
        DeflectionCase(1.0, -1.0, 1.0)
    with pytest.raises(DomainError):
        gr_deflection(0.0, 1.0)
    with pytest.raises(DomainError):
        extended_deflection(1.0, -1e-7, 1.0)
