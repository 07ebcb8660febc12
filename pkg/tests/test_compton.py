import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wftlab.compton import (
    compton_shift,
    diffraction_radius,
    half_wavelength_push,
    max_deflection,
    run_pipeline,
    stage1_decay,
    stage1_velocity,
    stage2_decay,
    stage2_velocity,
    transverse_wavelength,
)
from wftlab.core import DomainError

# CODATA electron Compton wavelength
LAM_E = 2.4263102353803171e-12


class TestStages:
    def test_stage1_velocity(self):
        assert stage1_velocity(1e-10, 2.42631e-12) == pytest.approx(0.012130657371092447, rel=1e-13)
        assert stage1_velocity(0.5, 1.0) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
        assert stage1_velocity(1e300, 1.0) < 1e-299

    def test_stage1_decay(self):
        assert stage1_decay(1e-10, 0.0) == 1e-10
        assert stage1_decay(1e-10, 0.0121258) == pytest.approx(1.01220021718e-10, rel=1e-10)
        assert stage1_decay(0.5, 1 / math.sqrt(2)) == pytest.approx((1 + math.sqrt(2)) / 2, rel=1e-14)

    def test_diffraction_radius(self):
        assert diffraction_radius(1.01220e-10, math.pi / 2) == pytest.approx(6.4438653359e-11, rel=1e-10)
        assert diffraction_radius(LAM_E, 2 * math.pi) == pytest.approx(LAM_E / (2 * math.pi), rel=1e-15)
        assert diffraction_radius(1.0, 2.0) == diffraction_radius(1.0, 1.0) / 2
        for bad in (0.0, -1.0):
            with pytest.raises(DomainError):
                diffraction_radius(1.0, bad)

    def test_max_deflection(self):
        assert max_deflection(1e-10, 2.42631e-12, 0.0) == pytest.approx(5.06102567273e-11, rel=1e-10)
        assert max_deflection(1e-10, 2.42631e-12, math.pi / 2) == pytest.approx(4.99963210434e-11, rel=1e-10)
        assert max_deflection(1e-10, 1e-30, 0.3) == pytest.approx(0.5e-10, rel=1e-12)

    def test_max_deflection_denominator(self):
        # lambda_i -> 0 at phi = 0 drives 1 - lambda0/sqrt(...) to zero
        with pytest.raises(DomainError):
            max_deflection(1e-30, 1.0, 0.0)

    def test_transverse(self):
        assert transverse_wavelength(1.0, 0.0) == 1.0
        assert transverse_wavelength(1.0, 0.0121258) == pytest.approx(0.999926479785, rel=1e-11)
        assert transverse_wavelength(1.0, 1 / math.sqrt(2)) == pytest.approx(1 / math.sqrt(2), rel=1e-15)

    def test_stage2(self):
        assert stage2_velocity(1.01220e-10, 2.42613e-12) == pytest.approx(0.0119835792834, rel=1e-10)
        assert stage2_decay(1.01220e-10, 0.0) == 1.01220e-10
        assert stage2_decay(1.01220e-10, 0.0119846) == pytest.approx(1.02440438269e-10, rel=1e-10)
        vals = [stage2_decay(1.0, v) for v in (0.0, 0.1, 0.5, 0.9)]
        assert vals == sorted(vals)

    def test_half_wavelength_push(self):
        out = half_wavelength_push(LAM_E)
        assert out["lambda_i1_formula"] == pytest.approx(1.2071067811865475 * LAM_E, rel=1e-14)
        assert out["lambda_i1_narrative"] == LAM_E


class TestPipeline:
    def test_worked_example(self):
        tr = run_pipeline(1e-10, LAM_E, math.pi / 2)
        # 50-digit evaluation of the same chain of closed forms
        assert tr.v1 == pytest.approx(0.0121306585477343, rel=1e-12)
        assert tr.lambda_i1 == pytest.approx(1.01220513573654e-10, rel=1e-12)
        assert tr.lambda_e1 == pytest.approx(2.42613170954685e-12, rel=1e-12)
        assert tr.v2 == pytest.approx(0.0119835269325361, rel=1e-12)
        assert tr.lambda_i2 == pytest.approx(1.02440848093061e-10, rel=1e-12)
        assert tr.dlambda_total == pytest.approx(2.44084809306128e-12, rel=1e-10)
        assert tr.dlambda_paper == pytest.approx(1.2203345194076e-12, rel=1e-10)
        assert tr.r == pytest.approx(6.44389803101891e-11, rel=1e-12)
        assert tr.dlambda_oracle == pytest.approx(2.42631023538032e-12, rel=1e-13)
        assert abs(tr.rel_dev_total) < 0.01
        assert tr.r_undecayed == pytest.approx(2e-10 / math.pi, rel=1e-15)

    @given(st.floats(-14, -6), st.floats(-16, -9), st.floats(0.01, math.pi))
    def test_invariants(self, log_li, log_l0, alpha):
        tr = run_pipeline(10.0**log_li, 10.0**log_l0, alpha)
        assert 0 < tr.v1 < 1 and 0 < tr.v2 < 1
        assert tr.lambda_i < tr.lambda_i1 < tr.lambda_i2

    def test_asymptote(self):
        tr = run_pipeline(1e3 * LAM_E, LAM_E, math.pi / 2)
        assert abs(tr.dlambda_total / LAM_E - 1) < 5e-3
        assert abs((tr.lambda_i1 - tr.lambda_i) / (LAM_E / 2) - 1) < 1e-2
        assert abs(tr.dlambda_paper / (LAM_E / 2) - 1) < 1e-2

    def test_monotone_in_lambda0(self):
        shifts = [run_pipeline(1e-10, l0, 1.0).dlambda_total for l0 in (1e-15, 1e-13, 1e-12, 1e-11, 1e-10)]
        assert shifts == sorted(shifts)

    def test_rigid_scatterer(self):
        tr = run_pipeline(1e-10, 1e-40, math.pi / 2)
        assert tr.v1 < 1e-29 and tr.v2 < 1e-29
        assert tr.dlambda_total < 1e-38

    def test_deterministic(self):
        a = run_pipeline(3.3e-11, LAM_E, 0.7).as_dict()
        b = run_pipeline(3.3e-11, LAM_E, 0.7).as_dict()
        assert a == b

    def test_oracle(self):
        assert compton_shift(LAM_E, math.pi) == pytest.approx(2 * LAM_E, rel=1e-15)

    def test_bad_inputs(self):
        with pytest.raises(DomainError):
            run_pipeline(-1e-10, LAM_E, 1.0)
        with pytest.raises(DomainError):
            run_pipeline(1e-10, LAM_E, 0.0)
