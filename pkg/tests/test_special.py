import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import erf, erfcx

from stefan_thaw import special as sp
from stefan_thaw.errors import DomainError, NonFiniteInput

from oracles import g_quad

SQRT_PI_2 = math.sqrt(math.pi) / 2.0


class TestKernelIntegral:
    def test_zero_at_zero(self):
        for p in (-3.0, 0.0, 0.5, 2.0, 5.0):
            assert sp.g_eval(p, 0.0) == 0.0

    def test_p0_y1(self):
        assert sp.g_eval(0.0, 1.0) == pytest.approx(SQRT_PI_2 * erf(1.0), rel=1e-14)
        assert sp.g_eval(0.0, 1.0) == pytest.approx(0.7468241328, rel=1e-9)

    def test_p2_y1(self):
        # substitution u = r - y collapses to e^{y^2} (sqrt(pi)/2) erf(y)
        expect = math.e * SQRT_PI_2 * erf(1.0)
        assert sp.g_eval(2.0, 1.0) == pytest.approx(expect, rel=1e-14)
        assert sp.g_eval(2.0, 1.0) == pytest.approx(g_quad(2.0, 1.0), rel=1e-12)
        assert sp.g_eval(2.0, 1.0) == pytest.approx(2.0300, rel=1e-4)

    @pytest.mark.parametrize("p", [-2.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0])
    def test_closed_form_vs_quadrature(self, p):
        for y in np.geomspace(0.01, 4.0, 25):
            assert sp.g_eval(p, float(y)) == pytest.approx(g_quad(p, float(y)), rel=1e-10)

    def test_vectorized_matches_scalar(self):
        ys = np.linspace(0.1, 3.0, 7)
        vals = sp.g_eval(1.3, ys)
        for y, v in zip(ys, vals):
            assert v == sp.g_eval(1.3, float(y))

    def test_nonfinite_rejected(self):
        with pytest.raises(NonFiniteInput):
            sp.g_eval(math.nan, 1.0)
        with pytest.raises(NonFiniteInput):
            sp.g_eval(1.0, math.inf)
        with pytest.raises(DomainError):
            sp.g_eval(1.0, -1.0)

    @given(p=st.floats(min_value=-3.0, max_value=3.0),
           y=st.floats(min_value=1e-3, max_value=4.0))
    @settings(max_examples=80, deadline=None)
    def test_positive_and_accurate(self, p, y):
        got = sp.g_eval(p, y)
        assert got > 0.0
        assert got == pytest.approx(g_quad(p, y), rel=1e-9)

    def test_log_space_flag_and_value(self):
        # p = 1.9, y = 45: exp(p^2 y^2 / 4) alone overflows but g is finite in logs
        val, used = sp.g_eval(1.9, 45.0, return_info=True)
        assert used
        assert math.isinf(val)  # true value also exceeds double range here
        lg = sp.log_g(1.9, 45.0)
        with mpmath.workdps(50):
            ref = mpmath.log(
                mpmath.sqrt(mpmath.pi) / 2 * mpmath.exp((1.9 * 45.0 / 2) ** 2)
                * (mpmath.erf((1 - 0.95) * 45.0) + mpmath.erf(0.95 * 45.0))
            )
        assert lg == pytest.approx(float(ref), rel=1e-12)


class TestG1:
    def test_limit_at_zero_is_inverse_k0(self):
        k0 = 0.366
        assert sp.g1_eval(0.5, 1e-8, k0) == pytest.approx(1.0 / k0, rel=1e-6)

    def test_p1_decreasing(self):
        k0 = 0.7
        ys = np.linspace(0.1, 3.0, 20)
        vals = [sp.g1_eval(1.0, float(y), k0) for y in ys]
        for y, v in zip(ys, vals):
            assert v == pytest.approx(1.0 / (k0 + sp.g_eval(1.0, float(y))), rel=1e-13)
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_deep_underflow_handled(self):
        # true value ~ e^{-900}: underflows cleanly to 0, no 0/0; the log
        # form stays finite and matches a high-precision oracle
        assert sp.g1_eval(0.0, 30.0, 0.5) == 0.0
        lg1 = sp.log_g1_eval(0.0, 30.0, 0.5)
        with mpmath.workdps(60):
            g_ref = mpmath.quad(lambda r: mpmath.exp(-r * r), [0, 30])
            ref = -mpmath.mpf(900) - mpmath.log(mpmath.mpf("0.5") + g_ref)
        assert lg1 == pytest.approx(float(ref), rel=1e-12)

    def test_tilde_is_k0_to_zero_limit(self):
        for p, y in ((0.3, 0.7), (1.5, 2.0), (-1.0, 1.2)):
            tilde = sp.g1_tilde_eval(p, y)
            near = sp.g1_eval(p, y, 1e-14)
            assert abs(tilde - near) / tilde <= 1e-10

    def test_tilde_values(self):
        assert sp.g1_tilde_eval(1.0, 1.0) == pytest.approx(1.0 / sp.g_eval(1.0, 1.0), rel=1e-14)
        assert sp.g1_tilde_eval(2.0, 2.0) == pytest.approx(
            math.exp(4.0) / g_quad(2.0, 2.0), rel=1e-11)

    def test_tilde_undefined_at_zero(self):
        with pytest.raises(DomainError):
            sp.g1_tilde_eval(0.5, 0.0)


class TestG2:
    def test_limit_one_at_zero(self):
        assert sp.g2_eval(1e-12, 1.0) == pytest.approx(1.0, rel=1e-10)

    def test_large_argument_asymptote(self):
        # G2(y) ~ sqrt(pi) gamma0 y for large y; within 1% at y = 10
        val = sp.g2_eval(10.0, 1.0)
        assert val == pytest.approx(math.sqrt(math.pi) * 10.0, rel=0.01)
        with mpmath.workdps(40):
            ref = float(1.0 / mpmath.erfc(10) / mpmath.exp(100))
        assert val == pytest.approx(ref, rel=1e-13)

    def test_monotone_increasing(self):
        assert sp.g2_eval(2.0, 1.0) > sp.g2_eval(1.0, 1.0)
        ys = np.geomspace(0.01, 20.0, 200)
        vals = sp.g2_eval(ys, 0.7)
        assert np.all(np.diff(vals) > 0.0)

    def test_erfcx_identity(self):
        for g0 in (0.3, 1.0, 2.0):
            for y in np.geomspace(0.01, 26.0, 40):
                prod = sp.g2_eval(float(y), g0) * erfcx(g0 * float(y))
                assert prod == pytest.approx(1.0, rel=1e-14)


class TestFrontEquationSides:
    def test_rhs(self):
        assert sp.rhs_eval(0.0, 2.0) == 2.0
        assert sp.rhs_eval(-1.0, 1.0) == 0.0  # positive zero at sqrt(1/|N|)
        assert sp.rhs_eval(3.0, 2.0) == 26.0

    def test_limit_at_zero(self, dl_pp):
        assert sp.lhs_limit_at_zero(dl_pp) == pytest.approx(
            dl_pp.delta1 / dl_pp.k0 - dl_pp.delta2, rel=1e-15)
        # the limit is approached numerically
        assert sp.lhs_convective(1e-9, dl_pp) == pytest.approx(
            sp.lhs_limit_at_zero(dl_pp), rel=1e-6)

    def test_prefactor_zero_makes_lhs_negative(self, dl_pp):
        y_star = math.sqrt(dl_pp.b_ext / (dl_pp.a_init * dl_pp.m_par))
        val = sp.lhs_convective(y_star, dl_pp)
        expect = -dl_pp.delta2 * (1.0 + dl_pp.m_par * y_star ** 2) * sp.g2_eval(
            y_star, dl_pp.gamma0)
        assert val == pytest.approx(expect, rel=1e-12)
        assert val < 0.0

    def test_sign_change_bracket(self, dl_pp):
        y_star = math.sqrt(dl_pp.b_ext / (dl_pp.a_init * dl_pp.m_par))
        assert sp.lhs_convective(1e-6, dl_pp) > 0.0
        assert sp.lhs_convective(y_star, dl_pp) < 0.0

    def test_temperature_lhs_blows_up_at_zero(self, dl_pp):
        dl = dl_pp.with_b0(3.0)
        assert sp.lhs_temperature(1e-6, dl) > 1e4

    def test_temperature_lhs_negative_at_prefactor_zero(self, dl_pp):
        dl = dl_pp.with_b0(3.0)
        y_star = math.sqrt(dl.b0_wall / (dl.a_init * dl.m_par))
        assert sp.lhs_temperature(y_star, dl) < 0.0


class TestLargeArgumentBehavior:
    """Limits and asymptotic equivalents of the two LHS building blocks."""

    @pytest.mark.parametrize("p", [-1.0, 0.0, 0.5, 1.0, 1.5])
    def test_g1_block_vanishes_for_small_p(self, p, dl_pp):
        y = 40.0
        m = dl_pp.m_par
        block = (1.0 - dl_pp.a_init * m / dl_pp.b_ext * y * y) * sp.g1_eval(p, y, dl_pp.k0)
        assert abs(block) <= 1e-8

    def test_g1_block_equivalent_p2(self, dl_pp):
        y = 25.0
        ratio_amb = dl_pp.a_init * dl_pp.m_par / dl_pp.b_ext
        block = (1.0 - ratio_amb * y * y) * sp.g1_eval(2.0, y, dl_pp.k0)
        target = -(2.0 * ratio_amb / math.sqrt(math.pi)) * y * y
        assert 0.95 <= block / target <= 1.05

    def test_g1_block_equivalent_p3(self, dl_pp):
        y = 25.0
        ratio_amb = dl_pp.a_init * dl_pp.m_par / dl_pp.b_ext
        block = (1.0 - ratio_amb * y * y) * sp.g1_eval(3.0, y, dl_pp.k0)
        target = -(ratio_amb * (3.0 - 2.0)) * y ** 3
        assert 0.95 <= block / target <= 1.05

    def test_g2_block_equivalent_and_monotone(self, dl_pp):
        m, g0 = dl_pp.m_par, dl_pp.gamma0
        y = 25.0
        block = (1.0 + m * y * y) * sp.g2_eval(y, g0)
        target = math.sqrt(math.pi) * g0 * m * y ** 3
        assert abs(block / target - 1.0) <= 0.02
        grid = np.geomspace(1e-3, 25.0, 1000)
        vals = (1.0 + m * grid ** 2) * sp.g2_eval(grid, g0)
        assert np.all(np.diff(vals) > 0.0)


class TestProfileIntegral:
    def test_not_the_kernel_integral(self):
        # the exponent couples r to the front coefficient, not to the upper
        # limit: g_partial(p, xi, eta) != g(p, eta) unless eta == xi
        p, xi, eta = 0.8, 1.5, 0.7
        partial = sp.g_partial(p, xi, eta)
        ref, _ = __import__("scipy.integrate", fromlist=["quad"]).quad(
            lambda r: np.exp(-r * r + p * r * xi), 0.0, eta, epsabs=1e-13, epsrel=1e-13)
        assert partial == pytest.approx(ref, rel=1e-12)
        assert partial != pytest.approx(sp.g_eval(p, eta), rel=1e-3)

    def test_full_upper_limit_recovers_kernel(self):
        for p, xi in ((0.5, 0.8), (-1.2, 2.0), (2.5, 1.1)):
            assert sp.g_partial(p, xi, xi) == pytest.approx(sp.g_eval(p, xi), rel=1e-12)

    def test_integrand_is_derivative(self):
        p, xi, eta, h = 0.6, 1.2, 0.5, 1e-6
        fd = (sp.g_partial(p, xi, eta + h) - sp.g_partial(p, xi, eta - h)) / (2 * h)
        assert fd == pytest.approx(sp.partial_integrand(p, xi, eta), rel=1e-9)
