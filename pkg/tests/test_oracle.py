import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from photonpos import eigenfield as ef
from photonpos import oracle as orc
from photonpos.specfun import gauss_2f1


def test_config_validation():
    with pytest.raises(ValueError):
        orc.QuadratureConfig(epsilon_list=(0.1, 0.2))
    with pytest.raises(ValueError):
        orc.QuadratureConfig(epsilon_list=(0.1, -0.05))
    with pytest.raises(ValueError):
        orc.QuadratureConfig(epsilon_list=(0.1, 0.05), richardson_order=2)
    cfg = orc.QuadratureConfig()
    assert cfg.effective_k_max() * min(cfg.epsilon_list) >= 5.0


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=4, max_size=4))
def test_neville_reproduces_polynomials(coeffs):
    xs = np.array([0.4, 0.2, 0.1, 0.05])
    ys = np.polyval(coeffs, xs)
    assert orc.neville_at_zero(xs, ys) == pytest.approx(coeffs[-1], abs=1e-10)


@pytest.mark.parametrize("beta", [0.5, 1.0, 1.5])
def test_normalization_integral(beta):
    res = orc.normalization_quadrature(beta)
    target = -math.sin(0.5 * math.pi * beta) * math.gamma(beta + 2.0)
    assert float(res.value) == pytest.approx(target, rel=1e-4)


def test_regularized_integral_exact_tends_to_target():
    beta = 1.0
    assert orc.regularized_integral_exact(beta, 1e-8) == pytest.approx(-2.0, rel=1e-6)


def test_normalization_domain():
    with pytest.raises(Exception):
        orc.normalization_quadrature(2.5)


@pytest.mark.parametrize("theta", [0.4, 1.1, 2.5])
@pytest.mark.parametrize("beta", [0.0, 1.0])
def test_i_beta_quadrature_vs_closed(theta, beta):
    r = 1.3
    assert orc.i_beta_quadrature(r, theta, beta) == pytest.approx(orc.i_beta_closed(r, theta, beta), rel=1e-7)


def test_field_from_i_beta_matches_profiles():
    th = 0.9
    x = np.array([math.sin(th), 0.0, math.cos(th)])
    one = orc.field_from_i_beta(x, 0.0, "one")
    p = ef.lp_profile(th)
    # psi_1 carries the rho and z parts, sqrt2 times the helicity-combined profile
    np.testing.assert_allclose(one, math.sqrt(2.0) * np.array([p.P_rho, 0.0, p.P_z]), rtol=1e-5, atol=1e-8)


def test_euler_integral_for_2f1():
    for a in (0.25, 0.75, 1.25):
        for z in (0.2, 0.9, 1.0 - 1e-6):
            assert orc.gauss_2f1_integral(a, z, 1.0 - z) == pytest.approx(
                gauss_2f1(a, 0.5, 1.0, z, one_minus_z=1.0 - z), rel=1e-10)


def test_bessel_j0_integral():
    assert float(orc.bessel_j0_integral().value) == pytest.approx(1.0, abs=1e-6)


def test_jk_integral_against_kernel():
    # int_0^inf K_0(a s) J_0(b s) ds = K(b / sqrt(a^2 + b^2)) / sqrt(a^2 + b^2)
    a, b = 1.3, 0.7
    h = math.hypot(a, b)
    assert orc.jk_integral_quadrature(a, b, 0.0) == pytest.approx(special.ellipk((b / h) ** 2) / h, rel=1e-7)


def test_damped_oracle_against_closed_form():
    th = 0.8
    x = np.array([math.sin(th), 0.0, math.cos(th)])
    res = orc.damped_fourier_oracle(x, "psi1", 0.0)
    ref = math.sqrt(2.0) * ef.eigenfunction_value(x, family="LP").regular_cartesian
    assert np.max(np.abs(res.value - ref)) < 1e-4 * np.max(np.abs(ref))
    windows = orc.sliding_extrapolants(res, 2)
    errs = [np.max(np.abs(np.asarray(w) - ref)) for w in windows]
    assert errs[-1] < errs[0]


def test_unknown_tag():
    with pytest.raises(ValueError):
        orc.damped_fourier_oracle(np.array([1.0, 0.0, 1.0]), "nope", 0.0)


def test_report_from_errors():
    rep = orc.OracleReport.from_errors("x", [1e-9, 2e-9], [1e-8, 3e-8], 1e-7)
    assert rep.passed and rep.max_rel_err == pytest.approx(3e-8) and rep.samples == 2
    bad = orc.OracleReport.from_errors("y", [1.0], [float("nan")], 1e-7)
    assert not bad.passed
