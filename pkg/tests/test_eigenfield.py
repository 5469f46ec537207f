import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from photonpos import eigenfield as ef
from photonpos.specfun import K_HALF

SQRT_PI = math.sqrt(math.pi)
theta_off_plane = st.floats(min_value=1e-3, max_value=math.pi - 1e-3).filter(
    lambda t: abs(math.cos(t)) > 1e-3)


def test_axis_constants():
    assert ef.LP_AXIS_PZ == pytest.approx(-SQRT_PI / 2.0)
    assert ef.RS_AXIS_PZ == pytest.approx(-3.0 * math.pi / (8.0 * K_HALF))


@settings(max_examples=60, deadline=None)
@given(theta_off_plane)
def test_reflection_parities(th):
    lp, lp2 = ef.lp_profile(th), ef.lp_profile(math.pi - th)
    rs, rs2 = ef.rs_profile(th), ef.rs_profile(math.pi - th)
    assert lp2.P_z == pytest.approx(lp.P_z, rel=1e-10, abs=1e-12)
    assert lp2.P_rho == pytest.approx(-lp.P_rho, rel=1e-10, abs=1e-12)
    assert rs2.P_rho == pytest.approx(-rs.P_rho, rel=1e-10, abs=1e-12)
    assert rs2.P_psi_regular == pytest.approx(rs.P_psi_regular, rel=1e-10, abs=1e-12)
    assert rs2.P_z == pytest.approx(rs.P_z, rel=1e-10, abs=1e-12)


def test_profiles_array_and_plane():
    th = np.array([0.3, 0.5 * math.pi, 2.0])
    p = ef.lp_profile(th)
    assert np.isnan(p.P_rho[1]) and np.isnan(p.P_z[1])
    assert p.delta_psi_coeff == pytest.approx(-SQRT_PI)
    assert ef.rs_profile(0.3).delta_psi_coeff == 0.0
    with pytest.raises(ValueError):
        ef.lp_profile(-0.1)


def test_lp_plane_forms():
    const = (math.log(4.0) - 2.0) / SQRT_PI
    for s in (1e-5, 1e-7, 1e-9):
        for th in (math.acos(s), math.acos(-s)):
            p = ef.lp_profile(th)
            c = math.cos(th)
            assert SQRT_PI * p.P_rho * c == pytest.approx(-1.0, abs=1e-6)
            assert p.P_z + math.log(abs(c)) / SQRT_PI == pytest.approx(const, abs=1e-6)


def test_rs_plane_asymptotics_corrected_form():
    for s, tol in ((1e-4, 5e-2), (1e-5, 2e-2)):
        th = math.acos(s)
        exact = ef.rs_profile(th).as_array()
        lead = ef.rs_asymptotic_plane(th).as_array()
        np.testing.assert_allclose(exact / lead, 1.0, atol=tol)


def test_rs_plane_printed_form_disagrees():
    th = math.acos(1e-6)
    ratio = ef.rs_profile(th).as_array() / ef.rs_asymptotic_plane(th, "printed").as_array()
    assert ratio[1] == pytest.approx(0.5, abs=1e-2)
    assert ratio[2] == pytest.approx(-1.0, abs=1e-2)


def test_axis_limits():
    th = 1e-4
    lp, rs = ef.lp_profile(th), ef.rs_profile(th)
    assert lp.P_z == pytest.approx(ef.LP_AXIS_PZ, rel=1e-6)
    assert lp.P_rho == pytest.approx(-0.75 * SQRT_PI * math.sin(th), rel=1e-6)
    assert rs.P_z == pytest.approx(ef.RS_AXIS_PZ, rel=1e-6)
    assert ef.lp_profile(0.0).P_z == ef.LP_AXIS_PZ


@settings(max_examples=40, deadline=None)
@given(st.floats(0.2, 3.0), st.floats(-2.0, 2.0), st.floats(0.1, 2.0), st.sampled_from(["LP", "RS"]),
       st.sampled_from([1, -1]))
def test_homogeneity(x, z, lam, family, sigma):
    assume(abs(z) > 0.05)
    p = np.array([x, 0.3, z])
    a = ef.eigenfunction_value(p, family=family, sigma=sigma).regular
    b = ef.eigenfunction_value(lam * p, family=family, sigma=sigma).regular
    power = 3.0 + 0.5 * ef.FAMILY_BETA[family]
    np.testing.assert_allclose(b, a * lam ** -power, rtol=1e-10, atol=1e-14)


def test_rs_doubling_scales_by_two_to_minus_seven_halves():
    p = np.array([0.4, 0.0, 0.9])
    a = ef.eigenfunction_value(p, family="RS").regular
    b = ef.eigenfunction_value(2 * p, family="RS").regular
    np.testing.assert_allclose(b, a * 2 ** -3.5, rtol=1e-13)


def test_translation_and_helicity_flip():
    q = np.array([0.3, -0.2, 0.5])
    p = np.array([1.0, 0.7, -0.4])
    a = ef.eigenfunction_value(p + q, q=q, family="RS", sigma=1).regular
    b = ef.eigenfunction_value(p, family="RS", sigma=1).regular
    np.testing.assert_allclose(a, b, rtol=1e-13)
    m = ef.eigenfunction_value(p, family="RS", sigma=-1).regular
    np.testing.assert_allclose(m, b * np.array([1, -1, 1]), rtol=1e-13)


def test_general_axis_is_rotation():
    n = np.array([1.0, 1.0, 0.0]) / math.sqrt(2.0)
    # a point at polar angle 0.6 about n has the same cylindrical components
    u = np.array([0.0, 0.0, 1.0])
    p = math.cos(0.6) * n + math.sin(0.6) * u
    a = ef.eigenfunction_value(p, axis=n, family="RS").regular
    b = ef.eigenfunction_value(np.array([math.sin(0.6), 0.0, math.cos(0.6)]), family="RS").regular
    np.testing.assert_allclose(a, b, rtol=1e-12)


def test_divergence_free_off_plane():
    h = 1e-4
    p = np.array([0.6, -0.3, 0.8])
    for family in ("LP", "RS"):
        div = 0.0
        for i in range(3):
            e = np.zeros(3)
            e[i] = h
            fp = ef.eigenfunction_value(p + e, family=family).regular_cartesian
            fm = ef.eigenfunction_value(p - e, family=family).regular_cartesian
            div += (fp[i] - fm[i]) / (2 * h)
        assert abs(div) < 1e-6


def test_grid_masks_band():
    pts = np.array([[1.0, 0.0, 1e-5], [1.0, 0.0, 0.5], [0.0, 0.0, 1.0]])
    comps, band = ef.eigenfunction_grid(pts, family="LP")
    assert band.tolist() == [True, False, False]
    assert np.all(np.isnan(comps[0]))
    assert comps[2, 2] == pytest.approx(ef.LP_AXIS_PZ)


def test_lp_singular_part_convention():
    rho = 1.3
    val = ef.eigenfunction_value(np.array([rho, 0.0, 0.2]), family="LP", sigma=1)
    assert val.singular[1] == pytest.approx(-SQRT_PI / rho ** 2)
    assert val.singular_theta_convention(2.0)[1] == pytest.approx(-SQRT_PI / rho ** 2 / 2.0)


def test_on_plane_point_is_masked():
    val = ef.eigenfunction_value(np.array([1.0, 0.0, 0.0]), family="RS")
    assert val.mask == "on_singular_plane"
    assert np.all(np.isnan(val.regular))


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2)))
def test_debierre_parity(x):
    x = np.array(x)
    assume(math.hypot(x[0], x[1]) > 0.05 and abs(x[2]) > 0.05)
    m = ef.debierre_lp(x, -1)
    p = ef.debierre_lp(-x, 1)
    np.testing.assert_allclose(m.regular_cartesian, np.conj(p.regular_cartesian), rtol=1e-13, atol=1e-15)
    np.testing.assert_allclose(m.basis @ m.singular, np.conj(p.basis @ p.singular), rtol=1e-13, atol=1e-15)


def test_printed_minus_form_breaks_parity():
    x = np.array([0.4, 0.9, 0.7])
    reg, _ = ef.debierre_minus_printed(x)
    good = ef.debierre_lp(x, -1).regular_cartesian
    assert np.linalg.norm(reg - good) > 0.1 * np.linalg.norm(good)


def test_debierre_field_divergence_free():
    h = 1e-4
    p = np.array([0.6, -0.3, 0.8])
    div = 0.0
    for i in range(3):
        e = np.zeros(3)
        e[i] = h
        div += (ef.debierre_lp(p + e).regular_cartesian[i] - ef.debierre_lp(p - e).regular_cartesian[i]) / (2 * h)
    assert abs(div) < 1e-6


def test_overlaps():
    ov = ef.overlap([0, 0, 0], [0, 0, 2.0], 1.0)
    assert ov.coefficient == pytest.approx(-8.0 * math.pi)
    assert ov.value == pytest.approx(-8.0 * math.pi / 2.0 ** 4)
    assert ef.overlap([0, 0, 0], [0, 0, 2.0], 1.0, (1, 2)).coefficient == 0.0
    assert ef.overlap([0, 0, 0], [1, 0, 0], 1.0, (1, -1), helicity=True).coefficient == 0.0
    d = ef.overlap([0, 0, 0], [0, 0, 0], 0.0)
    assert d.kind == "delta"
    with pytest.raises(ValueError):
        _ = d.value


def test_polar_point_validation():
    assert ef.PolarPoint(2.0, 1.0).s == pytest.approx(math.cos(1.0))
    with pytest.raises(ValueError):
        ef.PolarPoint(0.0, 1.0)
