import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photonpos import hertz as hz
from photonpos.specfun import K_HALF, DomainError, gauss_2f1


def point(rho_over_r, r=1.0):
    return r * np.array([rho_over_r, 0.0, math.sqrt(1.0 - rho_over_r ** 2)])


@pytest.mark.parametrize("st_", [0.0, 0.3, 0.6, 0.9])
def test_leading_term_matches_t0_closed_form(st_):
    x = point(st_, r=1.7)
    ser = hz.hertz_series(st_, 0)
    assert (2.0 / 1.7) ** 1.5 * ser.real_coeffs[0] == pytest.approx(hz.zeta_t0(x), rel=1e-12)
    assert hz.zeta_eval(x, 0.0) == pytest.approx(hz.zeta_t0(x), rel=1e-12)


def test_hertz_vector_direction_and_sign():
    x = point(0.4)
    for sigma in (1, -1):
        h = hz.hertz_t0(x, sigma)
        assert h[0] == 0.0 and h[1] == 0.0
        assert h[2] == pytest.approx(-sigma * math.sqrt(math.pi) * hz.zeta_t0(x))


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.95), st.integers(min_value=0, max_value=9))
def test_products_match_direct_gamma_route(st_, k):
    ser = hz.hertz_series(st_, k)
    even = hz.series_coefficient_direct(2 * k, st_)
    odd = hz.series_coefficient_direct(2 * k + 1, st_)
    assert even.real == pytest.approx(ser.real_coeffs[k], rel=1e-11)
    assert odd.imag == pytest.approx(ser.imag_coeffs[k], rel=1e-11)
    assert abs(even.imag) < 1e-14 * abs(even.real) + 1e-300
    assert abs(odd.real) < 1e-14 * abs(odd.imag) + 1e-300


def test_gamma_parity_products():
    for n in range(12):
        assert hz.gamma_quotient_parity(n) == pytest.approx(hz.gamma_quotient(n), rel=1e-12)
    ratio = hz.gamma_quotient_parity(2, "printed") / hz.gamma_quotient(2)
    assert ratio == pytest.approx(K_HALF ** 2 / (2.0 * math.pi), rel=1e-12)
    assert hz.gamma_quotient_parity(3, "printed") == pytest.approx(hz.gamma_quotient(3), rel=1e-12)


@pytest.mark.parametrize("k", range(5))
@pytest.mark.parametrize("s", [0.05, 0.4, 0.8, 0.97])
def test_elliptic_forms(k, s):
    even, odd = hz.elliptic_coefficient_forms(k, s)
    z = 1.0 - s * s
    assert even == pytest.approx(gauss_2f1(k + 0.75, 0.5, 1.0, z, one_minus_z=s * s), rel=1e-9)
    assert odd == pytest.approx(gauss_2f1(k + 1.25, 0.5, 1.0, z, one_minus_z=s * s), rel=1e-9)


def test_elliptic_forms_domain():
    with pytest.raises(DomainError):
        hz.elliptic_coefficient_forms(1, 1.0)
    with pytest.raises(ValueError):
        hz.elliptic_coefficient_forms(-1, 0.5)


def test_wave_residual_scales_with_truncation_order():
    x = point(0.5)
    for n_max in (2, 3):
        r1 = hz.wave_residual(x, 0.2, n_max=n_max)
        r2 = hz.wave_residual(x, 0.1, n_max=n_max)
        slope = math.log(r1 / r2) / math.log(2.0)
        assert slope == pytest.approx(2 * n_max, rel=0.1)


def test_series_converges_inside_radius():
    x = point(0.6)
    s = 0.8
    assert hz.empirical_radius(0.6) == pytest.approx(s)
    a = hz.zeta_eval(x, 0.3, n_max=40)
    b = hz.zeta_eval(x, 0.3, n_max=60)
    assert abs(a - b) < 1e-12 * abs(b)


def test_radius_guard_and_truncation_warning():
    x = point(0.6)
    with pytest.raises(DomainError):
        hz.zeta_eval(x, 0.85)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        hz.zeta_eval(x, 0.6, n_max=4)
    assert any(issubclass(w.category, hz.HertzTruncationWarning) for w in caught)


def test_ratio_test_radius_tends_to_s():
    from photonpos.hertz import coefficient_growth_radius

    for st_ in (0.3, 0.7):
        s = math.sqrt(1 - st_ ** 2)
        assert coefficient_growth_radius(st_, n_max=120) == pytest.approx(s, abs=5e-3)


def test_series_is_real_even_imag_odd_in_time():
    x = point(0.3)
    z1 = hz.zeta_eval(x, 0.2)
    z2 = hz.zeta_eval(x, -0.2)
    assert z1 == pytest.approx(np.conj(z2), rel=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3)), st.sampled_from([1, -1]))
def test_rs_from_hertz(k, sigma):
    k = np.array(k)
    if math.hypot(k[0], k[1]) < 1e-2:
        return
    assert hz.rs_from_hertz_check(k, sigma) < 1e-12


def test_series_validation():
    with pytest.raises(DomainError):
        hz.hertz_series(1.0)
    with pytest.raises(ValueError):
        hz.hertz_series(0.3, -1)
