import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from photonpos import specfun as sf

K_HALF_REF = math.gamma(0.25) ** 2 / (4.0 * math.sqrt(math.pi))


def test_k_half_constant():
    assert sf.K_HALF == pytest.approx(1.8540746773013719, rel=1e-15)
    assert sf.ellip_K(1.0 / math.sqrt(2.0)) == pytest.approx(K_HALF_REF, rel=1e-14)


def test_legendre_anchor_value():
    k = 1.0 / math.sqrt(2.0)
    K, E = sf.ellip_K(k), sf.ellip_E(k)
    assert 2.0 * E * K - K * K == pytest.approx(math.pi / 2.0, rel=1e-14)
    assert E == pytest.approx(math.pi / (4.0 * K) + K / 2.0, rel=1e-14)


def test_misprinted_anchor_is_off_by_pi_over_4k():
    k = 1.0 / math.sqrt(2.0)
    K, E = sf.ellip_K(k), sf.ellip_E(k)
    printed = math.pi / (2.0 * K) + K / 2.0
    assert printed - E == pytest.approx(math.pi / (4.0 * K), rel=1e-13)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.999999))
def test_elliptic_against_scipy(k):
    m = k * k
    assert sf.ellip_K(k) == pytest.approx(special.ellipk(m), rel=1e-12)
    assert sf.ellip_E(k) == pytest.approx(special.ellipe(m), rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.99))
def test_legendre_relation(k):
    kc = math.sqrt(1.0 - k * k)
    K, E = sf.ellip_K(k), sf.ellip_E(k)
    Kp, Ep = sf.ellip_K(kc), sf.ellip_E(kc)
    assert E * Kp + Ep * K - K * Kp == pytest.approx(math.pi / 2.0, rel=1e-12)


def test_elliptic_limits_and_arrays():
    assert sf.ellip_K(0.0) == pytest.approx(math.pi / 2.0)
    assert sf.ellip_E(0.0) == pytest.approx(math.pi / 2.0)
    assert sf.ellip_E(1.0) == 1.0
    ks = np.array([0.1, 0.5, 0.9])
    np.testing.assert_allclose(sf.ellip_K(ks), special.ellipk(ks ** 2), rtol=1e-13)


def test_complement_keeps_accuracy_near_one():
    kc = 1e-9
    k = math.sqrt(1.0 - kc * kc)  # rounds to 1.0
    assert k == 1.0
    expected = math.log(4.0 / kc)
    assert sf.ellip_K(k, kc) == pytest.approx(expected, rel=1e-12)
    assert sf.ellip_E(k, kc) == pytest.approx(1.0, abs=1e-15)


def test_k_minus_e_small_modulus():
    k = 1e-5
    # K - E = (pi/4) k^2 + O(k^4)
    assert sf.ellip_K_minus_E(k) == pytest.approx(math.pi / 4.0 * k * k, rel=1e-9)


@pytest.mark.parametrize("bad", [-0.1, 1.5, float("nan")])
def test_domain_errors(bad):
    with pytest.raises(sf.DomainError):
        sf.ellip_K(bad)


def test_k_diverges_at_one():
    with pytest.raises(sf.DomainError):
        sf.ellip_K(1.0)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.98))
def test_elliptic_derivatives_central_difference(k):
    h = 1e-6
    dK = (sf.ellip_K(k + h) - sf.ellip_K(k - h)) / (2 * h)
    dE = (sf.ellip_E(k + h) - sf.ellip_E(k - h)) / (2 * h)
    assert sf.ellip_K_prime(k) == pytest.approx(dK, rel=1e-6, abs=1e-8)
    assert sf.ellip_E_prime(k) == pytest.approx(dE, rel=1e-6, abs=1e-8)


@settings(max_examples=80, deadline=None)
@given(
    a=st.sampled_from([0.25, 0.5, 0.75, 1.25, 2.75, -0.5]),
    z=st.floats(min_value=-0.9, max_value=0.97),
)
def test_2f1_against_scipy(a, z):
    assert sf.gauss_2f1(a, 0.5, 1.0, z) == pytest.approx(special.hyp2f1(a, 0.5, 1.0, z), rel=1e-10)


@settings(max_examples=30, deadline=None)
@given(z=st.floats(min_value=-0.5, max_value=0.5), c=st.sampled_from([1.0, 1.5, 2.25]))
def test_2f1_series_region_general_parameters(z, c):
    assert sf.gauss_2f1(0.3, 1.7, c, z) == pytest.approx(special.hyp2f1(0.3, 1.7, c, z), rel=1e-12)


def test_2f1_outside_supported_family_raises():
    with pytest.raises(sf.DomainError):
        sf.gauss_2f1(0.25, 1.5, 1.0, 0.75)
    with pytest.raises(sf.DomainError):
        sf.gauss_2f1(0.25, 0.5, 1.0, 1.2)


def test_2f1_gauss_sum():
    # 2F1(a, b; c; 1) = Gamma(c) Gamma(c - a - b) / (Gamma(c - a) Gamma(c - b))
    a, b, c = 0.25, 0.5, 1.0
    exact = math.gamma(c) * math.gamma(c - a - b) / (math.gamma(c - a) * math.gamma(c - b))
    assert sf.gauss_2f1(a, b, c, 1.0, one_minus_z=0.0) == pytest.approx(exact, rel=1e-12)


def test_2f1_elliptic_identities():
    for k in (0.0, 0.3, 0.8, 0.99):
        assert sf.ellip_K(k) == pytest.approx(0.5 * math.pi * sf.gauss_2f1(0.5, 0.5, 1.0, k * k), rel=1e-12)
        assert sf.ellip_E(k) == pytest.approx(0.5 * math.pi * sf.gauss_2f1(-0.5, 0.5, 1.0, k * k), rel=1e-12)


@pytest.mark.parametrize("z", [0.05, 0.3, 0.7, 0.95])
def test_quartic_identity(z):
    z4 = z ** 4
    lhs = sf.gauss_2f1(0.25, 0.5, 1.0, 1.0 - z4, one_minus_z=z4)
    m = (1.0 - z) ** 2 / (2.0 * (1.0 + z * z))
    rhs = math.sqrt(2.0 / (1.0 + z * z)) * sf.gauss_2f1(0.5, 0.5, 1.0, m)
    assert lhs == pytest.approx(rhs, rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.05, max_value=9.5).filter(lambda x: abs(x - round(x)) > 1e-3))
def test_gamma_and_reflection(x):
    assert sf.gamma_fn(x) == pytest.approx(special.gamma(x), rel=1e-13)
    y = x - math.floor(x) if x > 1 else x
    assert sf.gamma_fn(y) * sf.gamma_fn(1 - y) == pytest.approx(math.pi / math.sin(math.pi * y), rel=1e-12)


def test_rgamma_poles():
    assert sf.rgamma(0.0) == 0.0
    assert sf.rgamma(-2.0) == 0.0
    assert sf.rgamma(3.0) == pytest.approx(0.5)


@settings(max_examples=40, deadline=None)
@given(nu=st.floats(min_value=0.0, max_value=2.5), x=st.floats(min_value=0.05, max_value=30.0))
def test_bessel_kmod_against_scipy(nu, x):
    assert sf.bessel_Kmod(nu, x) == pytest.approx(special.kv(nu, x), rel=1e-10)


def test_bessel_j_against_scipy():
    x = np.array([0.0, 0.5, 3.0, 40.0, 999.0])
    np.testing.assert_allclose(sf.bessel_J(0, x), special.j0(x), rtol=1e-10, atol=1e-14)
    np.testing.assert_allclose(sf.bessel_J(1, x), special.j1(x), rtol=1e-10, atol=1e-14)


def test_gl_panels_integrates_polynomials():
    x, w = sf.gl_panels(np.array([0.0, 0.5, 2.0]), 10)
    assert np.sum(w * x ** 7) == pytest.approx(2.0 ** 8 / 8.0, rel=1e-13)
