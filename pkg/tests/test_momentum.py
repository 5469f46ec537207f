import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from photonpos import momentum as mo

coord = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
vec3 = st.tuples(coord, coord, coord).map(np.array)


def off_axis(k, axis=mo.E3, margin=0.2):
    kn = np.linalg.norm(k)
    return kn > 0.3 and np.linalg.norm(np.cross(k, axis / np.linalg.norm(axis))) > margin * kn


@settings(max_examples=80, deadline=None)
@given(vec3, vec3)
def test_frame_orthonormal_and_right_handed(k, n):
    assume(np.linalg.norm(n) > 0.3 and off_axis(k, n))
    fr = mo.standard_frame(k, n)
    m = fr.matrix()
    np.testing.assert_allclose(m.T @ m, np.eye(3), atol=1e-12)
    assert np.linalg.det(m) == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(fr.E3, k / np.linalg.norm(k), atol=1e-14)


def test_frame_on_axis_raises():
    with pytest.raises(mo.AxisError):
        mo.standard_frame(np.array([0.0, 0.0, 2.0]))


@settings(max_examples=50, deadline=None)
@given(vec3, st.sampled_from([1, -1]))
def test_helicity_vector_is_eigenvector(k, sigma):
    assume(off_axis(k))
    u = mo.helicity_vector(mo.standard_frame(k), sigma)
    np.testing.assert_allclose(mo.helicity_apply(k, u), sigma * u, atol=1e-12)
    assert abs(u @ k) < 1e-12


@settings(max_examples=50, deadline=None)
@given(vec3, st.sampled_from([1, -1]))
def test_helicity_projection(k, sigma):
    assume(off_axis(k))
    psi = np.array([0.3 + 0.1j, -1.2, 0.7j])
    psi = psi - (psi @ k) * k / (k @ k)  # transverse part
    proj = mo.helicity_project(k, psi, sigma)
    np.testing.assert_allclose(mo.helicity_apply(k, proj), sigma * proj, atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(vec3)
def test_spin_conjugation(k):
    assume(off_axis(k))
    assert mo.spin_conjugation_check(k) < 1e-12


@settings(max_examples=25, deadline=None)
@given(vec3, vec3, st.sampled_from([0.0, 1.0]), st.sampled_from([1, 2]))
def test_position_eigenvalue(k, q, beta, kind):
    assume(off_axis(k, margin=0.4))
    params = mo.ModelParams(beta=beta)

    def field(kk):
        return mo.momentum_eigenfunction(kk, q, params, kind)

    psi = field(k)
    for form in ("factored", "explicit"):
        out = mo.position_operator_apply(field, k, params, form=form)
        np.testing.assert_allclose(out, q[:, None] * psi[None, :], atol=1e-6 * (1 + np.abs(psi).max()))


def test_factored_matches_explicit_for_generic_field():
    params = mo.ModelParams(beta=1.0)

    def field(kk):
        return np.array([np.sin(kk[0]) + 1j * kk[2], kk[1] ** 2, np.exp(-kk @ kk / 4.0)])

    k = np.array([0.7, -0.4, 0.5])
    a = mo.position_operator_apply(field, k, params, form="factored")
    b = mo.position_operator_apply(field, k, params, form="explicit")
    np.testing.assert_allclose(a, b, atol=1e-8)


def test_commutator_residual_decays():
    params = mo.ModelParams(beta=1.0)

    def field(kk):
        return np.array([np.cos(kk[1]), 1j * kk[0] * kk[2], np.exp(-kk @ kk / 3.0)])

    k = np.array([0.6, 0.5, -0.4])
    kn = np.linalg.norm(k)
    coarse = np.abs(mo.commutator_residual(field, k, params, 0, 1, h=0.05 * kn)).max()
    fine = np.abs(mo.commutator_residual(field, k, params, 0, 1, h=0.025 * kn)).max()
    assert fine < coarse / 3.5  # at least h^2


def test_canonical_commutator():
    params = mo.ModelParams(beta=0.0)

    def field(kk):
        return np.array([np.cos(kk[1]), kk[0] * kk[2], 1.0 + 0j])

    k = np.array([0.6, 0.5, -0.4])
    res = mo.canonical_commutator_residual(field, k, params, 0, 0)
    assert np.abs(res).max() < 1e-6


def test_axis_stencil_guard():
    params = mo.ModelParams()
    with pytest.raises(mo.AxisError):
        mo.position_operator_apply(lambda kk: kk.astype(complex), np.array([1e-4, 0.0, 1.0]), params, h=1e-3)


@pytest.mark.parametrize("beta", [0.0, 1.0, 2.0])
def test_interference_density(beta):
    k, d = 2.0, 1.5
    assert mo.interference_density(k, d, math.pi / 2, beta) == pytest.approx(4.0 * k ** beta)
    theta = 0.3
    phase = k * d * math.cos(theta)
    psi_sum = 1.0 + np.exp(1j * phase)
    assert mo.interference_density(k, d, theta, beta) == pytest.approx(k ** beta * abs(psi_sum) ** 2)


def test_evolution_phase_for_helicity_states():
    k = np.array([0.3, -0.8, 0.5])
    for sigma in (1, -1):
        u = mo.helicity_vector(mo.standard_frame(k), sigma)
        assert mo.evolution_phase_check(k, u, sigma) < 1e-12
        assert mo.evolution_phase_check(k, u, -sigma) > 0.5


def test_model_params():
    assert mo.ModelParams.from_alpha(0.0).beta == 1.0
    assert mo.ModelParams(beta=0.0).alpha == -0.5
    with pytest.raises(ValueError):
        mo.ModelParams(sigma=0)


def test_debierre_rotation_is_unit():
    a, b = mo.debierre_rotation(np.array([0.3, 0.4, 1.0]))
    assert a * a + b * b == pytest.approx(1.0)
    fr = mo.rotated_frame(mo.standard_frame(np.array([0.3, 0.4, 1.0])), a, b)
    np.testing.assert_allclose(fr.matrix().T @ fr.matrix(), np.eye(3), atol=1e-13)
