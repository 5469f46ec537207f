"""Momentum-space frames, helicity, and the photon position operator.

Units are hbar = c = 1, so the momentum wave vector k doubles as the photon
energy scale.  Wave functions are complex 3-vectors; operators that need
derivatives take a callable ``field(k) -> complex[3]`` and sample it on a
central finite-difference stencil.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "AxisError",
    "FrameTriple",
    "ModelParams",
    "E3",
    "LEVI_CIVITA",
    "SPIN",
    "standard_frame",
    "standard_frame_arrays",
    "rotated_frame",
    "debierre_rotation",
    "helicity_apply",
    "helicity_project",
    "helicity_vector",
    "momentum_eigenfunction",
    "position_operator_apply",
    "spin_conjugation_check",
    "interference_density",
    "commutator_residual",
    "canonical_commutator_residual",
    "evolution_phase_check",
]

Field = Callable[[np.ndarray], np.ndarray]

E3 = np.array([0.0, 0.0, 1.0])
AXIS_TOL = 1e-13

LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_i, _j, _k] = 1.0
    LEVI_CIVITA[_j, _i, _k] = -1.0

# spin-1 matrices (S_b)_{mn} = -i eps_{bmn}
SPIN = -1j * LEVI_CIVITA


class AxisError(ValueError):
    """The wave vector lies on the frame axis, where the frame is undefined."""


@dataclass(frozen=True)
class FrameTriple:
    """Orthonormal frame {E1, E2, E3 = k/|k|} attached to a wave vector."""

    E1: np.ndarray
    E2: np.ndarray
    E3: np.ndarray
    axis: np.ndarray

    def matrix(self) -> np.ndarray:
        """Matrix whose columns are E1, E2, E3."""
        return np.column_stack([self.E1, self.E2, self.E3])

    def vectors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.E1, self.E2, self.E3


@dataclass(frozen=True)
class ModelParams:
    """Wave-function family: beta = 1 + 2 alpha, helicity sigma = +1 or -1."""

    beta: float = 0.0
    sigma: int = 1

    def __post_init__(self):
        if self.sigma not in (1, -1):
            raise ValueError("sigma must be +1 or -1")

    @classmethod
    def from_alpha(cls, alpha: float, sigma: int = 1) -> "ModelParams":
        return cls(beta=1.0 + 2.0 * alpha, sigma=sigma)

    @property
    def alpha(self) -> float:
        return 0.5 * (self.beta - 1.0)


def _unit(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    norm = np.linalg.norm(n)
    if norm == 0.0:
        raise ValueError("axis must be non-zero")
    return n / norm


def standard_frame(k, axis=E3) -> FrameTriple:
    """Spherical-coordinate frame about ``axis``.

    E1 = k x (k x n) / (|k| k_perp), E2 = -k x n / k_perp, E3 = k / |k|.
    """
    k = np.asarray(k, dtype=float)
    n = _unit(axis)
    kn = float(np.linalg.norm(k))
    if kn == 0.0:
        raise AxisError("k = 0")
    kxn = np.cross(k, n)
    kperp = float(np.linalg.norm(kxn))
    if kperp < AXIS_TOL * kn:
        raise AxisError("wave vector on the frame axis")
    e1 = np.cross(k, kxn) / (kn * kperp)
    e2 = -kxn / kperp
    return FrameTriple(e1, e2, k / kn, n)


def standard_frame_arrays(k, axis=E3) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized standard frame for an (N, 3) array of wave vectors.

    Rows on the axis yield NaN; callers are expected to avoid them.
    """
    k = np.asarray(k, dtype=float)
    n = _unit(axis)
    kn = np.linalg.norm(k, axis=1)
    kxn = np.cross(k, n[None, :])
    kperp = np.linalg.norm(kxn, axis=1)
    with np.errstate(invalid="ignore", divide="ignore"):
        e1 = np.cross(k, kxn) / (kn * kperp)[:, None]
        e2 = -kxn / kperp[:, None]
        e3 = k / kn[:, None]
    return e1, e2, e3


def rotated_frame(frame: FrameTriple, a: float, b: float) -> FrameTriple:
    """Rotate E1, E2 about E3: E1' = a E1 - b E2, E2' = b E1 + a E2."""
    if abs(a * a + b * b - 1.0) > 1e-12:
        raise ValueError("rotation pair must satisfy a^2 + b^2 = 1")
    return FrameTriple(a * frame.E1 - b * frame.E2, b * frame.E1 + a * frame.E2, frame.E3, frame.axis)


def debierre_rotation(k, axis=E3) -> tuple[float, float]:
    """Rotation pair (a, b) = (k1, -k2) / k_perp about the standard axis e3.

    For a general axis the transverse components are taken in the plane
    orthogonal to ``axis`` using a right-handed completion of the axis.
    """
    k = np.asarray(k, dtype=float)
    n = _unit(axis)
    u, v = _transverse_basis(n)
    k1, k2 = float(k @ u), float(k @ v)
    kp = math.hypot(k1, k2)
    if kp < AXIS_TOL * np.linalg.norm(k):
        raise AxisError("wave vector on the frame axis")
    return k1 / kp, -k2 / kp


def _transverse_basis(n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Right-handed pair (u, v) with u x v = n; equals (e1, e2) for n = e3."""
    if abs(n[2]) > 1.0 - 1e-15:
        u = np.array([1.0, 0.0, 0.0])
        v = np.cross(n, u)
        return u, v
    ref = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    u = ref - (ref @ n) * n
    u /= np.linalg.norm(u)
    return u, np.cross(n, u)


def helicity_apply(k, psi) -> np.ndarray:
    """Helicity operator: i (k/|k|) x psi."""
    k = np.asarray(k, dtype=float)
    kn = np.linalg.norm(k)
    if kn == 0.0:
        raise ValueError("helicity undefined at k = 0")
    return 1j * np.cross(k / kn, np.asarray(psi, dtype=complex))


def helicity_project(k, psi, sigma: int) -> np.ndarray:
    """psi + sigma * Sigma psi, an eigenvector of Sigma with eigenvalue sigma."""
    psi = np.asarray(psi, dtype=complex)
    return psi + sigma * helicity_apply(k, psi)


def helicity_vector(frame: FrameTriple, sigma: int) -> np.ndarray:
    """u_sigma = (E1 + i sigma E2) / sqrt(2)."""
    return (frame.E1 + 1j * sigma * frame.E2) / math.sqrt(2.0)


def momentum_eigenfunction(k, q, params: ModelParams, kind=1, axis=E3,
                           frame: FrameTriple | None = None) -> np.ndarray:
    """k^(beta/2) E_j(k) exp(-i k.q) for kind 1 or 2, or the helicity combination.

    ``kind="helicity"`` returns (psi1 + i sigma psi2) / sqrt(2) with the
    helicity of ``params``.
    """
    k = np.asarray(k, dtype=float)
    fr = standard_frame(k, axis) if frame is None else frame
    amp = np.linalg.norm(k) ** (0.5 * params.beta) * np.exp(-1j * (k @ np.asarray(q, dtype=float)))
    if kind == 1:
        return amp * fr.E1.astype(complex)
    if kind == 2:
        return amp * fr.E2.astype(complex)
    if kind == "helicity":
        return amp * helicity_vector(fr, params.sigma)
    raise ValueError("kind must be 1, 2 or 'helicity'")


# ---------------------------------------------------------------------------
# position operator
# ---------------------------------------------------------------------------

_STENCIL = ((-2.0, 1.0 / 12.0), (-1.0, -8.0 / 12.0), (1.0, 8.0 / 12.0), (2.0, -1.0 / 12.0))


def _derivative(f: Callable[[np.ndarray], np.ndarray], k: np.ndarray, j: int, h: float) -> np.ndarray:
    e = np.zeros(3)
    e[j] = h
    return sum(c * f(k + m * e) for m, c in _STENCIL) / h


def _default_step(k: np.ndarray, h: float | None) -> float:
    return 1e-3 * float(np.linalg.norm(k)) if h is None else float(h)


def position_operator_apply(field: Field, k, params: ModelParams, form: str = "factored",
                            h: float | None = None, axis=E3,
                            frame_fn: Callable[[np.ndarray], FrameTriple] | None = None) -> np.ndarray:
    """Apply Q = (Q1, Q2, Q3) to ``field`` at ``k``; row j of the result is Q_j psi.

    ``form="factored"`` uses Q_j = i k^(beta/2) E d_j (E^T k^(-beta/2) .),
    where E is the frame matrix returned by ``frame_fn`` (the standard frame
    about ``axis`` by default).  ``form="explicit"`` uses the expanded
    standard-frame expression

        Q = i grad - i beta k / (2 k^2) + k x S / k^2 - (cot theta / k) E2 Sigma,

    with cot theta = (n.k) / k_perp.  Both use an order-4 central stencil
    of step h (default 1e-3 |k|).
    """
    k = np.asarray(k, dtype=float)
    h = _default_step(k, h)
    beta = params.beta
    n = _unit(axis)
    kn = float(np.linalg.norm(k))
    if np.linalg.norm(np.cross(k, n)) <= 2.0 * h + AXIS_TOL * kn:
        raise AxisError("finite-difference stencil reaches the frame axis")
    if form == "factored":
        get_frame = frame_fn if frame_fn is not None else (lambda kk: standard_frame(kk, n))

        def reduced(kk):
            return get_frame(kk).matrix().T @ (np.linalg.norm(kk) ** (-0.5 * beta) * field(kk))

        frame_mat = get_frame(k).matrix()
        scale = kn ** (0.5 * beta)
        return np.array([1j * scale * frame_mat @ _derivative(reduced, k, j, h) for j in range(3)])
    if form == "explicit":
        if frame_fn is not None:
            raise ValueError("the explicit form is implemented for the standard frame only")
        fr = standard_frame(k, n)
        psi = np.asarray(field(k), dtype=complex)
        k_cross_s = np.einsum("jab,a,bmn->jmn", LEVI_CIVITA, k, SPIN)
        sigma_psi = helicity_apply(k, psi)
        kperp = float(np.linalg.norm(np.cross(k, n)))
        cot = float(n @ k) / kperp
        rows = []
        for j in range(3):
            rows.append(1j * _derivative(field, k, j, h)
                        - 1j * beta * k[j] / (2.0 * kn * kn) * psi
                        + (k_cross_s[j] @ psi) / (kn * kn)
                        - cot / kn * fr.E2[j] * sigma_psi)
        return np.array(rows)
    raise ValueError("form must be 'factored' or 'explicit'")


def commutator_residual(field: Field, k, params: ModelParams, i: int, j: int,
                        h: float | None = None, form: str = "explicit", axis=E3) -> np.ndarray:
    """Q_i Q_j psi - Q_j Q_i psi by nested finite differences."""
    k = np.asarray(k, dtype=float)
    h = _default_step(k, h)

    def q_comp(c):
        return lambda kk: position_operator_apply(field, kk, params, form, h, axis)[c]

    qi_qj = position_operator_apply(q_comp(j), k, params, form, h, axis)[i]
    qj_qi = position_operator_apply(q_comp(i), k, params, form, h, axis)[j]
    return qi_qj - qj_qi


def canonical_commutator_residual(field: Field, k, params: ModelParams, i: int, j: int,
                                  h: float | None = None, form: str = "factored", axis=E3) -> np.ndarray:
    """[Q_i, P_j] psi - i delta_ij psi with P_j multiplication by k_j."""
    k = np.asarray(k, dtype=float)
    kj_field = lambda kk: kk[j] * field(kk)  # noqa: E731
    q_pj = position_operator_apply(kj_field, k, params, form, h, axis)[i]
    pj_q = k[j] * position_operator_apply(field, k, params, form, h, axis)[i]
    return q_pj - pj_q - 1j * (1.0 if i == j else 0.0) * field(k)


def spin_conjugation_check(k, axis=E3) -> float:
    """max |E S3 E^T - Sigma| with Sigma_ij = -(i/|k|) sum_n eps_nij k_n."""
    k = np.asarray(k, dtype=float)
    fr = standard_frame(k, axis)
    mat = fr.matrix()
    conj = mat @ SPIN[2] @ mat.T
    sigma = -1j / np.linalg.norm(k) * np.einsum("nij,n->ij", LEVI_CIVITA, k)
    return float(np.max(np.abs(conj - sigma)))


def interference_density(k: float, d: float, theta: float, beta: float) -> float:
    """|psi_q + psi_q'|^2 = 4 k^beta cos^2(k d cos(theta) / 2) for |q - q'| = d."""
    if d < 0:
        raise ValueError("separation must be non-negative")
    return 4.0 * k ** beta * math.cos(0.5 * k * d * math.cos(theta)) ** 2


def evolution_phase_check(k, psi_sigma, sigma: int) -> float:
    """Deviation of sigma |k| Sigma psi from |k| psi for a helicity eigenstate.

    The helicity-form evolution equation i d/dt psi = sigma omega Sigma psi
    reduces to multiplication by omega = |k| exactly when Sigma psi = sigma psi.
    """
    k = np.asarray(k, dtype=float)
    kn = float(np.linalg.norm(k))
    psi = np.asarray(psi_sigma, dtype=complex)
    lhs = sigma * kn * helicity_apply(k, psi)
    return float(np.max(np.abs(lhs - kn * psi)))
