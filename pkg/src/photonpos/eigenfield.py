"""Closed-form position eigenfunctions in configuration space.

Eigenfunctions centred at q take the form

    Psi(x) = r^(-3 - beta/2) (P_rho e_rho + sigma P_psi e_psi + P_z e_z),

with r = |x - q|, theta the angle between x - q and the frame axis n and
(e_rho, e_psi, e_z = n) the cylindrical basis about n.  The LP family has
beta = 0 and the RS family beta = 1.

Delta-supported parts are never sampled.  They are returned as the
coefficient c of delta(n.(x - q)) (the "x3" convention); the equivalent
coefficient of delta(theta - pi/2) is c / r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .momentum import E3, _transverse_basis, _unit
from .specfun import K_HALF, ellip_E, ellip_K, ellip_K_minus_E, gamma_fn

__all__ = [
    "SingularPlaneError",
    "PolarPoint",
    "AngularProfile",
    "DistributionalField",
    "OverlapValue",
    "FAMILY_BETA",
    "lp_profile",
    "rs_profile",
    "profile",
    "lp_asymptotic_plane",
    "rs_asymptotic_plane",
    "eigenfunction_value",
    "eigenfunction_grid",
    "debierre_lp",
    "debierre_minus_printed",
    "overlap",
    "LP_AXIS_PZ",
    "RS_AXIS_PZ",
]

SQRT_PI = math.sqrt(math.pi)
FAMILY_BETA = {"LP": 0.0, "RS": 1.0}
LP_AXIS_PZ = -0.5 * SQRT_PI
RS_AXIS_PZ = -3.0 * math.pi / (8.0 * K_HALF)

MASK_VALID = "valid"
MASK_AXIS = "on_axis"
MASK_PLANE = "on_singular_plane"


class SingularPlaneError(ValueError):
    """Evaluation requested exactly on the singular plane theta = pi/2."""


@dataclass(frozen=True)
class PolarPoint:
    """Distance r = |x - q| and polar angle theta measured from the axis."""

    r: float
    theta: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("r must be positive")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError("theta must lie in [0, pi]")

    @property
    def s(self) -> float:
        return abs(math.cos(self.theta))

    @property
    def sign(self) -> int:
        d = self.theta - 0.5 * math.pi
        return 0 if d == 0 else (1 if d > 0 else -1)


@dataclass(frozen=True)
class AngularProfile:
    """Angular coefficients (P_rho, P_psi, P_z) and the delta(theta - pi/2) weight."""

    P_rho: float | np.ndarray
    P_psi_regular: float | np.ndarray
    P_z: float | np.ndarray
    delta_psi_coeff: float
    family: str

    def as_array(self) -> np.ndarray:
        return np.array([self.P_rho, self.P_psi_regular, self.P_z])


@dataclass
class DistributionalField:
    """Value of a distributional vector field at a point.

    ``regular`` holds the cylindrical components (rho, psi, z) about the
    axis and ``regular_cartesian`` the same vector in Cartesian components.
    ``singular`` holds the cylindrical coefficients of delta(n.(x - q)).
    """

    regular: np.ndarray
    regular_cartesian: np.ndarray
    singular: np.ndarray
    support_normal: np.ndarray
    mask: str = MASK_VALID
    basis: np.ndarray = field(default_factory=lambda: np.eye(3))
    delta_convention: str = "x3"

    def singular_theta_convention(self, r: float) -> np.ndarray:
        """Coefficient of delta(theta - pi/2) equivalent to ``singular``."""
        return self.singular / r


@dataclass(frozen=True)
class OverlapValue:
    """Configuration-space scalar product of two position eigenfunctions.

    ``kind == "delta"``: the product equals coefficient * delta(q - q').
    ``kind == "finite"``: it equals coefficient / |q - q'|^separation_power.
    """

    kind: str
    coefficient: float
    separation_power: float
    separation: float | None = None

    @property
    def value(self) -> float:
        if self.kind == "delta":
            raise ValueError("delta-kind overlaps have no pointwise value")
        return self.coefficient / self.separation ** self.separation_power


# ---------------------------------------------------------------------------
# angular profiles
# ---------------------------------------------------------------------------

def _lp_core(st, ct):
    """LP (P_rho, P_z) from sin(theta) >= 0 and signed cos(theta), off the plane."""
    st = np.asarray(st, dtype=float)
    ct = np.asarray(ct, dtype=float)
    s = np.abs(ct)
    on_axis = st == 0.0
    st_safe = np.where(on_axis, 0.5, st)
    s_safe = np.where(on_axis, math.sqrt(0.75), s)
    K = ellip_K(st_safe, s_safe)
    E = ellip_E(st_safe, s_safe)
    KmE = ellip_K_minus_E(st_safe, s_safe)
    # 2E cot(2 theta) - K cot(theta) = -(K - E) cot(theta) - E tan(theta)
    p_rho = (-KmE * ct / st_safe - E * st_safe / np.where(ct == 0.0, 1.0, ct)) / SQRT_PI
    p_z = (K - 2.0 * E) / SQRT_PI
    p_rho = np.where(on_axis, 0.0, p_rho)
    p_z = np.where(on_axis, LP_AXIS_PZ, p_z)
    return p_rho, p_z


def _rs_core(st, ct):
    """RS (P_rho, P_psi, P_z) from sin(theta) >= 0 and signed cos(theta), off the plane."""
    st = np.asarray(st, dtype=float)
    ct = np.asarray(ct, dtype=float)
    s = np.abs(ct)
    sgn = np.sign(-ct)
    on_axis = st == 0.0
    s_ = np.where(on_axis, 0.5, s)
    t = np.sqrt(s_)
    one_minus_s = np.where(on_axis, 0.5, st * st / (1.0 + s_))
    den = np.sqrt(2.0 * (1.0 + s_))
    k1 = (1.0 - t) / den
    k1c = (1.0 + t) / den
    K = ellip_K(k1, k1c)
    E = ellip_E(k1, k1c)
    s2 = s_ * s_
    a1 = (1.0 + t) * (2.0 - 4.0 * t + 10.0 * s2 - 5.0 * s2 * t)
    b1 = 2.0 * t * (2.0 - 5.0 * s2)
    a2 = (3.0 * s_ * t - 2.0) * (1.0 + t)
    b2 = 2.0 * (2.0 - 3.0 * s2)
    a3 = 4.0 + 5.0 * t * (1.0 + t + s_ - s_ * t)
    b3 = -10.0 * t * (1.0 + s_)
    root = np.sqrt(one_minus_s)
    p_rho = (2.0 * s_) ** -1.5 / (2.0 * K_HALF) * sgn * (a1 * K + b1 * E) / root
    p_psi = K_HALF / math.pi * (2.0 * s_) ** -1.5 * (a2 * K + b2 * E) / root
    p_z = (2.0 * s_) ** -0.5 / (4.0 * K_HALF) * (a3 * K + b3 * E) / np.sqrt(1.0 + s_)
    p_rho = np.where(on_axis, 0.0, p_rho)
    p_psi = np.where(on_axis, 0.0, p_psi)
    p_z = np.where(on_axis, RS_AXIS_PZ, p_z)
    return p_rho, p_psi, p_z


def _angles(theta):
    th = np.asarray(theta, dtype=float)
    if np.any((th < 0.0) | (th > math.pi)):
        raise ValueError("theta must lie in [0, pi]")
    st = np.where((th == 0.0) | (th == math.pi), 0.0, np.sin(th))
    ct = np.where(th == 0.5 * math.pi, 0.0, np.cos(th))
    return th, st, ct


def _finish(values, plane, scalar):
    out = []
    for v in values:
        v = np.where(plane, np.nan, v)
        out.append(float(v) if scalar else v)
    return out


def lp_profile(theta) -> AngularProfile:
    """LP angular profile; P_psi is a pure delta of weight -sqrt(pi) at theta = pi/2.

    Arrays are accepted; entries exactly at pi/2 come back as NaN, while a
    scalar theta = pi/2 raises SingularPlaneError.  On the axis the analytic
    limits P_rho = 0, P_z = -sqrt(pi)/2 are returned.
    """
    th, st, ct = _angles(theta)
    plane = ct == 0.0
    if th.ndim == 0 and plane:
        raise SingularPlaneError("LP profile diverges at theta = pi/2")
    ct_safe = np.where(plane, 1.0, ct)
    p_rho, p_z = _lp_core(np.where(plane, 0.0, st), ct_safe)
    p_rho, p_z = _finish((p_rho, p_z), plane, th.ndim == 0)
    zero = 0.0 if th.ndim == 0 else np.zeros_like(th)
    return AngularProfile(p_rho, zero, p_z, -SQRT_PI, "LP")


def rs_profile(theta) -> AngularProfile:
    """RS angular profile (no delta part); axis limits returned analytically."""
    th, st, ct = _angles(theta)
    plane = ct == 0.0
    if th.ndim == 0 and plane:
        raise SingularPlaneError("RS profile diverges at theta = pi/2")
    ct_safe = np.where(plane, 1.0, ct)
    vals = _rs_core(np.where(plane, 0.0, st), ct_safe)
    p_rho, p_psi, p_z = _finish(vals, plane, th.ndim == 0)
    return AngularProfile(p_rho, p_psi, p_z, 0.0, "RS")


def profile(family: str, theta) -> AngularProfile:
    if family == "LP":
        return lp_profile(theta)
    if family == "RS":
        return rs_profile(theta)
    raise ValueError(f"unknown family {family!r}")


def lp_asymptotic_plane(theta) -> AngularProfile:
    """Leading behaviour near theta = pi/2: -pi^(-1/2) (sec theta, 0, ln|cos theta|)."""
    ct = np.cos(np.asarray(theta, dtype=float))
    p_rho = -1.0 / (SQRT_PI * ct)
    p_z = -np.log(np.abs(ct)) / SQRT_PI
    conv = float if np.ndim(theta) == 0 else np.asarray
    return AngularProfile(conv(p_rho), conv(0.0 * ct), conv(p_z), -SQRT_PI, "LP")


def rs_asymptotic_plane(theta, variant: str = "leading") -> AngularProfile:
    """Leading behaviour of the RS profile near theta = pi/2.

    With kappa_1 -> 1/sqrt(2) and Legendre's relation
    E(1/sqrt2) = pi / (4 K(1/sqrt2)) + K(1/sqrt2) / 2 the closed forms give

        (P_rho, P_psi, P_z) ~ (2s)^(-3/2) (sgn, 1, 2s).

    ``variant="printed"`` returns the commonly quoted form
    s^(-3/2) (sgn/2, 1, -s) / sqrt(2), which differs from the closed forms
    by a factor 2 in P_psi and a sign in P_z; it is kept for comparison.
    """
    th = np.asarray(theta, dtype=float)
    s = np.abs(np.cos(th))
    sgn = np.sign(th - 0.5 * math.pi)
    conv = float if th.ndim == 0 else np.asarray
    if variant == "leading":
        pref = (2.0 * s) ** -1.5
        return AngularProfile(conv(sgn * pref), conv(pref), conv(2.0 * s * pref), 0.0, "RS")
    if variant == "printed":
        pref = s ** -1.5 / math.sqrt(2.0)
        return AngularProfile(conv(0.5 * sgn * pref), conv(pref), conv(-s * pref), 0.0, "RS")
    raise ValueError("variant must be 'leading' or 'printed'")


# ---------------------------------------------------------------------------
# field assembly
# ---------------------------------------------------------------------------

def _cylinder(d: np.ndarray, n: np.ndarray):
    """Cylindrical data of displacement rows d (N, 3) about unit axis n."""
    x3 = d @ n
    perp = d - x3[:, None] * n[None, :]
    rho = np.linalg.norm(perp, axis=1)
    r = np.sqrt(rho * rho + x3 * x3)
    u, v = _transverse_basis(n)
    psi = np.arctan2(perp @ v, perp @ u)
    e_rho = np.cos(psi)[:, None] * u[None, :] + np.sin(psi)[:, None] * v[None, :]
    e_psi = -np.sin(psi)[:, None] * u[None, :] + np.cos(psi)[:, None] * v[None, :]
    return x3, rho, r, psi, e_rho, e_psi


def _field_arrays(d, n, family, sigma):
    """Cylindrical components (N, 3), singular psi coefficients (N,), masks (N,)."""
    x3, rho, r, psi, e_rho, e_psi = _cylinder(d, n)
    if np.any(r == 0.0):
        raise ValueError("field point coincides with the eigenvalue point")
    st = rho / r
    ct = x3 / r
    plane = x3 == 0.0
    axis = rho == 0.0
    beta = FAMILY_BETA[family]
    ct_safe = np.where(plane, 1.0, ct)
    st_safe = np.where(plane, 0.0, st)
    if family == "LP":
        p_rho, p_z = _lp_core(st_safe, ct_safe)
        p_psi = np.zeros_like(p_rho)
        sing = np.where(axis, 0.0, -sigma * SQRT_PI / np.where(axis, 1.0, rho) ** 2)
    elif family == "RS":
        p_rho, p_psi, p_z = _rs_core(st_safe, ct_safe)
        sing = np.zeros_like(p_rho)
    else:
        raise ValueError(f"unknown family {family!r}")
    radial = r ** (-3.0 - 0.5 * beta)
    comps = radial[:, None] * np.column_stack([p_rho, sigma * p_psi, p_z])
    comps[plane] = np.nan
    mask = np.where(plane, MASK_PLANE, np.where(axis, MASK_AXIS, MASK_VALID))
    return comps, sing, mask, e_rho, e_psi


def eigenfunction_value(x, q=(0.0, 0.0, 0.0), axis=E3, sigma: int = 1,
                        family: str = "LP") -> DistributionalField:
    """Position eigenfunction with eigenvalue q and helicity sigma at the point x."""
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    n = _unit(axis)
    d = (np.asarray(x, dtype=float) - np.asarray(q, dtype=float))[None, :]
    comps, sing, mask, e_rho, e_psi = _field_arrays(d, n, family, sigma)
    basis = np.column_stack([e_rho[0], e_psi[0], n])
    reg = comps[0]
    return DistributionalField(
        regular=reg,
        regular_cartesian=basis @ reg,
        singular=np.array([0.0, sing[0], 0.0]),
        support_normal=n,
        mask=str(mask[0]),
        basis=basis,
    )


def eigenfunction_grid(points, q=(0.0, 0.0, 0.0), axis=E3, sigma: int = 1,
                       family: str = "LP", mask_band: float = 1e-3):
    """Vectorized evaluation on an (N, 3) array of points.

    Returns (components, mask) with components the cylindrical (rho, psi, z)
    values, NaN wherever |cos theta| < mask_band (or on the axis-free
    singular plane itself), and mask a boolean array flagging those points.
    """
    n = _unit(axis)
    d = np.asarray(points, dtype=float) - np.asarray(q, dtype=float)[None, :]
    x3 = d @ n
    r = np.linalg.norm(d, axis=1)
    band = np.abs(x3) < mask_band * r
    comps, _, _, _, _ = _field_arrays(d, n, family, sigma)
    comps[band] = np.nan
    return comps, band


# ---------------------------------------------------------------------------
# Debierre-frame LP eigenfunctions
# ---------------------------------------------------------------------------

def _debierre_plus_cart(d: np.ndarray, n: np.ndarray):
    """Regular and singular (delta(x3)) parts of the helicity +1 field, Cartesian."""
    x3, rho, r, psi, e_rho, e_psi = _cylinder(d[None, :], n)
    x3, rho, r, psi = float(x3[0]), float(rho[0]), float(r[0]), float(psi[0])
    e_rho, e_psi = e_rho[0], e_psi[0]
    if rho == 0.0:
        raise ValueError("azimuth undefined on the axis")
    phase = np.exp(-1j * psi)
    if x3 != 0.0:
        pref = phase / (SQRT_PI * r ** 4)
        reg = pref * (1j * (x3 * x3 - rho * rho) / x3 * e_rho + r * r / x3 * e_psi - 2j * rho * n)
    else:
        reg = np.full(3, np.nan + 0j)
    sing = -SQRT_PI / (rho * rho) * phase * (e_rho + 1j * e_psi)
    return reg, sing


def debierre_lp(x, sigma: int = 1, axis=E3, q=(0.0, 0.0, 0.0)) -> DistributionalField:
    """LP eigenfunction with helicity sigma for the frame rotated by (a, b) = (k1, -k2)/k_perp.

    The helicity -1 field is produced from the +1 field through
    Psi_-(x) = conj(Psi_+(-x)), applied to the regular and singular parts.
    """
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    n = _unit(axis)
    d = np.asarray(x, dtype=float) - np.asarray(q, dtype=float)
    if sigma == 1:
        reg, sing = _debierre_plus_cart(d, n)
    else:
        reg, sing = _debierre_plus_cart(-d, n)
        reg, sing = np.conj(reg), np.conj(sing)
    _, rho, _, _, e_rho, e_psi = _cylinder(d[None, :], n)
    basis = np.column_stack([e_rho[0], e_psi[0], n])
    x3 = float(d @ n)
    mask = MASK_PLANE if x3 == 0.0 else MASK_VALID
    return DistributionalField(
        regular=basis.T @ reg,
        regular_cartesian=reg,
        singular=basis.T @ sing,
        support_normal=n,
        mask=mask,
        basis=basis,
    )


def debierre_minus_printed(x, axis=E3, q=(0.0, 0.0, 0.0)) -> tuple[np.ndarray, np.ndarray]:
    """Helicity -1 Debierre field as it is sometimes written, kept for comparison only.

    Regular part e^(i psi) / (sqrt(pi) r^4) [i (x3^2 - rho^2)/x3 e_rho
    - r^2/x3 e_psi + 2 i rho e3] and delta(x3) coefficient
    -(sqrt(pi)/r^2) e^(i psi) (e_rho + i e_psi).  It violates
    Psi_-(x) = conj(Psi_+(-x)) through the sign of the e3 term and of the
    delta e_psi term (its r^2 where rho^2 belongs is harmless on the
    support x3 = 0); ``debierre_lp`` is the consistent version.  Returns
    Cartesian (regular, singular).
    """
    n = _unit(axis)
    d = (np.asarray(x, dtype=float) - np.asarray(q, dtype=float))[None, :]
    x3, rho, r, psi, e_rho, e_psi = _cylinder(d, n)
    x3, rho, r, psi = float(x3[0]), float(rho[0]), float(r[0]), float(psi[0])
    e_rho, e_psi = e_rho[0], e_psi[0]
    if rho == 0.0 or x3 == 0.0:
        raise ValueError("needs rho > 0 and x3 != 0")
    phase = np.exp(1j * psi)
    reg = phase / (SQRT_PI * r ** 4) * (1j * (x3 * x3 - rho * rho) / x3 * e_rho - r * r / x3 * e_psi
                                        + 2j * rho * n)
    sing = -SQRT_PI / (r * r) * phase * (e_rho + 1j * e_psi)
    return reg, sing


# ---------------------------------------------------------------------------
# overlaps
# ---------------------------------------------------------------------------

def overlap(q, q_prime, beta: float, labels=None, *, helicity: bool = False) -> OverlapValue:
    """Scalar product of two position eigenfunctions (hbar c = 1).

    ``labels`` is (j, j') for the frame components or (sigma, sigma') when
    ``helicity`` is true.  For beta = 0 the product is a delta function
    (2 pi)^3 delta(q - q'); otherwise it is
    -4 pi sin(pi beta / 2) Gamma(beta + 2) / |q - q'|^(beta + 3) times
    delta_jj' or (1 + sigma sigma') / 2.
    """
    l1, l2 = (1, 1) if labels is None else labels
    if helicity:
        if l1 not in (1, -1) or l2 not in (1, -1):
            raise ValueError("helicity labels must be +1 or -1")
        factor = 0.5 * (1.0 + l1 * l2)
    else:
        if l1 not in (1, 2) or l2 not in (1, 2):
            raise ValueError("component labels must be 1 or 2")
        factor = 1.0 if l1 == l2 else 0.0
    if beta == 0.0:
        return OverlapValue("delta", (2.0 * math.pi) ** 3 * factor, 0.0)
    sep = float(np.linalg.norm(np.asarray(q, dtype=float) - np.asarray(q_prime, dtype=float)))
    if sep == 0.0:
        raise ValueError("finite overlaps require distinct eigenvalues")
    coeff = -4.0 * math.pi * math.sin(0.5 * math.pi * beta) * gamma_fn(beta + 2.0) * factor
    return OverlapValue("finite", coeff, beta + 3.0, sep)
