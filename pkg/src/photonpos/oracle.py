"""Independent numerical checks of the closed forms.

Three routes are provided:

* the scalar integral I_beta in closed form (hypergeometric and elliptic),
  by one-dimensional Bessel quadrature, and through finite differences of
  the closed form that rebuild the eigenfunction fields;
* a damped Fourier quadrature of the defining momentum-space integrals
  (exp(-eps k) regularization followed by polynomial extrapolation eps -> 0);
* the regularized radial integral that fixes the overlaps, and a direct 3D
  quadrature of the momentum-space scalar product.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np
from scipy import special as _sp

from .momentum import standard_frame_arrays
from .specfun import (
    ConvergenceError,
    DomainError,
    K_HALF,
    bessel_Kmod,
    ellip_E,
    ellip_K,
    gamma_fn,
    gauss_2f1,
    gl_panels,
    rgamma,
)

__all__ = [
    "QuadratureConfig",
    "OracleReport",
    "DampedResult",
    "i_beta_closed",
    "i_beta_quadrature",
    "jk_integral_quadrature",
    "fourier_kernel_quadrature",
    "integrate_between_zeros",
    "field_from_i_beta",
    "damped_fourier_oracle",
    "neville_at_zero",
    "normalization_quadrature",
    "regularized_integral_exact",
    "inner_product_momentum",
    "envelope_field",
    "sliding_extrapolants",
    "gauss_2f1_integral",
    "bessel_j0_integral",
    "ORACLE_TAGS",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Parameters of the damped quadratures.

    ``epsilon_list`` holds dimensionless damping rates; at a point with
    r = |x| the damping factor is exp(-eps r k).  ``k_max`` is likewise in
    units of 1/r; ``None`` selects max(400, 40 / min(eps)).  The estimate
    at eps -> 0 is the interpolating polynomial of degree
    ``richardson_order`` through the smallest ``richardson_order + 1`` rates.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    k_max: float | None = None
    # geometric in steps of 2^(-1/3): extra rates only reweight the same
    # angular integrals, while the smallest rate alone sets k_max
    epsilon_list: tuple[float, ...] = tuple(0.05 * 2.0 ** (-j / 3.0) for j in range(7))
    richardson_order: int = 6
    panel_phase: float = 20.0
    gl_order: int = 20
    max_panels: int = 4000

    def __post_init__(self):
        eps = tuple(float(e) for e in self.epsilon_list)
        if not eps or any(e <= 0 for e in eps):
            raise ValueError("epsilon_list must hold positive rates")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ValueError("epsilon_list must be strictly decreasing")
        if not 1 <= self.richardson_order <= len(eps) - 1:
            raise ValueError("richardson_order must be between 1 and len(epsilon_list) - 1")
        if self.k_max is not None and self.k_max * min(eps) < 5.0:
            raise ValueError("k_max * min(epsilon) must be at least 5")

    def effective_k_max(self) -> float:
        if self.k_max is not None:
            return float(self.k_max)
        return max(400.0, 40.0 / min(self.epsilon_list))


@dataclass
class OracleReport:
    """Outcome of one verification check."""

    check_name: str
    max_abs_err: float
    max_rel_err: float
    tolerance: float
    passed: bool
    samples: int
    note: str = ""
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_errors(cls, name: str, abs_errs, rel_errs, tolerance: float, note: str = "",
                    use_abs: bool = False) -> "OracleReport":
        abs_errs = np.atleast_1d(np.asarray(abs_errs, dtype=float))
        rel_errs = np.atleast_1d(np.asarray(rel_errs, dtype=float))
        max_abs = float(np.max(abs_errs)) if abs_errs.size else 0.0
        max_rel = float(np.max(rel_errs)) if rel_errs.size else 0.0
        measure = max_abs if use_abs else max_rel
        passed = bool(np.isfinite(measure) and measure <= tolerance)
        return cls(name, max_abs, max_rel, tolerance, passed, int(max(abs_errs.size, rel_errs.size)), note)


# ---------------------------------------------------------------------------
# I_beta: closed forms
# ---------------------------------------------------------------------------

def _polar(r: float, theta: float) -> tuple[float, float]:
    """(sin theta, |cos theta|) with exact values on the axis and the plane."""
    if theta in (0.0, math.pi):
        return 0.0, 1.0
    if theta == 0.5 * math.pi:
        return 1.0, 0.0
    return math.sin(theta), abs(math.cos(theta))


def _i_beta_sc(r: float, st: float, s: float, beta: float, method: str) -> float:
    if r <= 0:
        raise DomainError("r must be positive")
    if beta == 2.0 and s > 0.0:
        return 0.0
    if s == 0.0 and beta >= 0.0:
        raise DomainError("I_beta diverges on the plane theta = pi/2 for beta >= 0")
    if method == "auto" and beta in (0.0, 1.0, 3.0):
        if beta == 0.0:
            return 4.0 * math.pi * ellip_K(st, s) / r
        t = math.sqrt(s)
        den = math.sqrt(2.0 * (1.0 + s))
        k1, k1c = (1.0 - t) / den, (1.0 + t) / den
        K = ellip_K(k1, k1c)
        if beta == 1.0:
            return (2.0 * math.pi) ** 1.5 * r ** -1.5 * K / (math.sqrt(s * (1.0 + s)) * K_HALF)
        E = ellip_E(k1, k1c)
        return (-math.sqrt(8.0 * math.pi) * K_HALF * r ** -2.5 * s ** -1.5 / math.sqrt(1.0 + s)
                * (2.0 * (1.0 + s) * E - (s + t + 1.0) * K))
    if method not in ("auto", "hypergeometric"):
        raise ValueError("method must be 'auto' or 'hypergeometric'")
    a = 0.5 + 0.25 * beta
    pref = math.pi ** 2 * gamma_fn(a) * rgamma(0.5 - 0.25 * beta) * (2.0 / r) ** (0.5 * beta + 1.0)
    if pref == 0.0:
        return 0.0
    return pref * gauss_2f1(a, 0.5, 1.0, st * st, one_minus_z=s * s)


def i_beta_closed(r: float, theta: float, beta: float, method: str = "auto") -> float:
    """Closed form of I_beta(x) = int d^3k k^(beta/2 - 1) / k_perp exp(i k.x).

    pi^2 Gamma(1/2 + beta/4) / Gamma(1/2 - beta/4) (2/r)^(beta/2 + 1)
    2F1(1/2 + beta/4, 1/2; 1; sin^2 theta).  Values beta >= 2 are the
    analytic continuation (I_2 vanishes off the plane, I_3 is finite).  With
    ``method="auto"`` the elliptic forms are used for beta in {0, 1, 3}.
    """
    st, s = _polar(r, theta)
    return _i_beta_sc(float(r), st, s, float(beta), method)


def _i_beta_cart(x, beta: float, method: str = "auto") -> float:
    x = np.asarray(x, dtype=float)
    rho = math.hypot(x[0], x[1])
    r = math.sqrt(rho * rho + x[2] * x[2])
    return _i_beta_sc(r, rho / r, abs(x[2]) / r, beta, method)


# ---------------------------------------------------------------------------
# oscillatory one-dimensional quadrature
# ---------------------------------------------------------------------------

def _euler_average(partials: np.ndarray, rounds: int = 12) -> float:
    """Repeated averaging of consecutive partial sums of an alternating series."""
    p = np.asarray(partials, dtype=float)
    for _ in range(min(rounds, p.size - 1)):
        p = 0.5 * (p[1:] + p[:-1])
    return float(p[-1])


def integrate_between_zeros(f: Callable[[np.ndarray], np.ndarray], zeros: np.ndarray, *,
                            singular_start: bool = False, order: int = 20, abs_tol: float = 1e-15,
                            rel_tol: float = 1e-13, accelerate: bool = True) -> float:
    """Integrate f over (0, inf) panel by panel between consecutive ``zeros``.

    Stops once a run of panels is negligible; if the zero list runs out
    first, the alternating tail is summed by repeated averaging of the
    partial sums.  ``singular_start`` grades the first panel geometrically
    towards 0 for integrable endpoint singularities.
    """
    zeros = np.asarray(zeros, dtype=float)
    first = zeros[0]
    if singular_start:
        head = first * np.concatenate([[0.0], 2.0 ** -np.arange(50, 0, -1), [1.0]])
    else:
        head = np.array([0.0, first])
    x, w = gl_panels(head, order)
    total = float(np.dot(w, f(x)))
    partials = [total]
    batch = 64
    quiet = 0
    for start in range(0, zeros.size - 1, batch):
        edges = zeros[start:start + batch + 1]
        if edges.size < 2:
            break
        x, w = gl_panels(edges, order)
        vals = (w * f(x)).reshape(edges.size - 1, order).sum(axis=1)
        for v in vals:
            total += float(v)
            partials.append(total)
            if abs(v) <= max(abs_tol, rel_tol * abs(total)):
                quiet += 1
                if quiet >= 4:
                    return total
            else:
                quiet = 0
    if not accelerate:
        raise ConvergenceError("oscillatory integral did not converge within the panel budget")
    return _euler_average(np.array(partials[-40:]))


def jk_integral_quadrature(a: float, b: float, nu: float = 0.0, order: int = 20) -> float:
    """int_0^inf s^nu K_nu(a s) J_0(b s) ds with K_nu from its integral representation."""
    if a <= 0 or b <= 0:
        raise DomainError("a and b must be positive")
    n_zero = int(math.ceil(60.0 / a * b / math.pi)) + 4
    zeros = _sp.jn_zeros(0, n_zero) / b

    def f(s):
        return s ** nu * bessel_Kmod(nu, a * s) * _sp.j0(b * s)

    return integrate_between_zeros(f, zeros, singular_start=True, order=order)


def fourier_kernel_quadrature(x: float, a: float, nu: float, n_panels: int = 4000, order: int = 20) -> float:
    """int_-inf^inf exp(i x s) (s^2 + a^2)^(-nu - 1/2) ds, by zero-to-zero panels of cos(x s)."""
    if x == 0:
        raise DomainError("x must be non-zero")
    x = abs(x)
    zeros = (np.arange(n_panels) + 0.5) * math.pi / x

    def f(s):
        return 2.0 * np.cos(x * s) * (s * s + a * a) ** (-nu - 0.5)

    return integrate_between_zeros(f, zeros, order=order)


def i_beta_quadrature(r: float, theta: float, beta: float, cfg: QuadratureConfig | None = None) -> float:
    """I_beta from the one-dimensional Bessel integral

    2^(beta/4 + 2) pi^(3/2) / Gamma(1/2 - beta/4) |x3|^(-beta/4)
    int_0^inf k^(beta/4) K_(beta/4)(|x3| k) J_0(rho k) dk.
    """
    cfg = cfg or QuadratureConfig()
    if not 0.0 <= beta <= 1.0:
        raise DomainError("the Bessel route is implemented for 0 <= beta <= 1")
    st, s = _polar(r, theta)
    rho, x3 = r * st, r * s
    if rho == 0.0 or x3 == 0.0:
        raise DomainError("the Bessel route needs rho > 0 and x3 != 0")
    nu = 0.25 * beta
    k_end = 45.0 / x3
    n_zero = min(int(math.ceil(k_end * rho / math.pi)) + 4, cfg.max_panels)
    zeros = _sp.jn_zeros(0, n_zero) / rho

    def f(k):
        return k ** nu * bessel_Kmod(nu, x3 * k, cfg.gl_order) * _sp.j0(rho * k)

    integral = integrate_between_zeros(f, zeros, singular_start=True, order=cfg.gl_order)
    pref = 2.0 ** (nu + 2.0) * math.pi ** 1.5 / gamma_fn(0.5 - nu) * x3 ** -nu
    return pref * integral


# ---------------------------------------------------------------------------
# fields from I_beta by finite differences
# ---------------------------------------------------------------------------

_D1 = ((-2, 1.0 / 12.0), (-1, -8.0 / 12.0), (1, 8.0 / 12.0), (2, -1.0 / 12.0))
_D2 = ((-2, -1.0 / 12.0), (-1, 16.0 / 12.0), (0, -30.0 / 12.0), (1, 16.0 / 12.0), (2, -1.0 / 12.0))


def field_from_i_beta(x, beta: float, part: str = "one", h: float | None = None) -> np.ndarray:
    """Cartesian field built from the closed I_beta by order-4 central differences.

    part "one": (2 pi)^(-3/2) (Laplacian(I_beta) e3 - grad d3 I_beta), the
    field of the E1 eigenfunction.  part "two": (2 pi)^(-3/2) e3 x grad
    I_(beta+2), which equals i times the field of the E2 eigenfunction.
    """
    x = np.asarray(x, dtype=float)
    r = float(np.linalg.norm(x))
    h = 5e-3 * r if h is None else float(h)
    pref = (2.0 * math.pi) ** -1.5
    eye = np.eye(3) * h
    if part == "one":
        f = lambda y: _i_beta_cart(y, beta)  # noqa: E731
        d2 = np.empty(3)
        for i in range(3):
            d2[i] = sum(c * f(x + m * eye[i]) for m, c in _D2) / (h * h)
        mixed = np.empty(2)
        for i in range(2):
            mixed[i] = sum(ci * cj * f(x + mi * eye[i] + mj * eye[2]) for mi, ci in _D1 for mj, cj in _D1) / (h * h)
        lap = d2.sum()
        return pref * np.array([-mixed[0], -mixed[1], lap - d2[2]])
    if part == "two":
        f = lambda y: _i_beta_cart(y, beta + 2.0)  # noqa: E731
        g = np.array([sum(c * f(x + m * eye[i]) for m, c in _D1) / h for i in range(2)])
        return pref * np.array([-g[1], g[0], 0.0])
    raise ValueError("part must be 'one' or 'two'")


# ---------------------------------------------------------------------------
# damped Fourier oracle
# ---------------------------------------------------------------------------

def _e1(th, ph):
    ct, st = np.cos(th), np.sin(th)
    return np.stack([ct * np.cos(ph), ct * np.sin(ph), -st * np.ones_like(ph)])


def _e2(th, ph):
    return np.stack([-np.sin(ph), np.cos(ph), np.zeros_like(ph)]) * np.ones_like(th)


_R2 = 1.0 / math.sqrt(2.0)


def _field_tag(direction):
    # Jacobian sin(theta) included; radial weight k^(2 + beta/2)
    return lambda th, ph: np.sin(th) * direction(th, ph)


ORACLE_TAGS: dict[str, tuple[Callable, float, float]] = {
    # name: (angular factor, extra radial power beyond k^(beta/2), prefactor)
    "psi1": (_field_tag(_e1), 2.0, (2.0 * math.pi) ** -1.5),
    "psi2": (_field_tag(_e2), 2.0, (2.0 * math.pi) ** -1.5),
    "standard": (_field_tag(lambda th, ph: np.concatenate([_e1(th, ph), _e2(th, ph)])), 2.0,
                 (2.0 * math.pi) ** -1.5),
    "helicity+": (_field_tag(lambda th, ph: _R2 * (_e1(th, ph) + 1j * _e2(th, ph))), 2.0, (2.0 * math.pi) ** -1.5),
    "helicity-": (_field_tag(lambda th, ph: _R2 * (_e1(th, ph) - 1j * _e2(th, ph))), 2.0, (2.0 * math.pi) ** -1.5),
    "debierre+": (_field_tag(lambda th, ph: _R2 * np.exp(-1j * ph) * (_e1(th, ph) + 1j * _e2(th, ph))), 2.0,
                  (2.0 * math.pi) ** -1.5),
    "debierre-": (_field_tag(lambda th, ph: _R2 * np.exp(1j * ph) * (_e1(th, ph) - 1j * _e2(th, ph))), 2.0,
                  (2.0 * math.pi) ** -1.5),
    # scalar integrals: d^3k k^(beta/2 - 1) / k_perp = k^(beta/2) dk dtheta dphi
    "i_beta": (lambda th, ph: (np.ones_like(th) * np.ones_like(ph))[None], 0.0, 1.0),
    "i_sigma+": (lambda th, ph: (np.ones_like(th) * np.exp(-1j * ph))[None], 0.0, 1.0),
    "i_sigma-": (lambda th, ph: (np.ones_like(th) * np.exp(1j * ph))[None], 0.0, 1.0),
}

_N_PHI = 8
_GRADING = 24


def _harmonics(angular: Callable, th: np.ndarray):
    """Fourier coefficients c_m(theta), m = -3..3, of the azimuthal dependence."""
    ph = 2.0 * math.pi * np.arange(_N_PHI) / _N_PHI
    vals = np.asarray(angular(th[:, None], ph[None, :]), dtype=complex)  # (ncomp, nth, nphi)
    coef = np.fft.fft(vals, axis=-1) / _N_PHI
    out = {}
    scale = np.max(np.abs(coef)) if coef.size else 0.0
    for m in range(-3, 4):
        c = coef[..., m % _N_PHI]
        if np.max(np.abs(c)) > 1e-13 * scale:
            out[m] = c
    return out


def _bessel(order: int, z: np.ndarray) -> np.ndarray:
    if order == 0:
        return _sp.j0(z)
    if order == 1:
        return _sp.j1(z)
    return _sp.jv(order, z)


@dataclass
class DampedResult:
    """Output of the damped Fourier oracle."""

    value: np.ndarray
    per_epsilon: np.ndarray
    epsilons: tuple[float, ...]
    extrapolants: list = field(default_factory=list)
    k_max: float = 0.0
    stable: bool = True


def neville_at_zero(xs, ys) -> np.ndarray:
    """Value at 0 of the interpolating polynomial through (xs, ys); ys may be vectors."""
    xs = [float(v) for v in xs]
    p = [np.asarray(y, dtype=complex) for y in ys]
    n = len(xs)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (-xs[i + m] * p[i] + xs[i] * p[i + 1]) / (xs[i] - xs[i + m])
    return p[0]


def _radial_profile(x: np.ndarray, tag: str, cfg: QuadratureConfig):
    """Angular integrals G(k) on the radial quadrature nodes."""
    angular, _, _ = ORACLE_TAGS[tag]
    rho = math.hypot(x[0], x[1])
    x3 = float(x[2])
    r = math.hypot(rho, x3)
    psi = math.atan2(x[1], x[0])
    k_max = cfg.effective_k_max() / r
    n_rad = int(math.ceil(k_max * r / cfg.panel_phase)) + 1
    edges = np.linspace(0.0, k_max, n_rad + 1)
    # geometric grading towards k = 0, where k^(beta/2) is not smooth
    edges = np.concatenate([[0.0], edges[1] * 0.5 ** np.arange(_GRADING, 0, -1), edges[1:]])
    ks, wk = gl_panels(edges, cfg.gl_order)
    n_ang = np.ceil(ks * r * math.pi / cfg.panel_phase).astype(int) + 1
    groups = {}
    for idx, n in enumerate(n_ang):
        groups.setdefault(int(n), []).append(idx)
    G = None
    for n, idxs in groups.items():
        th, wt = gl_panels(np.linspace(0.0, math.pi, n + 1), cfg.gl_order)
        harm = _harmonics(angular, th)
        kk = ks[idxs][:, None]
        phase = np.exp(1j * kk * np.cos(th)[None, :] * x3) * wt[None, :]
        z = kk * np.sin(th)[None, :] * rho
        block = 0.0
        bess = {}
        for m, c in harm.items():
            am = abs(m)
            if am not in bess:
                bess[am] = _bessel(am, z) * phase
            factor = 2.0 * math.pi * (1j ** am) * np.exp(1j * m * psi)
            block = block + factor * np.einsum("kt,ct->kc", bess[am], c)
        if G is None:
            G = np.zeros((ks.size, block.shape[1]), dtype=complex)
        G[idxs] = block
    return ks, wk, G, r


def damped_fourier_oracle(x, tag: str, beta: float, cfg: QuadratureConfig | None = None) -> DampedResult:
    """Evaluate a defining Fourier integral at x with exp(-eps r k) damping, then eps -> 0.

    Tags: psi1, psi2, standard (psi1 and psi2 stacked), helicity+/-,
    debierre+/- (frame rotated by (k1, -k2)/k_perp), i_beta and i_sigma+/-
    (the scalar integrals with weight k^(beta/2 - 1)/k_perp, the latter with
    extra azimuthal factor exp(-+i phi)).  The azimuthal integral is done
    exactly through Bessel functions; theta and k use composite
    Gauss-Legendre panels spanning at most ``panel_phase`` radians of phase.
    Vector results are Cartesian.
    """
    cfg = cfg or QuadratureConfig()
    if tag not in ORACLE_TAGS:
        raise ValueError(f"unknown tag {tag!r}")
    x = np.asarray(x, dtype=float)
    _, power, pref = ORACLE_TAGS[tag]
    ks, wk, G, r = _radial_profile(x, tag, cfg)
    base = wk * ks ** (power + 0.5 * beta)
    eps_list = tuple(float(e) for e in cfg.epsilon_list)
    vals = np.array([pref * ((base * np.exp(-e * r * ks))[:, None] * G).sum(axis=0) for e in eps_list])
    order = cfg.richardson_order
    use_eps = eps_list[-(order + 1):]
    use_vals = vals[-(order + 1):]
    value = neville_at_zero(use_eps, use_vals)
    extrapolants = [neville_at_zero(use_eps[-(m + 1):], use_vals[-(m + 1):]) for m in range(1, order + 1)]
    diffs = [float(np.max(np.abs(b - a))) for a, b in zip(extrapolants, extrapolants[1:])]
    stable = len(diffs) < 2 or diffs[-1] <= diffs[0]
    return DampedResult(value, vals, eps_list, extrapolants, cfg.effective_k_max() / r, stable)


# ---------------------------------------------------------------------------
# normalization integral and momentum-space scalar product
# ---------------------------------------------------------------------------

def regularized_integral_exact(beta: float, eps: float) -> float:
    """Im int_0^inf s^(beta+1) exp(i s - eps s) ds = Im Gamma(beta+2) / (eps - i)^(beta+2)."""
    return float((gamma_fn(beta + 2.0) * (eps - 1j) ** (-(beta + 2.0))).imag)


def normalization_quadrature(beta: float, cfg: QuadratureConfig | None = None) -> DampedResult:
    """lim eps->0 Im int_0^inf s^(beta+1) exp(i s) exp(-eps s) ds by quadrature and extrapolation.

    The target value is -sin(pi beta / 2) Gamma(beta + 2).
    """
    cfg = cfg or QuadratureConfig()
    if not -1.0 < beta < 2.0:
        raise DomainError("beta must lie in (-1, 2)")
    eps_list = tuple(float(e) for e in cfg.epsilon_list)
    s_max = 60.0 / min(eps_list)
    n = int(math.ceil(s_max / math.pi))
    s, w = gl_panels(math.pi * np.arange(n + 1), cfg.gl_order)
    base = w * s ** (beta + 1.0) * np.sin(s)
    vals = np.array([float(np.dot(base, np.exp(-e * s))) for e in eps_list])
    order = cfg.richardson_order
    use_eps, use_vals = eps_list[-(order + 1):], vals[-(order + 1):]
    value = neville_at_zero(use_eps, use_vals).real
    extrapolants = [neville_at_zero(use_eps[-(m + 1):], use_vals[-(m + 1):]).real for m in range(1, order + 1)]
    return DampedResult(np.asarray(value), vals, eps_list, extrapolants, s_max)


def inner_product_momentum(f: Callable[[np.ndarray], np.ndarray], g: Callable[[np.ndarray], np.ndarray],
                           beta: float, k_max: float = 12.0, n_k: int = 48, n_theta: int = 48,
                           n_phi: int = 48) -> complex:
    """(f, g) = int d^3k conj(f(k)) . g(k) / k^beta by product quadrature.

    f and g take an (N, 3) array of wave vectors and return (N, 3) complex
    values; they must be negligible beyond ``k_max``.  Gauss-Legendre nodes
    are used in k and cos(theta) and the trapezoid rule in phi.
    """
    k, wk = gl_panels(np.linspace(0.0, k_max, 5), n_k // 4)
    u, wu = np.polynomial.legendre.leggauss(n_theta)
    ph = 2.0 * math.pi * np.arange(n_phi) / n_phi
    wph = np.full(n_phi, 2.0 * math.pi / n_phi)
    K, U, P = np.meshgrid(k, u, ph, indexing="ij")
    W = (wk * k ** (2.0 - beta))[:, None, None] * wu[None, :, None] * wph[None, None, :]
    st = np.sqrt(1.0 - U * U)
    pts = np.stack([K * st * np.cos(P), K * st * np.sin(P), K * U], axis=-1).reshape(-1, 3)
    fv = np.asarray(f(pts), dtype=complex)
    gv = np.asarray(g(pts), dtype=complex)
    dens = np.sum(np.conj(fv) * gv, axis=1)
    return complex(np.sum(W.ravel() * dens))


def envelope_field(kind, q=(0.0, 0.0, 0.0), width: float = 1.0, beta: float = 0.0, sigma: int = 1):
    """Gaussian-enveloped momentum eigenfunction, vectorized over (N, 3) wave vectors."""
    q = np.asarray(q, dtype=float)

    def f(k):
        e1, e2, _ = standard_frame_arrays(k)
        kn = np.linalg.norm(k, axis=1)
        amp = kn ** (0.5 * beta) * np.exp(-0.5 * (kn / width) ** 2 - 1j * (k @ q))
        if kind == 1:
            vec = e1.astype(complex)
        elif kind == 2:
            vec = e2.astype(complex)
        elif kind == "helicity":
            vec = (e1 + 1j * sigma * e2) / math.sqrt(2.0)
        else:
            raise ValueError("kind must be 1, 2 or 'helicity'")
        return amp[:, None] * vec

    return f


def sliding_extrapolants(result: DampedResult, order: int = 2) -> list:
    """Order-``order`` extrapolants on successive windows of the damping rates.

    Window i uses rates i..i+order, so later entries rely on smaller rates;
    for a well-behaved regularization their errors decrease.
    """
    eps, vals = result.epsilons, result.per_epsilon
    if not 1 <= order < len(eps):
        raise ValueError("order must be between 1 and len(epsilons) - 1")
    return [neville_at_zero(eps[i:i + order + 1], vals[i:i + order + 1]) for i in range(len(eps) - order)]


def gauss_2f1_integral(a: float, z: float, one_minus_z: float | None = None, order: int = 20) -> float:
    """2F1(a, 1/2; 1; z) from Euler's integral, (2/pi) int_0^(pi/2) (1 - z cos^2 u)^(-a) du.

    1 - z cos^2 u = (1 - z) + z sin^2 u, so near z = 1 the integrand peaks
    at u = 0 with width sqrt(1 - z); the panels are graded geometrically
    from that scale.  Independent of the series and transformation code in
    ``specfun``.
    """
    zc = 1.0 - z if one_minus_z is None else float(one_minus_z)
    if not (zc > 0.0 and z >= 0.0):
        raise DomainError("needs 0 <= z < 1")
    width = max(math.sqrt(zc), 1e-300)
    edges = [0.0]
    e = min(width, math.pi / 2) / 4.0
    while e < math.pi / 2:
        edges.append(e)
        e *= 2.0
    edges.append(math.pi / 2)
    u, w = gl_panels(np.asarray(edges), order)
    su = np.sin(u)
    return float(2.0 / math.pi * np.dot(w, (zc + z * su * su) ** (-a)))


def bessel_j0_integral(cfg: QuadratureConfig | None = None) -> DampedResult:
    """int_0^inf J0(k) dk = 1 by exp(-eps k) damping and extrapolation."""
    cfg = cfg or QuadratureConfig()
    eps_list = tuple(float(e) for e in cfg.epsilon_list)
    k_max = 60.0 / min(eps_list)
    k, w = gl_panels(np.linspace(0.0, k_max, int(math.ceil(k_max / 3.0)) + 1), cfg.gl_order)
    base = w * _sp.j0(k)
    vals = np.array([float(np.dot(base, np.exp(-e * k))) for e in eps_list])
    order = cfg.richardson_order
    use_eps, use_vals = eps_list[-(order + 1):], vals[-(order + 1):]
    value = neville_at_zero(use_eps, use_vals).real
    return DampedResult(np.asarray(value), vals, eps_list, [], k_max)
