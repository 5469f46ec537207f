"""Hertz superpotential of the RS position eigenfunction.

The RS eigenfunction localized at the origin at t = 0 is generated by a
Hertz vector Z(x, t) = -sigma (pi hbar c)^(1/2) zeta(x, t) e3.  Here we
work in units hbar c = 1 and with c = 1, so t below means ct.

At t = 0 zeta has a closed elliptic form.  For t != 0 it is given by its
Taylor series in tau = t / r,

    zeta = (2/r)^(3/2) [sum_k a_k tau^(2k) + i sum_k b_k tau^(2k+1)],

with coefficients a_k, b_k that depend only on rho / r and are Gauss
hypergeometric functions with argument (rho / r)^2.  The same
coefficients can be written with complete elliptic integrals of modulus
kappa_1(s), s = |cos theta|, by applying a chain of first-order
differential operators to the k = 0 forms; ``elliptic_coefficient_forms``
builds that chain symbolically.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .eigenfield import SingularPlaneError
from .momentum import E3, standard_frame
from .specfun import K_HALF, DomainError, ellip_E, ellip_K, gauss_2f1, gamma_fn, rgamma

__all__ = [
    "HertzSeries",
    "HertzTruncationWarning",
    "hertz_t0",
    "hertz_series",
    "series_coefficient_direct",
    "zeta_eval",
    "zeta_t0",
    "zeta_dtt",
    "empirical_radius",
    "elliptic_coefficient_forms",
    "gamma_quotient",
    "gamma_quotient_parity",
    "rs_from_hertz_check",
    "wave_residual",
    "DEFAULT_N_MAX",
]

DEFAULT_N_MAX = 12
_SQRT_2PI = math.sqrt(2.0 * math.pi)


class HertzTruncationWarning(UserWarning):
    """The last retained Taylor term is not negligible against the partial sum."""


@dataclass(frozen=True)
class HertzSeries:
    """Taylor coefficients of (r/2)^(3/2) zeta in powers of tau = ct / r.

    ``real_coeffs[k]`` multiplies tau^(2k) and ``imag_coeffs[k]`` multiplies
    i tau^(2k+1).
    """

    n_max: int
    rho_over_r: float
    real_coeffs: np.ndarray
    imag_coeffs: np.ndarray

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be non-negative")
        if not 0.0 <= self.rho_over_r < 1.0:
            raise DomainError("rho/r must lie in [0, 1)")
        if len(self.real_coeffs) != self.n_max + 1 or len(self.imag_coeffs) != self.n_max + 1:
            raise ValueError("coefficient arrays must have n_max + 1 entries")

    def terms(self, tau: float) -> np.ndarray:
        """The individual series terms, ordered by power of tau."""
        out = np.empty(2 * self.n_max + 2, dtype=complex)
        out[0::2] = self.real_coeffs * tau ** (2 * np.arange(self.n_max + 1))
        out[1::2] = 1j * self.imag_coeffs * tau ** (2 * np.arange(self.n_max + 1) + 1)
        return out

    def value(self, tau: float) -> complex:
        return complex(self.terms(tau).sum())

    def second_derivative(self, tau: float) -> complex:
        """d^2/dtau^2 of the truncated sum."""
        total = 0j
        for k in range(self.n_max + 1):
            n = 2 * k
            if n >= 2:
                total += self.real_coeffs[k] * n * (n - 1) * tau ** (n - 2)
            n = 2 * k + 1
            if n >= 2:
                total += 1j * self.imag_coeffs[k] * n * (n - 1) * tau ** (n - 2)
        return total


def _polar(x) -> tuple[float, float, float]:
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise ValueError("x must be a 3-vector")
    rho = math.hypot(x[0], x[1])
    r = math.hypot(rho, x[2])
    if r == 0.0:
        raise ValueError("x must be nonzero")
    return r, rho / r, abs(float(x[2])) / r


def _kappa1(s: float) -> tuple[float, float]:
    """kappa_1(s) and its complement, both without cancellation."""
    t = math.sqrt(s)
    den = math.sqrt(2.0 * (1.0 + s))
    return (1.0 - t) / den, (1.0 + t) / den


def zeta_t0(x) -> float:
    """zeta(x, 0) = (2 pi)^(-1/2) r^(-3/2) s^(-1/2) (1+s)^(-1/2) K(kappa_1) / K(1/sqrt2)."""
    r, _, s = _polar(x)
    if s == 0.0:
        raise SingularPlaneError("zeta(x, 0) is singular on the plane x3 = 0")
    k1, k1c = _kappa1(s)
    return float(r ** -1.5 / (_SQRT_2PI * math.sqrt(s * (1.0 + s))) * ellip_K(k1, k1c) / K_HALF)


def hertz_t0(x, sigma: int = 1) -> np.ndarray:
    """Hertz vector Z(x, 0) (hbar c = 1); it points along e3."""
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    return -sigma * math.sqrt(math.pi) * zeta_t0(x) * E3


def _log_product_ratio(k: int, shift: int, n: int) -> float:
    """log of prod_{j=1}^{k} (4j + shift)^2 / n!, via 4^k Gamma(k + 1 + shift/4) / Gamma(1 + shift/4)."""
    a = 1.0 + shift / 4.0
    return 2.0 * (k * math.log(4.0) + math.lgamma(k + a) - math.lgamma(a)) - math.lgamma(n + 1.0)


def hertz_series(rho_over_r: float, n_max: int = DEFAULT_N_MAX) -> HertzSeries:
    """Coefficients a_k, b_k for k = 0..n_max at fixed rho / r."""
    st = float(rho_over_r)
    if not 0.0 <= st < 1.0:
        raise DomainError("rho/r must lie in [0, 1)")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    z = st * st
    zc = (1.0 - st) * (1.0 + st)
    re = np.empty(n_max + 1)
    im = np.empty(n_max + 1)
    for k in range(n_max + 1):
        log_scale = -(k + 2) * math.log(4.0)
        f_re = gauss_2f1(k + 0.75, 0.5, 1.0, z, one_minus_z=zc)
        f_im = gauss_2f1(k + 1.25, 0.5, 1.0, z, one_minus_z=zc)
        re[k] = _SQRT_2PI / K_HALF * f_re * math.exp(log_scale + _log_product_ratio(k, -1, 2 * k))
        im[k] = 2.0 * K_HALF / _SQRT_2PI * f_im * math.exp(log_scale + _log_product_ratio(k, 1, 2 * k + 1))
    return HertzSeries(n_max, st, re, im)


def gamma_quotient(n: int) -> float:
    """Gamma(n/2 + 3/4) / Gamma(1/4 - n/2), evaluated directly."""
    return gamma_fn(0.5 * n + 0.75) * rgamma(0.25 - 0.5 * n)


def gamma_quotient_parity(n: int, variant: str = "corrected") -> float:
    """Closed product form of ``gamma_quotient`` split by the parity p of n.

    (-1)^((n+p)/2) C_p 4^(-(n+1-p)) prod_{j=0}^{(n-p)/2} (4j - 1 + 2p)^2 with
    C_1 = K(1/sqrt2) / sqrt(2 pi).  For even n the correct constant is
    C_0 = sqrt(2 pi) / K(1/sqrt2); ``variant="printed"`` uses C_1 for both
    parities, which is wrong by the factor 2 pi / K(1/sqrt2)^2 for even n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if variant not in ("corrected", "printed"):
        raise ValueError("variant must be 'corrected' or 'printed'")
    p = n % 2
    prod = 1.0
    for j in range((n - p) // 2 + 1):
        prod *= float((4 * j - 1 + 2 * p) ** 2)
    c1 = K_HALF / _SQRT_2PI
    const = c1 if (p == 1 or variant == "printed") else 1.0 / c1
    return (-1) ** ((n + p) // 2) * const * 4.0 ** -(n + 1 - p) * prod


def series_coefficient_direct(n: int, rho_over_r: float) -> complex:
    """Coefficient of tau^n in (r/2)^(3/2) zeta from n time derivatives.

    Differentiating the Fourier representation n times in t and reducing
    each term to the scalar integral I_(2n+1) gives

        (1/4) Gamma(n/2 + 3/4) / Gamma(1/4 - n/2) 2^n (-i)^n / n!
        * 2F1(n/2 + 3/4, 1/2; 1; (rho/r)^2).

    This route uses the gamma functions directly and serves as an
    independent check on the product formulas in ``hertz_series``.
    """
    st = float(rho_over_r)
    if not 0.0 <= st < 1.0:
        raise DomainError("rho/r must lie in [0, 1)")
    f = gauss_2f1(0.5 * n + 0.75, 0.5, 1.0, st * st, one_minus_z=(1.0 - st) * (1.0 + st))
    return 0.25 * gamma_quotient(n) * 2.0 ** n * (-1j) ** n / math.factorial(n) * f


def empirical_radius(rho_over_r: float) -> float:
    """Radius of convergence of the series in tau, s = |cos theta| = sqrt(1 - (rho/r)^2).

    This is an observed value, read off from the growth of the coefficients
    (see ``coefficient_growth_radius``); no closed argument is given here.
    """
    st = float(rho_over_r)
    if not 0.0 <= st < 1.0:
        raise DomainError("rho/r must lie in [0, 1)")
    return math.sqrt((1.0 - st) * (1.0 + st))


def coefficient_growth_radius(rho_over_r: float, n_max: int = 40) -> float:
    """Ratio-test estimate (|b_(n-1)| / |b_n|)^(1/2) of the tau-radius at k = n_max."""
    ser = hertz_series(rho_over_r, n_max)
    return float(math.sqrt(abs(ser.imag_coeffs[-2] / ser.imag_coeffs[-1])))


def zeta_eval(x, t: float, n_max: int = DEFAULT_N_MAX, *, check_radius: bool = True) -> complex:
    """Truncated Taylor sum for zeta(x, t); c = 1.

    Warns with ``HertzTruncationWarning`` when the last retained term
    exceeds 1e-10 of the partial sum.
    """
    r, st, s = _polar(x)
    tau = float(t) / r
    if s == 0.0:
        raise SingularPlaneError("the series is not defined on the plane x3 = 0")
    if check_radius and abs(tau) >= empirical_radius(st):
        raise DomainError(f"|t|/r = {abs(tau):.3g} is outside the convergence radius {s:.3g}")
    ser = hertz_series(st, n_max)
    terms = ser.terms(tau)
    total = complex(terms.sum())
    tail = max(abs(terms[-1]), abs(terms[-2]))
    if tail > 1e-10 * abs(total):
        warnings.warn(f"Hertz series truncated at n_max={n_max}: last term {tail:.3g} "
                      f"relative to sum {abs(total):.3g}", HertzTruncationWarning, stacklevel=2)
    return (2.0 / r) ** 1.5 * total


def zeta_dtt(x, t: float, n_max: int = DEFAULT_N_MAX) -> complex:
    """Second time derivative of the truncated series."""
    r, st, _ = _polar(x)
    ser = hertz_series(st, n_max)
    return (2.0 / r) ** 1.5 * ser.second_derivative(float(t) / r) / (r * r)


_LAP = ((-2, -1.0 / 12.0), (-1, 16.0 / 12.0), (0, -30.0 / 12.0), (1, 16.0 / 12.0), (2, -1.0 / 12.0))


def wave_residual(x, t: float, n_max: int = 2, h: float = 0.02) -> float:
    """|(d_tt - Laplacian) zeta| for the truncated series at (x, t).

    The Laplacian uses an order-4 central-difference stencil of step h in
    each Cartesian direction; the time derivative is taken from the series.
    For the truncated sum the residual behaves like t^(2 n_max).
    """
    x = np.asarray(x, dtype=float)
    lap = 0j
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HertzTruncationWarning)
        for i in range(3):
            e = np.zeros(3)
            e[i] = h
            lap += sum(c * zeta_eval(x + m * e, t, n_max, check_radius=False) for m, c in _LAP) / (h * h)
        return float(abs(zeta_dtt(x, t, n_max) - lap))


# ---------------------------------------------------------------------------
# elliptic-integral forms of the coefficients
# ---------------------------------------------------------------------------

_T = None


def _t_symbol():
    global _T
    if _T is None:
        import sympy as sp

        _T = sp.symbols("t", positive=True)
    return _T


@lru_cache(maxsize=None)
def _elliptic_chain(k: int):
    """Rational coefficients (A_f, B_f, A_g, B_g) of the elliptic forms at step k.

    Each form is kept as (2^(3/2)/pi) (1+s)^(-1/2) (A K + B E) with A, B
    rational in t = sqrt(s) and K, E evaluated at kappa_1(s).  Starting
    from the k = 0 forms, step j applies
    1 - (1 / (2 (j + a0))) ((1 - s^2) / s) d/ds with a0 = 3/4 or 5/4;
    d/ds acts on K and E through dK/dkappa = (E - (1 - kappa^2) K) /
    (kappa (1 - kappa^2)) and dE/dkappa = (E - K) / kappa.  With
    kappa_1 = (1 - t) / sqrt(2 (1 + t^2)) the combinations
    kappa' / (kappa (1 - kappa^2)) and kappa' / kappa are rational in t.
    """
    import sympy as sp

    t = _t_symbol()
    s = t ** 2
    if k == 0:
        return 1 / t, sp.Integer(0), -(s + t + 1) / t ** 3, 2 * (1 + s) / t ** 3
    # 1 - kappa_1^2 = (1 + t)^2 / (2 (1 + t^2))
    kap_c2 = (1 + t) ** 2 / (2 * (1 + s))
    rK = -1 / (t * (1 - s))                          # dK/ds = rK (E - kap_c2 K)
    rE = -(1 + t) / (2 * t * (1 - t) * (1 + s))      # dE/ds = rE (E - K)

    def step(A, B, c):
        # derivative of (1+s)^(-1/2) (A K + B E), with the (1+s)^(-1/2) factored back out
        dA = sp.diff(A, t) / (2 * t) - A / (2 * (1 + s)) - A * rK * kap_c2 - B * rE
        dB = sp.diff(B, t) / (2 * t) - B / (2 * (1 + s)) + A * rK + B * rE
        m = c * (1 - s ** 2) / s
        return sp.cancel(A - m * dA), sp.cancel(B - m * dB)

    fa, fb, ga, gb = _elliptic_chain(k - 1)
    j = k - 1
    fa, fb = step(fa, fb, 1 / (2 * (j + sp.Rational(3, 4))))
    ga, gb = step(ga, gb, 1 / (2 * (j + sp.Rational(5, 4))))
    return fa, fb, ga, gb


@lru_cache(maxsize=None)
def _elliptic_forms_numeric(k: int):
    import sympy as sp

    return tuple(sp.lambdify(_t_symbol(), e, "math") for e in _elliptic_chain(k))


def elliptic_coefficient_forms(k: int, s: float) -> tuple[float, float]:
    """2F1(k+3/4, 1/2; 1; 1-s^2) and 2F1(k+5/4, 1/2; 1; 1-s^2) from elliptic integrals."""
    if k < 0:
        raise ValueError("k must be non-negative")
    s = float(s)
    if not 0.0 < s < 1.0:
        raise DomainError("the elliptic forms need 0 < s < 1")
    k1, k1c = _kappa1(s)
    Kv = float(ellip_K(k1, k1c))
    Ev = float(ellip_E(k1, k1c))
    fa, fb, ga, gb = _elliptic_forms_numeric(int(k))
    t = math.sqrt(s)
    pref = 2.0 * math.sqrt(2.0) / math.pi / math.sqrt(1.0 + s)
    return pref * (fa(t) * Kv + fb(t) * Ev), pref * (ga(t) * Kv + gb(t) * Ev)


# ---------------------------------------------------------------------------
# algebraic link between the Hertz amplitude and the RS plane waves
# ---------------------------------------------------------------------------

def rs_from_hertz_check(k, sigma: int = 1) -> float:
    """Relative deviation of k x (i |k| h - sigma k x h) from (|k|/2)^(1/2)(E1 + i sigma E2).

    With h = -(1/sqrt2) sigma / (|k|^(1/2) k_perp) e3 (hbar c = 1) the
    combination k x (i |k| h - sigma k x h) reproduces the RS plane-wave
    amplitude exactly.
    """
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    k = np.asarray(k, dtype=float)
    frame = standard_frame(k)
    kn = float(np.linalg.norm(k))
    kperp = math.hypot(k[0], k[1])
    h = -sigma / (math.sqrt(2.0) * math.sqrt(kn) * kperp) * E3
    lhs = np.cross(k, 1j * kn * h - sigma * np.cross(k, h))
    rhs = math.sqrt(0.5 * kn) * (frame.E1 + 1j * sigma * frame.E2)
    return float(np.max(np.abs(lhs - rhs)) / max(np.max(np.abs(rhs)), 1e-300))
