"""Real-domain special functions used throughout the package.

Complete elliptic integrals are computed with the arithmetic-geometric mean,
the Gauss hypergeometric function with a direct series plus a small set of
quadratic transformations, and the modified Bessel function K_nu from its
integral representation.  Everything works in dimensionless units.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as _sp

__all__ = [
    "DomainError",
    "ConvergenceError",
    "ellip_K",
    "ellip_E",
    "ellip_K_minus_E",
    "ellip_K_prime",
    "ellip_E_prime",
    "gauss_2f1",
    "bessel_J",
    "bessel_Kmod",
    "gamma_fn",
    "rgamma",
    "K_HALF",
    "gl_panels",
]


class DomainError(ValueError):
    """Argument outside the domain where a function is defined or supported."""


class ConvergenceError(RuntimeError):
    """A series or quadrature exhausted its budget without converging."""


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


def gl_panels(edges, order: int = 20) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of composite Gauss-Legendre rules on consecutive panels."""
    edges = np.asarray(edges, dtype=float)
    x0, w0 = _gauss_legendre(order)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x0[None, :]).ravel()
    weights = (half[:, None] * w0[None, :]).ravel()
    return nodes, weights


# ---------------------------------------------------------------------------
# complete elliptic integrals
# ---------------------------------------------------------------------------

def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _complement(kappa, kc):
    if kc is None:
        return np.sqrt(np.clip((1.0 - kappa) * (1.0 + kappa), 0.0, None))
    return np.asarray(kc, dtype=float)


def _agm(a, b):
    """AGM of arrays a, b together with the sum of 2^(n-1) c_n^2, n >= 1."""
    a = np.array(a, dtype=float, copy=True)
    b = np.array(b, dtype=float, copy=True)
    acc = np.zeros_like(a)
    weight = 0.5
    for _ in range(64):
        c = 0.5 * (a - b)
        weight *= 2.0
        acc += weight * c * c
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        if np.all(np.abs(a - b) <= 4e-16 * np.abs(a)):
            c = 0.5 * (a - b)
            acc += 2.0 * weight * c * c
            return a, acc
    raise ConvergenceError("AGM iteration did not converge")


def _check_modulus(kappa, allow_one: bool, kc=None):
    if np.any(np.isnan(kappa)):
        raise DomainError("modulus is NaN")
    if np.any(kappa < 0.0):
        raise DomainError("modulus must be non-negative")
    if kc is not None:
        # an explicit complement decides; kappa itself may have rounded to 1
        kcv = np.asarray(kc, dtype=float)
        if np.any(np.isnan(kcv)) or np.any(kcv < 0.0) or np.any(kappa > 1.0):
            raise DomainError("modulus must lie in [0, 1]")
        if not allow_one and np.any(kcv == 0.0):
            raise DomainError("K(kappa) diverges at kappa = 1")
        return
    if allow_one:
        if np.any(kappa > 1.0):
            raise DomainError("modulus must not exceed 1")
    elif np.any(kappa >= 1.0):
        raise DomainError("K(kappa) diverges at kappa = 1")


def ellip_K(kappa, kc=None):
    """Complete elliptic integral of the first kind K(kappa).

    ``kc`` may carry the complementary modulus sqrt(1 - kappa^2) when the
    caller knows it more accurately than it can be recomputed (near kappa = 1).
    """
    k, scalar = _as_array(kappa)
    _check_modulus(k, allow_one=False, kc=kc)
    kcv = _complement(k, kc)
    a, _ = _agm(np.ones_like(k), kcv * np.ones_like(k))
    out = 0.5 * math.pi / a
    return float(out) if scalar else out


def ellip_E(kappa, kc=None):
    """Complete elliptic integral of the second kind E(kappa); E(1) = 1."""
    k, scalar = _as_array(kappa)
    _check_modulus(k, allow_one=True, kc=kc)
    kcv = _complement(k, kc) * np.ones_like(k)
    one = kcv <= 0.0
    kk = np.where(one, 0.5, k)
    kcc = np.where(one, math.sqrt(0.75), kcv)
    a, acc = _agm(np.ones_like(k), kcc)
    K = 0.5 * math.pi / a
    out = K * (1.0 - 0.5 * kk * kk - acc)
    out = np.where(one, 1.0, out)
    return float(out) if scalar else out


def _series_coeffs(n_terms: int) -> np.ndarray:
    # squares of (2n)! / (4^n n!^2)
    c = np.empty(n_terms)
    c[0] = 1.0
    for n in range(1, n_terms):
        c[n] = c[n - 1] * ((2 * n - 1) / (2 * n)) ** 2
    return c


_SERIES = _series_coeffs(60)
_SMALL_K = 0.3


def ellip_K_minus_E(kappa, kc=None):
    """K(kappa) - E(kappa) without cancellation at small modulus."""
    k, scalar = _as_array(kappa)
    _check_modulus(k, allow_one=False, kc=kc)
    n = np.arange(1, _SERIES.size)
    small = k < _SMALL_K
    ks = np.where(small, k, 0.0)
    terms = _SERIES[1:, None] * (2 * n / (2 * n - 1.0))[:, None] * (ks.ravel()[None, :] ** 2) ** n[:, None]
    ser = 0.5 * math.pi * terms.sum(axis=0).reshape(k.shape)
    big = np.where(small, 0.5, k)
    kcb = None if kc is None else np.where(small, math.sqrt(0.75), kc)
    direct = ellip_K(big, kcb) - ellip_E(big, kcb)
    out = np.where(small, ser, direct)
    return float(out) if scalar else out


def ellip_K_prime(kappa, kc=None):
    """dK/dkappa = (E - (1 - kappa^2) K) / (kappa (1 - kappa^2)); 0 at kappa = 0."""
    k, scalar = _as_array(kappa)
    _check_modulus(k, allow_one=False, kc=kc)
    kcv = _complement(k, kc) * np.ones_like(k)
    kc2 = kcv * kcv
    safe = np.where(k > 0.0, k, 1.0)
    num = k * k * ellip_K(k, kcv) - ellip_K_minus_E(k, kcv)
    out = np.where(k > 0.0, num / (safe * kc2), 0.0)
    return float(out) if scalar else out


def ellip_E_prime(kappa, kc=None):
    """dE/dkappa = (E - K) / kappa; 0 at kappa = 0."""
    k, scalar = _as_array(kappa)
    _check_modulus(k, allow_one=False)
    safe = np.where(k > 0.0, k, 1.0)
    out = np.where(k > 0.0, -ellip_K_minus_E(k, kc) / safe, 0.0)
    return float(out) if scalar else out


K_HALF = ellip_K(math.sqrt(0.5))


# ---------------------------------------------------------------------------
# Gauss hypergeometric function
# ---------------------------------------------------------------------------

_MAX_TERMS = 2_000_000
_CHUNK = 4096


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def _series(a: float, b: float, c: float, z: float, max_terms: int) -> float:
    """Direct summation of the defining series, in vectorized chunks."""
    if z == 0.0:
        return 1.0
    total = 1.0
    last = 1.0
    start = 0
    while start < max_terms:
        j = np.arange(start, start + _CHUNK, dtype=float)
        ratio = (a + j) * (b + j) / ((c + j) * (1.0 + j)) * z
        terms = last * np.cumprod(ratio)
        chunk_sum = float(np.sum(terms))
        total += chunk_sum
        last = float(terms[-1])
        if last == 0.0:
            return total
        tail_ratio = max(abs(float(ratio[-1])), abs(z))
        if tail_ratio < 1.0:
            bound = abs(last) * tail_ratio / (1.0 - tail_ratio)
            if bound <= 1e-17 * abs(total):
                return total
        start += _CHUNK
    raise ConvergenceError(f"2F1({a},{b};{c};{z}) series budget exhausted")


def gauss_2f1(a: float, b: float, c: float, z: float, *, one_minus_z: float | None = None,
              max_terms: int = _MAX_TERMS) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real arguments.

    For |z| <= 1/2 the defining series is summed directly.  Larger arguments
    are only supported for the families with c = 1 and one parameter equal
    to 1/2, which are mapped by quadratic transformations into a regime where
    every series term has one sign.  ``one_minus_z`` lets callers pass
    1 - z exactly (for instance cos^2 theta when z = sin^2 theta).
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    if _is_nonpositive_int(c):
        raise DomainError("c must not be zero or a negative integer")
    w = (1.0 - z) if one_minus_z is None else float(one_minus_z)
    if z > 1.0 or w < 0.0:
        raise DomainError("z must not exceed 1")
    if w == 0.0:
        if c - a - b <= 0:
            raise DomainError("2F1 diverges at z = 1 when c - a - b <= 0")
        return gamma_fn(c) * gamma_fn(c - a - b) * rgamma(c - a) * rgamma(c - b)
    if -0.5 <= z <= 0.5:
        return _series(a, b, c, z, max_terms)
    if b != 0.5 and a == 0.5:
        a, b = b, a
    if c != 1.0 or b != 0.5:
        raise DomainError(f"no transformation path for 2F1({a},{b};{c};z) at z = {z}")
    if z < 0.0:
        # Pfaff: F(a, 1/2; 1; z) = (1 - z)^(-1/2) F(1 - a, 1/2; 1; z / (z - 1))
        return w ** -0.5 * gauss_2f1(1.0 - a, 0.5, 1.0, z / (z - 1.0), one_minus_z=1.0 / w,
                                     max_terms=max_terms)
    # quadratic map: F(a, 1/2; 1; 4x/(1+x)^2) = (1+x)^(2a) F(a, a; 1; x^2)
    sw = math.sqrt(w)
    x = (1.0 - sw) / (1.0 + sw)
    u = x * x
    u_c = 4.0 * sw / (1.0 + sw) ** 2
    return (1.0 + x) ** (2.0 * a) * _f_aa1(a, u, u_c, max_terms)


def _f_aa1(a: float, u: float, u_c: float, max_terms: int) -> float:
    """2F1(a, a; 1; u) for 0 <= u < 1 given u_c = 1 - u."""
    if u <= 0.5:
        return _series(a, a, 1.0, u, max_terms)
    if a == 0.5:
        return gauss_2f1(0.5, 0.5, 1.0, u, one_minus_z=u_c, max_terms=max_terms)
    if a == 0.25:
        # F(a, b; a+b+1/2; 4y(1-y)) = F(2a, 2b; a+b+1/2; y)
        y = 0.5 * (1.0 - math.sqrt(u_c))
        return gauss_2f1(0.5, 0.5, 1.0, y, one_minus_z=1.0 - y, max_terms=max_terms)
    # every term of the series carries the sign of a^2 > 0 from j >= 1 on
    return _series(a, a, 1.0, u, max_terms)


# ---------------------------------------------------------------------------
# Bessel and gamma functions
# ---------------------------------------------------------------------------

def bessel_J(order: int, x):
    """Bessel function of the first kind J_0 or J_1."""
    if order == 0:
        return _sp.j0(x)
    if order == 1:
        return _sp.j1(x)
    raise DomainError("only orders 0 and 1 are provided")


def _kmod_scalar(nu: float, x: float, order: int) -> float:
    t_max = math.asinh(50.0 / x) + 5.0
    width = min(0.5, 1.0 / math.sqrt(x))
    n_pan = max(4, int(math.ceil(t_max / width)))
    t, w = gl_panels(np.linspace(0.0, t_max, n_pan + 1), order)
    f = np.exp(-x * (np.cosh(t) - 1.0)) * np.cosh(nu * t)
    return math.exp(-x) * float(np.dot(w, f))


def bessel_Kmod(nu: float, x, order: int = 20):
    """Modified Bessel function K_nu(x), x > 0, from its integral representation

    K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
    """
    arr, scalar = _as_array(x)
    if np.any(arr <= 0.0):
        raise DomainError("K_nu requires x > 0")
    nu = abs(float(nu))
    out = np.array([_kmod_scalar(nu, float(v), order) for v in arr.ravel()]).reshape(arr.shape)
    return float(out) if scalar else out


def gamma_fn(x: float) -> float:
    """Gamma function for real x (poles raise DomainError)."""
    x = float(x)
    if x <= 0 and x.is_integer():
        raise DomainError("gamma function pole")
    return math.gamma(x)


def rgamma(x: float) -> float:
    """Reciprocal gamma function 1/Gamma(x), equal to 0 at the poles."""
    x = float(x)
    if x <= 0 and x.is_integer():
        return 0.0
    return 1.0 / math.gamma(x)
