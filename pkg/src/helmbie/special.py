"""Bessel and Hankel functions of orders 0 and 1, self-contained.

Evaluation strategy
-------------------
    |z| <= 13          ascending power series (complex-capable)
    real x >= 9        Chebyshev-fitted modulus/phase functions P, Q
                       (coefficients frozen in _pq_coeffs.py)
    complex |z| > 13   large-argument expansion of H_nu^(1) with the
                       phase factor exp(i(z - nu*pi/2 - pi/4))

The series/expansion hand-off at |z| = 13 keeps both sides at ~5e-12
relative error in double precision; the fitted real-axis path is
accurate to a few ulps.  Supported sector: arg z in [0, pi/2], which is
all the solver needs for arguments k*r with Im k >= 0 and r > 0.

Logarithmic splits H0 = c0(z) ln z + R0(z) and
H1 = c1(z) ln z - (2i/pi)/z + R1(z) are provided with the regular parts
computed directly from series (no cancellation near z = 0); the
singular quadrature rules are built on them.
"""

from __future__ import annotations

import numpy as np

from ._pq_coeffs import P0_CHEB, P1_CHEB, PQ_X_MIN, XQ0_CHEB, XQ1_CHEB
from .errors import NonPositiveArgument, UnsupportedSector, ZeroArgument

EULER_GAMMA = 0.57721566490153286061  # 20 digits

SERIES_RADIUS = 13.0
_N_SERIES = 42
_N_ASYM = 26

# Hook used by the verification harness's fault-injection check: scales the
# large-argument branches (real fitted path and complex expansion).
_large_arg_scale = 1.0

_LN2 = np.log(2.0)

# harmonic numbers H_0..H_{N}
_HARMONIC = np.concatenate([[0.0], np.cumsum(1.0 / np.arange(1, _N_SERIES + 2))])


def _asym_coeffs(nu: int, n: int) -> np.ndarray:
    # a_m(nu) = prod_{j=1..m} (4 nu^2 - (2j-1)^2) / (m! 8^m)
    a = np.empty(n)
    a[0] = 1.0
    for m in range(1, n):
        a[m] = a[m - 1] * (4.0 * nu * nu - (2 * m - 1) ** 2) / (8.0 * m)
    return a


_A0 = _asym_coeffs(0, _N_ASYM)
_A1 = _asym_coeffs(1, _N_ASYM)


# ---------------------------------------------------------------------------
# power series (valid |z| <= SERIES_RADIUS, any dtype)
# ---------------------------------------------------------------------------
def _j0_series(z):
    q = -0.25 * z * z
    term = np.ones_like(q)
    acc = term.copy()
    for m in range(1, _N_SERIES):
        term = term * q / (m * m)
        acc += term
    return acc


def _j1_series(z):
    # J1(z) = (z/2) * sum_m (-z^2/4)^m / (m! (m+1)!)
    q = -0.25 * z * z
    term = np.ones_like(q)
    acc = term.copy()
    for m in range(1, _N_SERIES):
        term = term * q / (m * (m + 1))
        acc += term
    return 0.5 * z * acc


def _j1_over_z_series(z):
    q = -0.25 * z * z
    term = np.ones_like(q)
    acc = term.copy()
    for m in range(1, _N_SERIES):
        term = term * q / (m * (m + 1))
        acc += term
    return 0.5 * acc


def _t0_series(z):
    # T0(z) = sum_{m>=1} (-1)^{m+1} H_m (z^2/4)^m / (m!)^2,
    # the series part of Y0 = (2/pi)[(ln(z/2)+gamma) J0 + T0].
    q = 0.25 * z * z
    term = np.ones_like(q)
    acc = np.zeros_like(q)
    for m in range(1, _N_SERIES):
        term = term * q / (m * m)
        acc += ((-1.0) ** (m + 1)) * _HARMONIC[m] * term
    return acc


def _s1_series(z):
    # S1(z) = sum_{m>=0} (H_m + H_{m+1} - 2 gamma) (-z^2/4)^m / (m! (m+1)!),
    # so that Y1 = (2/pi) ln(z/2) J1 - 2/(pi z) - (z/(2 pi)) S1.
    q = -0.25 * z * z
    term = np.ones_like(q)
    acc = (_HARMONIC[0] + _HARMONIC[1] - 2.0 * EULER_GAMMA) * term.copy()
    for m in range(1, _N_SERIES):
        term = term * q / (m * (m + 1))
        acc += (_HARMONIC[m] + _HARMONIC[m + 1] - 2.0 * EULER_GAMMA) * term
    return acc


def _h0_series(z):
    j0 = _j0_series(z)
    y0 = (2.0 / np.pi) * ((np.log(0.5 * z) + EULER_GAMMA) * j0 + _t0_series(z))
    return j0 + 1j * y0


def _h1_series(z):
    j1 = _j1_series(z)
    y1 = (2.0 / np.pi) * np.log(0.5 * z) * j1 - 2.0 / (np.pi * z) \
        - (z / (2.0 * np.pi)) * _s1_series(z)
    return j1 + 1j * y1


# ---------------------------------------------------------------------------
# real-axis fitted path (x >= PQ_X_MIN)
# ---------------------------------------------------------------------------
def _pq_real(nu: int, x):
    v = (PQ_X_MIN / x) ** 2
    u = 2.0 * v - 1.0
    if nu == 0:
        p = np.polynomial.chebyshev.chebval(u, P0_CHEB)
        q = np.polynomial.chebyshev.chebval(u, XQ0_CHEB) / x
    else:
        p = np.polynomial.chebyshev.chebval(u, P1_CHEB)
        q = np.polynomial.chebyshev.chebval(u, XQ1_CHEB) / x
    return p, q


def _jy_real_large(nu: int, x):
    p, q = _pq_real(nu, x)
    omega = x - 0.5 * nu * np.pi - 0.25 * np.pi
    amp = np.sqrt(2.0 / (np.pi * x)) * _large_arg_scale
    c, s = np.cos(omega), np.sin(omega)
    return amp * (p * c - q * s), amp * (p * s + q * c)


# ---------------------------------------------------------------------------
# complex large-argument expansion (usable for |z| >= ~11)
# ---------------------------------------------------------------------------
def _h_asym(nu: int, z):
    # Truncated at the per-point minimum term (the expansion is divergent;
    # summing past the smallest term only adds noise near |z| ~ 11-13).
    a = _A0 if nu == 0 else _A1
    zi = 1.0 / z
    term = np.ones_like(z)
    acc = term.copy()
    active = np.ones(z.shape, dtype=bool)
    prev = np.abs(term)
    for m in range(1, _N_ASYM):
        term = term * (1j * a[m] / a[m - 1]) * zi
        mag = np.abs(term)
        active &= mag < prev
        acc[active] += term[active]
        prev = mag
    omega = z - 0.5 * nu * np.pi - 0.25 * np.pi
    return np.sqrt(2.0 / (np.pi * z)) * np.exp(1j * omega) * acc * _large_arg_scale


_ASYM_RADIUS = 11.0
_N_TAYLOR = 90


def _series_imag_cap(az):
    # The ascending J/Y series loses ~e^{2 Im z} relative accuracy (H^(1) is
    # exponentially small up the sector while the series terms are not), and
    # its rounding floor also grows with |z|; keep it below 1e-10 relative.
    return 0.75 * (13.5 - az)


def _h_taylor_pocket(z):
    """H0, H1 for |z| < 11 with Im z > 5, where the ascending series for
    J + iY cancels catastrophically (H^(1) is exponentially small there).

    Taylor continuation of H0^(1) along the ray from an anchor on the
    |z| = 11 circle; coefficients follow from the Bessel ODE
    z w'' + w' + z w = 0, and H1 = -H0'.
    """
    z0 = _ASYM_RADIUS * z / np.abs(z)
    h0a = _h_asym(0, z0)
    h1a = _h_asym(1, z0)
    u = z - z0
    # t[n] = H0^{(n)}(z0) / n!
    t_prev2 = h0a
    t_prev1 = -h1a
    h0 = t_prev2 + t_prev1 * u
    h1 = -t_prev1.copy()
    upow = u.copy()
    t_n, t_n1 = t_prev2, t_prev1  # t_{n}, t_{n+1} trackers with n starting at 0
    t_nm1 = np.zeros_like(z)      # t_{n-1}; the n=0 recurrence drops this term
    for n in range(0, _N_TAYLOR):
        t_next = -((n + 1.0) ** 2 * t_n1 + z0 * t_n + t_nm1) / (z0 * (n + 2.0) * (n + 1.0))
        # H0 += t_{n+2} u^{n+2};  H1 = -H0' -> -= (n+2) t_{n+2} u^{n+1}
        h1 -= (n + 2.0) * t_next * upow
        upow = upow * u
        h0 += t_next * upow
        t_nm1, t_n, t_n1 = t_n, t_n1, t_next
    return h0, h1


def _j_asym(nu: int, z):
    # J_nu from the same coefficients; used only for log-split coefficients
    # at large |z| where cancellation is harmless.
    a = _A0 if nu == 0 else _A1
    m2 = np.arange(0, _N_ASYM, 2)
    m2p = np.arange(1, _N_ASYM, 2)
    zi2 = 1.0 / (z * z)
    p = np.zeros_like(z)
    for m in m2[::-1]:
        p = p * zi2 + ((-1.0) ** (m // 2)) * a[m]
    q = np.zeros_like(z)
    for m in m2p[::-1]:
        q = q * zi2 + ((-1.0) ** ((m - 1) // 2)) * a[m]
    q = q / z
    omega = z - 0.5 * nu * np.pi - 0.25 * np.pi
    return np.sqrt(2.0 / (np.pi * z)) * (p * np.cos(omega) - q * np.sin(omega))


# ---------------------------------------------------------------------------
# dispatchers
# ---------------------------------------------------------------------------
def _check_sector(z):
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ZeroArgument("Hankel function argument must be nonzero")
    tol = 1e-12 * np.abs(z)
    if np.any(z.real < -tol) or np.any(z.imag < -tol):
        raise UnsupportedSector("argument outside the sector arg z in [0, pi/2]")
    return z


def _h_both(z):
    """H0^(1)(z), H1^(1)(z) for a complex array, no validation."""
    z = np.asarray(z, dtype=complex)
    h0 = np.empty(z.shape, dtype=complex)
    h1 = np.empty(z.shape, dtype=complex)
    az = np.abs(z)
    real = (z.imag == 0) & (z.real > 0)
    m_pq = real & (az >= PQ_X_MIN)
    m_ser = ~m_pq & (az <= SERIES_RADIUS) & (z.imag <= _series_imag_cap(az))
    m_tay = ~m_pq & ~m_ser & (az < _ASYM_RADIUS)
    m_asy = ~m_pq & ~m_ser & ~m_tay
    if np.any(m_pq):
        x = z.real[m_pq]
        j0, y0 = _jy_real_large(0, x)
        j1, y1 = _jy_real_large(1, x)
        h0[m_pq] = j0 + 1j * y0
        h1[m_pq] = j1 + 1j * y1
    if np.any(m_ser):
        zs = z[m_ser]
        h0[m_ser] = _h0_series(zs)
        h1[m_ser] = _h1_series(zs)
    if np.any(m_tay):
        h0[m_tay], h1[m_tay] = _h_taylor_pocket(z[m_tay])
    if np.any(m_asy):
        za = z[m_asy]
        h0[m_asy] = _h_asym(0, za)
        h1[m_asy] = _h_asym(1, za)
    return h0, h1


def _j_both(z):
    """J0(z), J1(z) for a complex array (series or large-argument path)."""
    z = np.asarray(z, dtype=complex)
    j0 = np.empty(z.shape, dtype=complex)
    j1 = np.empty(z.shape, dtype=complex)
    small = np.abs(z) <= SERIES_RADIUS
    if np.any(small):
        zs = z[small]
        j0[small] = _j0_series(zs)
        j1[small] = _j1_series(zs)
    big = ~small
    if np.any(big):
        zb = z[big]
        real = (zb.imag == 0) & (zb.real > 0)
        j0b = np.empty(zb.shape, dtype=complex)
        j1b = np.empty(zb.shape, dtype=complex)
        if np.any(real):
            x = zb.real[real]
            j0b[real] = _jy_real_large(0, x)[0]
            j1b[real] = _jy_real_large(1, x)[0]
        if np.any(~real):
            j0b[~real] = _j_asym(0, zb[~real])
            j1b[~real] = _j_asym(1, zb[~real])
        j0[big] = j0b
        j1[big] = j1b
    return j0, j1


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------
def bessel_real(order: int, kind: str, x):
    """J or Y Bessel function of order 0 or 1 on the positive real axis.

    `kind` is "J" or "Y".  Y requires x > 0; J additionally admits x = 0
    (J0(0) = 1, J1(0) = 0).  Absolute error <= 1e-12 on (0, 500].
    """
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")
    if kind not in ("J", "Y"):
        raise ValueError("kind must be 'J' or 'Y'")
    x_arr = np.asarray(x, dtype=float)
    scalar = x_arr.ndim == 0
    x_arr = np.atleast_1d(x_arr)
    if kind == "Y":
        if np.any(x_arr <= 0.0):
            raise NonPositiveArgument("Y requires x > 0")
    elif np.any(x_arr < 0.0):
        raise NonPositiveArgument("J supported for x >= 0")
    out = np.empty(x_arr.shape)
    small = x_arr < PQ_X_MIN
    if np.any(small):
        xs = x_arr[small]
        if kind == "J":
            out[small] = _j0_series(xs) if order == 0 else _j1_series(xs)
        elif order == 0:
            out[small] = (2.0 / np.pi) * (
                (np.log(0.5 * xs) + EULER_GAMMA) * _j0_series(xs) + _t0_series(xs))
        else:
            out[small] = (2.0 / np.pi) * np.log(0.5 * xs) * _j1_series(xs) \
                - 2.0 / (np.pi * xs) - (xs / (2.0 * np.pi)) * _s1_series(xs)
    big = ~small
    if np.any(big):
        j, y = _jy_real_large(order, x_arr[big])
        out[big] = j if kind == "J" else y
    return float(out[0]) if scalar else out


def hankel1(order: int, z):
    """Hankel function of the first kind, order 0 or 1.

    Supports z with arg z in [0, pi/2], z != 0; relative error <= 1e-10
    for |z| in [1e-6, 500].
    """
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")
    z_arr = _check_sector(z)
    scalar = z_arr.ndim == 0
    z_arr = np.atleast_1d(z_arr)
    h0, h1 = _h_both(z_arr)
    out = h0 if order == 0 else h1
    return complex(out[0]) if scalar else out


def log_split_h0(z):
    """Split H0^(1)(z) = c(z) ln z + R(z) with c = (2i/pi) J0(z).

    Returns (c, R).  R is analytic at 0 with
    R(0) = 1 + (2i/pi)(gamma - ln 2); the reconstruction
    c*ln z + R matches hankel1(0, z) to 1e-12 relative.
    """
    z_arr = _check_sector(z)
    scalar = z_arr.ndim == 0
    z_arr = np.atleast_1d(z_arr)
    log_coeff = np.empty(z_arr.shape, dtype=complex)
    regular = np.empty(z_arr.shape, dtype=complex)
    small = np.abs(z_arr) <= SERIES_RADIUS
    if np.any(small):
        zs = z_arr[small]
        j0 = _j0_series(zs)
        log_coeff[small] = (2j / np.pi) * j0
        regular[small] = j0 * (1.0 + (2j / np.pi) * (EULER_GAMMA - _LN2)) \
            + (2j / np.pi) * _t0_series(zs)
    big = ~small
    if np.any(big):
        zb = z_arr[big]
        j0 = _j_both(zb)[0]
        h0 = _h_both(zb)[0]
        log_coeff[big] = (2j / np.pi) * j0
        regular[big] = h0 - log_coeff[big] * np.log(zb)
    if scalar:
        return complex(log_coeff[0]), complex(regular[0])
    return log_coeff, regular


def h1_split_parts(z):
    """Smooth ingredients of H1^(1)(z) = (2i/pi) J1(z) ln z - (2i/pi)/z + R1(z).

    Returns (J1(z)/z, R1(z)/z); both are even analytic functions of z,
    computable at z = 0 (values 1/2 and
    (1 - (2i/pi) ln 2)/2 - (i/(2 pi))(1 - 2 gamma)).  These feed the
    kernel-splitting quadrature for the dipole kernels.
    """
    z_arr = np.asarray(z, dtype=complex)
    scalar = z_arr.ndim == 0
    z_arr = np.atleast_1d(z_arr)
    j1z = np.empty(z_arr.shape, dtype=complex)
    r1z = np.empty(z_arr.shape, dtype=complex)
    small = np.abs(z_arr) <= SERIES_RADIUS
    if np.any(small):
        zs = z_arr[small]
        j1_over = _j1_over_z_series(zs)
        j1z[small] = j1_over
        # R1 = J1 (1 - (2i/pi) ln 2) - (i z /(2 pi)) S1(z)  =>  R1/z below
        r1z[small] = j1_over * (1.0 - (2j / np.pi) * _LN2) \
            - (1j / (2.0 * np.pi)) * _s1_series(zs)
    big = ~small
    if np.any(big):
        zb = z_arr[big]
        j1 = _j_both(zb)[1]
        h1 = _h_both(zb)[1]
        j1z[big] = j1 / zb
        r1z[big] = (h1 - (2j / np.pi) * j1 * np.log(zb) + (2j / np.pi) / zb) / zb
    if scalar:
        return complex(j1z[0]), complex(r1z[0])
    return j1z, r1z
