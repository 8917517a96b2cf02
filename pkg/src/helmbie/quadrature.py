"""Kernel-splitting quadrature for singular and near-singular panel integrals.

On a straight panel parameterized by the abscissa tau, the squared
distance to any target T factors exactly:

    r(tau)^2 = J^2 [ (tau - mu)^2 + nu^2 ],

with mu the foot of the perpendicular from T, nu = |signed distance| / J
and J = sqrt(1 + slope^2).  Every kernel in play then splits into

    c_P(tau) * 1/((tau-mu)^2 + nu^2)        dipole part (H1 pole)
  + c_L(tau) * 0.5*ln((tau-mu)^2 + nu^2)    logarithmic part
  + S(tau)                                  smooth remainder,

where the c and S factors are entire in r^2 and evaluated at the panel's
Gauss nodes.  The dipole and log parts are integrated with closed-form
moments against the panel's cubic Lagrange interpolation (exact for
polynomial factors up to the Gauss degree), the remainder with the plain
Gauss rule.  The construction is uniformly accurate in nu, which covers
self panels (nu = 0), panels adjacent across corners, mirror-image
panels near the flat line, and nontangential boundary approach.
"""

from __future__ import annotations

import numpy as np

from .special import _h_both, h1_split_parts, log_split_h0

NEAR_RATIO = 4.0  # target within NEAR_RATIO panel arc lengths => split quadrature


def _log_antideriv(q: int, t: float, nu: float) -> float:
    """Antiderivative of t^q * 0.5*ln(t^2 + nu^2) at t (nu >= 0)."""
    tt = t * t + nu * nu
    if tt == 0.0:
        return 0.0
    half_ln = 0.5 * np.log(tt)
    if q == 0:
        v = t * half_ln - t
        if nu > 0.0:
            v += nu * np.arctan(t / nu)
        return v
    if q == 1:
        return 0.25 * tt * np.log(tt) - 0.25 * t * t
    if q == 2:
        v = (t**3 / 3.0) * half_ln - (t**3 / 9.0 - nu * nu * t / 3.0)
        if nu > 0.0:
            v -= (nu**3 / 3.0) * np.arctan(t / nu)
        return v
    if q == 3:
        v = (t**4 / 4.0) * half_ln - t**4 / 16.0 + nu * nu * t * t / 8.0
        if nu > 0.0:
            v -= (nu**4 / 8.0) * np.log(tt)
        return v
    raise ValueError("q out of range")


def _pois_antideriv(q: int, t: float, nu: float) -> float:
    """Antiderivative of t^q / (t^2 + nu^2) at t (nu > 0)."""
    if q == 0:
        return np.arctan(t / nu) / nu
    if q == 1:
        return 0.5 * np.log(t * t + nu * nu)
    if q == 2:
        return t - nu * np.arctan(t / nu)
    if q == 3:
        return 0.5 * t * t - 0.5 * nu * nu * np.log(t * t + nu * nu)
    if q == 4:
        return t**3 / 3.0 - nu * nu * t + nu**3 * np.arctan(t / nu)
    raise ValueError("q out of range")


def singular_moments(ta: float, tb: float, nu: float, n_basis: int):
    """Moments of the log and Poisson factors against t^q on [ta, tb].

    Returns (log_moments, pois_moments); the Poisson moments run one
    order higher (they also serve the Hilbert factor t/(t^2+nu^2)) and
    are None when nu == 0, where the dipole coefficient of the kernels
    vanishes identically and only the odd/Hilbert part survives.
    """
    mlog = np.array([_log_antideriv(q, tb, nu) - _log_antideriv(q, ta, nu)
                     for q in range(n_basis)])
    if nu == 0.0:
        return mlog, None
    mpois = np.array([_pois_antideriv(q, tb, nu) - _pois_antideriv(q, ta, nu)
                      for q in range(n_basis + 1)])
    return mlog, mpois


def _hilbert_moments_nu0(ta: float, tb: float, n_basis: int):
    """Moments of 1/t against t^q (principal value across t = 0 when the
    interval straddles it): integral of t^{q-1}."""
    out = np.empty(n_basis)
    # q = 0: PV of integral dt/t
    out[0] = np.log(abs(tb)) - np.log(abs(ta)) if ta != 0 and tb != 0 else 0.0
    for q in range(1, n_basis):
        out[q] = (tb**q - ta**q) / q
    return out


def product_weights(t_nodes: np.ndarray, moments: np.ndarray) -> np.ndarray:
    """Weights w with sum_j w_j g(t_j) = integral of g * factor for
    polynomial g up to degree len(t_nodes)-1, given the factor's monomial
    moments.  Solved in a scaled basis for conditioning."""
    scale = max(np.max(np.abs(t_nodes)), 1e-300)
    n = len(t_nodes)
    v = np.vander(t_nodes / scale, n, increasing=True).T
    rhs = moments / scale ** np.arange(n)
    return np.linalg.solve(v, rhs)


def panel_geometry(target, xa, xb, ya, slope):
    """Foot parameter mu, signed offset delta (along the panel's upward
    normal), and nu = |delta|/J for a straight panel starting at (xa, ya)."""
    jac2 = 1.0 + slope * slope
    tx, ty = float(target[0]), float(target[1])
    mu = (tx + slope * (ty - ya) + slope * slope * xa) / jac2
    jac = np.sqrt(jac2)
    delta = (-slope * (tx - xa) + (ty - ya)) / jac
    return mu, delta, abs(delta) / jac


def panel_row(target, xa, xb, ya, slope, gauss_x, gauss_w, k, kind, nu_vec=None):
    """Effective nodal weights for one near/singular panel integral.

    kind "single": Phi(k |T - P(tau)|)
    kind "dlp":    d/dn(P) Phi  (panel normal; constant offset factor)
    kind "grad":   grad_T Phi . nu_vec  (affine offset factor)

    Returns a (g,) complex array w such that w @ density_nodal
    approximates the panel's contribution including the arc measure.
    """
    jac = np.sqrt(1.0 + slope * slope)
    mu, delta, nu = panel_geometry(target, xa, xb, ya, slope)
    half = 0.5 * (xb - xa)
    taus = 0.5 * (xa + xb) + half * gauss_x
    w_gauss = half * gauss_w
    t_nodes = taus - mu
    r = jac * np.sqrt(t_nodes**2 + nu**2)
    z = np.asarray(k * r, dtype=complex)

    mlog, mpois = singular_moments(xa - mu, xb - mu, nu, len(taus))
    w_log = product_weights(t_nodes, mlog)

    ln_kj = np.log(k) + np.log(jac)  # complex log for complex k

    if kind == "single":
        log_coeff, regular = log_split_h0(z)
        c_log = 0.25j * log_coeff                     # -(1/2pi) J0(kr)
        smooth = 0.25j * (log_coeff * ln_kj + regular)
        return (w_log * c_log + w_gauss * smooth) * jac

    # Offset factor of the dipole kernels is exactly affine in tau:
    # d(tau) = d0 + d1 * (tau - mu).  The constant and linear parts are
    # integrated with their own exact moments (Poisson resp. Hilbert
    # factor); lumping them into one interpolated product would lose
    # O(1) accuracy as nu -> 0 because the dipole mass ~pi/nu
    # concentrates at the foot point.
    if kind == "dlp":
        d0, d1 = -delta, 0.0
    elif kind == "grad":
        py_mu = ya + slope * (mu - xa)
        d0 = (target[0] - mu) * nu_vec[0] + (target[1] - py_mu) * nu_vec[1]
        d1 = -(nu_vec[0] + slope * nu_vec[1])
    else:
        raise ValueError(f"unknown kind {kind!r}")
    d_fac = d0 + d1 * t_nodes

    j1_over_z, r1_over_z = h1_split_parts(z)
    k2 = k * k
    c_log = (k2 / (2.0 * np.pi)) * d_fac * j1_over_z
    smooth = c_log * ln_kj - 0.25j * k2 * d_fac * r1_over_z
    out = w_log * c_log + w_gauss * smooth

    dip_scale = -1.0 / (2.0 * np.pi * jac * jac)
    if mpois is not None:
        w_pois = product_weights(t_nodes, mpois[: len(taus)])
        out = out + (d0 * dip_scale) * w_pois
        if d1 != 0.0:
            w_hilb = product_weights(t_nodes, mpois[1: len(taus) + 1])
            out = out + (d1 * dip_scale) * w_hilb
    elif d1 != 0.0:
        w_hilb = product_weights(
            t_nodes, _hilbert_moments_nu0(xa - mu, xb - mu, len(taus)))
        out = out + (d1 * dip_scale) * w_hilb
    return out * jac


def plain_kernel(targets, pts, k, kind, panel_normals=None, nu_vecs=None):
    """Vectorized far-field kernels K(T_i, P_j) (no weights, no images).

    targets (m,2), pts (n,2); kind as in panel_row.  For "dlp",
    panel_normals are per-source-node normals; for "grad", nu_vecs are
    per-target direction vectors.
    """
    dx = targets[:, 0][:, None] - pts[:, 0][None, :]
    dy = targets[:, 1][:, None] - pts[:, 1][None, :]
    r = np.hypot(dx, dy)
    safe = np.where(r == 0.0, 1.0, r)
    z = np.asarray(k * safe, dtype=complex)
    h0, h1 = _h_both(z)
    if kind == "single":
        out = 0.25j * h0
    elif kind == "dlp":
        dn = -(dx * panel_normals[:, 0][None, :] + dy * panel_normals[:, 1][None, :])
        out = -0.25j * k * h1 * dn / safe
    elif kind == "grad":
        dn = dx * nu_vecs[:, 0][:, None] + dy * nu_vecs[:, 1][:, None]
        out = -0.25j * k * h1 * dn / safe
    else:
        raise ValueError(f"unknown kind {kind!r}")
    out[r == 0.0] = 0.0
    return out


def segment_distance(targets, ax, ay, bx, by):
    """Distances from targets (m,2) to segments (p,) given by endpoints."""
    ex = bx - ax
    ey = by - ay
    ee = ex * ex + ey * ey
    px = targets[:, 0][:, None] - ax[None, :]
    py = targets[:, 1][:, None] - ay[None, :]
    s = np.clip((px * ex[None, :] + py * ey[None, :]) / ee[None, :], 0.0, 1.0)
    qx = px - s * ex[None, :]
    qy = py - s * ey[None, :]
    return np.hypot(qx, qy)
