"""Half-plane image kernels, reference solutions, and manufactured sources.

All fields are built from the outgoing fundamental solution
Phi(z) = (i/4) H0^(1)(z) and its mirror image across the line y = 0:

    G1(k; M, P) = Phi(k|M-P|) - Phi(k|M-P*|)   (vanishes on y = 0)
    G2(k; M, P) = Phi(k|M-P|) + Phi(k|M-P*|)   (y-derivative vanishes on y = 0)

with P* the reflection of P.  Gradients use H0' = -H1 exactly; no finite
differences anywhere in production code.

Sign conventions (fixed once, used everywhere): time factor e^{-i omega t};
plane waves arrive moving downward, with incidence angle theta measured
from the vertical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints, InvalidWavenumber, SourceInsideDomain
from .geometry import BoundaryProfile, eval_height
from .special import _h_both


@dataclass(frozen=True)
class Wavenumber:
    """Wavenumber k with Re k > 0 and Im k >= 0."""

    k: complex

    def __post_init__(self):
        k = complex(self.k)
        if not (k.real > 0.0 and k.imag >= 0.0):
            raise InvalidWavenumber(f"need Re k > 0 and Im k >= 0, got {k}")
        object.__setattr__(self, "k", k)

    @property
    def wavelength(self) -> float:
        return 2.0 * np.pi / self.k.real

    @property
    def is_real(self) -> bool:
        return self.k.imag == 0.0


@dataclass(frozen=True)
class PlaneWave:
    """Downgoing plane wave, angle (radians) measured from the vertical."""

    angle_from_vertical: float = 0.0

    def __post_init__(self):
        if not abs(self.angle_from_vertical) < 0.5 * np.pi:
            raise ValueError("plane wave must propagate downward (|theta| < pi/2)")


@dataclass(frozen=True)
class PointSource:
    """Manufactured point source below the boundary bump."""

    location: tuple[float, float]


@dataclass(frozen=True)
class ExplicitData:
    """Boundary data samples (f or g per the problem's bc kind) at mesh nodes."""

    values: np.ndarray


def _phi(k: complex, r):
    """(i/4) H0^(1)(k r), vectorized."""
    h0, _ = _h_both(np.asarray(k * r, dtype=complex))
    return 0.25j * h0


def _phi_pair(k: complex, r):
    """Phi and the radial factor (d Phi / dr) / r = -(ik/4) H1(kr) / r."""
    z = np.asarray(k * r, dtype=complex)
    h0, h1 = _h_both(z)
    return 0.25j * h0, -0.25j * k * h1 / np.asarray(r)


def _mirror(p):
    q = np.array(p, dtype=float)
    q[..., 1] = -q[..., 1]
    return q


def greens(m: int, k: Wavenumber, M, P) -> complex:
    """Image Green's function G_m(k; M, P), m = 1 Dirichlet / 2 Neumann."""
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")
    M = np.asarray(M, dtype=float)
    P = np.asarray(P, dtype=float)
    r = float(np.hypot(*(M - P)))
    rs = float(np.hypot(*(M - _mirror(P))))
    if r == 0.0 or rs == 0.0:
        raise CoincidentPoints("M coincides with P or with its mirror image")
    sign = -1.0 if m == 1 else 1.0
    return complex(_phi(k.k, r) + sign * _phi(k.k, rs))


def dgreens(m: int, wrt: str, k: Wavenumber, M, P, normal) -> complex:
    """Directional derivative of G_m along `normal` at the point named by
    `wrt` ("M" or "P"), via the H1 chain rule."""
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")
    if wrt not in ("M", "P"):
        raise ValueError("wrt must be 'M' or 'P'")
    M = np.asarray(M, dtype=float)
    P = np.asarray(P, dtype=float)
    n = np.asarray(normal, dtype=float)
    d = M - P
    r = float(np.hypot(*d))
    ds = M - _mirror(P)           # equals (M* - P) mirrored; |ds| = r*
    rs = float(np.hypot(*ds))
    if r == 0.0 or rs == 0.0:
        raise CoincidentPoints("M coincides with P or with its mirror image")
    kk = k.k
    _, f_r = _phi_pair(kk, r)     # (dPhi/dr)/r at r
    _, f_rs = _phi_pair(kk, rs)
    sign = -1.0 if m == 1 else 1.0
    if wrt == "M":
        # grad_M |M-P| = d/r;  grad_M |M-P*| = ds/rs
        return complex(f_r * (d @ n) + sign * f_rs * (ds @ n))
    # grad_P |M-P| = -d/r;  grad_P |M-P*| = (P-M*)/rs and P-M* = -(M-P*) mirrored
    ds_p = _mirror(ds)            # P - M* = mirror of (M - P*) with a sign flip in y only
    return complex(f_r * (-d @ n) + sign * f_rs * (-ds_p @ n))


def reference_halfplane(bc: str, k: Wavenumber, theta: float, M):
    """Half-plane solution for a downgoing plane wave.

    Returns (value, y_derivative).  Dirichlet: u~ = down - up vanishes on
    y = 0; Neumann: v~ = down + up has vanishing y-derivative there.
    Both satisfy the Helmholtz equation exactly.
    """
    M = np.asarray(M, dtype=float)
    x, y = M[..., 0], M[..., 1]
    kk = k.k
    down = np.exp(1j * kk * (x * np.sin(theta) - y * np.cos(theta)))
    up = np.exp(1j * kk * (x * np.sin(theta) + y * np.cos(theta)))
    if bc == "dirichlet":
        return down - up, -1j * kk * np.cos(theta) * (down + up)
    if bc == "neumann":
        return down + up, -1j * kk * np.cos(theta) * (down - up)
    raise ValueError("bc must be 'dirichlet' or 'neumann'")


def reference_halfplane_gradient(bc: str, k: Wavenumber, theta: float, M):
    """(d/dx, d/dy) of the half-plane reference solution."""
    M = np.asarray(M, dtype=float)
    x, y = M[..., 0], M[..., 1]
    kk = k.k
    down = np.exp(1j * kk * (x * np.sin(theta) - y * np.cos(theta)))
    up = np.exp(1j * kk * (x * np.sin(theta) + y * np.cos(theta)))
    s = -1.0 if bc == "dirichlet" else 1.0
    if bc not in ("dirichlet", "neumann"):
        raise ValueError("bc must be 'dirichlet' or 'neumann'")
    gx = 1j * kk * np.sin(theta) * (down + s * up)
    gy = 1j * kk * np.cos(theta) * (-down + s * up)
    return gx, gy


def _check_source(profile: BoundaryProfile, s_pt):
    x0, y0 = float(s_pt[0]), float(s_pt[1])
    if y0 >= 0.0 or eval_height(profile, x0) <= -y0:
        raise SourceInsideDomain(
            "need y0 < 0 and h(x0) > -y0 so the source and its mirror sit "
            "outside the domain")


def point_source_oracle(bc: str, k: Wavenumber, source, M,
                        profile: BoundaryProfile | None = None):
    """Manufactured radiating field: image pair of point sources.

    Dirichlet: Phi(k|M-S|) - Phi(k|M-S*|); Neumann: the sum.  Regular in
    the domain, outgoing, and vanishing (resp. with vanishing normal
    derivative) on the flat boundary parts.  When `profile` is given the
    source placement precondition is enforced.
    """
    if profile is not None:
        _check_source(profile, source)
    M = np.asarray(M, dtype=float)
    S = np.asarray(source, dtype=float)
    r = np.hypot(M[..., 0] - S[0], M[..., 1] - S[1])
    rs = np.hypot(M[..., 0] - S[0], M[..., 1] + S[1])
    sign = -1.0 if bc == "dirichlet" else 1.0
    return _phi(k.k, r) + sign * _phi(k.k, rs)


def point_source_gradient(bc: str, k: Wavenumber, source, M):
    """(d/dx, d/dy) of the manufactured field with respect to M."""
    M = np.asarray(M, dtype=float)
    S = np.asarray(source, dtype=float)
    dx, dy = M[..., 0] - S[0], M[..., 1] - S[1]
    dys = M[..., 1] + S[1]
    r = np.hypot(dx, dy)
    rs = np.hypot(dx, dys)
    _, f_r = _phi_pair(k.k, r)
    _, f_rs = _phi_pair(k.k, rs)
    sign = -1.0 if bc == "dirichlet" else 1.0
    gx = f_r * dx + sign * f_rs * dx
    gy = f_r * dy + sign * f_rs * dys
    return gx, gy
