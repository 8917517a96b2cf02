"""Discrete potential operators on the perturbed boundary segment and the
second-kind solves.

Nystrom collocation at the mesh's per-panel Gauss nodes.  Matrix entries
carry the full quadrature action (weights x jacobian included), so the
discrete direct values are plain matrix-vector products.  Off-panel
pairs use the plain Gauss rule; self, adjacent, and mirror-image-near
pairs go through the kernel-splitting quadrature (quadrature.panel_row),
which is uniformly accurate down to zero target distance.

Boundary integral equations (with Phi = (i/4) H0^(1), normal pointing
into the domain, traces taken from the domain side):

    Dirichlet:  (+1/2 I + W) psi = f - u~          u = u~ + Wpot psi
    Neumann:    (-1/2 I + V') phi = g - dn v~      u = v~ + Vpot phi
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as sla

from .errors import (
    ExcitationMismatch,
    InvalidMesh,
    InvalidWavenumber,
    SingularSystem,
)
from .geometry import BoundaryMesh, BoundaryProfile
from .kernels import (
    ExplicitData,
    PlaneWave,
    PointSource,
    Wavenumber,
    point_source_gradient,
    point_source_oracle,
    reference_halfplane,
    reference_halfplane_gradient,
)
from .quadrature import NEAR_RATIO, panel_row, plain_kernel, segment_distance

OPERATOR_KINDS = ("V", "W", "Vprime")
BC_KINDS = ("dirichlet", "neumann")


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense discrete boundary operator (quadrature action included)."""

    kind: str
    entries: np.ndarray
    mesh: BoundaryMesh
    wavenumber: Wavenumber

    def __post_init__(self):
        n = self.mesh.n_nodes
        if self.entries.shape != (n, n):
            raise InvalidMesh("operator shape does not match the mesh")
        if not np.all(np.isfinite(self.entries)):
            raise InvalidMesh("operator has non-finite entries")


@dataclass(frozen=True)
class BieProblem:
    """One boundary-value problem instance over a meshed profile."""

    profile: BoundaryProfile
    mesh: BoundaryMesh
    wavenumber: Wavenumber
    bc: str
    excitation: object

    def __post_init__(self):
        if self.bc not in BC_KINDS:
            raise ExcitationMismatch(f"unknown bc kind {self.bc!r}")
        if isinstance(self.excitation, ExplicitData):
            if len(self.excitation.values) != self.mesh.n_nodes:
                raise ExcitationMismatch(
                    "explicit boundary data length does not match the mesh")
        elif not isinstance(self.excitation, (PlaneWave, PointSource)):
            raise ExcitationMismatch(
                "excitation must be PlaneWave, PointSource, or ExplicitData")


@dataclass(frozen=True)
class DensitySolution:
    """Solved boundary density with its solve diagnostics."""

    values: np.ndarray
    bc_kind: str
    residual_norm: float
    mesh: BoundaryMesh
    wavenumber: Wavenumber
    condition_estimate: float = float("nan")
    operator: OperatorMatrix = field(repr=False, default=None)


def _mirror_pts(pts: np.ndarray) -> np.ndarray:
    out = pts.copy()
    out[:, 1] = -out[:, 1]
    return out


def _near_mask(targets: np.ndarray, mesh: BoundaryMesh) -> np.ndarray:
    """(m, n_panels) bool: target within NEAR_RATIO panel arc lengths."""
    ax = mesh.panel_xa
    bx = mesh.panel_xb
    ay = mesh.panel_ya
    by = ay + mesh.panel_slope * (bx - ax)
    dist = segment_distance(targets, ax, ay, bx, by)
    return dist < NEAR_RATIO * mesh.panel_arc_lengths[None, :]


def _rows(mesh: BoundaryMesh, k: complex, kind: str, targets: np.ndarray,
          nu_vecs: np.ndarray | None = None) -> np.ndarray:
    """Quadrature rows of one operator kind for arbitrary targets.

    kind "V": G2 single layer; "W": d/dn(P) G1 double layer;
    "Vprime": d/d(nu_vec at target) of the G2 single layer.
    Entries include weights and jacobians; shape (len(targets), n_nodes).
    """
    pts = mesh.points
    normals = mesh.normals
    wj = mesh.weights * mesh.jacobians
    tgt_mirror = _mirror_pts(targets)

    if kind == "V":
        direct = plain_kernel(targets, pts, k, "single")
        image = plain_kernel(tgt_mirror, pts, k, "single")
        sign = 1.0
    elif kind == "W":
        direct = plain_kernel(targets, pts, k, "dlp", panel_normals=normals)
        image = plain_kernel(tgt_mirror, pts, k, "dlp", panel_normals=normals)
        sign = -1.0
    elif kind == "Vprime":
        direct = plain_kernel(targets, pts, k, "grad", nu_vecs=nu_vecs)
        image = plain_kernel(targets, _mirror_pts(pts), k, "grad", nu_vecs=nu_vecs)
        sign = 1.0
    else:
        raise ValueError(f"unknown operator kind {kind!r}")

    near_d = _near_mask(targets, mesh)
    near_i = _near_mask(tgt_mirror, mesh)
    gx, gw = mesh.gauss_ref_nodes, mesh.gauss_ref_weights
    for i, p in zip(*np.nonzero(near_d)):
        cols = mesh.panel_nodes(p)
        xa, xb = mesh.panel_xa[p], mesh.panel_xb[p]
        ya, sl = mesh.panel_ya[p], mesh.panel_slope[p]
        if kind == "V":
            direct[i, cols] = panel_row(targets[i], xa, xb, ya, sl, gx, gw, k, "single")
        elif kind == "W":
            direct[i, cols] = panel_row(targets[i], xa, xb, ya, sl, gx, gw, k, "dlp")
        else:
            direct[i, cols] = panel_row(targets[i], xa, xb, ya, sl, gx, gw, k,
                                        "grad", nu_vecs[i])
    for i, p in zip(*np.nonzero(near_i)):
        cols = mesh.panel_nodes(p)
        xa, xb = mesh.panel_xa[p], mesh.panel_xb[p]
        ya, sl = mesh.panel_ya[p], mesh.panel_slope[p]
        if kind == "V":
            image[i, cols] = panel_row(tgt_mirror[i], xa, xb, ya, sl, gx, gw, k, "single")
        elif kind == "W":
            image[i, cols] = panel_row(tgt_mirror[i], xa, xb, ya, sl, gx, gw, k, "dlp")
        else:
            image[i, cols] = panel_row(targets[i], xa, xb, -ya, -sl, gx, gw, k,
                                       "grad", nu_vecs[i])

    far_d = ~np.repeat(near_d, mesh.gauss_per_panel, axis=1)
    far_i = ~np.repeat(near_i, mesh.gauss_per_panel, axis=1)
    direct = np.where(far_d, direct * wj[None, :], direct)
    image = np.where(far_i, image * wj[None, :], image)
    return direct + sign * image


def assemble_operator(kind: str, k: Wavenumber, mesh: BoundaryMesh) -> OperatorMatrix:
    """Assemble the dense direct-value operator V, W, or V' on the mesh."""
    if kind not in OPERATOR_KINDS:
        raise ValueError(f"kind must be one of {OPERATOR_KINDS}")
    if mesh.n_nodes == 0:
        raise InvalidMesh("empty mesh")
    nu_vecs = mesh.normals if kind == "Vprime" else None
    entries = _rows(mesh, k.k, kind, mesh.points, nu_vecs)
    return OperatorMatrix(kind=kind, entries=entries, mesh=mesh, wavenumber=k)


def build_rhs(problem: BieProblem) -> np.ndarray:
    """Collocation right-hand side: boundary data minus the reference trace.

    Dirichlet: f - u~ at the nodes (plane wave: f = 0); Neumann:
    g - dn v~.  Manufactured point-source problems have no reference
    field, so the rhs is the oracle's own (normal-derivative) trace.
    """
    mesh = problem.mesh
    k = problem.wavenumber
    pts = mesh.points
    exc = problem.excitation
    if isinstance(exc, PlaneWave):
        theta = exc.angle_from_vertical
        if problem.bc == "dirichlet":
            value, _ = reference_halfplane("dirichlet", k, theta, pts)
            return -value
        gx, gy = reference_halfplane_gradient("neumann", k, theta, pts)
        return -(mesh.normals[:, 0] * gx + mesh.normals[:, 1] * gy)
    if isinstance(exc, PointSource):
        if problem.bc == "dirichlet":
            return np.asarray(point_source_oracle(
                "dirichlet", k, exc.location, pts, profile=problem.profile))
        gx, gy = point_source_gradient("neumann", k, exc.location, pts)
        # validate placement through the oracle's own precondition
        point_source_oracle("neumann", k, exc.location, pts[:1], profile=problem.profile)
        return mesh.normals[:, 0] * gx + mesh.normals[:, 1] * gy
    if isinstance(exc, ExplicitData):
        return np.asarray(exc.values, dtype=complex)
    raise ExcitationMismatch("unsupported excitation")


def _condition_estimate(a: np.ndarray, lu, piv) -> float:
    """1-norm condition estimate via LAPACK gecon on the LU factors."""
    anorm = np.linalg.norm(a, 1)
    gecon = sla.get_lapack_funcs("gecon", (a,))
    rcond, info = gecon(lu, anorm, norm="1")
    if info != 0 or rcond == 0.0:
        return float("inf")
    return float(1.0 / rcond)


def solve(problem: BieProblem, method: str = "direct",
          gmres_tol: float = 1e-10) -> DensitySolution:
    """Solve the second-kind boundary integral equation for the density.

    Dirichlet: (+1/2 I + W) psi = rhs; Neumann: (-1/2 I + V') phi = rhs.
    Dense LU by default; `method="gmres"` switches to the restarted
    iterative solve at `gmres_tol`.
    """
    k = problem.wavenumber
    if not (k.k.real > 0.0 and k.k.imag >= 0.0):
        raise InvalidWavenumber(f"unsupported wavenumber {k.k}")
    kind = "W" if problem.bc == "dirichlet" else "Vprime"
    sigma = 0.5 if problem.bc == "dirichlet" else -0.5
    op = assemble_operator(kind, k, problem.mesh)
    a = sigma * np.eye(problem.mesh.n_nodes, dtype=complex) + op.entries
    rhs = build_rhs(problem)

    if not np.any(rhs):
        return DensitySolution(values=np.zeros_like(rhs), bc_kind=problem.bc,
                               residual_norm=0.0, mesh=problem.mesh,
                               wavenumber=k, condition_estimate=1.0, operator=op)

    try:
        lu, piv = sla.lu_factor(a)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(f"LU factorization failed: {exc}") from exc
    cond = _condition_estimate(a, lu, piv)
    if not np.isfinite(cond) or cond > 1e14:
        raise SingularSystem(f"system numerically singular (cond ~ {cond:.3e})")

    if method == "direct":
        x = sla.lu_solve((lu, piv), rhs)
    elif method == "gmres":
        from scipy.sparse.linalg import LinearOperator, gmres

        pre = LinearOperator(a.shape, matvec=lambda v: sla.lu_solve((lu, piv), v))
        x, info = gmres(a, rhs, rtol=gmres_tol, atol=0.0, restart=50, M=pre)
        if info != 0:
            raise SingularSystem(f"gmres did not converge (info={info})")
    else:
        raise ValueError("method must be 'direct' or 'gmres'")

    residual = np.linalg.norm(a @ x - rhs) / np.linalg.norm(rhs)
    return DensitySolution(values=x, bc_kind=problem.bc, residual_norm=float(residual),
                           mesh=problem.mesh, wavenumber=k,
                           condition_estimate=cond, operator=op)
