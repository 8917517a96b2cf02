"""Boundary geometry: piecewise-linear profiles, graded panel meshes, and
corner-rounded (mollified) profile families.

The scatterer is the graph of a compactly supported piecewise-linear
height function h with h(0) = h(d) = 0; the solver domain is the region
above the graph.  Meshes carry per-node abscissa weights and the panel
jacobian sqrt(1 + h'^2), so that sum(weight * jacobian) is the exact
polyline arc length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    NonMonotoneX,
    NonZeroEndpoints,
    ProfileError,
    RadiusTooLarge,
    TooFewPanels,
    TooFewPoints,
)

CORNER_SLOPE_TOL = 1e-12
DEFAULT_GAUSS_PER_PANEL = 4
FILLET_SAMPLES = 17  # polyline samples per rounded corner (>= 16 required)


@dataclass(frozen=True)
class BoundaryProfile:
    """Piecewise-linear Lipschitz height profile supported on [0, d]."""

    breakpoints: tuple[tuple[float, float], ...]
    support_length: float
    lipschitz_constant: float

    @property
    def xs(self) -> np.ndarray:
        return np.array([p[0] for p in self.breakpoints])

    @property
    def ys(self) -> np.ndarray:
        return np.array([p[1] for p in self.breakpoints])

    @property
    def slopes(self) -> np.ndarray:
        xs, ys = self.xs, self.ys
        return np.diff(ys) / np.diff(xs)

    @property
    def arc_length(self) -> float:
        xs, ys = self.xs, self.ys
        return float(np.sum(np.hypot(np.diff(xs), np.diff(ys))))

    @property
    def max_height(self) -> float:
        return float(np.max(self.ys))

    def interior_corners(self) -> list[int]:
        """Indices of interior breakpoints where the slope jumps."""
        s = self.slopes
        return [i for i in range(1, len(self.breakpoints) - 1)
                if abs(s[i] - s[i - 1]) > CORNER_SLOPE_TOL]

    def is_flat(self) -> bool:
        return self.lipschitz_constant == 0.0


def build_profile(breakpoints) -> BoundaryProfile:
    """Validate breakpoints and build a profile.

    Requires >= 2 points, strictly increasing x starting at 0, and
    y = 0 at both ends.
    """
    pts = [(float(x), float(y)) for x, y in breakpoints]
    if len(pts) < 2:
        raise TooFewPoints("a profile needs at least 2 breakpoints")
    xs = np.array([p[0] for p in pts])
    if np.any(np.diff(xs) <= 0):
        raise NonMonotoneX("breakpoint x values must be strictly increasing")
    if xs[0] != 0.0:
        raise ProfileError("profile support must start at x = 0")
    if pts[0][1] != 0.0 or pts[-1][1] != 0.0:
        raise NonZeroEndpoints("h must vanish at both support endpoints")
    ys = np.array([p[1] for p in pts])
    slopes = np.diff(ys) / np.diff(xs)
    return BoundaryProfile(
        breakpoints=tuple(pts),
        support_length=float(xs[-1]),
        lipschitz_constant=float(np.max(np.abs(slopes))),
    )


def eval_height(profile: BoundaryProfile, x):
    """h(x): linear interpolation on [0, d], exactly 0 outside."""
    x_arr = np.asarray(x, dtype=float)
    out = np.interp(x_arr, profile.xs, profile.ys, left=0.0, right=0.0)
    return float(out) if np.ndim(x) == 0 else out


@dataclass(frozen=True)
class BoundaryMesh:
    """Quadrature nodes on the boundary graph over [0, d].

    Panels are straight sub-segments of the profile polyline; nodes are
    per-panel Gauss-Legendre points in the abscissa parameter.  Weights
    are abscissa (dx) weights; multiply by the jacobian for arc length.
    """

    profile: BoundaryProfile
    grading_exponent: float
    gauss_per_panel: int
    # panel arrays, one entry per panel
    panel_xa: np.ndarray
    panel_xb: np.ndarray
    panel_ya: np.ndarray
    panel_slope: np.ndarray
    panel_jac: np.ndarray
    panel_corner_adjacent: np.ndarray
    # node arrays, one entry per node
    t: np.ndarray
    points: np.ndarray        # (n, 2)
    normals: np.ndarray       # (n, 2)
    jacobians: np.ndarray
    weights: np.ndarray
    panel_id: np.ndarray
    is_corner_adjacent: np.ndarray
    gauss_ref_nodes: np.ndarray = field(repr=False, default=None)
    gauss_ref_weights: np.ndarray = field(repr=False, default=None)

    @property
    def n_nodes(self) -> int:
        return self.points.shape[0]

    @property
    def n_panels(self) -> int:
        return self.panel_xa.shape[0]

    @property
    def panel_arc_lengths(self) -> np.ndarray:
        return (self.panel_xb - self.panel_xa) * self.panel_jac

    @property
    def arc_length(self) -> float:
        return float(np.sum(self.weights * self.jacobians))

    def panel_nodes(self, p: int) -> np.ndarray:
        g = self.gauss_per_panel
        return np.arange(p * g, (p + 1) * g)


def _graded_breaks(a: float, b: float, m: int, q: float,
                   toward_left: bool) -> np.ndarray:
    """m+1 partition points of [a, b] clustered toward one end as (i/m)^q."""
    u = (np.arange(m + 1) / m) ** q
    if toward_left:
        return a + (b - a) * u
    return b - (b - a) * u[::-1]


def build_mesh(profile: BoundaryProfile, n_panels: int,
               q: float = 3.0, gauss_per_panel: int = DEFAULT_GAUSS_PER_PANEL,
               ) -> BoundaryMesh:
    """Panel mesh with grading exponent q toward every breakpoint.

    Each polyline segment gets a panel budget proportional to its length
    and splits at its midpoint into two runs graded toward the segment
    ends, so panels concentrate at interior corners and at both support
    endpoints.  Nodes are Gauss-Legendre points, never at corners.
    """
    if n_panels < 4:
        raise TooFewPanels("need n_panels >= 4")
    if q < 1.0:
        raise ValueError("grading exponent q must be >= 1")
    if gauss_per_panel < 2:
        raise ValueError("need at least 2 Gauss points per panel")

    xs, ys = profile.xs, profile.ys
    slopes = profile.slopes
    n_seg = len(slopes)
    seg_len = np.hypot(np.diff(xs), np.diff(ys))

    # deterministic largest-remainder budget, at least 1 panel per segment
    raw = n_panels * seg_len / seg_len.sum()
    alloc = np.maximum(1, np.floor(raw).astype(int))
    while alloc.sum() < n_panels:
        alloc[np.argmax(raw - alloc)] += 1

    corner_break = np.zeros(len(xs), dtype=bool)
    corner_break[0] = abs(slopes[0]) > CORNER_SLOPE_TOL
    corner_break[-1] = abs(slopes[-1]) > CORNER_SLOPE_TOL
    for i in range(1, len(xs) - 1):
        corner_break[i] = abs(slopes[i] - slopes[i - 1]) > CORNER_SLOPE_TOL

    panel_xa, panel_xb, panel_seg = [], [], []
    for s in range(n_seg):
        a, b, m = xs[s], xs[s + 1], alloc[s]
        if m == 1:
            breaks = np.array([a, b])
        else:
            mid = 0.5 * (a + b)
            m_left = m // 2
            m_right = m - m_left
            left = _graded_breaks(a, mid, m_left, q, toward_left=True)
            right = _graded_breaks(mid, b, m_right, q, toward_left=False)
            breaks = np.concatenate([left, right[1:]])
        panel_xa.extend(breaks[:-1])
        panel_xb.extend(breaks[1:])
        panel_seg.extend([s] * (len(breaks) - 1))

    panel_xa = np.array(panel_xa)
    panel_xb = np.array(panel_xb)
    panel_seg = np.array(panel_seg)
    panel_slope = slopes[panel_seg]
    panel_ya = ys[panel_seg] + panel_slope * (panel_xa - xs[panel_seg])
    panel_jac = np.sqrt(1.0 + panel_slope**2)

    # a panel is corner-adjacent when its closure touches a corner breakpoint
    panel_corner = np.zeros(len(panel_xa), dtype=bool)
    for i, xc in enumerate(xs):
        if corner_break[i]:
            panel_corner |= np.isclose(panel_xa, xc) | np.isclose(panel_xb, xc)

    gx, gw = np.polynomial.legendre.leggauss(gauss_per_panel)
    half = 0.5 * (panel_xb - panel_xa)
    mid = 0.5 * (panel_xa + panel_xb)
    node_x = (mid[:, None] + half[:, None] * gx[None, :]).ravel()
    node_w = (half[:, None] * gw[None, :]).ravel()
    node_pid = np.repeat(np.arange(len(panel_xa)), gauss_per_panel)
    node_slope = panel_slope[node_pid]
    node_y = panel_ya[node_pid] + node_slope * (node_x - panel_xa[node_pid])
    node_jac = panel_jac[node_pid]
    normals = np.stack([-node_slope, np.ones_like(node_slope)], axis=1) / node_jac[:, None]

    # global arc parameter from (0, 0)
    seg_arc0 = np.concatenate([[0.0], np.cumsum(seg_len)])
    node_t = seg_arc0[panel_seg[node_pid]] + node_jac * (node_x - xs[panel_seg[node_pid]])

    return BoundaryMesh(
        profile=profile,
        grading_exponent=float(q),
        gauss_per_panel=gauss_per_panel,
        panel_xa=panel_xa,
        panel_xb=panel_xb,
        panel_ya=panel_ya,
        panel_slope=panel_slope,
        panel_jac=panel_jac,
        panel_corner_adjacent=panel_corner,
        t=node_t,
        points=np.stack([node_x, node_y], axis=1),
        normals=normals,
        jacobians=node_jac,
        weights=node_w,
        panel_id=node_pid,
        is_corner_adjacent=panel_corner[node_pid],
        gauss_ref_nodes=gx,
        gauss_ref_weights=gw,
    )


@dataclass(frozen=True)
class MollifiedFamily:
    """Corner-rounded approximations of a profile from inside the domain."""

    base: BoundaryProfile
    members: tuple[BoundaryProfile, ...]
    rounding_radii: tuple[float, ...]


def _round_valley(xc, yc, s_l, s_r, rho):
    """Circular fillet above a corner where the slope increases.

    Returns sampled (x, y) points replacing the corner, tangent to both
    legs at distance rho * tan(theta/2) along each.
    """
    d_l = np.array([-1.0, -s_l]) / np.hypot(1.0, s_l)   # backward along left leg
    d_r = np.array([1.0, s_r]) / np.hypot(1.0, s_r)
    cos_a = float(d_l @ d_r)
    alpha = np.arccos(np.clip(cos_a, -1.0, 1.0))        # angle between the rays
    tan_half = np.tan(0.5 * alpha)
    t_reach = rho / tan_half
    bis = d_l + d_r
    bis /= np.hypot(*bis)
    center = np.array([xc, yc]) + (rho / np.sin(0.5 * alpha)) * bis
    a_pt = np.array([xc, yc]) + t_reach * d_l
    b_pt = np.array([xc, yc]) + t_reach * d_r
    th_a = np.arctan2(*(a_pt - center)[::-1])
    th_b = np.arctan2(*(b_pt - center)[::-1])
    # traverse the short way so the arc faces the corner
    if th_b - th_a > np.pi:
        th_b -= 2 * np.pi
    elif th_a - th_b > np.pi:
        th_b += 2 * np.pi
    th = np.linspace(th_a, th_b, FILLET_SAMPLES)
    pts = center[None, :] + rho * np.stack([np.cos(th), np.sin(th)], axis=1)
    return pts, t_reach


def _round_peak(xc, yc, s_l, s_r, w):
    """C1 cap above a corner where the slope drops (reentrant from inside).

    A circular fillet tangent to both legs cannot stay above the graph
    here, so the kink is cancelled by the bump
    c * (w - |xi|)^2 |xi| / w^2 with c = (s_l - s_r)/2 >= 0, which is C1,
    vanishes with zero slope at xi = +-w, and is maximal (4cw/27) at
    |xi| = w/3.  The corner abscissa itself is always a sample so the
    sampled polyline never dips below the graph.
    """
    c = 0.5 * (s_l - s_r)
    n_half = FILLET_SAMPLES // 2
    xi = np.concatenate([np.linspace(-w, 0.0, n_half + 1),
                         np.linspace(0.0, w, n_half + 1)[1:]])
    leg = np.where(xi <= 0.0, yc + s_l * xi, yc + s_r * xi)
    bump = c * (w - np.abs(xi)) ** 2 * np.abs(xi) / w**2
    return np.stack([xc + xi, leg + bump], axis=1), w


def mollify(profile: BoundaryProfile, j_max: int, rho0: float) -> MollifiedFamily:
    """Family of corner-rounded profiles h_j >= h with radii rho0 * 2^-j.

    Only interior corners are rounded; the support endpoints stay exact so
    every member keeps supp h_j = [0, d] (the flat boundary parts are
    shared with the base domain).  Peaks get the C1 cap, valleys a true
    circular fillet; both deviations scale linearly with the radius.
    """
    if rho0 <= 0:
        raise RadiusTooLarge("rho0 must be positive")
    xs = profile.xs
    seg_x = np.diff(xs)
    if rho0 >= 0.5 * np.min(seg_x):
        raise RadiusTooLarge("rho0 must be below half the shortest segment length")

    corners = profile.interior_corners()
    radii = tuple(rho0 * 2.0**-j for j in range(j_max + 1))
    if not corners:
        return MollifiedFamily(base=profile,
                               members=tuple([profile] * (j_max + 1)),
                               rounding_radii=radii)

    slopes = profile.slopes
    members = []
    for rho in radii:
        pieces = [np.array([profile.breakpoints[0]])]
        for i in range(1, len(xs) - 1):
            xc, yc = profile.breakpoints[i]
            if i in corners:
                s_l, s_r = slopes[i - 1], slopes[i]
                if s_r > s_l:
                    pts, reach = _round_valley(xc, yc, s_l, s_r, rho)
                else:
                    pts, reach = _round_peak(xc, yc, s_l, s_r, rho)
                gap_l = xc - xs[i - 1]
                gap_r = xs[i + 1] - xc
                if pts[0, 0] - xs[i - 1] <= 0 or xs[i + 1] - pts[-1, 0] <= 0 \
                        or reach >= min(gap_l, gap_r):
                    raise RadiusTooLarge(
                        f"rounding at x={xc} overruns a neighboring breakpoint")
                pieces.append(pts)
            else:
                pieces.append(np.array([[xc, yc]]))
        pieces.append(np.array([profile.breakpoints[-1]]))
        bp = np.concatenate(pieces, axis=0)
        members.append(build_profile([tuple(p) for p in bp]))
    return MollifiedFamily(base=profile, members=tuple(members),
                           rounding_radii=radii)
