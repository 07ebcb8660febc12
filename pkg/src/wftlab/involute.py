"""Involute-of-circle particle geometry.

The plane involute of the resonance orbit (radius r0) at total parameter
theta = omega + 2 k pi is the orbit point r0 (cos theta, sin theta) plus an
unrolled string of length r0 theta along (sin theta, -cos theta). Tilting the
string out of the orbit plane by mu lifts it by r0 theta tan mu, which is how
the surface mesh is swept. A moving source scales the string length by the
Doppler factor at the string's direction relative to the motion.

Chirality -1 is the mirror image under (x, y, z) -> (x, -y, -z).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from wftlab.core import DomainError, ResourceError, check_beta
from wftlab.kinematics import doppler_factor

MAX_VERTICES = 10_000_000
# minimum triangle area, in units of r0^2
AREA_TOL = 1e-18


class CreationConditionWarning(UserWarning):
    """The incident wavelength differs from half the rest wavelength."""


@dataclass(frozen=True)
class InvoluteSpec:
    r0: float
    omega_max: float = 2 * math.pi
    k_max: int = 0
    mu: float = math.pi / 4
    chirality: int = 1
    beta: float = 0.0
    phi_motion: float = 0.0
    samples_per_turn: int = 64
    mu_steps: int = 3

    def __post_init__(self):
        if not self.r0 > 0:
            raise DomainError("r0 must be positive")
        if not self.omega_max > 0:
            raise DomainError("omega_max must be positive")
        if self.k_max < 0:
            raise DomainError("k_max must be non-negative")
        if abs(self.mu) > math.pi / 4 + 1e-15:
            raise DomainError("helix angle must satisfy |mu| <= pi/4")
        if self.chirality not in (1, -1):
            raise DomainError("chirality must be +1 or -1")
        check_beta(self.beta)
        if self.samples_per_turn < 1:
            raise DomainError("samples_per_turn must be positive")
        if self.mu_steps < 1:
            raise DomainError("mu_steps must be positive")

    @property
    def turns(self) -> int:
        return self.k_max + 1


def resonance_radius(lambda0: float, n: int = 1) -> float:
    if not lambda0 > 0:
        raise DomainError("wavelength must be positive")
    if n < 1:
        raise DomainError("resonance order n must be >= 1")
    return n * lambda0 / (2 * math.pi)


def involute_point(r0: float, theta, chirality: int = 1):
    """(x, y) of the plane involute at total parameter theta = omega + 2 k pi."""
    theta = np.asarray(theta, dtype=float)
    x = r0 * (theta * np.sin(theta) + np.cos(theta))
    y = chirality * r0 * (np.sin(theta) - theta * np.cos(theta))
    return np.stack([x, y], axis=-1)


def _omega_samples(spec: InvoluteSpec) -> np.ndarray:
    n = max(2, math.ceil(spec.samples_per_turn * spec.omega_max / (2 * math.pi)) + 1)
    return np.linspace(0.0, spec.omega_max, n)


@dataclass(frozen=True)
class Polyline:
    # omega is the total parameter omega + 2 k pi
    omega: np.ndarray
    points: np.ndarray


def plane_involute(spec: InvoluteSpec) -> Polyline:
    """Sample omega in [0, omega_max] for every k in 0..k_max."""
    om = _omega_samples(spec)
    theta = np.concatenate([om + 2 * math.pi * k for k in range(spec.k_max + 1)])
    return Polyline(theta, involute_point(spec.r0, theta, spec.chirality))


def involute_vector(omega1: float, k: int, r0: float) -> tuple[float, float]:
    """(magnitude, phase) of (r0 omega1) exp(i (omega1 + 2 k pi))."""
    if not r0 > 0:
        raise DomainError("r0 must be positive")
    return r0 * omega1, omega1 + 2 * math.pi * k


def helicoid(spec: InvoluteSpec, sign: int = 1) -> Polyline:
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    w = _omega_samples(spec)
    pts = np.stack(
        [
            spec.r0 * np.cos(w),
            spec.chirality * spec.r0 * np.sin(w),
            sign * spec.r0 * w * math.tan(spec.mu),
        ],
        axis=-1,
    )
    return Polyline(w, pts)


def helicoid_modulus(r0: float, omega1: float, mu: float) -> float:
    cm = math.cos(mu)
    if not abs(mu) < math.pi / 2 or cm <= 0:
        raise DomainError("cos(mu) must be positive")
    return r0 * omega1 / cm


def spherical_involute_amplitude(spec: InvoluteSpec, omega1: float, k: int, phi: float) -> tuple[float, float]:
    """(magnitude, phase) of the Doppler-scaled spherical involute vector with lambda0 = 2 pi r0."""
    mag, phase = involute_vector(omega1, k, spec.r0)
    return mag / math.cos(spec.mu) * doppler_factor(spec.beta, phi), phase


def _emission_cosine(theta, chirality: int, phi_motion: float):
    # string direction (sin theta, -chi cos theta) against the motion (cos phi_m, sin phi_m)
    return np.sin(theta) * math.cos(phi_motion) - chirality * np.cos(theta) * math.sin(phi_motion)


def _string_scale(spec: InvoluteSpec, theta):
    if spec.beta == 0:
        return np.ones_like(theta)
    cos_phi = _emission_cosine(theta, spec.chirality, spec.phi_motion)
    return doppler_factor(spec.beta, np.arccos(np.clip(cos_phi, -1.0, 1.0)))


def deformed_point(spec: InvoluteSpec, theta):
    """Involute point with the string length r0 theta scaled by the local Doppler factor."""
    theta = np.asarray(theta, dtype=float)
    s = spec.r0 * theta * _string_scale(spec, theta)
    chi = spec.chirality
    x = spec.r0 * np.cos(theta) + s * np.sin(theta)
    y = chi * (spec.r0 * np.sin(theta) - s * np.cos(theta))
    return np.stack([x, y], axis=-1)


def doppler_deformed_involute(spec: InvoluteSpec) -> Polyline:
    line = plane_involute(spec)
    if spec.beta == 0:
        return line
    return Polyline(line.omega, deformed_point(spec, line.omega))


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray
    triangles: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        v, f = self.vertices, self.triangles
        if v.ndim != 2 or v.shape[1] != 3 or f.ndim != 2 or f.shape[1] != 3:
            raise DomainError("vertices and triangles must be (n, 3) arrays")
        if f.size and (f.min() < 0 or f.max() >= len(v)):
            raise DomainError("triangle index out of range")

    def triangle_areas(self) -> np.ndarray:
        a, b, c = (self.vertices[self.triangles[:, i]] for i in range(3))
        return 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)

    def normals(self) -> np.ndarray:
        a, b, c = (self.vertices[self.triangles[:, i]] for i in range(3))
        n = np.cross(b - a, c - a)
        return n / np.linalg.norm(n, axis=1, keepdims=True)

    def to_obj(self) -> str:
        unit = self.vertices / self.scale
        lines = [
            "# spherical involute surface",
            f"# scale r0 = {self.scale:.17g} m (coordinates in units of r0)",
            f"# vertices {len(unit)} triangles {len(self.triangles)}",
        ]
        lines += ["v {:.17g} {:.17g} {:.17g}".format(*row) for row in unit.tolist()]
        lines += ["f {} {} {}".format(*(i + 1 for i in tri)) for tri in self.triangles.tolist()]
        return "\n".join(lines) + "\n"


def mesh_grid_size(spec: InvoluteSpec) -> tuple[int, int]:
    """(mu rows, theta columns) of the surface grid."""
    return spec.mu_steps, spec.samples_per_turn * spec.turns


def build_mesh(spec: InvoluteSpec) -> Mesh:
    """Triangulated sweep of the tilted involute string over mu in [-mu, +mu].

    Columns are theta_j = 2 pi (j + 1) / samples_per_turn for j < samples_per_turn * turns
    (theta = 0 is skipped: the string has zero length there). Rows are
    mu_steps evenly spaced helix angles. Vertex (i, j) has index i * ncols + j and
    each grid cell (i, j) is split into (a, b, d) and (a, d, c) with
    a = (i, j), b = (i, j + 1), c = (i + 1, j), d = (i + 1, j + 1).
    """
    if spec.samples_per_turn < 8:
        raise DomainError("samples_per_turn must be >= 8 for a mesh")
    if spec.mu_steps < 2 or spec.mu == 0:
        raise DomainError("a surface needs mu_steps >= 2 and mu != 0")
    nrows, ncols = mesh_grid_size(spec)
    if nrows * ncols > MAX_VERTICES:
        raise ResourceError(f"mesh would have {nrows * ncols} vertices (limit {MAX_VERTICES})")

    theta = 2 * math.pi * np.arange(1, ncols + 1) / spec.samples_per_turn
    unit = replace(spec, r0=1.0)
    s = theta * _string_scale(unit, theta)
    xy = deformed_point(unit, theta)
    mus = np.linspace(-abs(spec.mu), abs(spec.mu), nrows)
    verts = np.empty((nrows, ncols, 3))
    verts[:, :, 0] = xy[:, 0]
    verts[:, :, 1] = xy[:, 1]
    verts[:, :, 2] = spec.chirality * np.outer(np.tan(mus), s)
    verts = verts.reshape(-1, 3)

    i, j = np.meshgrid(np.arange(nrows - 1), np.arange(ncols - 1), indexing="ij")
    a = (i * ncols + j).ravel()
    b, c, d = a + 1, a + ncols, a + ncols + 1
    tris = np.empty((2 * a.size, 3), dtype=np.int64)
    tris[0::2] = np.stack([a, b, d], axis=1)
    tris[1::2] = np.stack([a, d, c], axis=1)

    unit_mesh = Mesh(verts, tris)
    if np.any(unit_mesh.triangle_areas() <= AREA_TOL):
        raise DomainError("mesh contains degenerate triangles")
    return Mesh(verts * spec.r0, tris, spec.r0)


def reflect(points: np.ndarray) -> np.ndarray:
    """Mirror map relating the two chiralities: y -> -y and, in 3D, z -> -z."""
    out = np.array(points, dtype=float, copy=True)
    out[..., 1:] *= -1
    return out


def creation_condition_met(lambda_i: float, lambda0: float, rtol: float = 1e-9) -> bool:
    return math.isclose(lambda_i, lambda0 / 2, rel_tol=rtol)


def pair_create(lambda_i: float, lambda0: float, **spec_kw) -> tuple[InvoluteSpec, InvoluteSpec]:
    """Mirror pair of involute specs with r0 at the first resonance radius.

    Warns with CreationConditionWarning unless lambda_i = lambda0 / 2.
    """
    if not (lambda_i > 0 and lambda0 > 0):
        raise DomainError("wavelengths must be positive")
    if not creation_condition_met(lambda_i, lambda0):
        warnings.warn(
            f"pair creation expects lambda_i = lambda0/2 = {lambda0 / 2:.6g} m, got {lambda_i:.6g} m",
            CreationConditionWarning,
            stacklevel=2,
        )
    spec_kw.pop("chirality", None)
    base = InvoluteSpec(r0=resonance_radius(lambda0, 1), chirality=1, **spec_kw)
    return base, replace(base, chirality=-1)


def arc_centroid_offset(points: np.ndarray) -> float:
    """Distance from the origin to the length-weighted centroid of a polyline."""
    p = np.asarray(points, dtype=float)
    seg = np.linalg.norm(np.diff(p, axis=0), axis=1)
    mid = 0.5 * (p[1:] + p[:-1])
    total = seg.sum()
    if total == 0:
        raise DomainError("polyline has zero length")
    return float(np.linalg.norm((mid * seg[:, None]).sum(axis=0) / total))


def eccentricity(spec: InvoluteSpec, omega_window_start: float) -> float:
    """Centroid offset of one full involute turn [start, start + 2 pi] from the orbit centre."""
    end = omega_window_start + 2 * math.pi
    if omega_window_start < 0 or end > spec.omega_max + 2 * math.pi * spec.k_max + 1e-12:
        raise DomainError("eccentricity window lies outside the sampled range")
    if spec.samples_per_turn < 8:
        raise DomainError("need at least 8 samples in the window")
    theta = np.linspace(omega_window_start, end, spec.samples_per_turn + 1)
    return arc_centroid_offset(involute_point(spec.r0, theta, spec.chirality))


def ray_crossings(curve, ray_angle: float, theta_max: float, samples_per_turn: int = 256) -> np.ndarray:
    """Radii at which a parametric 2D curve(theta) crosses the ray at ``ray_angle``.

    Crossings are bracketed on a uniform theta grid and refined with brentq.
    """
    from scipy.optimize import brentq

    u = np.array([math.cos(ray_angle), math.sin(ray_angle)])
    n_perp = np.array([-u[1], u[0]])

    def side(th):
        return float(np.asarray(curve(th)) @ n_perp)

    grid = np.linspace(0.0, theta_max, max(3, int(samples_per_turn * theta_max / (2 * math.pi)) + 1))
    pts = np.asarray(curve(grid))
    vals = pts @ n_perp
    along = pts @ u
    radii = []
    for k in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        if along[k] <= 0 and along[k + 1] <= 0:
            continue
        root = brentq(side, grid[k], grid[k + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps)
        p = np.asarray(curve(root))
        if p @ u > 0:
            radii.append(float(np.hypot(*p)))
    return np.array(radii)
