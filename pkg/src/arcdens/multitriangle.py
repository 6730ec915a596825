"""Delaunay-conditional version of the statistic for a reference set with J triangles.

Data points only interact with points in the same Delaunay triangle, so the
overall density is a weighted sum of per-triangle densities.  Moments are
taken conditional on the triangle weights w_j = area(T_j) / area(hull).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.spatial import Delaunay

from . import moments
from .geometry import TOL, Triangle, arc_matrix
from .pcd import _points_array, _r_value


@dataclass(frozen=True, eq=False)
class DelaunayMesh:
    sites: np.ndarray  # (m, 2)
    triangles: tuple  # of sorted vertex-index triples, in lexicographic order

    @cached_property
    def _tris(self):
        return [Triangle(*self.sites[list(t)]) for t in self.triangles]

    @cached_property
    def areas(self):
        return np.array([t.area for t in self._tris])

    @property
    def hull_area(self):
        return float(self.areas.sum())

    @cached_property
    def weights(self):
        a = self.areas
        return a / a.sum()

    def __len__(self):
        return len(self.triangles)

    def triangle(self, j):
        return self._tris[j]

    def locate(self, points, tol=TOL):
        """Triangle index per point, lowest index on shared edges, -1 outside the hull."""
        pts = _points_array(points)
        owner = np.full(len(pts), -1)
        for j in range(len(self.triangles)):
            free = owner < 0
            if not free.any():
                break
            lam = self.triangle(j).barycentric(pts[free])
            inside = np.all(lam >= -tol, axis=1)
            owner[np.flatnonzero(free)[inside]] = j
        return owner

    def to_dict(self):
        return {
            "sites": self.sites.tolist(),
            "triangles": [list(t) for t in self.triangles],
            "weights": self.weights.tolist(),
        }

    @classmethod
    def from_dict(cls, data):
        sites = np.asarray(data["sites"], dtype=float).reshape(-1, 2)
        tris = tuple(tuple(sorted(int(i) for i in t)) for t in data["triangles"])
        mesh = cls(sites, tuple(sorted(tris)))
        if not tris:
            raise ValueError("empty mesh")
        return mesh


def triangulate(sites):
    """Delaunay triangulation with a canonical triangle order.

    Qhull does the work; on cocircular input it returns one of the valid
    triangulations and does so deterministically for a given input order.
    """
    pts = _points_array(sites)
    if len(pts) < 3:
        raise ValueError("need at least 3 sites")
    if len(np.unique(pts, axis=0)) < len(pts):
        raise ValueError("duplicate sites")
    centered = pts - pts.mean(axis=0)
    scale = max(1.0, float(np.abs(pts).max()))
    sv = np.linalg.svd(centered, compute_uv=False)
    if sv[-1] <= 1e-12 * scale * math.sqrt(len(pts)):
        raise ValueError("all sites are collinear")
    tri = Delaunay(pts)
    simplices = {tuple(sorted(int(i) for i in s)) for s in tri.simplices}
    kept = []
    for s in sorted(simplices):
        v = pts[list(s)]
        area = abs((v[1, 0] - v[0, 0]) * (v[2, 1] - v[0, 1]) - (v[2, 0] - v[0, 0]) * (v[1, 1] - v[0, 1])) / 2
        if area > TOL * scale * scale:
            kept.append(s)
    return DelaunayMesh(pts, tuple(kept))


def single_triangle_mesh(tri: Triangle):
    return DelaunayMesh(np.array(tri.vertex_array), ((0, 1, 2),))


def empty_circumcircle_violations(mesh, tol=1e-9):
    """Triangles whose circumcircle strictly contains another site."""
    bad = []
    for j, t in enumerate(mesh.triangles):
        a, b, c = mesh.sites[list(t)]
        d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
        ux = ((a @ a) * (b[1] - c[1]) + (b @ b) * (c[1] - a[1]) + (c @ c) * (a[1] - b[1])) / d
        uy = ((a @ a) * (c[0] - b[0]) + (b @ b) * (a[0] - c[0]) + (c @ c) * (b[0] - a[0])) / d
        center = np.array([ux, uy])
        rad = np.linalg.norm(a - center)
        others = np.delete(mesh.sites, list(t), axis=0)
        if len(others) and np.any(np.linalg.norm(others - center, axis=1) < rad * (1 - tol)):
            bad.append(j)
    return bad


def check_weights(weights):
    w = np.asarray(weights, dtype=float).ravel()
    if len(w) == 0 or not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError("weights must be positive")
    if abs(w.sum() - 1) > 1e-9:
        raise ValueError("weights must sum to 1")
    return w


def weight_sums(weights):
    w = check_weights(weights)
    return float((w**2).sum()), float((w**3).sum())


def moments_multi(r, weights):
    """(mu(r, J), nu(r, J)) conditional on the triangle weights."""
    s2, s3 = weight_sums(weights)
    mu = moments.mu_null(r)
    return mu * s2, moments.nu_null(r) * s3 + 4 * mu**2 * (s3 - s2**2)


def multi_variance(mu, nu, weights):
    """nu(r, J) from single-triangle (mu, nu), under the null or an alternative."""
    s2, s3 = weight_sums(weights)
    return nu * s3 + 4 * mu**2 * (s3 - s2**2)


def adjusted_variance(r, weights, n):
    """Asymptotic variance of the density rescaled by the within-triangle arc maximum."""
    if n < 2:
        raise ValueError("n must be at least 2")
    s2, s3 = weight_sums(weights)
    ratio = s3 / s2**2
    mu = moments.mu_null(r)
    return (moments.nu_null(r) * ratio + 4 * mu**2 * (ratio - 1)) / n


@dataclass(frozen=True)
class MultiDensity:
    rho_J: float
    per_triangle: tuple  # (n_j, rho_j or None)
    adjusted: float
    u_stat: float
    arc_count: int
    n: int


def density_multi(mesh, params, points, owner=None):
    pts = _points_array(points)
    n = len(pts)
    if n < 2:
        raise ValueError("density undefined for fewer than two points")
    if owner is None:
        owner = mesh.locate(pts)
    owner = np.asarray(owner)
    outside = np.flatnonzero(owner < 0)
    if len(outside):
        raise ValueError(f"point {int(outside[0])} outside the convex hull")
    r = _r_value(params)
    w = mesh.weights
    per, total, pairs, u = [], 0, 0, 0.0
    for j in range(len(mesh)):
        sel = pts[owner == j]
        k = len(sel)
        if k < 2:
            per.append((k, None))
            continue
        lam = mesh.triangle(j).barycentric(sel)
        arcs = int(arc_matrix(lam, r).sum())
        rho_j = arcs / (k * (k - 1))
        per.append((k, rho_j))
        total += arcs
        pairs += k * (k - 1)
        u += w[j] ** 2 * rho_j
    return MultiDensity(
        rho_J=total / (n * (n - 1)),
        per_triangle=tuple(per),
        adjusted=total / pairs if pairs else math.nan,
        u_stat=u,
        arc_count=total,
        n=n,
    )
