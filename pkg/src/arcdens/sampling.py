"""Uniform samples on a triangle under the null and the two alternatives.

Samples are drawn as barycentric weights and mapped to the triangle only when
Cartesian coordinates are asked for.  In the standard triangle (height
sqrt3/2) the corner region T(y_j, eps) is {lam_j >= 1 - 2 eps / sqrt3}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import SQRT3, Triangle, clip_halfplane

EPS_MAX = SQRT3 / 3
EPS_MARGIN = 1e-6


@dataclass(frozen=True)
class Alternative:
    kind: str = "null"
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind not in ("null", "segregation", "association"):
            raise ValueError(f"unknown alternative {self.kind!r}")
        if self.kind == "null":
            object.__setattr__(self, "epsilon", 0.0)
            return
        eps = float(self.epsilon)
        if not (0 < eps < EPS_MAX):
            raise ValueError(f"epsilon must lie in (0, sqrt3/3), got {eps}")
        if eps > EPS_MAX - EPS_MARGIN:
            raise ValueError("epsilon too close to sqrt3/3; the support collapses")
        object.__setattr__(self, "epsilon", eps)

    @classmethod
    def null(cls):
        return cls("null")

    @classmethod
    def segregation(cls, eps):
        return cls("segregation", eps)

    @classmethod
    def association(cls, eps):
        return cls("association", eps)

    def corner_cutoff(self):
        """Barycentric level bounding the corner triangles of the support."""
        if self.kind == "segregation":
            return 1 - 2 * self.epsilon / SQRT3
        if self.kind == "association":
            return 1 - 2 * (EPS_MAX - self.epsilon) / SQRT3
        return None

    def support_fraction(self):
        """Area of the support relative to the whole triangle."""
        if self.kind == "null":
            return 1.0
        poly = _segregation_polygon(self.corner_cutoff())
        if self.kind == "segregation":
            return _area(poly)
        return 1.0 - _area(poly)


@dataclass(frozen=True)
class SampleConfig:
    n: int
    alt: Alternative = field(default_factory=Alternative)
    seed: int = 0
    replicate_id: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")

    def rng(self):
        """Generator for this replicate alone, independent of any other replicate."""
        ss = np.random.SeedSequence(entropy=int(self.seed) % 2**64, spawn_key=(2**31, int(self.replicate_id)))
        return np.random.default_rng(ss)


def delta_to_epsilon(delta):
    """Segregation level whose excluded area fraction is delta."""
    if not (0 < delta < 4 / 9):
        raise ValueError("delta must lie in (0, 4/9)")
    return math.sqrt(3 * delta / 4)


# Working in (lam_1, lam_2) coordinates: the triangle is {a >= 0, b >= 0, a + b <= 1}
# and areas are measured relative to it (its area is 1/2, hence the factor 2).
_UNIT = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


def _segregation_polygon(c):
    """{lam_j <= c for all j} as a convex polygon in (lam_1, lam_2)."""
    poly = _UNIT
    # lam_0 = 1 - a - b <= c  ->  a + b >= 1 - c
    poly = clip_halfplane(poly, (1.0, 1.0), 1 - c, tol=0)
    poly = clip_halfplane(poly, (-1.0, 0.0), -c, tol=0)
    poly = clip_halfplane(poly, (0.0, -1.0), -c, tol=0)
    return poly


def _area(poly):
    if len(poly) < 3:
        return 0.0
    x, y = poly[:, 0], poly[:, 1]
    return abs(float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)))


def _to_lam(ab):
    lam = np.empty(ab.shape[:-1] + (3,))
    lam[..., 1] = ab[..., 0]
    lam[..., 2] = ab[..., 1]
    lam[..., 0] = 1 - ab[..., 0] - ab[..., 1]
    return lam


def _uniform_in_triangles(tris, k, rng):
    """k uniform draws from a union of disjoint triangles given as (m, 3, 2)."""
    e1 = tris[:, 1] - tris[:, 0]
    e2 = tris[:, 2] - tris[:, 0]
    areas = np.abs(e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])
    pick = rng.choice(len(tris), size=k, p=areas / areas.sum())
    u = rng.random((k, 2))
    flip = u.sum(axis=1) > 1
    u[flip] = 1 - u[flip]
    return tris[pick, 0] + u[:, :1] * e1[pick] + u[:, 1:] * e2[pick]


def uniform_barycentric(size, rng):
    """Uniform barycentric weights on a triangle, shape size + (3,)."""
    size = (size,) if np.isscalar(size) else tuple(size)
    u = rng.random(size + (2,))
    flip = u.sum(axis=-1) > 1
    u[flip] = 1 - u[flip]
    return _to_lam(u)


def alternative_barycentric(alt, size, rng):
    """Barycentric weights drawn under the null or an alternative."""
    if alt.kind == "null":
        return uniform_barycentric(size, rng)
    size = (size,) if np.isscalar(size) else tuple(size)
    k = int(np.prod(size))
    c = alt.corner_cutoff()
    if alt.kind == "segregation":
        # fan-triangulate the central convex polygon, then sample it exactly
        poly = _segregation_polygon(c)
        fan = np.array([[poly[0], poly[i], poly[i + 1]] for i in range(1, len(poly) - 1)])
        return _to_lam(_uniform_in_triangles(fan, k, rng)).reshape(size + (3,))
    # association: mixture over the three corners, thinned by the overlap count
    out = np.empty((k, 3))
    filled = 0
    while filled < k:
        m = max(64, int(1.3 * (k - filled)) + 16)
        corner = rng.integers(0, 3, size=m)
        u = rng.random((m, 2))
        flip = u.sum(axis=1) > 1
        u[flip] = 1 - u[flip]
        # corner j is {lam_j >= c}: lam_j = c + (1 - c) * s with s uniform on the simplex
        s = _to_lam(u)
        lam = (1 - c) * s
        lam[np.arange(m), corner] += c
        overlap = (lam >= c).sum(axis=1)
        keep = rng.random(m) * overlap < 1
        got = lam[keep][: k - filled]
        out[filled:filled + len(got)] = got
        filled += len(got)
    return out.reshape(size + (3,))


def sample_uniform_triangle(tri, n, rng):
    return tri.from_barycentric(uniform_barycentric(n, rng))


def sample_alternative(tri, alt, n, rng):
    """n points on tri under alt; the support is carved in barycentric terms."""
    return tri.from_barycentric(alternative_barycentric(alt, n, rng))


def sample_hull(mesh, alt, n, rng):
    """n points on the triangulated hull, allocated to triangles by area.

    Returns (points, triangle index).  Under an alternative each triangle is
    carved through its own standardizing affine map, so eps is read on the
    standard-triangle scale.
    """
    counts = rng.multinomial(n, mesh.weights)
    pts = np.empty((n, 2))
    owner = np.repeat(np.arange(len(counts)), counts)
    start = 0
    for j, cnt in enumerate(counts):
        if cnt:
            tri = mesh.triangle(j)
            pts[start:start + cnt] = sample_alternative(tri, alt, cnt, rng)
        start += cnt
    return pts, owner


BLOCK = 512


def block_rng(seed, block, stream=0):
    """Generator for replicate block `block` (replicate r lives in block r // BLOCK).

    `stream` separates independent experiments that share a seed, such as the
    null and alternative halves of a power study.
    """
    ss = np.random.SeedSequence(entropy=int(seed) % 2**64, spawn_key=(int(stream), int(block)))
    return np.random.default_rng(ss)
