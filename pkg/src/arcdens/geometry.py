"""Triangle geometry for r-factor proximity regions.

Everything the digraph needs is affine invariant, so most computations go
through barycentric coordinates.  Writing lam_j(x) for the weight of vertex j,
the distance from y_j to the line through x parallel to the opposite edge is
height_j * (1 - lam_j(x)).  The proximity region of x anchored at vertex j is
therefore T intersected with {z : lam_j(z) >= 1 - r * (1 - lam_j(x))}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

TOL = 1e-12
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("point coordinates must be finite")

    def __iter__(self):
        yield self.x
        yield self.y

    def as_array(self):
        return np.array([self.x, self.y], dtype=float)


def _as_xy(p):
    arr = np.asarray(tuple(p) if isinstance(p, Point) else p, dtype=float)
    if arr.shape != (2,):
        raise ValueError("expected a 2d point")
    return arr


class Triangle:
    """Non-degenerate triangle.  Vertex order is kept as given."""

    def __init__(self, a, b, c):
        verts = np.array([_as_xy(a), _as_xy(b), _as_xy(c)])
        if not np.all(np.isfinite(verts)):
            raise ValueError("vertex coordinates must be finite")
        scale = max(1.0, float(np.abs(verts).max()))
        if abs(_signed_area(verts)) <= TOL * scale * scale:
            raise ValueError("collinear vertices")
        self._v = verts
        self._v.setflags(write=False)

    @classmethod
    def standard(cls):
        return cls((0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2))

    @property
    def vertex_array(self):
        return self._v

    @property
    def vertices(self):
        return tuple(Point(*v) for v in self._v)

    @cached_property
    def area(self):
        return abs(_signed_area(self._v))

    @property
    def center_of_mass(self):
        return Point(*self._v.mean(axis=0))

    @property
    def edge_midpoints(self):
        # entry j is the midpoint of the edge opposite vertex j
        v = self._v
        return tuple(Point(*((v[(j + 1) % 3] + v[(j + 2) % 3]) / 2)) for j in range(3))

    @cached_property
    def _inv(self):
        # maps (x, y, 1) to barycentric weights
        m = np.vstack([self._v.T, np.ones(3)])
        return np.linalg.inv(m)

    def barycentric(self, pts):
        """Barycentric weights of one point (shape (3,)) or many (shape (k, 3))."""
        p = np.asarray(pts, dtype=float)
        flat = p.reshape(-1, 2)
        lam = np.column_stack([flat, np.ones(len(flat))]) @ self._inv.T
        return lam.reshape(p.shape[:-1] + (3,))

    def from_barycentric(self, lam):
        return np.asarray(lam, dtype=float) @ self._v

    def contains_points(self, pts, tol=TOL):
        return np.all(self.barycentric(pts) >= -tol, axis=-1)

    def __repr__(self):
        return f"Triangle({self._v.tolist()})"

    def __eq__(self, other):
        return isinstance(other, Triangle) and np.array_equal(self._v, other._v)

    def __hash__(self):
        return hash(self._v.tobytes())


def _signed_area(v):
    return 0.5 * ((v[1, 0] - v[0, 0]) * (v[2, 1] - v[0, 1]) - (v[2, 0] - v[0, 0]) * (v[1, 1] - v[0, 1]))


class ProximityParams:
    """Expansion factor r >= 1.  Infinity is an explicit flag, not a float."""

    def __init__(self, r=1.0, infinite=False):
        if infinite or (isinstance(r, float) and math.isinf(r) and r > 0):
            self.infinite = True
            self.r = math.inf
            return
        r = float(r)
        if not math.isfinite(r) or r < 1:
            raise ValueError(f"expansion factor must be >= 1, got {r}")
        self.infinite = False
        self.r = r

    @classmethod
    def infinity(cls):
        return cls(infinite=True)

    def __repr__(self):
        return "ProximityParams(inf)" if self.infinite else f"ProximityParams({self.r!r})"

    def __eq__(self, other):
        return isinstance(other, ProximityParams) and self.r == other.r

    def __hash__(self):
        return hash(self.r)


@dataclass(frozen=True)
class AffineMap:
    """x -> matrix @ x + offset."""

    matrix: np.ndarray
    offset: np.ndarray

    def __call__(self, pts):
        p = np.asarray(pts, dtype=float)
        return p @ self.matrix.T + self.offset

    def inverse(self):
        inv = np.linalg.inv(self.matrix)
        return AffineMap(inv, -inv @ self.offset)

    def apply_triangle(self, tri):
        return Triangle(*self(tri.vertex_array))


def standardize(tri):
    """Affine map sending tri's vertices to (0,0), (1,0), (1/2, sqrt3/2) in order."""
    src = tri.vertex_array
    dst = Triangle.standard().vertex_array
    a = np.column_stack([src[1] - src[0], src[2] - src[0]])
    b = np.column_stack([dst[1] - dst[0], dst[2] - dst[0]])
    mat = b @ np.linalg.inv(a)
    return AffineMap(mat, dst[0] - mat @ src[0])


class Polygon:
    """Convex polygon, possibly degenerate (a single point)."""

    def __init__(self, vertices):
        v = np.asarray(vertices, dtype=float).reshape(-1, 2)
        if len(v) == 0:
            raise ValueError("empty polygon")
        if len(v) >= 3 and _shoelace(v) < 0:
            v = v[::-1]
        self.vertices = v

    @property
    def area(self):
        return abs(_shoelace(self.vertices)) if len(self.vertices) >= 3 else 0.0

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Polygon({self.vertices.tolist()})"


def _shoelace(v):
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def clip_halfplane(poly_vertices, normal, offset, tol=TOL):
    """Keep the part of a convex polygon with normal . p >= offset."""
    pts = np.asarray(poly_vertices, dtype=float)
    n = np.asarray(normal, dtype=float)
    s = pts @ n - offset
    out = []
    k = len(pts)
    for i in range(k):
        p, q = pts[i], pts[(i + 1) % k]
        sp, sq = s[i], s[(i + 1) % k]
        if sp >= -tol:
            out.append(p)
        if (sp >= -tol) != (sq >= -tol) and k > 1:
            t = sp / (sp - sq)
            out.append(p + t * (q - p))
    return np.array(out).reshape(-1, 2)


def region_index(lam, tol=TOL):
    """Vertex region from barycentric weights; ties go to the lowest index."""
    lam = np.asarray(lam, dtype=float)
    top = lam.max(axis=-1, keepdims=True)
    return np.argmax(lam >= top - tol, axis=-1)


def _check_inside(tri, x, tol=TOL):
    lam = tri.barycentric(_as_xy(x))
    if np.any(lam < -tol):
        raise ValueError("point outside triangle")
    return lam


def vertex_region(tri, x):
    """Index (0, 1 or 2) of the vertex whose center-of-mass region holds x."""
    return int(region_index(_check_inside(tri, x)))


def proximity_region(tri, params, x):
    """N_r(x): the triangle similar to tri, anchored at x's vertex, clipped to tri."""
    lam = _check_inside(tri, x)
    v = tri.vertex_array
    if params.infinite:
        return Polygon(v)
    j = int(region_index(lam))
    apex = v[j]
    if lam[j] >= 1 - TOL:
        return Polygon([_as_xy(x)])
    scale = params.r * (1 - lam[j])
    others = [v[(j + 1) % 3], v[(j + 2) % 3]]
    big = np.array([apex] + [apex + scale * (w - apex) for w in others])
    # clip the scaled triangle by the three edge half-planes of tri
    poly = big
    center = v.mean(axis=0)
    for i in range(3):
        p, q = v[(i + 1) % 3], v[(i + 2) % 3]
        normal = np.array([p[1] - q[1], q[0] - p[0]])
        if normal @ (center - p) < 0:
            normal = -normal
        poly = clip_halfplane(poly, normal, normal @ p)
    return Polygon(poly)


def contains(region, p, tol=TOL):
    """Closed containment test for a convex polygon, with tolerance."""
    q = _as_xy(p)
    v = region.vertices
    scale = max(1.0, float(np.abs(v).max()))
    if len(v) == 1:
        return bool(np.linalg.norm(q - v[0]) <= tol * scale)
    if len(v) == 2 or region.area <= tol * scale * scale:
        a, b = v[0], v[-1]
        ab = b - a
        t = np.clip((q - a) @ ab / max(ab @ ab, 1e-300), 0, 1)
        return bool(np.linalg.norm(q - (a + t * ab)) <= tol * scale)
    edges = np.roll(v, -1, axis=0) - v
    cross = edges[:, 0] * (q[1] - v[:, 1]) - edges[:, 1] * (q[0] - v[:, 0])
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    return bool(np.all(cross >= -tol * scale * np.maximum(lengths, 1e-300)))


def gamma1_contains(tri, params, x, z):
    """True when x lies in the proximity region of z, i.e. z is in Gamma1(x)."""
    return contains(proximity_region(tri, params, z), x)


def arc_threshold(lam, r):
    """Per-point (vertex index, barycentric cutoff) defining N_r.

    z is in N_r(x) iff lam_j(z) >= cutoff with j the vertex of x.  For r = inf
    pass math.inf; the cutoff becomes -inf.
    """
    lam = np.asarray(lam, dtype=float)
    j = region_index(lam)
    top = np.take_along_axis(lam, j[..., None], axis=-1)[..., 0]
    if math.isinf(r):
        cut = np.full(top.shape, -np.inf)
    else:
        cut = 1 - r * (1 - top)
    return j, cut


def arc_matrix(lam, r, tol=TOL):
    """Boolean arcs for one or many samples given as barycentric arrays.

    lam has shape (..., n, 3).  Entry [..., i, k] is True when point k is in
    N_r(point i), i != k.
    """
    lam = np.asarray(lam, dtype=float)
    j, cut = arc_threshold(lam, r)
    onehot = np.eye(3)[j]
    # w[..., i, k] = lam_{j_i}(point k)
    w = onehot @ np.swapaxes(lam, -1, -2)
    arcs = w >= cut[..., :, None] - tol
    n = lam.shape[-2]
    arcs[..., np.arange(n), np.arange(n)] = False
    return arcs
