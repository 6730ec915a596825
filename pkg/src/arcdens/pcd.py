"""Proximity catch digraph on points in a triangle and its relative arc density."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import TOL, ProximityParams, Triangle, arc_matrix, arc_threshold

DENSE_LIMIT = 4096
_ROW_CHUNK = 512


class Digraph:
    """Vertices 0..n-1 and arcs (i, j), i != j.

    Stored as a dense boolean matrix up to DENSE_LIMIT vertices and as a
    sorted (m, 2) pair array above that.
    """

    def __init__(self, n, arcs=None, matrix=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        if matrix is not None:
            m = np.asarray(matrix, dtype=bool)
            if m.shape != (n, n):
                raise ValueError("arc matrix shape mismatch")
            if n and m[np.arange(n), np.arange(n)].any():
                raise ValueError("self-loops are not allowed")
            pairs = np.argwhere(m) if n > DENSE_LIMIT else None
            self._matrix = None if n > DENSE_LIMIT else m.copy()
            self._pairs = pairs
        else:
            pairs = np.asarray(sorted(set(map(tuple, arcs or []))), dtype=np.int64).reshape(-1, 2)
            if len(pairs) and ((pairs < 0).any() or (pairs >= n).any()):
                raise ValueError("arc endpoint out of range")
            if len(pairs) and (pairs[:, 0] == pairs[:, 1]).any():
                raise ValueError("self-loops are not allowed")
            if n <= DENSE_LIMIT:
                self._matrix = np.zeros((n, n), dtype=bool)
                self._matrix[pairs[:, 0], pairs[:, 1]] = True
                self._pairs = None
            else:
                self._matrix, self._pairs = None, pairs
        if self._matrix is not None:
            self._matrix.setflags(write=False)

    @classmethod
    def from_pairs(cls, n, pairs):
        return cls(n, arcs=pairs)

    @property
    def arc_count(self):
        return int(self._matrix.sum()) if self._matrix is not None else len(self._pairs)

    @property
    def arcs(self):
        """Set of ordered pairs (i, j)."""
        pairs = np.argwhere(self._matrix) if self._matrix is not None else self._pairs
        return {(int(i), int(j)) for i, j in pairs}

    def has_arc(self, i, j):
        if self._matrix is not None:
            return bool(self._matrix[i, j])
        k = np.searchsorted(self._pairs[:, 0] * self.n + self._pairs[:, 1], i * self.n + j)
        return k < len(self._pairs) and tuple(self._pairs[k]) == (i, j)

    def matrix(self):
        if self._matrix is not None:
            return self._matrix
        m = np.zeros((self.n, self.n), dtype=bool)
        m[self._pairs[:, 0], self._pairs[:, 1]] = True
        return m

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


@dataclass(frozen=True)
class DensityResult:
    rho: float
    arc_count: int
    n: int

    @property
    def exact(self):
        return Fraction(self.arc_count, self.n * (self.n - 1))


def _points_array(points):
    pts = np.asarray([tuple(p) for p in points] if not isinstance(points, np.ndarray) else points,
                     dtype=float).reshape(-1, 2)
    if not np.all(np.isfinite(pts)):
        raise ValueError("point coordinates must be finite")
    return pts


def barycentric_checked(tri, points):
    """Barycentric weights of points in tri; names the first point outside."""
    pts = _points_array(points)
    lam = tri.barycentric(pts)
    outside = np.flatnonzero(np.any(lam < -TOL, axis=1))
    if len(outside):
        raise ValueError(f"point {int(outside[0])} outside triangle")
    return lam


def _r_value(params):
    if isinstance(params, ProximityParams):
        return params.r
    return ProximityParams(params).r


def build_digraph(tri: Triangle, params, points):
    """Arc (i, j) iff points[j] lies in the proximity region of points[i]."""
    lam = barycentric_checked(tri, points)
    n = len(lam)
    r = _r_value(params)
    if n <= DENSE_LIMIT:
        return Digraph(n, matrix=arc_matrix(lam, r) if n else np.zeros((0, 0), bool))
    # large inputs: rows in chunks against all columns, collecting pairs
    out = []
    for start in range(0, n, _ROW_CHUNK):
        j, cut = arc_threshold(lam[start:start + _ROW_CHUNK], r)
        m = lam[:, j].T >= cut[:, None] - TOL
        m[np.arange(len(m)), start + np.arange(len(m))] = False
        idx = np.argwhere(m)
        idx[:, 0] += start
        out.append(idx)
    d = Digraph(n)
    d._matrix = None
    d._pairs = np.concatenate(out) if out else np.zeros((0, 2), np.int64)
    return d


def relative_density(d: Digraph):
    if d.n < 2:
        raise ValueError("density undefined for fewer than two points")
    a = d.arc_count
    return DensityResult(a / (d.n * (d.n - 1)), a, d.n)


def pair_kernel(d: Digraph, i, j):
    """Number of arcs between i and j (0, 1 or 2)."""
    if i == j:
        raise ValueError("pair kernel needs two distinct vertices")
    if not (0 <= i < d.n and 0 <= j < d.n):
        raise IndexError("vertex index out of range")
    return int(d.has_arc(i, j)) + int(d.has_arc(j, i))


def density(tri, params, points):
    return relative_density(build_digraph(tri, params, points))


def batch_density(lam, r):
    """Relative densities for a stack of samples given as barycentric arrays (..., n, 3)."""
    lam = np.asarray(lam, dtype=float)
    n = lam.shape[-2]
    if n < 2:
        raise ValueError("density undefined for fewer than two points")
    return arc_matrix(lam, r).sum(axis=(-1, -2)) / (n * (n - 1))
