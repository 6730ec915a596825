import math

import numpy as np
import pytest

from arcdens import moments
from arcdens.geometry import Triangle, arc_matrix
from arcdens.multitriangle import (
    DelaunayMesh, adjusted_variance, density_multi, empty_circumcircle_violations, moments_multi,
    multi_variance, single_triangle_mesh, triangulate, weight_sums,
)


def test_three_sites_one_triangle():
    m = triangulate([(0, 0), (1, 0), (0, 1)])
    assert len(m) == 1 and m.weights.tolist() == [1.0]
    assert m.hull_area == pytest.approx(0.5)


def test_square_two_halves():
    m = triangulate([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert len(m) == 2
    assert np.allclose(m.weights, [0.5, 0.5])


def test_random_sites_are_delaunay():
    rng = np.random.default_rng(4)
    for _ in range(5):
        m = triangulate(rng.uniform(0, 1, (10, 2)))
        assert empty_circumcircle_violations(m) == []
        assert m.weights.sum() == pytest.approx(1)
        assert list(m.triangles) == sorted(m.triangles)


def test_triangulate_rejects_bad_input():
    with pytest.raises(ValueError, match="at least 3"):
        triangulate([(0, 0), (1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        triangulate([(0, 0), (1, 0), (0, 1), (1, 0)])
    with pytest.raises(ValueError, match="collinear"):
        triangulate([(0, 0), (1, 1), (2, 2), (3, 3)])


def test_locate():
    m = triangulate([(0, 0), (1, 0), (1, 1), (0, 1)])
    owner = m.locate([(0.1, 0.1), (0.9, 0.9), (2, 2)])
    assert owner[0] != owner[1] and owner[2] == -1
    # the centre lies on the shared diagonal and goes to the lower index
    assert m.locate([(0.5, 0.5)])[0] == 0


def test_dict_roundtrip():
    m = triangulate(np.random.default_rng(1).uniform(0, 1, (8, 2)))
    back = DelaunayMesh.from_dict(m.to_dict())
    assert back.triangles == m.triangles
    assert np.allclose(back.weights, m.weights)
    with pytest.raises(ValueError):
        DelaunayMesh.from_dict({"sites": [], "triangles": []})


def test_moments_single_triangle_reduce():
    for r in (1.0, 1.5, 3.0):
        mu, nu = moments_multi(r, [1.0])
        assert mu == moments.mu_null(r) and nu == moments.nu_null(r)


def test_moments_multi_formula():
    w = [0.5, 0.3, 0.2]
    s2, s3 = weight_sums(w)
    assert (s2, s3) == pytest.approx((0.38, 0.16))
    mu, nu = moments_multi(2.0, w)
    assert mu == pytest.approx(5 / 8 * 0.38)
    assert nu == pytest.approx(25 / 192 * 0.16 + 4 * (5 / 8) ** 2 * (0.16 - 0.38**2))
    assert multi_variance(5 / 8, 25 / 192, w) == pytest.approx(nu)


def test_adjusted_variance():
    w = [0.6, 0.4]
    s2, s3 = weight_sums(w)
    mu, nu = moments_multi(1.5, w)
    assert adjusted_variance(1.5, w, 50) == pytest.approx(nu / s2**2 / 50)
    assert adjusted_variance(1.5, [1.0], 50) == pytest.approx(moments.nu_null(1.5) / 50)
    with pytest.raises(ValueError):
        adjusted_variance(1.5, w, 1)


def test_density_multi_identities():
    rng = np.random.default_rng(7)
    m = triangulate([(0, 0), (2, 0), (2, 1), (0, 1), (1, 2)])
    pts = []
    while len(pts) < 60:
        p = rng.uniform([0, 0], [2, 2])
        if m.locate([p])[0] >= 0:
            pts.append(p)
    pts = np.array(pts)
    res = density_multi(m, 1.6, pts)
    owner = m.locate(pts)
    total = 0
    for j, (k, rho_j) in enumerate(res.per_triangle):
        sel = pts[owner == j]
        assert k == len(sel)
        if k >= 2:
            arcs = int(arc_matrix(m.triangle(j).barycentric(sel), 1.6).sum())
            assert rho_j == pytest.approx(arcs / (k * (k - 1)))
            total += arcs
    assert res.arc_count == total
    assert res.rho_J == pytest.approx(total / (60 * 59))
    n_pairs = sum(k * (k - 1) for k, _ in res.per_triangle)
    assert res.adjusted == pytest.approx(total / n_pairs)


def test_density_multi_single_triangle_matches():
    t = Triangle((0, 0), (3, 0), (1, 2))
    pts = t.from_barycentric(np.random.default_rng(2).dirichlet([1, 1, 1], 40))
    res = density_multi(single_triangle_mesh(t), 1.4, pts)
    assert res.rho_J == pytest.approx(arc_matrix(t.barycentric(pts), 1.4).sum() / (40 * 39))
    assert res.adjusted == res.rho_J


def test_density_multi_errors():
    m = triangulate([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError, match="outside"):
        density_multi(m, 1.5, [(0.1, 0.1), (3, 3)])
    with pytest.raises(ValueError):
        density_multi(m, 1.5, [(0.1, 0.1)])


def test_infinite_r_density():
    m = triangulate([(0, 0), (1, 0), (1, 1), (0, 1)])
    pts = [(0.1, 0.1), (0.2, 0.05), (0.9, 0.9), (0.8, 0.95)]
    res = density_multi(m, math.inf, pts)
    # every ordered pair within a triangle is an arc
    assert [k for k, _ in res.per_triangle] == [2, 2]
    assert res.arc_count == 4 and res.adjusted == 1.0
