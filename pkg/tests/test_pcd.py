from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from arcdens.geometry import ProximityParams, Triangle, contains, proximity_region
from arcdens.pcd import (
    DENSE_LIMIT, Digraph, batch_density, build_digraph, density, pair_kernel, relative_density,
)

STD = Triangle.standard()


def _points(n, seed=0, tri=STD):
    return tri.from_barycentric(np.random.default_rng(seed).dirichlet([1, 1, 1], n))


def test_single_point_has_no_arcs():
    d = build_digraph(STD, ProximityParams(2.0), _points(1))
    assert d.arc_count == 0 and d.arcs == set()


def test_infinite_r_gives_complete_digraph():
    d = build_digraph(STD, ProximityParams.infinity(), _points(5))
    assert d.arc_count == 20
    assert all(pair_kernel(d, i, j) == 2 for i, j in combinations(range(5), 2))


def test_three_points_against_polygon_membership():
    pts = np.array([[0.3, 0.1], [0.6, 0.3], [0.45, 0.6]])
    p = ProximityParams(1.5)
    d = build_digraph(STD, p, pts)
    brute = {(i, j) for i in range(3) for j in range(3)
             if i != j and contains(proximity_region(STD, p, pts[i]), pts[j])}
    assert d.arcs == brute


def test_outside_point_is_named():
    pts = [(0.2, 0.1), (0.5, 0.2), (1.5, 1.5)]
    with pytest.raises(ValueError, match="point 2 outside triangle"):
        build_digraph(STD, ProximityParams(1.0), pts)


def test_density_trivial_cases():
    assert relative_density(Digraph(10)).rho == 0
    full = [(i, j) for i in range(10) for j in range(10) if i != j]
    res = relative_density(Digraph(10, full))
    assert res.arc_count == 90 and res.rho == 1.0 and res.exact == Fraction(1)
    with pytest.raises(ValueError, match="density undefined"):
        relative_density(Digraph(1))


def test_digraph_validation():
    with pytest.raises(ValueError, match="self-loops"):
        Digraph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Digraph(3, [(0, 3)])
    with pytest.raises(ValueError):
        pair_kernel(Digraph(3), 1, 1)


def test_kernel_sum_identity_and_symmetry():
    d = build_digraph(STD, ProximityParams(1.4), _points(30, 1))
    total = sum(pair_kernel(d, i, j) for i, j in combinations(range(30), 2))
    assert total == d.arc_count
    assert all(pair_kernel(d, i, j) == pair_kernel(d, j, i) for i, j in combinations(range(8), 2))
    assert relative_density(d).exact == Fraction(total, 30 * 29)


def test_arcs_grow_with_r():
    pts = _points(40, 2)
    small = build_digraph(STD, ProximityParams(1.2), pts).arcs
    big = build_digraph(STD, ProximityParams(2.2), pts).arcs
    assert small <= big


def test_permutation_invariance():
    pts = _points(25, 3)
    perm = np.random.default_rng(4).permutation(25)
    p = ProximityParams(1.7)
    assert density(STD, p, pts).arc_count == density(STD, p, pts[perm]).arc_count


def test_sparse_storage_matches_dense():
    n = DENSE_LIMIT + 10
    pts = _points(n, 5)
    big = build_digraph(STD, ProximityParams(1.05), pts)
    assert big._matrix is None
    # the first 300 points' arcs among themselves agree with a dense build
    sub = build_digraph(STD, ProximityParams(1.05), pts[:300])
    sub_arcs = {(i, j) for i, j in big._pairs.tolist() if i < 300 and j < 300}
    assert sub_arcs == sub.arcs
    assert big.has_arc(*next(iter(sub.arcs)))


def test_batch_density_matches_single():
    rng = np.random.default_rng(6)
    lam = rng.dirichlet([1, 1, 1], (7, 12))
    got = batch_density(lam, 1.5)
    for k in range(7):
        assert got[k] == density(STD, 1.5, STD.from_barycentric(lam[k])).rho
