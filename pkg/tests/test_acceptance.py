"""Acceptance criteria 1-12.

Each criterion has one or more test_criterion_NN_* functions; the terminal
summary prints one pass/fail line per criterion.  Reference values the
package cannot reproduce are kept at their stated tolerance as strict xfails.
"""

import math
import warnings
import zlib

import numpy as np
import pytest
from scipy import stats

from arcdens import efficacy as E
from arcdens import moments as M
from arcdens.geometry import SQRT3, ProximityParams, Triangle, gamma1_contains
from arcdens.inference import McConfig, mc_power, simulate_densities, simulate_mesh_densities
from arcdens.multitriangle import moments_multi, triangulate
from arcdens.sampling import Alternative
from oracles import VERTS, arc, cart_uniform, mu_mc, nu_mc, nu_triples

NU1_WRONG = ("the quoted value 34/58320 disagrees with the piecewise variance formula (18/58320), "
             "with exact quadrature and with independent MC; see ledger")


# ---- 1. closed-form anchors --------------------------------------------------

def test_criterion_01_mu_anchors():
    assert abs(M.mu_null(1) - 37 / 216) < 1e-12
    assert abs(M.mu_null(2) - 5 / 8) < 1e-12


def test_criterion_01_nu_at_two():
    assert abs(M.nu_null(2) - 25 / 192) < 1e-12


def test_criterion_01_omega_at_one():
    assert abs(M.omega_var_h(1) - 2627 / 11664) < 1e-12


def test_criterion_01_nu_at_one_independent_evidence():
    # exact covariance by quadrature and a conditional MC estimate both side with 18/58320
    assert abs(M.nu_alternative_quadrature(1.0) - 18 / 58320) < 1e-13
    est, se = nu_mc(1.0, outer=40000, inner=50, rng=np.random.default_rng(3))
    assert abs(est - 18 / 58320) < 3 * se
    assert abs(est - 34 / 58320) > 6 * se


@pytest.mark.xfail(strict=True, reason=NU1_WRONG)
def test_criterion_01_nu_at_one():
    assert abs(M.nu_null(1) - 34 / 58320) < 1e-12


# ---- 2. curve extrema --------------------------------------------------------

def test_criterion_02_curve_extrema():
    grid = np.round(np.arange(1.0, 6.0 + 5e-4, 1e-3), 6)
    nu = np.array([M.nu_null(r) for r in grid])
    om = np.array([M.omega_var_h(r) for r in grid])
    i, k = int(nu.argmax()), int(om.argmax())
    print(f"sup nu = {nu[i]:.6f} at r = {grid[i]:.3f}; sup omega = {om[k]:.6f} at r = {grid[k]:.3f}")
    assert abs(nu[i] - 0.1305) < 5e-5 and abs(grid[i] - 2.045) <= 0.01
    assert abs(om[k] - 0.6796) < 5e-5 and abs(grid[k] - 1.66) <= 0.01


# ---- 3. mean vs Cartesian MC oracle -----------------------------------------

@pytest.mark.parametrize("r", [1, 1.25, 1.5, 1.75, 2, 3, 5])
def test_criterion_03_mu_oracle(r):
    est, se = mu_mc(r, pairs=10**6, rng=np.random.default_rng(1000 + int(100 * r)))
    assert abs(est - M.mu_null(r)) < 3 * se, (est, se, M.mu_null(r))


# ---- 4. covariance vs MC oracle ------------------------------------------------

def test_criterion_04_gamma1_matches_oracle_arcs():
    rng = np.random.default_rng(4)
    tri = Triangle(*VERTS)
    x, z = cart_uniform(400, rng), cart_uniform(400, rng)
    for r in (1.2, 2.0):
        p = ProximityParams(r)
        mine = [gamma1_contains(tri, p, a, b) for a, b in zip(x, z)]
        # x in N(z) is the oracle arc z -> x
        assert mine == list(arc(z, x, r))


@pytest.mark.parametrize("r", [1.2, 1.5, 2, 3])
def test_criterion_04_nu_oracle(r):
    est, se = nu_triples(r, triples=10**6, rng=np.random.default_rng(4000 + int(10 * r)))
    assert abs(est - M.nu_null(r)) < 3 * se, (est, se, M.nu_null(r))


# ---- 5. normal approximation at r = 2 ------------------------------------------

def test_criterion_05_clt():
    rho = simulate_densities(100, 2.0, None, 10**4, seed=5)
    R = np.sqrt(100) * (rho - 5 / 8) / np.sqrt(25 / 192)
    m, v, s = R.mean(), R.var(ddof=1), stats.skew(R)
    print(f"mean {m:.4f}, variance {v:.4f}, skewness {s:.4f}")
    assert abs(m) <= 0.05
    assert 0.9 <= v <= 1.1
    assert abs(s) < 0.15


# ---- 6. empirical power tables ---------------------------------------------------

# cells whose MC critical value is pinned to a single atom of the discrete null law
POWER_CELLS = [
    ("segregation", "sqrt3/8", 1.0, 0.0381),
    ("segregation", "sqrt3/8", 1.2, 0.122),
    ("segregation", "sqrt3/8", 4 / 3, 0.1571),
    ("segregation", "sqrt3/8", math.sqrt(2), 0.1719),
    ("segregation", "sqrt3/8", 3.0, 0.2901),
    ("segregation", "sqrt3/4", 1.0, 0.1247),
    ("segregation", "sqrt3/4", 1.2, 0.998),
    ("segregation", "sqrt3/4", 4 / 3, 1.0),
    ("segregation", "2sqrt3/7", 1.05, 0.9728),
    ("segregation", "2sqrt3/7", 1.2, 1.0),
    ("association", "5sqrt3/24", 1.2, 0.0754),
    ("association", "5sqrt3/24", 4 / 3, 0.2052),
    ("association", "5sqrt3/24", 3.0, 0.9993),
    ("association", "5sqrt3/24", 10.0, 0.4242),
    ("association", "sqrt3/12", math.sqrt(2), 0.2002),
    ("association", "sqrt3/12", 1.5, 0.2274),
    ("association", "sqrt3/21", 1.5, 0.0771),
]


@pytest.mark.parametrize("kind,key,r,tabulated", POWER_CELLS, ids=lambda v: str(v))
def test_criterion_06_power_cell(kind, key, r, tabulated):
    cfg = McConfig(10, 10**4, r, Alternative(kind, M.parse_eps(key)), 0.05, seed=606)
    res = mc_power(cfg)
    band = 3 * math.sqrt(tabulated * (1 - tabulated) / 1e4) + 0.01
    print(f"{kind} {key} r={r:.4f}: power {res.empirical_power:.4f} (table {tabulated}), "
          f"cv {res.critical_value:.4f}, alpha {res.empirical_alpha:.4f}")
    assert abs(res.empirical_power - tabulated) <= band


# cells where two atoms compete for the critical value; checked at the tabulated critical value
KNIFE_EDGE = [
    ("segregation", "sqrt3/8", 2.0, 74 / 90, 0.2791),
    ("segregation", "sqrt3/8", 1.5, 50 / 90, 0.1955),
    ("association", "5sqrt3/24", 2.0, 38 / 90, 0.946),
    ("association", "sqrt3/12", 2.0, 38 / 90, 0.2739),
]


@pytest.mark.parametrize("kind,key,r,cv,tabulated", KNIFE_EDGE, ids=lambda v: str(v))
def test_criterion_06_power_at_tabulated_cv(kind, key, r, cv, tabulated):
    cfg = McConfig(10, 10**4, r, Alternative(kind, M.parse_eps(key)), 0.05, seed=607)
    res = mc_power(cfg, critical=cv)
    band = 3 * math.sqrt(tabulated * (1 - tabulated) / 1e4) + 0.01
    assert abs(res.empirical_power - tabulated) <= band


# ---- 7. degeneracy thresholds ------------------------------------------------------

def test_criterion_07_thresholds_exact():
    assert M.degeneracy_threshold_seg(SQRT3 / 8) == pytest.approx(4, abs=1e-12)
    assert M.degeneracy_threshold_seg(SQRT3 / 4) == pytest.approx(2, abs=1e-12)
    assert M.degeneracy_threshold_seg(2 * SQRT3 / 7) == pytest.approx(1.5, abs=1e-12)


@pytest.mark.parametrize("key,rd", [("sqrt3/8", 4.0), ("sqrt3/4", 2.0), ("2sqrt3/7", 1.5)])
def test_criterion_07_complete_digraph_above_threshold(key, rd):
    alt = Alternative.segregation(M.parse_eps(key))
    for r in (rd, rd + 1e-6, rd + 0.01):
        rho = simulate_densities(10, r, alt, 2000, seed=7)
        assert np.all(rho == 1.0)
    # and not yet complete just below
    assert np.any(simulate_densities(10, rd - 0.05, alt, 2000, seed=7) < 1)


# ---- 8. Pitman efficacy anchors ------------------------------------------------------

PAE_WRONG = ("follows from nu(1) = 34/58320; the variance formula and the exact covariance give "
             "18/58320, see ledger")


def _pae_assoc_grid():
    grid = np.round(np.arange(1.0, 6.0 + 5e-4, 1e-3), 6)
    return grid, np.array([E.pae_assoc(r) for r in grid])


@pytest.mark.xfail(strict=True, reason=PAE_WRONG)
def test_criterion_08_pae_seg_at_one():
    assert abs(E.pae_seg(1) - 160 / 7) < 1e-9


@pytest.mark.xfail(strict=True, reason=PAE_WRONG)
def test_criterion_08_pae_assoc_at_one():
    assert abs(E.pae_assoc(1) - 174240 / 17) < 1e-6


@pytest.mark.xfail(strict=True, reason=PAE_WRONG)
def test_criterion_08_pae_assoc_argsup():
    grid, v = _pae_assoc_grid()
    i = int(v.argmax())
    assert abs(grid[i] - 1.006) <= 0.005 and abs(v[i] - 10399.77) <= 1


def test_criterion_08_values_implied_by_variance_formula():
    # the same anchors recomputed with nu(1) = 18/58320
    assert abs(E.pae_seg(1) - 160 / 9) < 1e-9
    assert abs(E.pae_assoc(1) - 19360) < 1e-6


def test_criterion_08_pae_assoc_local_sup():
    grid, v = _pae_assoc_grid()
    sel = (grid > 1.2) & (grid < 2.0)
    i = int(v[sel].argmax())
    print(f"local sup of PAE_A = {v[sel][i]:.4f} at r = {grid[sel][i]:.3f}")
    assert abs(grid[sel][i] - 1.4356) <= 0.005
    assert abs(v[sel][i] - 3630.8932) <= 1


# ---- 9. asymptotic power limits -------------------------------------------------------

@pytest.mark.parametrize("n", [5, 10, 100])
def test_criterion_09_power_limit_sqrt3_21(n):
    assert abs(E.power_assoc(1e3, n, "sqrt3/21") - 0.057) <= 0.002


@pytest.mark.parametrize("n", [5, 10, 100])
def test_criterion_09_power_limit_sqrt3_12(n):
    assert abs(E.power_assoc(1e3, n, "sqrt3/12") - 0.0766) <= 0.002


# ---- 10. geometry invariance ---------------------------------------------------------

def _random_triangles(k, seed):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < k:
        v = rng.uniform(-5, 5, (3, 2))
        try:
            t = Triangle(*v)
        except ValueError:
            continue
        if t.area > 1.0:
            out.append(t)
    return out


def test_criterion_10_geometry_invariance():
    ref = simulate_densities(10, 1.5, None, 10**4, seed=10, triangle=Triangle.standard())
    for j, tri in enumerate(_random_triangles(5, 1010)):
        other = simulate_densities(10, 1.5, None, 10**4, seed=11 + j, triangle=tri)
        p = stats.ks_2samp(ref, other).pvalue
        print(f"triangle {j}: KS p = {p:.3f}")
        assert p > 0.01


# ---- 11. several triangles at desk scale ---------------------------------------------

@pytest.fixture(scope="module")
def desk_mesh():
    return triangulate(np.random.default_rng(11).uniform(0, 1, (10, 2)))


@pytest.mark.parametrize("r", [1.5, 2.0])
def test_criterion_11_multi_moments(desk_mesh, r):
    n, N = 500, 2000
    vals = simulate_mesh_densities(desk_mesh, n, r, None, N, seed=1100)
    mu_J, nu_J = moments_multi(r, desk_mesh.weights)
    mean, var = vals.mean(), vals.var(ddof=1)
    se_mean = math.sqrt(var / N)
    c = vals - mean
    se_var = math.sqrt(max((c**4).mean() - var**2, 0) / N)
    print(f"r={r}: mean {mean:.6f} vs {mu_J:.6f} (se {se_mean:.2e}); var {var:.3e} vs {nu_J / n:.3e} (se {se_var:.2e})")
    assert abs(mean - mu_J) < 3 * se_mean
    assert abs(var - nu_J / n) < 3 * se_var


@pytest.mark.parametrize("r", [1, 1.5, 2, 3.7])
def test_criterion_11_single_triangle_reduction(r):
    assert moments_multi(r, [1.0]) == (M.mu_null(r), M.nu_null(r))


# ---- 12. transcription audit ---------------------------------------------------------

AUDIT_SEG_EPS = [SQRT3 / 16, (SQRT3 / 8 + SQRT3 / 6) / 2, 0.3, 0.37, 0.505]
AUDIT_ASSOC_EPS = [0.02, 0.09, 0.3]


def _midpoints(table):
    for i, (lo, hi, _) in enumerate(table.pieces):
        if lo < hi:
            yield i, ((lo + hi) / 2 if math.isfinite(hi) else lo + 1.0)


class _Cache:
    def __init__(self):
        self.mu, self.nu = {}, {}

    def mean(self, r, kind, eps):
        key = (round(r, 12), kind, round(eps, 12))
        if key not in self.mu:
            seed = zlib.crc32(repr(key).encode())
            self.mu[key] = mu_mc(r, kind, eps, pairs=10**6, rng=np.random.default_rng(seed))
        return self.mu[key]

    def cov(self, r, kind, eps):
        key = (round(r, 12), kind, round(eps, 12))
        if key not in self.nu:
            seed = zlib.crc32(repr(key).encode())
            self.nu[key] = nu_mc(r, kind, eps, rng=np.random.default_rng(seed))
        return self.nu[key]


def _agree(value, est, se):
    return abs(value - est) <= 5 * max(se, 1e-6)


@pytest.fixture(scope="module")
def audit():
    cache = _Cache()
    rows = []  # (table, variant, piece, r, value, est, se, quarantined)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", M.SuspectPieceWarning)
        for kind, eps_list, build in (("segregation", AUDIT_SEG_EPS, M.seg_table),
                                      ("association", AUDIT_ASSOC_EPS, M.assoc_table)):
            for eps in eps_list:
                for variant in M.VARIANTS:
                    label, table, bad = build(eps, variant)
                    for i, r in _midpoints(table):
                        est, se = cache.mean(r, kind, eps)
                        # printed pieces can overlap; flag by the piece that actually evaluates r
                        rows.append((f"mu_{kind[0].upper()}{label}(eps={eps:.4f})", variant, i + 1, r,
                                     table(r), est, se, table.index(r) in bad))
        for kind, tables, nus, keys in (("segregation", M.SEG_MU_AT, M.nu_seg_at, M.SEG_KEYS),
                                        ("association", M.ASSOC_MU_AT, M.nu_assoc_at, M.ASSOC_KEYS)):
            for key in keys:
                eps = M.parse_eps(key)
                for i, r in _midpoints(tables[key]):
                    est, se = cache.mean(r, kind, eps)
                    rows.append((f"mu_{kind[0].upper()}({key})", "verbatim", i + 1, r, tables[key](r), est, se, False))
                nu_table = (M.SEG_NU_AT if kind == "segregation" else M.ASSOC_NU_AT)[key]
                for i, r in _midpoints(nu_table):
                    est, se = cache.cov(r, kind, eps)
                    for variant in M.VARIANTS:
                        value = nus(r, key, variant).value
                        suspect = kind == "segregation" and key == "sqrt3/4" and i == 4
                        rows.append((f"nu_{kind[0].upper()}({key})", variant, i + 1, r, value, est, se, suspect))
    for row in rows:
        name, variant, i, r, value, est, se, q = row
        flag = "ok" if _agree(value, est, se) else "MISMATCH"
        print(f"{name:28s} {variant:9s} piece {i:2d} r={r:8.4f} table={value:+.6f} mc={est:.6f} "
              f"se={se:.1e} {flag}{' (quarantined)' if q else ''}")
    return rows


@pytest.mark.slow
def test_criterion_12_corrected_tables_match_mc(audit):
    bad = [r for r in audit if r[1] == "corrected" and not _agree(r[4], r[5], r[6])]
    bad += [r for r in audit if r[1] == "verbatim" and not r[7] and not _agree(r[4], r[5], r[6])]
    assert not bad, bad


@pytest.mark.slow
def test_criterion_12_verbatim_mismatches_are_quarantined(audit):
    verbatim = [r for r in audit if r[1] == "verbatim"]
    mismatched = [r for r in verbatim if not _agree(r[4], r[5], r[6])]
    # every piece that fails verbatim is one the tables already flag, and the audit sees them
    assert all(r[7] for r in mismatched)
    assert {r[0] for r in mismatched} >= {"nu_S(sqrt3/4)"}
    assert any(r[0].startswith("mu_A") for r in mismatched)
