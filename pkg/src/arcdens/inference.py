"""Asymptotic normal test and the Monte Carlo engine for critical values and power.

Replicates are generated in fixed blocks of BLOCK, each block drawing from its
own seeded stream, so a run gives the same numbers whatever the worker count.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from . import moments
from .efficacy import normal_cdf, normal_quantile
from .geometry import Triangle, arc_matrix
from .multitriangle import DelaunayMesh, density_multi, moments_multi
from .pcd import _r_value, barycentric_checked, batch_density
from .sampling import BLOCK, Alternative, alternative_barycentric, block_rng, sample_alternative, sample_hull

DIRECTIONS = ("segregation", "association", "two-sided-info")
NULL_STREAM, ALT_STREAM = 0, 1
_CELLS = 4_000_000  # pair entries per vectorized chunk


# ---- asymptotic test --------------------------------------------------------

@dataclass(frozen=True)
class TestReport:
    rho: float
    mu0: float
    nu0: float
    n: int
    z: Optional[float]
    p_seg: Optional[float]
    p_assoc: Optional[float]
    direction: str = "two-sided-info"
    degenerate: bool = False
    r: float = math.nan
    alpha: float = 0.05
    reject_seg: Optional[bool] = None
    reject_assoc: Optional[bool] = None
    triangles: int = 1

    __test__ = False  # not a pytest class

    def to_dict(self, config=None):
        d = asdict(self)
        for k, v in d.items():
            if isinstance(v, float) and not math.isfinite(v):
                d[k] = None if math.isnan(v) else ("inf" if v > 0 else "-inf")
        if config is not None:
            d["config"] = config
        return d


def asymptotic_test(region, params, points, alpha=0.05, direction="two-sided-info"):
    """Normal-approximation test of uniformity on a triangle or a Delaunay mesh.

    p_seg is the upper-tail p-value (large density means segregation),
    p_assoc the lower tail.  When the null variance vanishes, as for r = inf,
    the report is flagged degenerate and carries no p-values.
    """
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie in (0, 1)")
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    r = _r_value(params)
    if isinstance(region, Triangle):
        lam = barycentric_checked(region, points)
        n = len(lam)
        if n < 2:
            raise ValueError("density undefined for fewer than two points")
        rho = float(arc_matrix(lam, r).sum()) / (n * (n - 1))
        mu0, nu0, tris = moments.mu_null(r), moments.nu_null(r), 1
    elif isinstance(region, DelaunayMesh):
        res = density_multi(region, r, points)
        n, rho = res.n, res.rho_J
        mu0, nu0 = moments_multi(r, region.weights)
        tris = len(region)
    else:
        raise TypeError("region must be a Triangle or a DelaunayMesh")
    if not nu0 > 0:
        return TestReport(rho, mu0, nu0, n, None, None, None, direction, True, r, alpha, triangles=tris)
    z = math.sqrt(n) * (rho - mu0) / math.sqrt(nu0)
    p_seg, p_assoc = 1 - normal_cdf(z), normal_cdf(z)
    return TestReport(
        rho, mu0, nu0, n, z, p_seg, p_assoc, direction, False, r, alpha,
        reject_seg=z > normal_quantile(1 - alpha),
        reject_assoc=z < normal_quantile(alpha),
        triangles=tris,
    )


# ---- Monte Carlo engine -----------------------------------------------------

@dataclass(frozen=True)
class McConfig:
    n: int
    replicates: int
    r: float
    alt: Alternative = field(default_factory=Alternative.null)
    alpha: float = 0.05
    seed: int = 0
    use_asymptotic_cv: bool = False
    direction: Optional[str] = None  # inferred from alt when None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.replicates < 1:
            raise ValueError("replicates must be at least 1")
        if not (0 < self.alpha < 1):
            raise ValueError("alpha must lie in (0, 1)")
        if not self.r >= 1:
            raise ValueError("r must be at least 1")
        if self.direction not in (None, "segregation", "association"):
            raise ValueError("direction must be segregation or association")

    @property
    def tail(self):
        if self.direction:
            return self.direction
        return "association" if self.alt.kind == "association" else "segregation"

    def to_dict(self):
        d = asdict(self)
        d["alt"] = {"kind": self.alt.kind, "epsilon": self.alt.epsilon}
        d["direction"] = self.tail
        d["r"] = "inf" if math.isinf(self.r) else self.r
        return d


@dataclass(frozen=True, eq=False)
class McResult:
    critical_value: float
    empirical_alpha: Optional[float]
    empirical_power: Optional[float]
    null_replicates: np.ndarray  # replicate order
    alt_replicates: Optional[np.ndarray] = None
    config: Optional[McConfig] = None

    @property
    def density_samples(self):
        """Sorted null replicate densities."""
        return np.sort(self.null_replicates)

    def to_dict(self):
        return {
            "critical_value": self.critical_value,
            "empirical_alpha": self.empirical_alpha,
            "empirical_power": self.empirical_power,
            "replicates": len(self.null_replicates),
            "config": self.config.to_dict() if self.config else None,
        }


def _chunked_density(lam, r):
    n = lam.shape[-2]
    step = max(1, _CELLS // (n * n))
    return np.concatenate([batch_density(lam[i:i + step], r) for i in range(0, len(lam), step)])


def _block_task(args):
    seed, stream, block, count, n, r, alt, tri = args
    rng = block_rng(seed, block, stream)
    if tri is None:
        lam = alternative_barycentric(alt, (count, n), rng)
    else:
        # go through Cartesian points so the triangle's geometry is exercised
        pts = np.stack([sample_alternative(tri, alt, n, rng) for _ in range(count)])
        lam = tri.barycentric(pts.reshape(-1, 2)).reshape(count, n, 3)
    return _chunked_density(lam, r)


def _run_blocks(task, jobs, workers):
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(task, jobs))
    else:
        parts = [task(j) for j in jobs]
    return np.concatenate(parts) if parts else np.zeros(0)


def _blocks(replicates):
    return [(b, min(BLOCK, replicates - b * BLOCK)) for b in range(-(-replicates // BLOCK))]


def simulate_densities(n, r, alt=None, replicates=1000, seed=0, stream=NULL_STREAM, workers=1, triangle=None):
    """Relative densities of `replicates` independent samples of size n, in replicate order.

    Without `triangle` the samples live on the standard triangle in
    barycentric form; the statistic does not depend on the triangle.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    alt = alt or Alternative.null()
    jobs = [(seed, stream, b, c, n, r, alt, triangle) for b, c in _blocks(replicates)]
    return _run_blocks(_block_task, jobs, workers)


def _mesh_task(args):
    seed, stream, block, count, n, r, alt, mesh = args
    rng = block_rng(seed, block, stream)
    out = np.empty(count)
    for k in range(count):
        pts, owner = sample_hull(mesh, alt, n, rng)
        out[k] = density_multi(mesh, r, pts, owner).rho_J
    return out


def simulate_mesh_densities(mesh, n, r, alt=None, replicates=1000, seed=0, stream=NULL_STREAM, workers=1):
    """Replicates of the overall density on a triangulated hull."""
    if n < 2:
        raise ValueError("n must be at least 2")
    alt = alt or Alternative.null()
    jobs = [(seed, stream, b, c, n, r, alt, mesh) for b, c in _blocks(replicates)]
    return _run_blocks(_mesh_task, jobs, workers)


def order_statistic_cv(values, alpha, tail):
    """Empirical critical value and the matching rejection indicator.

    Upper tail uses the ceil((1 - alpha) N)-th order statistic, lower tail the
    floor(alpha N)-th (1-based), clamped to a valid index.  Rejection is strict.
    """
    s = np.sort(np.asarray(values, dtype=float))
    N = len(s)
    if tail == "segregation":
        k = math.ceil((1 - alpha) * N - 1e-9)
        cv = float(s[min(max(k, 1), N) - 1])
        return cv, lambda x: np.asarray(x) > cv
    k = math.floor(alpha * N + 1e-9)
    cv = float(s[min(max(k, 1), N) - 1])
    return cv, lambda x: np.asarray(x) < cv


def mc_critical_value(cfg: McConfig, workers=1):
    """Critical value and empirical significance from N null replicates."""
    null = simulate_densities(cfg.n, cfg.r, Alternative.null(), cfg.replicates, cfg.seed, NULL_STREAM, workers)
    cv, reject = order_statistic_cv(null, cfg.alpha, cfg.tail)
    a = float(reject(null).mean())
    return McResult(cv, a, a, null, None, cfg)


def _asymptotic_cut(cfg):
    mu, nu = moments.mu_null(cfg.r), moments.nu_null(cfg.r)
    if not nu > 0:
        raise ValueError(f"null variance vanishes at r={cfg.r}; no asymptotic critical value")
    upper = cfg.tail == "segregation"
    z = normal_quantile(1 - cfg.alpha if upper else cfg.alpha)
    cut = mu + z * math.sqrt(nu / cfg.n)

    def reject(x):
        stat = math.sqrt(cfg.n) * (np.asarray(x) - mu) / math.sqrt(nu)
        return stat > z if upper else stat < z
    return cut, reject


def mc_power(cfg: McConfig, critical=None, workers=1):
    """Empirical power under cfg.alt with an MC or asymptotic critical value.

    `critical` may be a McResult from mc_critical_value (reused as is), a bare
    critical value (no significance estimate), or None to simulate the null
    here.  Under a null alternative the null replicates double as the
    alternative ones, so power equals the empirical significance.
    """
    if cfg.use_asymptotic_cv:
        cv, reject = _asymptotic_cut(cfg)
        null = simulate_densities(cfg.n, cfg.r, Alternative.null(), cfg.replicates, cfg.seed, NULL_STREAM, workers)
        a = float(reject(null).mean())
    elif isinstance(critical, McResult):
        cv, null, a = critical.critical_value, critical.null_replicates, critical.empirical_alpha
        _, reject = order_statistic_cv(null, cfg.alpha, cfg.tail)
    elif critical is not None:
        cv, null, a = float(critical), np.zeros(0), None
        reject = (lambda x: np.asarray(x) > cv) if cfg.tail == "segregation" else (lambda x: np.asarray(x) < cv)
    else:
        res = mc_critical_value(cfg, workers)
        cv, null, a = res.critical_value, res.null_replicates, res.empirical_alpha
        _, reject = order_statistic_cv(null, cfg.alpha, cfg.tail)
    if cfg.alt.kind == "null" and len(null):
        alt = null
    else:
        alt = simulate_densities(cfg.n, cfg.r, cfg.alt, cfg.replicates, cfg.seed, ALT_STREAM, workers)
    return McResult(cv, a, float(reject(alt).mean()), null, alt, cfg)


def consistency_probe(r, alt, n_list, replicates=1000, alpha=0.05, seed=0, workers=1):
    """MC power (with MC critical values) at each sample size in n_list."""
    out = []
    for n in n_list:
        cfg = McConfig(int(n), replicates, r, alt, alpha, seed)
        out.append(mc_power(cfg, workers=workers).empirical_power)
    return out


def mc_multi_moments(mesh, n, r, replicates=1000, seed=0, workers=1):
    """(empirical mean, variance, analytic mu(r, J), analytic nu(r, J)/n) under the null."""
    vals = simulate_mesh_densities(mesh, n, r, None, replicates, seed, NULL_STREAM, workers)
    mu, nu = moments_multi(r, mesh.weights)
    return float(vals.mean()), float(vals.var(ddof=1)), mu, nu / n


def replicates_csv(values, stream=None):
    """CSV text (or write to an open stream) with columns replicate_id, rho."""
    buf = stream or io.StringIO()
    w = csv.writer(buf)
    w.writerow(["replicate_id", "rho"])
    for i, v in enumerate(np.asarray(values, dtype=float)):
        w.writerow([i, repr(float(v))])
    return buf.getvalue() if stream is None else None


__all__ = [
    "TestReport", "McConfig", "McResult", "asymptotic_test", "simulate_densities",
    "simulate_mesh_densities", "order_statistic_cv", "mc_critical_value", "mc_power",
    "consistency_probe", "mc_multi_moments", "replicates_csv",
]
