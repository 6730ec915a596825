"""Pitman and Hodges-Lehmann efficacies and the asymptotic power functions.

Functions that read the specific-eps variance tables default to the corrected
variant: one printed segregation variance piece is negative on [3/2, 2) and
would otherwise poison every derived curve there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from scipy.special import ndtr, ndtri

from . import moments as M
from .multitriangle import multi_variance, weight_sums
from .sampling import Alternative


@dataclass(frozen=True)
class EfficacyReport:
    kind: str  # PAE_S, PAE_A, HLAE_S or HLAE_A
    r: float
    value: float
    epsilon: Optional[float] = None
    weights: Optional[tuple] = None
    degenerate: bool = False


def normal_cdf(x):
    return float(ndtr(x))


def normal_quantile(p):
    if not (0 < p < 1):
        raise ValueError("probability must lie in (0, 1)")
    return float(ndtri(p))


def _null_var(r):
    nu = M.nu_null(r)
    if nu <= 0:
        raise ValueError(f"null variance vanishes at r={r}; efficacy undefined")
    return nu


def pae_seg(r):
    return M.mu_seg_dd(r) ** 2 / _null_var(r)


def pae_assoc(r):
    return M.mu_assoc_dd(r) ** 2 / _null_var(r)


DEFAULT_VARIANT = "corrected"


def _alt_moments(r, alt, variant=DEFAULT_VARIANT):
    """(mu_alt, nu_alt) from the specific-eps tables."""
    if alt.kind == "segregation":
        return M.mu_seg_at(r, alt.epsilon).value, M.nu_seg_at(r, alt.epsilon, variant).value
    if alt.kind == "association":
        return M.mu_assoc_at(r, alt.epsilon).value, M.nu_assoc_at(r, alt.epsilon, variant).value
    raise ValueError("efficacy needs a segregation or association alternative")


def hlae(r, alt: Alternative, variant=DEFAULT_VARIANT):
    """Squared mean shift over the alternative variance; inf where that variance vanishes."""
    mu_alt, nu_alt = _alt_moments(r, alt, variant)
    shift = (mu_alt - M.mu_null(r)) ** 2
    if nu_alt <= 0:
        return math.inf
    return shift / nu_alt


def _power(r, n, alt, alpha, upper, variant=DEFAULT_VARIANT):
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie in (0, 1)")
    if n < 1:
        raise ValueError("n must be positive")
    mu_alt, nu_alt = _alt_moments(r, alt, variant)
    mu, nu = M.mu_null(r), M.nu_null(r)
    z = normal_quantile(1 - alpha if upper else alpha)
    cut = mu + z * math.sqrt(nu / n)
    if nu_alt <= 0:
        # the statistic is a point mass at mu_alt
        return float(mu_alt > cut) if upper else float(mu_alt < cut)
    x = (cut - mu_alt) * math.sqrt(n / nu_alt)
    return 1 - normal_cdf(x) if upper else normal_cdf(x)


def power_seg(r, n, eps, alpha=0.05, variant=DEFAULT_VARIANT):
    """Normal-approximation power of the upper-tail test under segregation."""
    return _power(r, n, Alternative.segregation(float(_eps_value(eps))), alpha, True, variant)


def power_assoc(r, n, eps, alpha=0.05, variant=DEFAULT_VARIANT):
    """Normal-approximation power of the lower-tail test under association."""
    return _power(r, n, Alternative.association(float(_eps_value(eps))), alpha, False, variant)


def _eps_value(eps):
    return M.parse_eps(eps) if isinstance(eps, str) else eps


# ---- several triangles ----------------------------------------------------

def pae_multi(r, weights, kind="segregation"):
    if kind not in ("segregation", "association"):
        raise ValueError("kind must be segregation or association")
    s2, _ = weight_sums(weights)
    dd = M.mu_seg_dd(r) if kind == "segregation" else M.mu_assoc_dd(r)
    denom = multi_variance(M.mu_null(r), M.nu_null(r), weights)
    if denom <= 0:
        raise ValueError("variance vanishes; efficacy undefined")
    return (dd * s2) ** 2 / denom


def pae_multi_limit(weights):
    """Limit of the segregation PAE for several triangles as r grows."""
    s2, s3 = weight_sums(weights)
    gap = s3 - s2**2
    return math.inf if gap <= 0 else 16 * s2**2 / gap


def hlae_multi(r, eps, weights, kind="segregation", variant=DEFAULT_VARIANT):
    s2, _ = weight_sums(weights)
    if float(_eps_value(eps)) == 0:
        return 0.0
    alt = Alternative(kind, float(_eps_value(eps)))
    mu_alt, nu_alt = _alt_moments(r, alt, variant)
    denom = multi_variance(mu_alt, nu_alt, weights)
    shift = ((mu_alt - M.mu_null(r)) * s2) ** 2
    if denom <= 0:
        return math.inf if shift > 0 else 0.0
    return shift / denom


def report(kind, r, eps=None, weights=None):
    """EfficacyReport for PAE_S, PAE_A, HLAE_S or HLAE_A (optionally over several triangles)."""
    kinds = {"PAE_S": "segregation", "PAE_A": "association", "HLAE_S": "segregation", "HLAE_A": "association"}
    if kind not in kinds:
        raise ValueError(f"unknown efficacy {kind!r}")
    side = kinds[kind]
    w = tuple(float(x) for x in weights) if weights is not None else None
    if kind.startswith("PAE"):
        value = pae_multi(r, w, side) if w else (pae_seg(r) if side == "segregation" else pae_assoc(r))
        return EfficacyReport(kind, float(r), value, None, w)
    if eps is None:
        raise ValueError("HLAE needs epsilon")
    e = float(_eps_value(eps))
    value = hlae_multi(r, e, w, side) if w else hlae(r, Alternative(side, e))
    return EfficacyReport(kind, float(r), value, e, w, math.isinf(value))
