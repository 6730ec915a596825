"""Piecewise closed-form moments of the relative arc density.

Null moments are exact.  The eps-dependent means come from coefficient tables
entered verbatim (see _tables.py); a handful of those pieces disagree with both
Monte Carlo and an exact quadrature, so every eps-dependent mean takes a
``variant`` argument:

* ``"verbatim"`` (default) evaluates the tables as printed and emits a
  SuspectPieceWarning whenever a quarantined piece is hit;
* ``"corrected"`` swaps those pieces for values that agree with quadrature.

The quadrature itself (mu_alternative_quadrature) is an independent exact
evaluator of E[h12]/2 under the null and both alternatives.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _tables as T
from .geometry import SQRT3, ProximityParams, clip_halfplane

VARIANTS = ("verbatim", "corrected")
EPS_MAX = SQRT3 / 3


class SuspectPieceWarning(UserWarning):
    """A quarantined coefficient piece was evaluated in verbatim mode."""


@dataclass(frozen=True)
class MomentValue:
    value: float
    regime: str
    degenerate: bool = False


class PiecewiseRational:
    """Function of r defined on half-open intervals [lo, hi).

    Lookup is first match in table order, so an empty or inverted interval
    simply never matches.  r = inf goes to the last piece whose upper end is
    infinite.
    """

    def __init__(self, pieces, name=""):
        self.pieces = [(float(lo), float(hi), f) for lo, hi, f in pieces]
        self.name = name

    @property
    def breakpoints(self):
        pts = sorted({lo for lo, _, _ in self.pieces} | {hi for _, hi, _ in self.pieces})
        return [p for p in pts if math.isfinite(p)]

    def index(self, r):
        for i, (lo, hi, _) in enumerate(self.pieces):
            if lo <= r < hi or (math.isinf(r) and math.isinf(hi)):
                return i
        if r >= self.pieces[0][0]:
            return len(self.pieces) - 1
        raise ValueError(f"r={r} below the domain of {self.name or 'table'}")

    def __call__(self, r):
        return float(self.pieces[self.index(r)][2](r))

    def __len__(self):
        return len(self.pieces)


def _as_r(r):
    if isinstance(r, ProximityParams):
        return r.r
    r = float(r)
    if math.isnan(r) or r < 1:
        raise ValueError(f"expansion factor must be >= 1, got {r}")
    return r


def _check_eps(eps):
    eps = float(eps)
    if not (0 <= eps < EPS_MAX):
        raise ValueError(f"epsilon must lie in [0, sqrt3/3), got {eps}")
    return eps


def _check_variant(variant):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")


MU_NULL = PiecewiseRational(T.MU_NULL, "mu")
NU_NULL = PiecewiseRational(T.NU_NULL, "nu")
OMEGA_NULL = PiecewiseRational(T.OMEGA_NULL, "omega")
MU_SEG_DD = PiecewiseRational(T.MU_SEG_DD, "mu_seg''")
MU_ASSOC_DD = PiecewiseRational(T.MU_ASSOC_DD, "mu_assoc''")


# ---- null moments ---------------------------------------------------------------

def mu_null(r):
    """Asymptotic null mean of the relative density."""
    r = _as_r(r)
    return 1.0 if math.isinf(r) else MU_NULL(r)


def nu_null(r):
    """Cov[h12, h13] under the null; the density has asymptotic variance nu / n."""
    r = _as_r(r)
    return 0.0 if math.isinf(r) else NU_NULL(r)


def omega_var_h(r):
    """Var[h12] under the null."""
    r = _as_r(r)
    return 0.0 if math.isinf(r) else OMEGA_NULL(r)


def finite_sample_var_rho(r, n):
    if n < 2:
        raise ValueError("n must be at least 2")
    return omega_var_h(r) / (2 * n * (n - 1)) + (n - 2) * nu_null(r) / (n * (n - 1))


def null_moment(r, which="mu"):
    """MomentValue for mu, nu or omega with its piece label."""
    r = _as_r(r)
    table = {"mu": MU_NULL, "nu": NU_NULL, "omega": OMEGA_NULL}[which]
    if math.isinf(r):
        value = 1.0 if which == "mu" else 0.0
        return MomentValue(value, f"{which}:inf", which != "mu")
    i = table.index(r)
    value = float(table.pieces[i][2](r))
    return MomentValue(value, f"{which}:{i + 1}", which != "mu" and value == 0.0)


def mu_seg_dd(r):
    """Second eps-derivative of the segregation mean at eps = 0."""
    r = _as_r(r)
    return 8.0 if math.isinf(r) else MU_SEG_DD(r)


def mu_assoc_dd(r):
    """Second eps-derivative of the association mean at eps = 0."""
    r = _as_r(r)
    return 0.0 if math.isinf(r) else MU_ASSOC_DD(r)


# ---- eps-dependent means --------------------------------------------------------

# eps below which the third segregation regime needs its pieces reordered
SEG_REGIME3_SPLIT = SQRT3 / 5


def seg_table(eps, variant="verbatim"):
    """(regime, PiecewiseRational, quarantined piece indices) for mu_S at eps."""
    _check_variant(variant)
    eps = _check_eps(eps)
    label, rows = T.mu_seg_table(eps)
    bad = set()
    if label == 3 and eps < SEG_REGIME3_SPLIT:
        # sqrt3/(2 eps) - 1 lies beyond 3/2 here, so the printed order is wrong on [3/2, that)
        if variant == "corrected":
            f = {k: T._bind(getattr(T, k), eps) for k in ("_s12", "_s23", "_s14", "_s34", "_s16")}
            b = 2 - 4 * eps / SQRT3
            c = SQRT3 / (2 * eps) - 1
            d = SQRT3 / (2 * eps)
            rows = [(1.0, b, f["_s12"]), (b, 1.5, f["_s23"]), (1.5, c, f["_s14"]), (c, 2.0, f["_s34"]),
                    (2.0, d, f["_s16"]), (d, math.inf, rows[-1][2])]
        else:
            bad.add(1)
    if label == 4:
        lo = 3 - 2 * SQRT3 * eps
        if variant == "corrected":
            rows = [(1.0, lo, rows[0][2]), (lo, rows[1][1], rows[1][2]), rows[2]]
        else:
            # the printed breakpoint sits past the next one, so the first piece runs on too long
            bad.add(0)
    return label, PiecewiseRational(rows, f"mu_S(eps={eps:g})"), bad


def _seg_bad_range(label, eps, i, r):
    if label == 3:
        return 1.5 <= r < SQRT3 / (2 * eps) - 1
    if label == 4:
        return r >= 3 - 2 * SQRT3 * eps
    return True


def mu_seg_value(r, eps, variant="verbatim"):
    r = _as_r(r)
    eps = _check_eps(eps)
    if eps == 0:
        m = null_moment(r, "mu")
        return MomentValue(m.value, "S0:" + m.regime.split(":")[1])
    if math.isinf(r):
        return MomentValue(1.0, "S:inf")
    label, table, bad = seg_table(eps, variant)
    i = table.index(r)
    if i in bad and _seg_bad_range(label, eps, i, r):
        warnings.warn(f"segregation mean regime {label} piece {i + 1} at eps={eps:.6g}, r={r:.6g} is "
                      "quarantined; use variant='corrected'", SuspectPieceWarning, stacklevel=3)
    return MomentValue(float(table.pieces[i][2](r)), f"S{label}:{i + 1}")


def mu_seg(r, eps, variant="verbatim"):
    """Mean relative density under the segregation alternative."""
    return mu_seg_value(r, eps, variant).value


def assoc_tail_constant(eps):
    """K with mu_A(r, eps) = 1 - K / r^2 once r is large enough.

    Valid for eps < sqrt3/12 when r >= 2, and beyond that once r exceeds the
    last breakpoint of the table.  K(0) = 3/2 recovers the null.
    """
    eps = _check_eps(eps)
    c = 1 / 3 + 2 * eps / SQRT3
    a = 1 - 2 * c
    span = 3 * c - 1
    support = 1 - span**2
    # integral over [0,1] of (1 - t) B(t), B(t) = 1 - (1 - t)^2 - D(t)
    d_part = (1 - a) * span**3 / 3 - span**4 / 4 + span**2 * (1 - c) ** 2 / 2
    return 6 * (0.25 - d_part) / support**2


def assoc_table(eps, variant="verbatim"):
    """(regime, PiecewiseRational, quarantined piece indices) for mu_A at eps."""
    _check_variant(variant)
    eps = _check_eps(eps)
    label, rows = T.mu_assoc_table(eps)
    bad = set()
    if label in (1, 2):
        if variant == "corrected":
            k = assoc_tail_constant(eps)
            q = rows[2]
            rows = list(rows)
            rows[2] = (q[0], q[1], lambda r, e=eps: mu_alternative_quadrature(r, "association", e))
            rows[5] = (2.0, math.inf, lambda r, k=k: 1 - k / r**2)
        else:
            bad = {2, 5}
    return label, PiecewiseRational(rows, f"mu_A(eps={eps:g})"), bad


def mu_assoc_value(r, eps, variant="verbatim"):
    r = _as_r(r)
    eps = _check_eps(eps)
    if eps == 0:
        m = null_moment(r, "mu")
        return MomentValue(m.value, "A0:" + m.regime.split(":")[1])
    if math.isinf(r):
        return MomentValue(1.0, "A:inf")
    label, table, bad = assoc_table(eps, variant)
    i = table.index(r)
    if i in bad:
        warnings.warn(f"association mean regime {label} piece {i + 1} at eps={eps:.6g}, r={r:.6g} is "
                      "quarantined; use variant='corrected'", SuspectPieceWarning, stacklevel=3)
    return MomentValue(float(table.pieces[i][2](r)), f"A{label}:{i + 1}")


def mu_assoc(r, eps, variant="verbatim"):
    """Mean relative density under the association alternative."""
    return mu_assoc_value(r, eps, variant).value


def degeneracy_threshold_seg(eps):
    """Smallest r at which the digraph is complete almost surely under segregation."""
    eps = float(eps)
    if eps == 0:
        return math.inf
    if not (0 < eps < EPS_MAX):
        raise ValueError("epsilon must lie in (0, sqrt3/3)")
    if eps <= SQRT3 / 4:
        return SQRT3 / (2 * eps)
    return SQRT3 / eps - 2


# ---- tables at specific eps ---------------------------------------------------

SEG_KEYS = ("sqrt3/8", "sqrt3/4", "2sqrt3/7")
ASSOC_KEYS = ("5sqrt3/24", "sqrt3/12", "sqrt3/21")


def resolve_key(eps, keys):
    """Map a key string or a float to one of the tabulated eps keys."""
    if isinstance(eps, str):
        k = eps.replace(" ", "").replace("√3", "sqrt3").replace("*", "")
        if k in keys:
            return k
        try:
            eps = parse_eps(eps)
        except ValueError:
            raise ValueError(f"no closed form for eps={eps!r}; use MC (tabulated: {', '.join(keys)})") from None
    for k in keys:
        if math.isclose(float(eps), T.KEY_VALUES[k], rel_tol=1e-9, abs_tol=1e-12):
            return k
    raise ValueError(f"no closed form for eps={float(eps):.6g}; use MC (tabulated: {', '.join(keys)})")


def parse_eps(text):
    """Parse '0.2165', 'sqrt3/8', '2sqrt3/7', '5*sqrt3/24' and similar."""
    s = str(text).strip().replace(" ", "").replace("√3", "sqrt3").replace("*", "")
    try:
        return float(s)
    except ValueError:
        pass
    num, _, den = s.partition("/")
    coef, tag, rest = num.partition("sqrt3")
    if not tag or rest:
        raise ValueError(f"cannot parse epsilon {text!r}")
    value = (float(coef) if coef else 1.0) * SQRT3
    if den:
        value /= float(den)
    return value


SEG_MU_AT = {k: PiecewiseRational(v, f"mu_S({k})") for k, v in T.MU_SEG_AT.items()}
SEG_NU_AT = {k: PiecewiseRational(v, f"nu_S({k})") for k, v in T.NU_SEG_AT.items()}
ASSOC_MU_AT = {k: PiecewiseRational(v, f"mu_A({k})") for k, v in T.MU_ASSOC_AT.items()}
ASSOC_NU_AT = {k: PiecewiseRational(v, f"nu_A({k})") for k, v in T.NU_ASSOC_AT.items()}


def _at(table, key, r, tag, degenerate_from=None):
    r = _as_r(r)
    if math.isinf(r):
        i = len(table) - 1
        value = float(table.pieces[-1][2](1e300)) if tag == "mu" else 0.0
    else:
        i = table.index(r)
        value = float(table.pieces[i][2](r))
    degenerate = tag == "nu" and (value == 0.0 or (degenerate_from is not None and r >= degenerate_from))
    if degenerate:
        value = 0.0
    return MomentValue(value, f"{key}:{i + 1}", degenerate)


def mu_seg_at(r, eps_key):
    key = resolve_key(eps_key, SEG_KEYS)
    return _at(SEG_MU_AT[key], key, r, "mu")


def _nu_seg_quarter_last(r):
    # replaces the printed piece on [3/2, 2) at eps = sqrt3/4, which goes negative
    return -(r - 2) ** 4 * (3 * r**6 - 40 * r**5 + 1248 * r**4 - 6144 * r**3 + 11500 * r**2
                            - 9312 * r + 2736) / (20 * r**4)


def nu_seg_at(r, eps_key, variant="verbatim"):
    """Tabulated Cov[h12, h13] under segregation at one of three eps values."""
    _check_variant(variant)
    key = resolve_key(eps_key, SEG_KEYS)
    out = _at(SEG_NU_AT[key], key, r, "nu", degeneracy_threshold_seg(T.KEY_VALUES[key]))
    if key == "sqrt3/4" and out.regime.endswith(":5"):
        if variant == "corrected":
            return MomentValue(_nu_seg_quarter_last(_as_r(r)), out.regime)
        warnings.warn(f"segregation variance at eps=sqrt3/4 piece 5 (r={float(r):.6g}) is quarantined; "
                      "use variant='corrected'", SuspectPieceWarning, stacklevel=2)
    return out


def mu_assoc_at(r, eps_key):
    key = resolve_key(eps_key, ASSOC_KEYS)
    return _at(ASSOC_MU_AT[key], key, r, "mu")


def nu_assoc_at(r, eps_key, variant="verbatim"):
    """Tabulated Cov[h12, h13] under association at one of three eps values.

    At r = 1 the variance vanishes for eps >= sqrt3/12: the corner triangles no
    longer reach the center of mass, so every point sits in its own corner's
    vertex region and h12 is constant given the corners.
    """
    _check_variant(variant)
    key = resolve_key(eps_key, ASSOC_KEYS)
    out = _at(ASSOC_NU_AT[key], key, r, "nu")
    if abs(out.value) < 1e-15:
        return MomentValue(0.0, out.regime, True)
    return out


# ---- exact quadrature ---------------------------------------------------------

# vertex-0 region in (lam_1, lam_2) coordinates; by symmetry it is enough
_R0 = np.array([[0.0, 0.0], [0.5, 0.0], [1 / 3, 1 / 3], [0.0, 0.5]])
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def _box_fraction(lo, hi):
    """Area fraction of {lam in simplex : lo <= lam <= hi}, vectorized over rows.

    Inclusion-exclusion over which upper bounds are violated; each term is the
    squared side of a shrunken simplex.
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    free = 1 - lo.sum(axis=-1)
    width = hi - lo
    out = np.zeros(np.broadcast_shapes(free.shape, width.shape[:-1]))
    for k in range(4):
        for sub in combinations(range(3), k):
            v = free - sum((width[..., i] for i in sub), np.zeros_like(free))
            out = out + (-1) ** k * np.maximum(v, 0) ** 2
    ok = np.all(lo <= hi, axis=-1) & (free >= 0)
    return np.where(ok, out, 0.0)


def _clip_corners(poly, c):
    poly = clip_halfplane(poly, (1.0, 1.0), 1 - c, tol=0)
    poly = clip_halfplane(poly, (-1.0, 0.0), -c, tol=0)
    return clip_halfplane(poly, (0.0, -1.0), -c, tol=0)


def _level_length(poly, s):
    """Length (in lam_1) of the slice {lam_0 = s} of a convex polygon."""
    if len(poly) < 3:
        return np.zeros_like(s)
    f = 1 - poly.sum(axis=1)
    lo = np.full_like(s, np.inf)
    hi = np.full_like(s, -np.inf)
    for i in range(len(poly)):
        a, b = poly[i], poly[(i + 1) % len(poly)]
        fa, fb = f[i], f[(i + 1) % len(poly)]
        if fa == fb:
            continue
        t = (s - fa) / (fb - fa)
        ok = (t >= 0) & (t <= 1)
        x = a[0] + t * (b[0] - a[0])
        lo = np.where(ok, np.minimum(lo, x), lo)
        hi = np.where(ok, np.maximum(hi, x), hi)
    return np.where(hi > lo, hi - lo, 0.0)


def mu_alternative_quadrature(r, kind="null", eps=0.0):
    """P(X2 in N_r(X1)) by exact piecewise Gauss-Legendre quadrature.

    Condition on lam_0(X1) = s for X1 in the vertex-0 region: the catch
    probability is then a box-in-simplex area, piecewise quadratic in s, so
    integrating between its kinks is exact up to rounding.
    """
    r = _as_r(r)
    if math.isinf(r):
        return 1.0
    if kind == "null" or eps == 0:
        regions, c = [(_R0, 1.0)], None
    elif kind == "segregation":
        c = 1 - 2 * eps / SQRT3
        regions = [(_clip_corners(_R0, c), 1.0)]
    elif kind == "association":
        c = 1 - 2 * (EPS_MAX - eps) / SQRT3
        regions = [(_R0, 1.0), (_clip_corners(_R0, c), -1.0)]
    else:
        raise ValueError(f"unknown alternative {kind!r}")

    def catch(s):
        t = np.maximum(1 - r * (1 - s), 0)
        lo = np.stack([t, np.zeros_like(t), np.zeros_like(t)], axis=-1)
        if kind == "segregation":
            return _box_fraction(lo, np.full(lo.shape, c)) / _box_fraction(np.zeros(3), np.full(3, c))
        full = _box_fraction(lo, np.ones(lo.shape))
        if kind == "association":
            inner = _box_fraction(lo, np.full(lo.shape, c))
            return (full - inner) / (1 - _box_fraction(np.zeros(3), np.full(3, c)))
        return full

    cuts = {1 / 3, 1.0}
    for poly, _ in regions:
        cuts |= set((1 - poly.sum(axis=1)).tolist())
    for h in ([1.0] if c is None else [1.0, c]):
        for root in (0.0, h, 1 - h, 1 - 2 * h, 1.0):
            cuts.add(1 - (1 - root) / r)
    cuts = sorted(x for x in cuts if 1 / 3 <= x <= 1)
    num = den = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        if b - a < 1e-15:
            continue
        s = (a + b) / 2 + (b - a) / 2 * _GL_NODES
        w = _GL_WEIGHTS * (b - a) / 2
        length = sum(sign * _level_length(poly, s) for poly, sign in regions)
        num += float(np.sum(w * length * catch(s)))
        den += float(np.sum(w * length))
    return num / den


def _polygon_area(poly):
    if len(poly) < 3:
        return 0.0
    x, y = poly[:, 0], poly[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)))


def _support_regions(kind, eps):
    """(corner cutoff, signed convex pieces of the support inside the vertex-0 region)."""
    if kind == "null" or eps == 0:
        return None, [(_R0, 1.0)]
    if kind == "segregation":
        c = 1 - 2 * eps / SQRT3
        return c, [(_clip_corners(_R0, c), 1.0)]
    if kind == "association":
        c = 1 - 2 * (EPS_MAX - eps) / SQRT3
        return c, [(_R0, 1.0), (_clip_corners(_R0, c), -1.0)]
    raise ValueError(f"unknown alternative {kind!r}")


def _tail_area(regions, s):
    """Area of {lam_0 >= s} within the signed pieces, vectorized over s."""
    out = np.zeros_like(s)
    for poly, sign in regions:
        if len(poly) < 3:
            continue
        levels = sorted(set((1 - poly.sum(axis=1)).tolist()))
        for lo, hi in zip(levels[:-1], levels[1:]):
            a = np.clip(s, lo, hi)
            mid, half = (a + hi) / 2, (hi - a) / 2
            nodes = mid[..., None] + half[..., None] * _GL_NODES
            length = _level_length(poly, nodes.ravel()).reshape(nodes.shape)
            out = out + sign * (length * _GL_WEIGHTS).sum(axis=-1) * half
    return out


def _catch(kind, c, s, r):
    """P(Z in N_r(x)) for x with lam_0(x) = s in the vertex-0 region."""
    t = np.maximum(1 - r * (1 - s), 0)
    lo = np.stack([t, np.zeros_like(t), np.zeros_like(t)], axis=-1)
    if kind == "segregation":
        return _box_fraction(lo, np.full(lo.shape, c)) / _box_fraction(np.zeros(3), np.full(3, c))
    full = _box_fraction(lo, np.ones(lo.shape))
    if kind == "association":
        inner = _box_fraction(lo, np.full(lo.shape, c))
        return (full - inner) / (1 - _box_fraction(np.zeros(3), np.full(3, c)))
    return full


# lam_j as an affine function of (lam_1, lam_2): coefficients (a, b, const)
_LAM_FORMS = ((-1.0, -1.0, 1.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0))


def _triangle_rule(a, b, c):
    # collapsed Gauss-Legendre product rule, exact well beyond the degree we need
    u = (_GL_NODES + 1) / 2
    wu = _GL_WEIGHTS / 2
    x, y = np.meshgrid(u, u, indexing="ij")
    w = np.outer(wu, wu) * (1 - x)
    pts = a + x[..., None] * (b - a) + (y * (1 - x))[..., None] * (c - a)
    area2 = abs((b - a)[0] * (c - a)[1] - (b - a)[1] * (c - a)[0])
    return pts.reshape(-1, 2), w.ravel() * area2


def nu_alternative_quadrature(r, kind="null", eps=0.0):
    """Cov[h12, h13] by exact cell-wise quadrature.

    Given X1 = x the two kernels are independent, so E[h12 h13 | x] is
    (a(x) + g(x))^2 with a(x) = P(X2 in N(x)) and g(x) = P(x in N(X2)).  For
    z in the region of vertex j, x is in N(z) iff lam_j(z) <= 1 - (1 - lam_j(x)) / r,
    so g is a sum of three one-dimensional tail areas.  Both terms are
    polynomial between lines lam_j = const; splitting the domain along those
    lines makes a fixed Gauss rule exact.
    """
    r = _as_r(r)
    if math.isinf(r):
        return 0.0
    eps = _check_eps(eps) if kind != "null" else 0.0
    c, regions = _support_regions(kind, eps)
    part = sum(sign * _polygon_area(p) for p, sign in regions)
    cuts = {1 / 3, 0.5}
    for t in ([0.0, 1.0] if c is None else [0.0, c, 1 - c, 1 - 2 * c, 1.0]):
        cuts.add(1 - (1 - t) / r)
    for poly, _ in regions:
        for v in (1 - poly.sum(axis=1)).tolist():
            cuts.add(1 - r * (1 - v))
    cuts.add(1 - r)
    if c is not None:
        cuts.add(c)
    lines = [(form, v) for v in cuts if -1e-15 < v < 1 + 1e-15 for form in _LAM_FORMS]
    m0 = m1 = m2 = 0.0
    for poly, sign in regions:
        cells = [poly]
        for (fa, fb, f0), v in lines:
            nxt = []
            for cell in cells:
                for sg in (1.0, -1.0):
                    piece = clip_halfplane(cell, (sg * fa, sg * fb), sg * (v - f0), tol=0)
                    if len(piece) >= 3 and _polygon_area(piece) > 1e-18:
                        nxt.append(piece)
            cells = nxt
        for cell in cells:
            for i in range(1, len(cell) - 1):
                pts, w = _triangle_rule(cell[0], cell[i], cell[i + 1])
                lam = np.column_stack([1 - pts.sum(axis=1), pts[:, 0], pts[:, 1]])
                a = _catch(kind, c, lam[:, 0], r)
                g = sum(part - _tail_area(regions, 1 - (1 - lam[:, j]) / r) for j in range(3)) / (3 * part)
                h = a + g
                m0 += sign * w.sum()
                m1 += sign * np.sum(w * h)
                m2 += sign * np.sum(w * h * h)
    return max(m2 / m0 - (m1 / m0) ** 2, 0.0)


# ---- curve export -------------------------------------------------------------

def curve_rows(r_grid):
    """Rows (r, mu, nu, omega, regime) for CSV export."""
    rows = []
    for r in r_grid:
        m = null_moment(r, "mu")
        rows.append((float(r), m.value, nu_null(r), omega_var_h(r), m.regime))
    return rows
