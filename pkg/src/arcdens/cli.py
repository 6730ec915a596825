"""Command-line entry point: test data, run MC studies, export curves."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import __version__, efficacy, moments
from .inference import McConfig, asymptotic_test, mc_power, replicates_csv
from .multitriangle import empty_circumcircle_violations, triangulate, weight_sums
from .sampling import Alternative

EXIT_OK, EXIT_VALIDATION, EXIT_DATA = 0, 2, 3
CURVES = ("mu", "nu", "omega", "pae", "hlae", "power")


class DataError(Exception):
    """Bad input files: malformed CSV, points outside the hull, degenerate sites."""


class ValidationError(Exception):
    pass


# ---- parsing helpers -------------------------------------------------------

def _number(text):
    """Float, 'inf', or an expression such as sqrt3/8."""
    t = str(text).strip().lower()
    if t in ("inf", "infinity"):
        return math.inf
    try:
        return moments.parse_eps(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _r_list(text):
    vals = [_number(t) for t in str(text).split(",") if t.strip()]
    if not vals:
        raise argparse.ArgumentTypeError("empty r list")
    return vals


def read_points(path):
    """x,y rows from a CSV file (or '-' for stdin); a header row is optional."""
    try:
        fh = sys.stdin if path == "-" else open(path, newline="", encoding="utf-8")
    except OSError as e:
        raise DataError(f"cannot read {path}: {e.strerror}") from None
    with fh:
        rows = [row for row in csv.reader(fh) if row and any(c.strip() for c in row)]
    if not rows:
        raise DataError(f"{path}: no points")
    cols = (0, 1)
    head = [c.strip().lower() for c in rows[0]]
    try:
        [float(c) for c in rows[0][:2]]
    except ValueError:
        if "x" not in head or "y" not in head:
            raise DataError(f"{path}: header must name columns x and y") from None
        cols = (head.index("x"), head.index("y"))
        rows = rows[1:]
    pts = []
    for row in rows:
        try:
            pts.append((float(row[cols[0]]), float(row[cols[1]])))
        except (ValueError, IndexError):
            raise DataError(f"{path}: malformed row {row!r}") from None
    arr = np.array(pts, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DataError(f"{path}: non-finite coordinate")
    return arr


def _alternative(kind, eps):
    if kind == "null":
        return Alternative.null()
    if eps is None:
        raise ValidationError(f"--eps is required for the {kind} alternative")
    try:
        return Alternative(kind, eps)
    except ValueError as e:
        raise ValidationError(str(e)) from None


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return "inf" if math.isinf(v) and v > 0 else repr(v)
    return str(v)


def _jsonable(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.generic):
        return _jsonable(obj.item())
    return obj


def _emit_json(payload, out):
    text = json.dumps(_jsonable(payload), indent=2, allow_nan=False)
    _write(text + "\n", out)


def _write(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run_config(args):
    d = {k: v for k, v in vars(args).items() if k not in ("func",)}
    return _jsonable(d)


def _header(args):
    return {"program": "arcdens", "version": __version__, "seed": getattr(args, "seed", None),
            "config": _run_config(args)}


# ---- commands --------------------------------------------------------------

def cmd_test(args):
    ys = read_points(args.y)
    xs = read_points(args.x)
    try:
        mesh = triangulate(ys)
    except ValueError as e:
        raise DataError(str(e)) from None
    reports = []
    for r in args.r:
        if not r >= 1:
            raise ValidationError("r must be at least 1")
        try:
            if len(mesh) == 1:
                rep = asymptotic_test(mesh.triangle(0), r, xs, args.alpha, args.direction)
            else:
                rep = asymptotic_test(mesh, r, xs, args.alpha, args.direction)
        except ValueError as e:
            raise DataError(str(e)) from None
        reports.append(rep.to_dict())
    payload = _header(args)
    payload.update(triangles=len(mesh), weights=mesh.weights.tolist(), reports=reports)
    _emit_json(payload, args.out)


def cmd_simulate(args):
    alt = _alternative(args.alt, args.eps)
    try:
        cfg = McConfig(args.n, args.N, args.r, alt, args.alpha, args.seed, args.use_asymptotic_cv, args.direction)
    except ValueError as e:
        raise ValidationError(str(e)) from None
    try:
        res = mc_power(cfg, workers=args.workers)
    except ValueError as e:
        raise ValidationError(str(e)) from None
    if args.dump_replicates:
        with open(args.dump_replicates, "w", newline="", encoding="utf-8") as fh:
            replicates_csv(res.alt_replicates if res.alt_replicates is not None else res.null_replicates, fh)
    payload = _header(args)
    payload.update(res.to_dict())
    if args.format == "json":
        _emit_json(payload, args.out)
    else:
        lines = [f"# arcdens {__version__} seed={args.seed} config={json.dumps(_run_config(args))}",
                 "r,n,N,alpha,critical_value,empirical_alpha,empirical_power",
                 ",".join(_fmt(v) for v in (args.r, args.n, args.N, args.alpha, res.critical_value,
                                            res.empirical_alpha, res.empirical_power))]
        _write("\n".join(lines) + "\n", args.out)


def _grid(args):
    if args.r is not None:
        return args.r
    if not (1 <= args.r_min <= args.r_max) or args.step <= 0:
        raise ValidationError("need 1 <= r-min <= r-max and step > 0")
    k = int(math.floor((args.r_max - args.r_min) / args.step + 1e-9))
    return [args.r_min + i * args.step for i in range(k + 1)]


def cmd_curves(args):
    which = [w.strip() for w in args.which.split(",") if w.strip()]
    bad = [w for w in which if w not in CURVES]
    if bad or not which:
        raise ValidationError(f"unknown curve {bad}; choose from {', '.join(CURVES)}")
    grid = _grid(args)
    needs_alt = {"hlae", "power"} & set(which)
    if needs_alt:
        if args.alt not in ("segregation", "association") or args.eps is None:
            raise ValidationError("hlae and power need --alt segregation|association and --eps")
        keys = moments.SEG_KEYS if args.alt == "segregation" else moments.ASSOC_KEYS
        try:
            moments.resolve_key(args.eps, keys)
        except ValueError as e:
            raise ValidationError(str(e)) from None
    cols = ["r"]
    for w in which:
        cols += {"pae": ["pae_seg", "pae_assoc"]}.get(w, [w])
    try:
        rows = _curve_rows(which, grid, args)
    except ValueError as e:
        raise ValidationError(str(e)) from None
    lines = [f"# arcdens {__version__} seed=None config={json.dumps(_run_config(args))}", ",".join(cols)]
    lines += [",".join(_fmt(float(v)) for v in row) for row in rows]
    _write("\n".join(lines) + "\n", args.out)


def _curve_rows(which, grid, args):
    rows = []
    for r in grid:
        row = [r]
        for w in which:
            if w == "mu":
                row.append(moments.mu_null(r))
            elif w == "nu":
                row.append(moments.nu_null(r))
            elif w == "omega":
                row.append(moments.omega_var_h(r))
            elif w == "pae":
                row += [efficacy.pae_seg(r), efficacy.pae_assoc(r)]
            elif w == "hlae":
                row.append(efficacy.hlae(r, Alternative(args.alt, args.eps)))
            elif w == "power":
                f = efficacy.power_seg if args.alt == "segregation" else efficacy.power_assoc
                row.append(f(r, args.n, args.eps, args.alpha))
        rows.append(row)
    return rows


def cmd_efficacy(args):
    weights = None
    if args.weights:
        try:
            weights = [float(w) for w in args.weights.split(",")]
            weight_sums(weights)
        except ValueError as e:
            raise ValidationError(f"bad weights: {e}") from None
    try:
        rep = efficacy.report(args.kind, args.r, args.eps, weights)
    except ValueError as e:
        raise ValidationError(str(e)) from None
    payload = _header(args)
    payload.update(kind=rep.kind, r=rep.r, value=rep.value, epsilon=rep.epsilon,
                   weights=list(rep.weights) if rep.weights else None, degenerate=rep.degenerate)
    if args.kind == "PAE_S" and weights:
        payload["limit_r_to_inf"] = efficacy.pae_multi_limit(weights)
    _emit_json(payload, args.out)


def cmd_mesh_info(args):
    ys = read_points(args.y)
    try:
        mesh = triangulate(ys)
    except ValueError as e:
        raise DataError(str(e)) from None
    s2, s3 = weight_sums(mesh.weights)
    payload = _header(args)
    payload.update(mesh.to_dict())
    payload.update(
        areas=mesh.areas.tolist(),
        hull_area=mesh.hull_area,
        sum_w2=s2,
        sum_w3=s3,
        pae_seg_limit=efficacy.pae_multi_limit(mesh.weights),
        circumcircle_violations=empty_circumcircle_violations(mesh),
    )
    _emit_json(payload, args.out)


# ---- parser ----------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="arcdens", description="Arc-density tests of spatial segregation and association.")
    p.add_argument("--version", action="version", version=f"arcdens {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", help="asymptotic test of X points against the Delaunay triangles of Y sites")
    t.add_argument("--x", required=True, help="CSV of data points (x,y)")
    t.add_argument("--y", required=True, help="CSV of reference sites (x,y)")
    t.add_argument("--r", type=_r_list, default=[1.5], help="expansion factor or comma list; 'inf' allowed")
    t.add_argument("--alpha", type=float, default=0.05)
    t.add_argument("--direction", choices=("segregation", "association", "two-sided-info"), default="two-sided-info")
    t.add_argument("--out", default="-")
    t.set_defaults(func=cmd_test)

    s = sub.add_parser("simulate", help="Monte Carlo critical value, significance and power")
    s.add_argument("--alt", choices=("null", "segregation", "association"), default="null")
    s.add_argument("--eps", type=_number, default=None, help="decimal or expression such as sqrt3/8")
    s.add_argument("--r", type=_number, required=True)
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--N", type=int, default=10000, help="replicates")
    s.add_argument("--alpha", type=float, default=0.05)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--direction", choices=("segregation", "association"), default=None,
                   help="tail for a null run (default: from --alt)")
    s.add_argument("--use-asymptotic-cv", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--dump-replicates", default=None, help="CSV path for replicate_id,rho")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_simulate)

    c = sub.add_parser("curves", help="analytic curves on an r grid as CSV")
    c.add_argument("--which", default="mu,nu", help=f"comma list from {', '.join(CURVES)}")
    c.add_argument("--r", type=_r_list, default=None, help="explicit comma list of r values")
    c.add_argument("--r-min", type=_number, default=1.0)
    c.add_argument("--r-max", type=_number, default=6.0)
    c.add_argument("--step", type=float, default=0.01)
    c.add_argument("--alt", choices=("segregation", "association"), default=None)
    c.add_argument("--eps", type=_number, default=None)
    c.add_argument("--n", type=int, default=10)
    c.add_argument("--alpha", type=float, default=0.05)
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_curves)

    e = sub.add_parser("efficacy", help="Pitman or Hodges-Lehmann efficacy at one r")
    e.add_argument("--kind", choices=("PAE_S", "PAE_A", "HLAE_S", "HLAE_A"), required=True)
    e.add_argument("--r", type=_number, required=True)
    e.add_argument("--eps", type=_number, default=None)
    e.add_argument("--weights", default=None, help="comma list of triangle weights summing to 1")
    e.add_argument("--out", default="-")
    e.set_defaults(func=cmd_efficacy)

    m = sub.add_parser("mesh-info", help="Delaunay triangles and weights of a site file")
    m.add_argument("--y", required=True)
    m.add_argument("--out", default="-")
    m.set_defaults(func=cmd_mesh_info)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ValidationError as e:
        print(f"arcdens: error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except DataError as e:
        print(f"arcdens: data error: {e}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
