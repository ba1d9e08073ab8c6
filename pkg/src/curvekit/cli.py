"""Command-line front end.

Subcommands::

    sample      sample a family curve's Frenet data to CSV
    involute    sample the involute of a family curve
    indicatrix  sample one spherical image of the involute (--kind)
    classify    classify a curve (or its involute / an indicatrix) to JSON
    verify      run the identity/theorem suites to JSON

Configuration precedence is CLI flags > config file > family preset.  The
config file is flat ``key = value`` text (``#`` comments allowed); unknown
keys are rejected.  Exit codes: 0 success, 1 verification failures, 2
configuration errors, 3 geometry errors (error name on stderr).

Output is byte-deterministic: floats are written as shortest round-trip
decimals and reports carry no timestamps.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

import numpy as np

from . import indicatrix as ix
from .classify import classify_curve
from .curves import frenet_data
from .errors import GeometryError
from .families import PRESETS, make_family
from .involute import InvoluteSpec, involute_data
from .verify import run_suite

__all__ = ["main", "RunConfig", "ConfigError"]

SAMPLE_HEADER = "t,s,x,y,z,Tx,Ty,Tz,Nx,Ny,Nz,Bx,By,Bz,kappa,tau,f,Gamma"
INDICATRIX_CLIP = 2   # rows dropped at each end (derivative stencils degrade there)

FAMILY_PARAMS = {
    "kula": {"mu"},
    "monterde": {"c_m"},
    "derived": {"mu", "c_inv"},
    "helix": {"a", "b"},
    "circle": {"radius"},
    "fourier": {"seed"},
}

_CONFIG_KEYS = {"family", "mu", "c_m", "c_inv", "seed", "a", "b", "radius",
                "lo", "hi", "n", "out", "format", "kind", "suite", "target",
                "tol.constancy", "tol.sphere_fit"}


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    family: str = "kula"
    params: dict = field(default_factory=dict)
    subdomain: tuple | None = None
    grid_n: int = 1000
    tolerances: dict = field(default_factory=lambda: {"constancy": 1e-6, "sphere_fit": 1e-6})
    out: str | None = None
    fmt: str | None = None
    kind: str = "tangent"
    suite: str = "all"
    target: str = "curve"

    def preset(self):
        if self.family not in PRESETS:
            raise ConfigError(f"unknown family {self.family!r}")
        return PRESETS[self.family]

    def resolved_subdomain(self):
        preset = self.preset()
        if self.subdomain is None:
            return preset.subdomain
        lo, hi = self.subdomain
        plo, phi = preset.domain
        if not (plo <= lo < hi <= phi):
            raise ConfigError(
                f"subdomain [{lo:g}, {hi:g}] outside preset bounds [{plo:g}, {phi:g}]")
        return (lo, hi)

    def curve(self):
        preset = self.preset()
        params = dict(preset.params)
        params.update(self.params)
        return make_family(preset.family, domain=preset.domain, **params)

    def involute_spec(self):
        c_inv = self.params.get("c_inv", self.preset().c_inv)
        base = self.curve()
        return InvoluteSpec(base, c_inv, subdomain=self.resolved_subdomain())

    def grid(self):
        return np.linspace(*self.resolved_subdomain(), self.grid_n)


def _parse_config_file(path):
    out = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as e:
        raise ConfigError(f"cannot read config file: {e}") from e
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, val = (x.strip() for x in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = val
    return out


def _build_config(args):
    cfg = RunConfig()
    file_vals = _parse_config_file(args.config) if args.config else {}

    def pick(cli_val, key, cast):
        if cli_val is not None:
            return cli_val
        if key in file_vals:
            try:
                return cast(file_vals[key])
            except ValueError as e:
                raise ConfigError(f"config key {key}: {e}") from e
        return None

    cfg.family = pick(args.family, "family", str) or cfg.family
    if cfg.family not in PRESETS:
        raise ConfigError(f"unknown family {cfg.family!r}")

    allowed = FAMILY_PARAMS[PRESETS[cfg.family].family] | {"c_inv"}
    for key, cast in (("mu", float), ("c_m", float), ("c_inv", float),
                      ("seed", int), ("a", float), ("b", float), ("radius", float)):
        val = pick(getattr(args, key, None), key, cast)
        if val is not None:
            if key not in allowed:
                raise ConfigError(f"parameter {key!r} not valid for family {cfg.family!r}")
            cfg.params[key] = val

    lo = pick(args.subdomain[0] if args.subdomain else None, "lo", float)
    hi = pick(args.subdomain[1] if args.subdomain else None, "hi", float)
    if (lo is None) != (hi is None):
        raise ConfigError("subdomain needs both lo and hi")
    if lo is not None:
        cfg.subdomain = (lo, hi)

    n = pick(args.n, "n", int)
    if n is not None:
        cfg.grid_n = n
    if cfg.grid_n < 16:
        raise ConfigError("grid_n >= 16")

    cfg.out = pick(args.out, "out", str)
    cfg.fmt = pick(args.format, "format", str)
    if cfg.fmt not in (None, "csv", "json"):
        raise ConfigError(f"unknown format {cfg.fmt!r}")
    cfg.kind = pick(getattr(args, "kind", None), "kind", str) or cfg.kind
    cfg.suite = pick(getattr(args, "suite", None), "suite", str) or cfg.suite
    cfg.target = pick(getattr(args, "target", None), "target", str) or cfg.target

    for item in args.tol or []:
        if "=" not in item:
            raise ConfigError(f"--tol expects NAME=VALUE, got {item!r}")
        name, val = item.split("=", 1)
        if f"tol.{name}" not in _CONFIG_KEYS:
            raise ConfigError(f"unknown tolerance {name!r}")
        cfg.tolerances[name] = float(val)
    for key in ("tol.constancy", "tol.sphere_fit"):
        if key in file_vals and key.split(".", 1)[1] not in {
                i.split("=", 1)[0] for i in (args.tol or [])}:
            cfg.tolerances[key.split(".", 1)[1]] = float(file_vals[key])
    return cfg


# -- output helpers -----------------------------------------------------------


def _fmt(x):
    return repr(float(x))


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_rows(comments, header, columns):
    lines = [f"# {c}" for c in comments]
    lines.append(header)
    n = len(columns[0])
    for i in range(n):
        lines.append(",".join(_fmt(col[i]) for col in columns))
    return "\n".join(lines) + "\n"


def _table(cfg, comments, header, columns):
    if (cfg.fmt or "csv") == "csv":
        return _csv_rows(comments, header, columns)
    import json as _json
    doc = {
        "comments": list(comments),
        "columns": header.split(","),
        "rows": [[float(col[i]) for col in columns] for i in range(len(columns[0]))],
    }
    return _json.dumps(doc, indent=2) + "\n"


def _frame_columns(t, s, pts, T, N, B, kappa, tau, f, gamma):
    return [t, s, pts[:, 0], pts[:, 1], pts[:, 2],
            T[:, 0], T[:, 1], T[:, 2], N[:, 0], N[:, 1], N[:, 2],
            B[:, 0], B[:, 1], B[:, 2], kappa, tau, f, gamma]


# -- subcommands --------------------------------------------------------------


def cmd_sample(cfg):
    curve = cfg.curve()
    grid = cfg.grid()
    d = frenet_data(curve, grid)
    s = curve.arclength().s_at(grid)
    pts = curve.point(grid)
    comments = [
        f"family: {curve.label}",
        f"subdomain: [{_fmt(grid[0])}, {_fmt(grid[-1])}] grid_n: {len(grid)}",
        "units: t (parameter), s (length), x,y,z (length), kappa,tau (1/length), "
        "f,Gamma (dimensionless)",
        f"rows: {len(grid)}",
    ]
    cols = _frame_columns(grid, s, pts, d.T, d.N, d.B, d.kappa, d.tau, d.f, d.gamma)
    _emit(_table(cfg, comments, SAMPLE_HEADER, cols), cfg.out)
    return 0


def cmd_involute(cfg):
    spec = cfg.involute_spec()
    grid = np.linspace(*spec.work, cfg.grid_n)
    d = involute_data(spec, grid)
    pts = spec.curve.point(grid)
    s_star = spec.curve.arclength().s_at(grid)
    comments = [
        f"family: {spec.curve.label}",
        f"subdomain: [{_fmt(grid[0])}, {_fmt(grid[-1])}] grid_n: {len(grid)}",
        "units: t (base parameter), s (involute arc length), x,y,z (length), "
        "kappa,tau (1/length), f,Gamma (dimensionless)",
        f"rows: {len(grid)}",
    ]
    cols = _frame_columns(grid, s_star, pts, d.T, d.N, d.B, d.kappa, d.tau,
                          d.tau / d.kappa, d.gamma)
    _emit(_table(cfg, comments, SAMPLE_HEADER, cols), cfg.out)
    return 0


def cmd_indicatrix(cfg):
    spec = cfg.involute_spec()
    kind = ix.IndicatrixKind.parse(cfg.kind)
    host = ix.host_from_involute(spec)
    curve = host.curve(kind)
    grid = np.linspace(*spec.work, cfg.grid_n)
    arrays = {
        ix.IndicatrixKind.TANGENT: ix.tangent_arrays,
        ix.IndicatrixKind.PRINCIPAL_NORMAL: ix.normal_arrays,
        ix.IndicatrixKind.BINORMAL: ix.binormal_arrays,
    }[kind](host, grid)
    clip = slice(INDICATRIX_CLIP, len(grid) - INDICATRIX_CLIP)
    g = grid[clip]
    pts = curve.point(g)
    s_star = spec.curve.arclength().s_at(g)
    s_ind = curve.arclength().s_at(g)
    comments = [
        f"family: {curve.label}",
        f"subdomain: [{_fmt(grid[0])}, {_fmt(grid[-1])}] grid_n: {cfg.grid_n}",
        "units: t (base parameter), s (involute arc length), s_ind (image arc length), "
        "all scalars dimensionless",
        f"rows: {len(g)} ({INDICATRIX_CLIP} clipped at each end: "
        "derivative stencils degrade at the boundary)",
    ]
    kappa_for_f = getattr(arrays, "kappa_signed", None)
    if kappa_for_f is None:
        kappa_for_f = arrays.kappa
    f_col = np.asarray(arrays.tau) / np.asarray(kappa_for_f)
    cols = _frame_columns(g, s_star, pts, arrays.T[clip], arrays.N[clip], arrays.B[clip],
                          arrays.kappa[clip], arrays.tau[clip], f_col[clip],
                          arrays.gamma[clip])
    cols.append(s_ind)
    _emit(_table(cfg, comments, SAMPLE_HEADER + ",s_ind", cols), cfg.out)
    return 0


def cmd_classify(cfg):
    if cfg.fmt == "csv":
        raise ConfigError("classification reports are json only")
    target = cfg.target
    if target == "curve":
        curve = cfg.curve().with_domain(*cfg.resolved_subdomain())
    elif target == "involute":
        curve = cfg.involute_spec().curve
    elif target in ("tangent", "normal", "principal_normal", "binormal"):
        curve = ix.indicatrix_curve(cfg.involute_spec(), target)
    else:
        raise ConfigError(f"unknown classify target {target!r}")
    report = classify_curve(curve, n=cfg.grid_n, tol=cfg.tolerances["constancy"],
                            sphere_tol=cfg.tolerances["sphere_fit"])
    _emit(report.to_json(indent=2) + "\n", cfg.out)
    return 0


def cmd_verify(cfg):
    if cfg.fmt == "csv":
        raise ConfigError("verification reports are json only")
    report = run_suite(cfg.family, cfg.suite, params=cfg.params or None,
                       grid_n=cfg.grid_n if cfg.grid_n != 1000 else None)
    _emit(report.to_json(indent=2) + "\n", cfg.out)
    return 0 if report.ok else 1


def _parser():
    p = argparse.ArgumentParser(
        prog="curvekit",
        description="Frenet frames, involutes and spherical indicatrices of space curves")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kind=False, suite=False, target=False):
        sp.add_argument("--family", choices=sorted(PRESETS), default=None)
        sp.add_argument("--mu", type=float, default=None)
        sp.add_argument("--c-m", dest="c_m", type=float, default=None)
        sp.add_argument("--c-inv", dest="c_inv", type=float, default=None)
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--a", type=float, default=None)
        sp.add_argument("--b", type=float, default=None)
        sp.add_argument("--radius", type=float, default=None)
        sp.add_argument("--subdomain", nargs=2, type=float, metavar=("LO", "HI"),
                        default=None)
        sp.add_argument("--n", type=int, default=None, help="grid size (>= 16)")
        sp.add_argument("--tol", action="append", metavar="NAME=VALUE",
                        help="override a tolerance (constancy, sphere_fit)")
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
        sp.add_argument("--format", choices=("csv", "json"), default=None)
        sp.add_argument("--config", default=None, help="flat key=value config file")
        if kind:
            sp.add_argument("--kind", choices=("tangent", "normal", "binormal"),
                            default=None)
        if suite:
            sp.add_argument("--suite", choices=("identities", "theorems", "all"),
                            default=None)
        if target:
            sp.add_argument("--target",
                            choices=("curve", "involute", "tangent", "normal", "binormal"),
                            default=None)

    common(sub.add_parser("sample", help="sample a family curve to CSV"))
    common(sub.add_parser("involute", help="sample the involute to CSV"))
    common(sub.add_parser("indicatrix", help="sample a spherical image to CSV"),
           kind=True)
    common(sub.add_parser("classify", help="classification report as JSON"),
           target=True)
    common(sub.add_parser("verify", help="identity/theorem verification as JSON"),
           suite=True)
    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        cfg = _build_config(args)
        handler = {
            "sample": cmd_sample,
            "involute": cmd_involute,
            "indicatrix": cmd_indicatrix,
            "classify": cmd_classify,
            "verify": cmd_verify,
        }[args.command]
        return handler(cfg)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except GeometryError as e:
        print(str(e), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
