"""Command-line interface.

Commands::

    flatfronts catalog list
    flatfronts catalog run NAME [--param k=v ...] [--scale S] [--json PATH]
    flatfronts analyze --gauss G --gauss-star GS [--param k=v ...] [--ends LIST] [--scale S] [--json PATH]
    flatfronts mesh (--catalog NAME | --gauss G --gauss-star GS) [--window x0,x1,y0,y1 | --annulus cx,cy,r0,r1]
                    [--resolution N] [--t LIST] --out PATH

Every command also takes ``--config FILE`` with ``key = value`` lines; flags win.
Exit codes: 0 success, 2 invalid input, 3 period condition failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import catalog as cat
from .expr import ExprError, parse_constant, parse_rational
from .front import FrontError, FrontSpec, period_check
from .mesh import DEFAULT_RESOLUTION, Annulus, MeshError, Window, build_mesh, write_mesh
from .report import AnalysisReport, analyze_spec, dumps, period_failure_report
from .sphere import INF

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PERIOD = 3

_CONFIG_KEYS = {
    "gauss", "gauss_star", "param", "ends", "scale", "window", "annulus",
    "resolution", "t", "out", "json", "catalog",
}


class UsageError(ValueError):
    pass


def read_config(path) -> dict:
    """Parse a ``key = value`` file; ``#`` starts a comment and ``param`` may repeat."""
    out: dict = {"param": []}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        if key == "param":
            out["param"].append(value)
        else:
            out[key] = value
    return out


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    if not getattr(args, "config", None):
        return args
    conf = read_config(args.config)
    params = conf.pop("param")
    for key, value in conf.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    # config params first so flags override them
    args.param = params + list(args.param or [])
    return args


def parse_params(items: Sequence[str] | None) -> dict[str, str]:
    params: dict[str, str] = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not of the form name=value")
        name, value = (s.strip() for s in item.split("=", 1))
        if not name.isidentifier():
            raise UsageError(f"bad parameter name {name!r}")
        params[name] = value
    return params


def parse_ends(text: str | None, bindings) -> list:
    if not text:
        return []
    ends = []
    for item in text.split(","):
        item = item.strip()
        ends.append(INF if item.lower() in ("inf", "infinity") else parse_constant(item, bindings))
    return ends


def parse_t_list(text: str | None) -> list[float]:
    if text is None:
        return [0.0]
    try:
        values = [float(v) for v in str(text).split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad t list {text!r}") from exc
    if not values:
        raise UsageError("empty t list")
    return values


def _emit(text: str, path) -> None:
    if path:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _finish(report: AnalysisReport, path) -> int:
    _emit(report.to_json(), path)
    return EXIT_OK if report.period_ok else EXIT_PERIOD


def _bindings(params: dict[str, str]):
    return {k: parse_constant(v) for k, v in params.items()}


def _adhoc_spec(args) -> tuple[FrontSpec | None, AnalysisReport | None]:
    """Spec built from ``--gauss``/``--gauss-star``, or a diagnostic report on period failure."""
    if not args.gauss or not args.gauss_star:
        raise UsageError("--gauss and --gauss-star are both required")
    bindings = _bindings(parse_params(args.param))
    g = parse_rational(args.gauss, bindings)
    gs = parse_rational(args.gauss_star, bindings)
    scale = args.scale if args.scale is not None else "1"
    spec = FrontSpec.build(g, gs, scale, parse_ends(args.ends, bindings))
    if not period_check(g, gs).verdict:
        echo = {"gauss": args.gauss, "gauss_star": args.gauss_star, "param": parse_params(args.param)}
        return None, period_failure_report(echo, g, gs)
    return spec, None


# commands


def cmd_catalog_list(args) -> int:
    for entry in cat.CATALOG.values():
        defaults = ", ".join(f"{k}={v}" for k, v in entry.defaults.items())
        suffix = f" [{defaults}]" if defaults else ""
        print(f"{entry.name}: {entry.description}{suffix}")
    return EXIT_OK


def cmd_catalog_run(args) -> int:
    scale = args.scale if args.scale is not None else 1
    report = cat.run_catalog(args.name, parse_params(args.param), scale)
    return _finish(report, args.json)


def cmd_analyze(args) -> int:
    spec, failure = _adhoc_spec(args)
    if failure is not None:
        print("period condition fails: some residue of dG/(G-G*) is not real", file=sys.stderr)
        return _finish(failure, args.json)
    return _finish(analyze_spec(spec), args.json)


def _plan(args, default_window: str):
    if args.window and args.annulus:
        raise UsageError("give either --window or --annulus")
    if args.annulus:
        try:
            cx, cy, r0, r1 = (float(v) for v in args.annulus.split(","))
        except ValueError as exc:
            raise UsageError("annulus needs cx,cy,inner,outer") from exc
        return Annulus(complex(cx, cy), r0, r1)
    return Window.parse(args.window or default_window)


def _t_path(out: Path, t: float, many: bool) -> Path:
    if not many:
        return out
    return out.with_name(f"{out.stem}_t{t:g}{out.suffix or '.obj'}")


def cmd_mesh(args) -> int:
    if not args.out:
        raise UsageError("--out is required")
    default_window = "-3,3,-3,3"
    if args.catalog:
        if args.gauss or args.gauss_star:
            raise UsageError("give either --catalog or --gauss/--gauss-star")
        entry = cat.get(args.catalog)
        default_window = entry.window
        source = cat.build(args.catalog, parse_params(args.param), args.scale if args.scale is not None else 1)
        if isinstance(source, FrontSpec) and not period_check(source.gauss, source.gauss_star).verdict:
            print("period condition fails for this catalog instance", file=sys.stderr)
            return EXIT_PERIOD
    else:
        source, failure = _adhoc_spec(args)
        if failure is not None:
            print("period condition fails; no mesh written", file=sys.stderr)
            _emit(failure.to_json(), args.json) if args.json else sys.stderr.write(failure.to_json())
            return EXIT_PERIOD
    plan = _plan(args, default_window)
    resolution = int(args.resolution) if args.resolution is not None else DEFAULT_RESOLUTION
    ts = parse_t_list(args.t)
    out = Path(args.out)
    written = []
    for t in ts:
        mesh = build_mesh(source, plan, resolution, t)
        obj, side = write_mesh(mesh, _t_path(out, t, len(ts) > 1))
        written.append({"t": t, "obj": str(obj), "sidecar": str(side), "vertices": len(mesh.vertices)})
    _emit(dumps({"meshes": written}), args.json)
    return EXIT_OK


# parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--param", action="append", metavar="NAME=VALUE", help="bind a parameter (repeatable)")
    p.add_argument("--scale", help="|c|, default 1")
    p.add_argument("--json", help="write the JSON report here instead of stdout")
    p.add_argument("--config", help="key = value file; flags take precedence")


def _adhoc(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gauss", help="G as an expression in z")
    p.add_argument("--gauss-star", dest="gauss_star", help="G* as an expression in z")
    p.add_argument("--ends", help='extra ends, comma separated; "inf" allowed')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flatfronts", description="Flat fronts in hyperbolic space from their Gauss maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("catalog", help="built-in examples")
    csub = pc.add_subparsers(dest="action", required=True)
    pl = csub.add_parser("list", help="list catalog entries")
    pl.set_defaults(func=cmd_catalog_list)
    pr = csub.add_parser("run", help="analyze a catalog entry")
    pr.add_argument("name")
    _common(pr)
    pr.set_defaults(func=cmd_catalog_run)

    pa = sub.add_parser("analyze", help="analyze a pair of rational Gauss maps")
    _adhoc(pa)
    _common(pa)
    pa.set_defaults(func=cmd_analyze)

    pm = sub.add_parser("mesh", help="export OBJ meshes with JSON sidecars")
    pm.add_argument("--catalog", help="catalog entry instead of --gauss/--gauss-star")
    _adhoc(pm)
    _common(pm)
    pm.add_argument("--window", help="x0,x1,y0,y1")
    pm.add_argument("--annulus", help="cx,cy,inner,outer")
    pm.add_argument("--resolution", help=f"grid cells per side, default {DEFAULT_RESOLUTION}")
    pm.add_argument("--t", help="comma separated parallel offsets; write --t=-0.3,0,0.3 for negatives")
    pm.add_argument("--out", help="OBJ path; several t values get a _t<t> suffix")
    pm.set_defaults(func=cmd_mesh)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _merge_config(args)
        return args.func(args)
    except (UsageError, ExprError, FrontError, cat.CatalogError, MeshError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
