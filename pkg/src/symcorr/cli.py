"""Command-line interface.

Subcommands:

  report              entropies + all correlation measures for one system
  scan-n3             sweep the third quantum number for both symmetries
  scan-superposition  sweep the superposition coefficient c1^2
  tables              recompute benchmark tables 1/2 against embedded
                      reference values (pass/fail per cell)
  density-grid        export a pair density on a grid as CSV

Options may also come from a flat ``key = value`` config file
(``--config``); explicit command-line flags win.  Exit codes: 0 ok,
1 reproduction mismatch, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .densities import (
    ReducedDensity,
    export_density_grid,
    reduce_numerical,
    reduce_to_one,
    reduce_to_pair,
)
from .information import compute_report, entropy
from .orbitals import MOMENTUM, POSITION, ModelParams
from .quadrature import NonConvergenceError, QuadratureScheme
from .reference_tables import ROW_KEYS, ROW_LABELS, TABLE_TOLERANCE, table_spec
from .superposition import (
    DEFAULT_C1SQ_GRID,
    SuperpositionSpec,
    scan_coefficient,
)
from .wavefunction import (
    DISTINGUISHABLE,
    Configuration,
    build,
    parse_symmetry,
)

USAGE_ERROR = 2
NUMERICAL_ERROR = 3

REPORT_CSV_HEADER = ("system,space,s1,s2,s3,I_pair,I3,I_rho_gamma,"
                     "I_gamma_gamma,I_higher,error_estimate")


def _parse_ns(text):
    try:
        ns = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse quantum numbers {text!r}") from None
    if len(ns) not in (2, 3):
        raise ValueError("expected 2 or 3 comma-separated quantum numbers")
    return ns


def _load_config_file(path):
    values = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line {raw.strip()!r}")
            key, _, val = line.partition("=")
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def _merge_config(args, parser_defaults):
    """Fill unset argparse values from the config file, if any."""
    if not getattr(args, "config", None):
        return args
    file_vals = _load_config_file(args.config)
    for key, raw in file_vals.items():
        if not hasattr(args, key):
            raise ValueError(f"unknown config key {key!r}")
        current = getattr(args, key)
        default = parser_defaults.get(key)
        if current != default:
            continue  # explicit flag wins
        if isinstance(default, bool):
            setattr(args, key, raw.lower() in ("1", "true", "yes", "on"))
            continue
        for conv in (int, float):
            try:
                setattr(args, key, conv(raw))
                break
            except ValueError:
                continue
        else:
            setattr(args, key, raw)
    return args


def _model_params(args):
    if args.model == "box":
        return ModelParams.box(args.L)
    if args.model == "ho":
        return ModelParams.oscillator(args.omega)
    raise ValueError(f"unknown model {args.model!r}")


def _scheme(args):
    kwargs = {}
    if args.panels is not None:
        kwargs.update(panels=args.panels, panels_3d=args.panels,
                      line_panels=args.panels, line_panels_3d=args.panels)
    if args.nodes is not None:
        kwargs["nodes_per_panel"] = args.nodes
    if args.tol is not None:
        kwargs["target_abs_tol"] = args.tol
    return QuadratureScheme(**kwargs)


def _spaces(args):
    if args.space == "both":
        return [POSITION, MOMENTUM]
    if args.space in (POSITION, MOMENTUM):
        return [args.space]
    raise ValueError(f"unknown space {args.space!r}")


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _report_rows_to_text(rows, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_CSV_HEADER.split(","))
        for r in rows:
            writer.writerow(
                f"{r[k]:.12g}" if isinstance(r[k], float) else str(r[k])
                for k in ("system", "space", "s1", "s2", "s3", "I_pair", "I3",
                          "I_rho_gamma", "I_gamma_gamma", "I_higher",
                          "error_estimate"))
        return buf.getvalue().rstrip("\n")
    # aligned table, one column per row dict, mirrors the benchmark layout
    lines = []
    for r in rows:
        lines.append(f"# {r['system']}  [{r['space']}]")
        for key in ROW_KEYS:
            label = ROW_LABELS[key]
            val = {"s1": r["s1"], "s2": r["s2"], "s3": r["s3"],
                   "I_pair": r["I_pair"], "I3": r["I3"],
                   "I_rho_gamma": r["I_rho_gamma"],
                   "I_gamma_gamma": r["I_gamma_gamma"],
                   "I_higher": r["I_higher"]}[key]
            lines.append(f"{label:<14} {val:>12.6f}")
        if r.get("error_estimate") is not None:
            lines.append(f"{'(est. error)':<14} {r['error_estimate']:>12.2e}")
    return "\n".join(lines)


def _full_report_dict(cfg, scheme):
    rep = compute_report(cfg, scheme)
    d = rep.as_dict()
    if d["error_estimate"] is not None:
        d["error_estimate"] = float(d["error_estimate"])
    for k, v in list(d.items()):
        if hasattr(v, "item"):
            d[k] = v.item()
    return d


def cmd_report(args):
    params = _model_params(args)
    ns = _parse_ns(args.n)
    sym = parse_symmetry(args.sym)
    scheme = _scheme(args)
    rows = []
    for space in _spaces(args):
        cfg = Configuration(params=params, ns=ns, symmetry=sym, space=space)
        if len(ns) == 3:
            rows.append(_full_report_dict(cfg, scheme))
        else:
            wf = build(cfg)
            s2 = entropy(wf, scheme)
            if sym != DISTINGUISHABLE and cfg.distinct:
                s1 = entropy(reduce_to_one(wf), scheme)
            else:
                s1 = float(np.mean(
                    [entropy(reduce_numerical(wf, 1, scheme, keep=(k,)),
                             scheme) for k in range(2)]))
            rows.append({"system": f"{args.model} ns={ns} {sym}",
                         "space": space, "s1": s1, "s2": s2,
                         "I_pair": 2 * s1 - s2})
    if len(ns) == 2:
        _emit(json.dumps(rows, indent=2), args.out)
    else:
        _emit(_report_rows_to_text(rows, args.format), args.out)
    return 0


def cmd_scan_n3(args):
    params = _model_params(args)
    base = _parse_ns(args.n)
    if len(base) != 2:
        raise ValueError("scan-n3 expects --n with the two fixed quantum numbers")
    lo, _, hi = args.n3_range.partition(":")
    n3_values = range(int(lo), int(hi) + 1)
    scheme = _scheme(args)
    rows = []
    for space in _spaces(args):
        for n3 in n3_values:
            for sym_tag in ("a", "s"):
                sym = parse_symmetry(sym_tag)
                if n3 in base and sym_tag == "a":
                    continue  # determinant vanishes
                cfg = Configuration(params=params, ns=base + (n3,),
                                    symmetry=sym, space=space)
                rows.append(_full_report_dict(cfg, scheme))
    _emit(_report_rows_to_text(rows, args.format), args.out)
    return 0


def cmd_scan_superposition(args):
    params = _model_params(args)
    ns_a = _parse_ns(args.n)
    ns_b = _parse_ns(args.n_second)
    if len(ns_a) != 3 or len(ns_b) != 3:
        raise ValueError("superposition scans are for 3-particle states")
    sym = parse_symmetry(args.sym)
    scheme = _scheme(args)
    if args.c1sq_grid:
        samples = [float(v) for v in args.c1sq_grid.split(",")]
    else:
        samples = list(DEFAULT_C1SQ_GRID)
    results = []
    for space in _spaces(args):
        spec = SuperpositionSpec(
            state_a=Configuration(params, ns_a, sym, space),
            state_b=Configuration(params, ns_b, sym, space),
            c1=1.0,
            interference=not args.no_interference)
        scan = scan_coefficient(spec, samples, scheme)
        if scan.errors:
            raise NonConvergenceError(
                f"{len(scan.errors)} scan samples failed: {scan.errors[0][1]}",
                float("nan"))
        results.append(scan.to_csv())
    _emit("\n".join(results).rstrip("\n"), args.out)
    return 0


def cmd_tables(args):
    reference, base, model_kwargs = table_spec(args.which)
    params = ModelParams(**model_kwargs)
    scheme = _scheme(args)
    failures = []
    lines = []
    n3_values = sorted({n3 for (_, n3) in reference})
    header = ["quantity"] + [f"{s.upper()}{n3}" for n3 in n3_values
                             for s in ("a", "s")]
    lines.append("  ".join(f"{h:>12}" for h in header))
    computed = {}
    for (sym_tag, n3) in reference:
        cfg = Configuration(params, base + (n3,), parse_symmetry(sym_tag))
        computed[(sym_tag, n3)] = compute_report(cfg, scheme, with_error=False)
    for key in ROW_KEYS:
        cells = [f"{ROW_LABELS[key]:>12}"]
        for n3 in n3_values:
            for sym_tag in ("a", "s"):
                rep = computed[(sym_tag, n3)]
                got = rep.as_dict()[{"s1": "s1", "s2": "s2", "s3": "s3",
                                     "I_pair": "I_pair", "I3": "I3",
                                     "I_rho_gamma": "I_rho_gamma",
                                     "I_gamma_gamma": "I_gamma_gamma",
                                     "I_higher": "I_higher"}[key]]
                want = reference[(sym_tag, n3)][key]
                delta = got - want
                if abs(delta) > TABLE_TOLERANCE:
                    failures.append(
                        f"{ROW_LABELS[key]} [{sym_tag.upper()}, n3={n3}]: "
                        f"computed {got:.4f}, reference {want:.4f}, "
                        f"|delta| {abs(delta):.1e}")
                cells.append(f"{got:12.4f}")
        lines.append("  ".join(cells))
    lines.append("")
    n_cells = len(reference) * len(ROW_KEYS)
    if failures:
        lines.append(f"FAIL: {len(failures)}/{n_cells} cells outside "
                     f"|delta| <= {TABLE_TOLERANCE:g}")
        lines.extend("  " + f for f in failures)
    else:
        lines.append(f"PASS: all {n_cells} cells within "
                     f"|delta| <= {TABLE_TOLERANCE:g}")
    _emit("\n".join(lines), args.out)
    return 1 if failures else 0


def cmd_density_grid(args):
    params = _model_params(args)
    ns = _parse_ns(args.n)
    sym = parse_symmetry(args.sym)
    space = args.space
    if space == "both":
        raise ValueError("density-grid needs a single space")
    scheme = _scheme(args)
    cfg = Configuration(params, ns, sym, space)
    wf = build(cfg)
    if len(ns) == 2:
        # the pair density of a two-particle state is |Psi|^2 itself
        density = ReducedDensity(arity=2, space=space, strategy="closed-form",
                                 domains=tuple(cfg.domains(2)),
                                 func=lambda x1, x2: wf.density(x1, x2))
    elif cfg.distinct and sym != DISTINGUISHABLE:
        density = reduce_to_pair(wf)
    else:
        density = reduce_numerical(wf, 2, scheme)
    text = export_density_grid(density, n_points=args.points)
    _emit(text.rstrip("\n"), args.out)
    return 0


def _add_common(p):
    p.add_argument("--config", help="flat key = value config file")
    p.add_argument("--model", choices=["box", "ho"], default="box")
    p.add_argument("--L", type=float, default=1.0, help="box length")
    p.add_argument("--omega", type=float, default=1.0, help="trap strength")
    p.add_argument("--sym", default="a",
                   help="s (symmetric) | a (antisymmetric) | d (distinguishable)")
    p.add_argument("--space", default="position",
                   choices=["position", "momentum", "both"])
    p.add_argument("--panels", type=int, default=None,
                   help="panels per axis (overrides all defaults)")
    p.add_argument("--nodes", type=int, default=None, help="nodes per panel")
    p.add_argument("--tol", type=float, default=None,
                   help="target absolute tolerance")
    p.add_argument("--format", choices=["json", "csv", "table"],
                   default="table")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser():
    """Returns (parser, {command: subparser}) for default-value lookups."""
    subparsers = {}
    parser = argparse.ArgumentParser(
        prog="symcorr",
        description="Entropies and mutual-information hierarchy for "
                    "few-particle model systems")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="one system, all measures")
    _add_common(p)
    p.add_argument("--n", required=True, help="comma-separated quantum numbers")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("scan-n3", help="sweep the third quantum number")
    _add_common(p)
    p.add_argument("--n", default="1,2", help="the two fixed quantum numbers")
    p.add_argument("--n3-range", default="3:6", help="inclusive range lo:hi")
    p.set_defaults(func=cmd_scan_n3)

    p = sub.add_parser("scan-superposition",
                       help="sweep the superposition coefficient")
    _add_common(p)
    p.add_argument("--n", default="1,2,3", help="first configuration")
    p.add_argument("--n-second", default="4,5,6", help="second configuration")
    p.add_argument("--no-interference", action="store_true",
                   help="drop the c1*c2 cross terms from the density")
    p.add_argument("--c1sq-grid", default=None,
                   help="comma-separated c1^2 samples")
    p.set_defaults(func=cmd_scan_superposition)

    p = sub.add_parser("tables", help="reproduce a benchmark table")
    _add_common(p)
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("density-grid", help="export a pair density grid")
    _add_common(p)
    p.add_argument("--n", required=True, help="comma-separated quantum numbers")
    p.add_argument("--points", type=int, default=101, help="grid points per axis")
    p.set_defaults(func=cmd_density_grid)

    for name, sp in sub.choices.items():
        subparsers[name] = sp
    return parser, subparsers


def main(argv=None):
    parser, subparsers = build_parser()
    args = parser.parse_args(argv)
    defaults = {a.dest: a.default
                for a in subparsers[args.command]._actions}
    try:
        args = _merge_config(args, defaults)
        return args.func(args)
    except NonConvergenceError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
