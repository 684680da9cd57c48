"""Command-line surface: run experiments, write delimited reports and figures.

Subcommands: sample, spacings, zeros, compare, zeromap, kernel.  Every output
file opens with the versioned header line ``# spectra-lab v1 <command>`` and
records the seed, so any figure or table is reproducible from the file alone.
Report commands also render a PNG next to the delimited output unless
``--no-plot`` is given.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import rng
from .eigensolve import Spectrum, eig_dense_sym, eig_herm, sqrt_spectrum
from .ensembles import KINDS, EnsembleConfig, sample_bilinear, sample_goe, sample_gue
from .orthopoly import KernelEval, cd_kernel, correlation_det, gauss_hermite
from .spectral_stats import (
    bulk,
    check_spacing_bound,
    decompose_fixed_variable,
    mean_abs_gap,
    spacings,
    two_sample_ks,
    unfold_semicircle,
    unfold_zeta,
)
from .zeta import ZeroList, find_zeros, format_zero, load_zeros_file, zero_count_rvm
from .zeromap import zero_map_residuals

SCHEMA = "spectra-lab v1"


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def _write_table(path: Path, command: str, meta: dict, columns, rows, fmt: str) -> None:
    if fmt == "json":
        doc = {
            "schema": f"{SCHEMA} {command}",
            "meta": meta,
            "columns": list(columns),
            "rows": [[(bool(v) if isinstance(v, (bool, np.bool_)) else v) for v in row] for row in rows],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True, default=float)
            fh.write("\n")
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# {SCHEMA} {command}\n")
        for key in sorted(meta):
            fh.write(f"# {key}={meta[key]}\n")
        writer = csv.writer(fh)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _write_json(path: Path, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True, default=float)
        fh.write("\n")


def _resolve_seed(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("SPECTRA_LAB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"SPECTRA_LAB_SEED is not an integer: {env!r}") from None
    return 0


def _sample_spectra(cfg: EnsembleConfig):
    """Yield (index, Spectrum, sqrt values or None) for every sample."""
    for index in range(cfg.samples):
        meta = f"{cfg.kind} r={cfg.order_r} seed={cfg.seed} index={index}"
        if cfg.kind == "goe":
            yield index, eig_dense_sym(sample_goe(cfg, index), ensemble="goe", meta=meta), None
        elif cfg.kind == "gue":
            yield index, eig_herm(sample_gue(cfg, index), ensemble="gue", meta=meta), None
        else:
            _, g = sample_bilinear(cfg, index)
            spec = eig_dense_sym(g, ensemble="bilinear", meta=meta)
            yield index, spec, sqrt_spectrum(spec).values


def cmd_sample(args) -> int:
    seed = _resolve_seed(args.seed)
    cfg = EnsembleConfig(kind=args.ensemble, order_r=args.r, seed=seed, samples=args.samples)
    columns = ["sample_index", "position", "value"]
    if cfg.kind == "bilinear":
        columns.append("sqrt_value")
    rows = []
    pooled = []
    for index, spec, sqrt_vals in _sample_spectra(cfg):
        pooled.append(spec.values)
        for pos, value in enumerate(spec.values):
            row = [index, pos, value]
            if sqrt_vals is not None:
                row.append(sqrt_vals[pos])
            rows.append(row)
    meta = {"ensemble": cfg.kind, "r": cfg.order_r, "samples": cfg.samples, "seed": seed}
    out = Path(args.out)
    _write_table(out, "sample", meta, columns, rows, args.format)
    if args.plot:
        from . import plots

        plots.eigenvalue_histogram(
            np.concatenate(pooled), cfg.kind, cfg.order_r, out.with_suffix(".png")
        )
    return 0


def _read_spectrum_csv(path: Path):
    """Parse a sample CSV back into (meta, {index: sorted values})."""
    meta: dict = {}
    by_index: dict[int, list] = {}
    with open(path, "r", encoding="utf-8") as fh:
        first = fh.readline().strip()
        if first != f"# {SCHEMA} sample":
            raise ValueError(f"{path}: not a {SCHEMA} sample file (header {first!r})")
        reader = csv.reader(line for line in fh if not line.startswith("#"))
        header = next(reader)
        if header[:3] != ["sample_index", "position", "value"]:
            raise ValueError(f"{path}: unexpected columns {header}")
        for row in reader:
            by_index.setdefault(int(row[0]), []).append(float(row[2]))
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if not line.startswith("# ") or line.startswith(f"# {SCHEMA}"):
                continue
            key, _, value = line[2:].strip().partition("=")
            meta[key] = value
    return meta, {k: np.array(sorted(v)) for k, v in by_index.items()}


def _sniff_is_spectrum(path: Path) -> bool:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.readline().strip() == f"# {SCHEMA} sample"


def _load_series(path: Path, sample_index: int):
    """Values plus (ensemble, order) when the input is a spectrum file."""
    if _sniff_is_spectrum(path):
        meta, samples = _read_spectrum_csv(path)
        if "r" not in meta:
            raise ValueError(f"{path}: spectrum file is missing its r= header")
        if sample_index not in samples:
            raise ValueError(
                f"{path}: sample index {sample_index} not present (have 0..{max(samples)})"
            )
        return samples[sample_index], meta.get("ensemble", "unknown"), int(meta["r"])
    zl = load_zeros_file(path)
    return zl.gammas, None, None


def _unfold_values(values, method: str, ensemble, order):
    if method == "none":
        return np.asarray(values, dtype=float)
    if method == "semicircle":
        if ensemble not in ("goe", "gue"):
            raise ValueError(
                "semicircle unfolding needs a goe or gue spectrum input, "
                f"got {ensemble or 'a zeros file'}"
            )
        return unfold_semicircle(Spectrum(values, order, ensemble=ensemble)).values
    if method == "zeta-smooth-count":
        return unfold_zeta(ZeroList(gammas=values, source="file")).values
    raise ValueError(f"unknown unfold method {method!r}")


def cmd_spacings(args) -> int:
    seed = _resolve_seed(args.seed)
    path = Path(args.input)
    values, ensemble, order = _load_series(path, args.sample_index)
    k = args.k
    series = spacings(values, k)
    fixed, variable = decompose_fixed_variable(series)
    unfolded = _unfold_values(values, args.unfold, ensemble, order)
    udeltas = spacings(unfolded, k).deltas
    columns = ["j", "delta_k", "fixed_part", "variable_part", "unfolded_delta_k"]
    rows = [
        [j, series.deltas[j], fixed, variable.deltas[j], udeltas[j]]
        for j in range(len(series.deltas))
    ]
    meta = {
        "input": path.name,
        "k": k,
        "unfold": args.unfold,
        "seed": seed,
        "n_values": len(values),
    }
    out = Path(args.out)
    _write_table(out, "spacings", meta, columns, rows, args.format)
    if args.plot:
        from . import plots

        shown = udeltas if args.unfold != "none" else series.deltas
        plots.spacing_histogram(shown, out.with_suffix(".png"), title=f"k={k} spacings")
    return 0


def cmd_zeros(args) -> int:
    if not 10.0 < args.t_max <= 500.0:
        raise ValueError(f"t_max must be within (10, 500], got {args.t_max}")
    zl = find_zeros(args.t_min, args.t_max, args.scan_step)
    out = Path(args.out)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(f"# {SCHEMA} zeros\n")
        fh.write(f"# t_min={args.t_min} t_max={args.t_max} scan_step={args.scan_step}\n")
        fh.write(f"# count={len(zl)} precision={zl.precision:g}\n")
        for g in zl.gammas:
            fh.write(format_zero(float(g)) + "\n")
    smooth = zero_count_rvm(args.t_max) - zero_count_rvm(args.t_min)
    _write_json(
        out.with_suffix(".count.json"),
        {
            "schema": f"{SCHEMA} zeros",
            "t_min": args.t_min,
            "t_max": args.t_max,
            "scan_step": args.scan_step,
            "count": len(zl),
            "smooth_count": smooth,
            "abs_diff": abs(len(zl) - smooth),
            "precision": zl.precision,
        },
    )
    if args.plot:
        from . import plots

        offset = zero_count_rvm(args.t_min)
        plots.zero_staircase(
            zl.gammas, lambda t: zero_count_rvm(t) - offset, out.with_suffix(".png")
        )
    return 0


def cmd_compare(args) -> int:
    seed = _resolve_seed(args.seed)
    pooled = []
    for spath in args.spectra:
        meta, samples = _read_spectrum_csv(Path(spath))
        if "r" not in meta:
            raise ValueError(f"{spath}: spectrum file is missing its r= header")
        ensemble, order = meta.get("ensemble", "unknown"), int(meta["r"])
        for values in samples.values():
            unfolded = _unfold_values(values, "semicircle", ensemble, order)
            pooled.append(np.diff(bulk(unfolded, args.bulk)))
    spac_a = np.concatenate(pooled)
    zl = load_zeros_file(args.zeros)
    spac_b = np.diff(unfold_zeta(zl).values)
    result_ks = two_sample_ks(spac_a, spac_b)
    gap = mean_abs_gap(spac_a, spac_b)
    out = Path(args.out)
    _write_json(
        out,
        {
            "schema": f"{SCHEMA} compare",
            "seed": seed,
            "ks": result_ks,
            "mean_abs_gap": gap,
            "n_a": len(spac_a),
            "n_b": len(spac_b),
            "unfold_a": "semicircle",
            "unfold_b": "zeta-smooth-count",
            "bulk_fraction": args.bulk,
            "spectra": [Path(p).name for p in args.spectra],
            "zeros": Path(args.zeros).name,
        },
    )
    top = max(float(np.max(spac_a)), float(np.max(spac_b)))
    edges = np.linspace(0.0, max(3.5, top), args.bins + 1)
    dens_a = np.histogram(spac_a, bins=edges)[0] / (len(spac_a) * np.diff(edges))
    dens_b = np.histogram(spac_b, bins=edges)[0] / (len(spac_b) * np.diff(edges))
    rows = [
        [edges[i], edges[i + 1], dens_a[i], dens_b[i]]
        for i in range(args.bins)
    ]
    _write_table(
        out.with_suffix(".hist.csv"),
        "compare",
        {"seed": seed, "n_a": len(spac_a), "n_b": len(spac_b)},
        ["bin_left", "bin_right", "density_a", "density_b"],
        rows,
        "csv",
    )
    if args.plot:
        from . import plots

        plots.comparison_histogram(
            spac_a, spac_b, ("matrix bulk", "zeta zeros"), out.with_suffix(".png")
        )
    return 0


def cmd_zeromap(args) -> int:
    seed = _resolve_seed(args.seed)
    zl = load_zeros_file(args.zeros)
    count = len(zl) if args.n_max is None else min(args.n_max, len(zl))
    subset = ZeroList(gammas=zl.gammas[:count], source=zl.source, precision=zl.precision)
    map_rows = zero_map_residuals(subset, np.arange(1, count + 1))
    columns = [
        "n",
        "gamma",
        "energy",
        "re_lambda",
        "im_lambda",
        "trace_residual",
        "det_residual",
        "critical_line_ok",
    ]
    rows = [
        [
            row.n,
            row.gamma,
            row.energy,
            row.lam_plus.real,
            row.lam_plus.imag,
            row.trace_residual,
            row.det_residual,
            row.critical,
        ]
        for row in map_rows
    ]
    meta = {"zeros": Path(args.zeros).name, "n_max": count, "seed": seed, "pairing": "n=j"}
    out = Path(args.out)
    _write_table(out, "zeromap", meta, columns, rows, args.format)
    report = check_spacing_bound(zl)
    bound_rows = [
        [r.j, zl.gammas[r.j - 1], zl.gammas[r.j], r.lhs, r.rhs, r.satisfied]
        for r in report.rows
    ]
    _write_table(
        out.with_suffix(".bounds.csv"),
        "zeromap",
        {
            "zeros": Path(args.zeros).name,
            "satisfied_fraction": f"{report.satisfied_fraction:.6f}",
            "rule": "lhs=gamma_{j+1}-gamma_j rhs=gamma_{j+1}/(j+1)",
        },
        ["j", "gamma_j", "gamma_j1", "lhs", "rhs", "satisfied"],
        bound_rows,
        "csv",
    )
    if args.plot:
        from . import plots

        plots.lambda_scatter([r.lam_plus for r in map_rows], out.with_suffix(".png"))
    return 0


def _parse_grid(spec: str) -> np.ndarray:
    try:
        lo, hi, n = spec.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise ValueError(f"grid must look like lo:hi:count, got {spec!r}") from None
    if n < 2 or hi <= lo:
        raise ValueError(f"grid needs hi > lo and count >= 2, got {spec!r}")
    return np.linspace(lo, hi, n)


def cmd_kernel(args) -> int:
    seed = _resolve_seed(args.seed)
    if not 1 <= args.r <= 64:
        raise ValueError(f"r must be within 1..64, got {args.r}")
    if not 1 <= args.m <= 4:
        raise ValueError(f"m must be within 1..4, got {args.m}")
    k = KernelEval(order_r=args.r, rate_r=float(args.rate if args.rate is not None else args.r))
    grid = _parse_grid(args.grid)
    kxx = np.array([cd_kernel(k, float(x), float(x)) for x in grid])
    nodes, weights = gauss_hermite(k.rate_r, 64, decayed=True)
    trace = float(np.sum(weights * [cd_kernel(k, float(x), float(x)) for x in nodes]))
    columns = ["x", "k_xx", "r1"]
    rows = [
        [grid[i], kxx[i], correlation_det(k, [grid[i]], 1)]
        for i in range(len(grid))
    ]
    meta = {
        "r": args.r,
        "rate": k.rate_r,
        "m": args.m,
        "seed": seed,
        "trace_quadrature": f"{trace:.12f}",
        "trace_target": args.r,
    }
    out = Path(args.out)
    _write_table(out, "kernel", meta, columns, rows, args.format)
    g = rng.generator(seed, 0, 9)
    span = float(max(abs(grid[0]), abs(grid[-1])))
    tuple_cols = [f"x{i + 1}" for i in range(args.m)] + ["r_m"]
    tuple_rows = []
    for _ in range(args.tuples):
        pts = np.sort(g.uniform(-span, span, size=args.m))
        tuple_rows.append(list(pts) + [correlation_det(k, pts, args.m)])
    _write_table(
        out.with_suffix(".rm.csv"),
        "kernel",
        {"r": args.r, "m": args.m, "seed": seed},
        tuple_cols,
        tuple_rows,
        "csv",
    )
    if args.plot:
        from . import plots

        plots.kernel_curve(grid, kxx, args.r, out.with_suffix(".png"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra-lab",
        description="Spectral statistics of Gaussian ensembles and zeta zeros",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--seed", type=int, default=None, help="64-bit seed (env SPECTRA_LAB_SEED)")
        p.add_argument("--out", required=True, help="output path")
        if with_format:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--no-plot", dest="plot", action="store_false", help="skip the PNG figure")

    p = sub.add_parser("sample", help="sample an ensemble and write its spectra")
    p.add_argument("--ensemble", choices=KINDS, required=True)
    p.add_argument("--r", type=int, required=True, help="matrix order")
    p.add_argument("--samples", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("spacings", help="k-th spacing report for a spectrum or zeros file")
    p.add_argument("--input", required=True, help="sample CSV or zeros text file")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--unfold", choices=("semicircle", "zeta-smooth-count", "none"), default="none")
    p.add_argument("--sample-index", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_spacings)

    p = sub.add_parser("zeros", help="locate critical-line zeros up to t_max")
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--t-min", type=float, default=10.0)
    p.add_argument("--scan-step", type=float, default=0.25)
    common(p, with_format=False)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("compare", help="matrix-vs-zeros spacing comparison report")
    p.add_argument("--spectra", nargs="+", required=True, help="sample CSV files")
    p.add_argument("--zeros", required=True, help="zeros text file")
    p.add_argument("--bulk", type=float, default=0.6, help="bulk fraction kept per spectrum")
    p.add_argument("--bins", type=int, default=40)
    common(p, with_format=False)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("zeromap", help="eigenvalue map rows plus the spacing bound table")
    p.add_argument("--zeros", required=True)
    p.add_argument("--n-max", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_zeromap)

    p = sub.add_parser("kernel", help="level density on a grid plus correlation determinants")
    p.add_argument("--r", type=int, required=True, help="number of kernel terms (<= 64)")
    p.add_argument("--rate", type=float, default=None, help="weight rate (default: r)")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--grid", default="-2:2:81")
    p.add_argument("--tuples", type=int, default=16)
    common(p)
    p.set_defaults(func=cmd_kernel)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
