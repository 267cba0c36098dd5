#!/usr/bin/env python3
"""Trace how the coefficient block means decay and how the weighted tail
series grow, for a chosen preset and a ladder of table sizes.

Usage:
    python scripts/decay_curves.py [--preset NAME] [--n-max N] [--grid G]
                                   [--k K] [--out DIR]

Writes plain two-column .dat files (gnuplot-friendly) plus a JSON summary of
the fitted slopes.  These are exploratory diagnostics, not pass/fail checks:
whether the 1/n-weighted tail converges, and at what rate the means decay,
are open questions the probes are meant to map out.
"""

import argparse
import json
import sys
from pathlib import Path

from watlab.coeffs import compute_b_table, required_resolution
from watlab.config import RunConfig
from watlab.explorer import decay_fit, tail_series
from watlab.presets import PRESET_NAMES, preset_config
from watlab.symbols import unit_modulus_set


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--preset", default="blaschke-half", choices=PRESET_NAMES)
    parser.add_argument("--n-max", type=int, default=4096)
    parser.add_argument("--grid", type=int, default=None,
                        help="per-axis resolution (default: smallest power of two that fits)")
    parser.add_argument("--k", type=int, default=0, help="diagonal offset")
    parser.add_argument("--out", default="decay-out")
    args = parser.parse_args()

    doc = preset_config(args.preset)
    cfg = RunConfig.from_dict(doc)
    grid = args.grid
    if grid is None:
        need = max(required_resolution(cfg.nu, args.n_max, abs(args.k)))
        grid = 1
        while grid < need:
            grid *= 2
    resolution = (grid,) * cfg.symbol.dimension

    E = unit_modulus_set(cfg.symbol.evaluate_on_grid(resolution), cfg.e_tol)
    table = compute_b_table(cfg.symbol, E, cfg.nu, (1, args.n_max), [args.k])
    if table.degenerate:
        print(f"preset {args.preset}: degenerate unit-modulus set, table is zero")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = {"preset": args.preset, "n_max": args.n_max, "grid": grid, "k": args.k}

    for weight, q, stem in (("1/n", None, "tail_inv_n"), ("Lq/n", 1, "tail_l1"),
                            ("Lq/n", 2, "tail_l2")):
        probe = tail_series(table, args.k, weight=weight, q=q)
        with open(out / f"{stem}.dat", "w") as fh:
            for n, s in zip(probe.n_values, probe.partial_sums):
                fh.write(f"{n} {s!r}\n")
        summary[stem] = probe.to_summary()
        print(f"{probe.weight_id:10s} final partial sum {probe.partial_sums[-1]:.6g}"
              f"  loglog slope {probe.loglog_slope}")

    try:
        fit = decay_fit(table, args.k)
        with open(out / "mean_decay.dat", "w") as fh:
            for p, m in zip(fit["p_values"], fit["means"]):
                fh.write(f"{p} {m!r}\n")
        summary["decay_fit"] = fit
        print(f"block-mean slope vs log p: {fit['slope_vs_log_p']}, "
              f"vs log L_2(p): {fit['slope_vs_log_L2']}")
    except ValueError as exc:
        summary["decay_fit"] = {"flag": str(exc)}
        print(f"decay fit skipped: {exc}")

    with open(out / "summary.json", "w") as fh:
        json.dump(summary, fh, sort_keys=True, indent=2)
        fh.write("\n")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
