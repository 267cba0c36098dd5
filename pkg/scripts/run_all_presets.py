#!/usr/bin/env python3
"""Run the full check suite for every built-in preset and summarize results.

Usage:
    python scripts/run_all_presets.py [--out DIR]

Exit status is nonzero if any preset fails a check.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from watlab.cli import main as watlab_main
from watlab.presets import PRESET_NAMES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="preset-runs", help="output root directory")
    args = parser.parse_args()

    root = Path(args.out)
    worst = 0
    rows = []
    for name in PRESET_NAMES:
        out = root / name
        t0 = time.monotonic()
        code = watlab_main(["check", "--preset", name, "--out", str(out)])
        elapsed = time.monotonic() - t0
        worst = max(worst, code)
        n_pass = n_total = 0
        reports = out / "reports.jsonl"
        if reports.exists():
            for line in reports.read_text().splitlines():
                doc = json.loads(line)
                n_total += 1
                n_pass += bool(doc["pass"])
        rows.append((name, code, n_pass, n_total, elapsed))

    print()
    print(f"{'preset':24s} {'exit':>4s} {'checks':>9s} {'seconds':>8s}")
    for name, code, n_pass, n_total, elapsed in rows:
        print(f"{name:24s} {code:4d} {n_pass:4d}/{n_total:<4d} {elapsed:8.1f}")
    return worst


if __name__ == "__main__":
    sys.exit(main())
