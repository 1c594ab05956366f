#!/usr/bin/env python3
"""Run every scenario at desk scale and drop the figure data under ./out.

Roughly a minute of CPU; pass an output directory to override ./out.
The CSVs feed any external plotter; see the column schema in the README.
"""

from __future__ import annotations

import math
import sys

from telerev.cli import main

PI4 = repr(math.pi / 4)
PI2 = repr(math.pi / 2)

# (subdirectory, argv); the 2D variant of xx-scan goes into its own folder so
# it does not overwrite the 1D fidelity curve.
RUNS = [
    ("", ["--scenario", "xx-scan", "--grid", f"0:{PI4}:101", "--samples", "100000"]),
    ("surface", ["--scenario", "xx-scan", "--grid", f"0:{PI4}:51",
                 "--grid2", f"0:{PI4}:51"]),
    ("", ["--scenario", "ejm-scan", "--grid", f"0:{PI2}:101", "--samples", "100000"]),
    ("", ["--scenario", "ejm-aligned-scan", "--grid", f"0:{PI2}:51",
          "--grid2", f"0:{PI2}:51"]),
    ("", ["--scenario", "zz-scan", "--grid", "0:1.35:51", "--grid2", f"0:{PI4}:51"]),
    ("", ["--scenario", "tradeoff-scan", "--grid", f"0:{PI2}:101"]),
    ("", ["--scenario", "thm2-bounds", "--grid", "0:1:101", "--grid2", "3:4:2"]),
]


def run_all(out_dir: str) -> int:
    worst = 0
    for subdir, argv in RUNS:
        target = f"{out_dir}/{subdir}" if subdir else out_dir
        code = main(argv + ["--seed", "20240101", "--out", target])
        print(f"scenario {argv[1]}: exit {code}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    raise SystemExit(run_all(sys.argv[1] if len(sys.argv) > 1 else "out"))
