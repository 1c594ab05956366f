#!/usr/bin/env python3
"""Regenerate the golden CSVs under tests/goldens/.

Each scenario is run through the real CLI entry point with a pinned seed and
grid; the resulting CSVs plus the invocation list are the regression
reference.  Run from the repository root after any intentional change to the
scenario engine, and review the diff before committing.
"""

from __future__ import annotations

import json
import math
import shutil
import sys
import tempfile
from pathlib import Path

from telerev.cli import main

PI4 = repr(math.pi / 4)
PI2 = repr(math.pi / 2)
SEED = "424242"

GOLDEN_RUNS = [
    ("xx-scan", ["--scenario", "xx-scan", "--grid", f"0:{PI4}:11",
                 "--samples", "2000", "--seed", SEED]),
    ("ejm-scan", ["--scenario", "ejm-scan", "--grid", f"0:{PI2}:11",
                  "--samples", "2000", "--seed", SEED]),
    ("ejm-aligned-scan", ["--scenario", "ejm-aligned-scan", "--grid", f"0:{PI2}:6",
                          "--grid2", f"0:{PI2}:6", "--seed", SEED]),
    ("zz-scan", ["--scenario", "zz-scan", "--grid", "0:1.3:6",
                 "--grid2", f"0:{PI4}:5", "--seed", SEED]),
    ("tradeoff-scan", ["--scenario", "tradeoff-scan", "--grid", f"0:{PI2}:11",
                       "--seed", SEED]),
    ("thm2-bounds", ["--scenario", "thm2-bounds", "--grid", "0:1:11",
                     "--grid2", "3:4:2", "--seed", SEED]),
]


def regenerate(golden_dir: Path) -> None:
    golden_dir.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        for name, argv in GOLDEN_RUNS:
            code = main(argv + ["--out", tmp])
            if code != 0:
                raise SystemExit(f"{name}: CLI returned {code}")
            shutil.copy(Path(tmp) / f"{name}.csv", golden_dir / f"{name}.csv")
            print(f"wrote {golden_dir / (name + '.csv')}")
    manifest = [{"name": name, "argv": argv} for name, argv in GOLDEN_RUNS]
    (golden_dir / "invocations.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {golden_dir / 'invocations.json'}")


if __name__ == "__main__":
    root = Path(__file__).resolve().parent.parent
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else root / "tests" / "goldens"
    regenerate(target)
