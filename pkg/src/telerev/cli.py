"""Command-line scenario runner.

Flags may be pre-set in a ``key=value`` config file (``--config``); command
line values override the file, which overrides the ``TELEREV_SEED``
environment variable, which overrides built-in defaults.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import DomainError
from .montecarlo import RngSpec
from .scenarios import (DEFAULT_GRIDS, DEFAULT_SEED, SCENARIO_NAMES, GridSpec,
                        Scenario, run)

_CONFIG_KEYS = ("scenario", "grid", "grid2", "samples", "seed", "out", "format")


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid {text!r} is not START:STOP:STEPS")
    try:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise DomainError(f"grid {text!r}: {exc}") from exc
    return GridSpec(start=start, stop=stop, steps=steps)


def _read_config(path: str) -> dict[str, str]:
    cfg: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise DomainError(f"{path}:{lineno}: unknown key {key!r}")
            cfg[key] = value
    return cfg


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="telerev",
        description="Sweep teleportation scenarios and write CSV/JSON figure data.")
    p.add_argument("--scenario", choices=SCENARIO_NAMES)
    p.add_argument("--grid", metavar="START:STOP:STEPS",
                   help="primary parameter grid")
    p.add_argument("--grid2", metavar="START:STOP:STEPS",
                   help="secondary parameter grid (2D scenarios)")
    p.add_argument("--samples", type=int,
                   help="Monte Carlo samples per grid point (omit to skip MC columns)")
    p.add_argument("--seed", type=int, help="base RNG seed")
    p.add_argument("--out", help="output directory (default: out)")
    p.add_argument("--format", choices=("csv", "json"), dest="fmt")
    p.add_argument("--config", help="key=value file pre-setting any flag")
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _read_config(args.config) if args.config else {}

        def pick(cli_value, key, fallback=None):
            if cli_value is not None:
                return cli_value
            return cfg.get(key, fallback)

        name = pick(args.scenario, "scenario")
        if name is None:
            print("error: no scenario given (use --scenario or a config file)",
                  file=sys.stderr)
            return 2
        if name not in SCENARIO_NAMES:
            print(f"error: unknown scenario {name!r}", file=sys.stderr)
            return 2

        env_seed = os.environ.get("TELEREV_SEED")
        seed = pick(args.seed, "seed")
        if seed is None:
            seed = env_seed if env_seed is not None else DEFAULT_SEED
        seed = int(seed)

        samples = pick(args.samples, "samples")
        samples = int(samples) if samples is not None else None
        if samples is not None and samples < 1:
            print(f"error: --samples must be >= 1, got {samples}", file=sys.stderr)
            return 2

        default_grid, default_grid2 = DEFAULT_GRIDS[name]
        grid_text = pick(args.grid, "grid")
        grid = _parse_grid(grid_text) if grid_text is not None else default_grid
        grid2_text = pick(args.grid2, "grid2")
        grid2 = _parse_grid(grid2_text) if grid2_text is not None else default_grid2

        out_dir = pick(args.out, "out", "out")
        fmt = pick(args.fmt, "format", "csv")

        scenario = Scenario(name=name, grid=grid, grid2=grid2,
                            mc_samples=samples, rng=RngSpec(seed))
        result = run(scenario, out_dir, fmt=fmt)
    except (DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if not result.residual_ok:
        print(f"error: internal residual checks failed "
              f"(completeness {result.completeness_max:.3e}, "
              f"reversal {result.reversal_max:.3e})", file=sys.stderr)
        return 1
    print(f"{result.data_path} ({result.rows} rows)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
