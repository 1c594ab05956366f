"""Parameter-sweep scenarios emitting the figure data as CSV/JSON artifacts.

Every scenario writes one data file with a fixed column schema (unused cells
hold the literal ``NA``) plus a JSON run manifest.  Grid points are evaluated
in grid order with a dedicated Monte Carlo stream per row, so output files
are deterministic for a fixed seed.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .errors import DomainError
from .instrument import (build_instrument, leakage_max, optimal_reversal,
                         reversal_residual, standard_fidelity,
                         success_probability, tradeoff_lhs,
                         completeness_residual)
from .jointmeas import ZX_ZZ_LIMIT, ejm, element_entanglement, xx_deformed, zx_zz
from .montecarlo import RngSpec, estimate_performance
from .qstate import concurrence, ejm_channel, max_entangled, schmidt_channel
from .theorems import solve_tr

COLUMNS = [
    "param1", "param2", "E_c", "E_M", "F_standard", "F_mr",
    "P_succ_closed", "P_succ_svd", "P_succ_mc", "P_succ_mc_stderr",
    "L_max", "tradeoff_lhs", "thm2_lower", "thm2_upper",
]

SCENARIO_NAMES = ("xx-scan", "ejm-scan", "ejm-aligned-scan", "zz-scan",
                  "tradeoff-scan", "thm2-bounds")

DEFAULT_SEED = 20240101

COMPLETENESS_GATE = 1e-10
REVERSAL_GATE = 1e-9


@dataclass(frozen=True)
class GridSpec:
    """Inclusive linear grid with at least two steps."""

    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.steps < 2:
            raise DomainError(f"grid needs at least 2 steps, got {self.steps}")
        if self.stop < self.start:
            raise DomainError(f"grid stop {self.stop!r} below start {self.start!r}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class Scenario:
    name: str
    grid: GridSpec
    grid2: GridSpec | None = None
    mc_samples: int | None = None
    rng: RngSpec = RngSpec(DEFAULT_SEED)


@dataclass
class RunResult:
    data_path: Path
    manifest_path: Path
    rows: int
    completeness_max: float
    reversal_max: float
    residual_ok: bool


# Default grids (used by the CLI when flags are absent).
DEFAULT_GRIDS: dict[str, tuple[GridSpec, GridSpec | None]] = {
    "xx-scan": (GridSpec(0.0, math.pi / 4, 51), None),
    "ejm-scan": (GridSpec(0.0, math.pi / 2, 51), None),
    "ejm-aligned-scan": (GridSpec(0.0, math.pi / 2, 21),
                         GridSpec(0.0, math.pi / 2, 21)),
    "zz-scan": (GridSpec(0.0, 1.3, 51), None),
    "tradeoff-scan": (GridSpec(0.0, math.pi / 2, 51), None),
    "thm2-bounds": (GridSpec(0.0, 1.0, 51), GridSpec(3.0, 4.0, 2)),
}


def _p_closed_xx(phi: float, t: float) -> float:
    weaker = min(math.sin(2 * phi), math.cos(2 * t))
    return 1.0 - math.sqrt(max(1.0 - weaker * weaker, 0.0))


def _p_closed_ejm(t: float) -> float:
    return 1.0 - math.sqrt(3) / 2 * math.cos(t)


def _p_closed_ejm_aligned(s: float, t: float) -> float:
    # 1 - (1/4)[sqrt((1-X)^2 - (E_c E_M)^2) + sqrt((3+X)^2 - 9(E_c E_M)^2)]
    # with X = sqrt((1-E_M^2)(1-E_c^2)), rewritten through the Bloch radii
    # ub, vb so both radicals are cancellation-free on the s = t diagonal.
    ub = math.sqrt(3) / 2 * math.cos(s)
    vb = math.sqrt(3) / 2 * math.cos(t)
    a = abs(ub - vb)
    b = 3.0 * math.sqrt((ub + vb / 3.0) ** 2 + 8.0 / 9.0 * vb * vb * (1.0 - ub * ub))
    return 1.0 - 0.25 * (a + b)


def _p_closed_zz(phi: float, t: float) -> float:
    big_r = math.sqrt(math.pi ** 2 + 16.0 * t * t) / 4.0
    return 1.0 - max(math.cos(2 * phi), abs(math.cos(2 * big_r)))


def validate_scenario(sc: Scenario) -> None:
    """Range-check the grids against the scenario's parameter domains."""
    if sc.name not in SCENARIO_NAMES:
        raise DomainError(f"unknown scenario {sc.name!r}")
    tol = 1e-12

    def _within(g: GridSpec, lo: float, hi: float, what: str,
                exclusive_hi: bool = False) -> None:
        bad_hi = g.stop >= hi if exclusive_hi else g.stop > hi + tol
        if g.start < lo - tol or bad_hi:
            end = ")" if exclusive_hi else "]"
            raise DomainError(
                f"{sc.name}: {what} grid [{g.start!r}, {g.stop!r}] outside "
                f"[{lo!r}, {hi!r}{end}")

    if sc.name == "xx-scan":
        _within(sc.grid, 0.0, math.pi / 4, "t")
        if sc.grid2 is not None:
            _within(sc.grid2, 0.0, math.pi / 4, "phi")
    elif sc.name in ("ejm-scan", "tradeoff-scan"):
        _within(sc.grid, 0.0, math.pi / 2, "t")
        if sc.grid2 is not None:
            raise DomainError(f"{sc.name} takes no second grid")
    elif sc.name == "ejm-aligned-scan":
        _within(sc.grid, 0.0, math.pi / 2, "t")
        if sc.grid2 is not None:
            _within(sc.grid2, 0.0, math.pi / 2, "s")
    elif sc.name == "zz-scan":
        _within(sc.grid, 0.0, ZX_ZZ_LIMIT, "t", exclusive_hi=True)
        if sc.grid2 is not None:
            _within(sc.grid2, 0.0, math.pi / 4, "phi")
    elif sc.name == "thm2-bounds":
        _within(sc.grid, 0.0, 1.0, "e")
        if sc.grid2 is not None:
            for v in sc.grid2.values():
                if abs(v - round(v)) > 1e-9 or not 2 <= round(v) <= 8:
                    raise DomainError(
                        f"thm2-bounds: dimension grid value {v!r} is not an "
                        f"integer in [2, 8]")


def _qubit_row(channel, jm, p_closed, samples, rng_spec, stream):
    inst = build_instrument(channel, jm)
    plan = optimal_reversal(inst)
    comp = completeness_residual(inst.kraus, inst.d)
    rev = reversal_residual(inst, plan)
    row = {
        "E_c": concurrence(channel),
        "E_M": element_entanglement(jm, 0),
        "F_standard": standard_fidelity(inst),
        "F_mr": 1.0,
        "P_succ_closed": p_closed,
        "P_succ_svd": success_probability(plan),
        "P_succ_mc": None,
        "P_succ_mc_stderr": None,
        "L_max": leakage_max(inst),
        "tradeoff_lhs": tradeoff_lhs(inst, plan),
        "thm2_lower": None,
        "thm2_upper": None,
    }
    if samples:
        est = estimate_performance(
            inst, plan, samples, RngSpec(rng_spec.seed, stream))["p_succ"]
        row["P_succ_mc"] = est.mean
        row["P_succ_mc_stderr"] = est.std_error
    return row, comp, rev


def _build_rows(sc: Scenario):
    rows = []
    comp_max = 0.0
    rev_max = 0.0
    stream = 0

    def emit(p1, p2, channel, jm, p_closed):
        nonlocal comp_max, rev_max, stream
        row, comp, rev = _qubit_row(channel, jm, p_closed, sc.mc_samples,
                                    sc.rng, stream)
        row["param1"] = p1
        row["param2"] = p2
        rows.append(row)
        comp_max = max(comp_max, comp)
        rev_max = max(rev_max, rev)
        stream += 1

    v1 = sc.grid.values()
    v2 = sc.grid2.values() if sc.grid2 is not None else None

    if sc.name == "xx-scan":
        for t in v1:
            for phi in ([None] if v2 is None else v2):
                p = math.pi / 4 if phi is None else float(phi)
                emit(float(t), phi if phi is None else float(phi),
                     schmidt_channel(p, "z"), xx_deformed(float(t)),
                     _p_closed_xx(p, float(t)))
    elif sc.name in ("ejm-scan", "tradeoff-scan"):
        for t in v1:
            emit(float(t), None, max_entangled(2), ejm(float(t)),
                 _p_closed_ejm(float(t)))
    elif sc.name == "ejm-aligned-scan":
        svals = v2 if v2 is not None else sc.grid.values()
        for t in v1:
            for s in svals:
                emit(float(t), float(s), ejm_channel(float(s)), ejm(float(t)),
                     _p_closed_ejm_aligned(float(s), float(t)))
    elif sc.name == "zz-scan":
        for t in v1:
            for phi in ([None] if v2 is None else v2):
                p = math.pi / 4 if phi is None else float(phi)
                emit(float(t), phi if phi is None else float(phi),
                     schmidt_channel(p, "y"), zx_zz(float(t)),
                     _p_closed_zz(p, float(t)))
    elif sc.name == "thm2-bounds":
        dims = [3, 4] if sc.grid2 is None else [int(round(v)) for v in sc.grid2.values()]
        for e in v1:
            for d in dims:
                tr = solve_tr(d, float(e))
                rows.append({
                    "param1": float(e), "param2": float(d),
                    "E_c": 1.0, "E_M": float(e),
                    "F_standard": None, "F_mr": None,
                    "P_succ_closed": None, "P_succ_svd": None,
                    "P_succ_mc": None, "P_succ_mc_stderr": None,
                    "L_max": None, "tradeoff_lhs": None,
                    "thm2_lower": d * tr, "thm2_upper": float(e),
                })
    else:
        raise DomainError(f"unknown scenario {sc.name!r}")
    return rows, comp_max, rev_max


def _fmt(x) -> str:
    return "NA" if x is None else format(float(x), ".15g")


def run(sc: Scenario, out_dir, fmt: str = "csv") -> RunResult:
    """Evaluate a scenario and write its data file plus run manifest."""
    if fmt not in ("csv", "json"):
        raise DomainError(f"unknown output format {fmt!r}")
    validate_scenario(sc)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    t0 = time.perf_counter()
    rows, comp_max, rev_max = _build_rows(sc)
    wall = time.perf_counter() - t0

    cells = [[_fmt(row[col]) for col in COLUMNS] for row in rows]
    if fmt == "csv":
        data_path = out / f"{sc.name}.csv"
        lines = [",".join(COLUMNS)] + [",".join(r) for r in cells]
        data_path.write_text("\n".join(lines) + "\n")
    else:
        data_path = out / f"{sc.name}.json"
        data_path.write_text(
            json.dumps({"columns": COLUMNS, "rows": cells}, indent=2) + "\n")

    residual_ok = comp_max <= COMPLETENESS_GATE and rev_max <= REVERSAL_GATE
    manifest = {
        "scenario": sc.name,
        "grid": {"start": sc.grid.start, "stop": sc.grid.stop, "steps": sc.grid.steps},
        "grid2": None if sc.grid2 is None else {
            "start": sc.grid2.start, "stop": sc.grid2.stop, "steps": sc.grid2.steps},
        "samples": sc.mc_samples,
        "seed": sc.rng.seed,
        "stream_base": sc.rng.stream,
        "generator": "philox4x64",
        "format": fmt,
        "version": __version__,
        "rows": len(rows),
        "columns": COLUMNS,
        "wall_time_s": wall,
        "residuals": {"completeness_max": comp_max, "reversal_max": rev_max},
        "residual_ok": residual_ok,
        "data_file": data_path.name,
    }
    manifest_path = out / f"{sc.name}_manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")

    return RunResult(data_path=data_path, manifest_path=manifest_path,
                     rows=len(rows), completeness_max=comp_max,
                     reversal_max=rev_max, residual_ok=residual_ok)
