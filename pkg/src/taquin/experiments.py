"""Trajectory experiments against a geography atlas.

Two experiments share one harness:

* evacuation: track the maximum entry of a fresh random square tableau
  through repeated slides and read the scaled trajectory at grid times.
* lazy: walk the first slide's hole path and read the last cell whose entry
  is still below a threshold, again at grid times.

Both compare each trajectory point against the atlas: latitude should track
1 - t (evacuation) or t (lazy), and longitude should stay at the trial's own
meridian.  Trials draw from disjoint RNG streams namespaced by an experiment
domain in the high bits of the stream index, so runs with equal master seeds
never share a stream, and any worker count yields identical output.
"""

from __future__ import annotations

import json
import math
import statistics
from dataclasses import dataclass, field
from pathlib import Path

from .dynamics import _max_positions, lazy_jdt_path
from .geography import GeographyAtlas, latitude, longitude, nearest_meridian_point
from .parallel import blocks, map_blocks
from .rng import RngSpec
from .sampling import _hook_walk
from .stats import ks_uniformity
from .tableaux import StandardTableau, YoungDiagram

VERSION = "taquin 0.1.0"

EVACUATION_DOMAIN = 1
LAZY_DOMAIN = 2
ATLAS_DOMAIN = 3

DEFAULT_T_GRID = tuple(round(0.05 * i, 2) for i in range(1, 20))


@dataclass(frozen=True)
class ExperimentConfig:
    side: int
    trials: int
    master_seed: int
    t0: float = 0.5
    boundary_cut: float = 0.1
    t_grid: tuple[float, ...] = DEFAULT_T_GRID

    def __post_init__(self):
        if self.side < 1:
            raise ValueError("side must be positive")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 0 < self.boundary_cut < self.t0 < 1 - self.boundary_cut:
            raise ValueError("need 0 < boundary_cut < t0 < 1 - boundary_cut")
        if any(not 0 <= t <= 1 for t in self.t_grid):
            raise ValueError("t_grid values must lie in [0, 1]")


@dataclass(frozen=True)
class TrialPoint:
    t: float
    x: float
    y: float
    latitude: float
    longitude: float


@dataclass(frozen=True)
class TrialReport:
    index: int
    psi: float
    points: tuple[TrialPoint, ...]
    latitude_sup: float
    longitude_sup: float
    point_sup: float


@dataclass(frozen=True)
class ExperimentSummary:
    kind: str
    version: str
    side: int
    trials: int
    master_seed: int
    t0: float
    boundary_cut: float
    t_grid: tuple[float, ...]
    atlas_side: int
    atlas_samples: int
    ks_statistic: float | None
    latitude_sup_quantiles: dict[str, float] = field(default_factory=dict)
    longitude_sup_quantiles: dict[str, float] = field(default_factory=dict)
    point_sup_quantiles: dict[str, float] = field(default_factory=dict)


def _target_latitude(kind: str, t: float) -> float:
    return 1.0 - t if kind == "evacuation" else t


def _one_trial(kind: str, cfg: ExperimentConfig, atlas: GeographyAtlas, trial: int) -> TrialReport:
    side = cfg.side
    n = side * side
    domain = EVACUATION_DOMAIN if kind == "evacuation" else LAZY_DOMAIN
    stream = RngSpec(cfg.master_seed, (domain << 48) | trial).stream()
    shape = YoungDiagram((side,) * side)
    grid, _, _ = _hook_walk(shape, stream)

    ts = sorted(set(cfg.t_grid) | {cfg.t0})
    if kind == "evacuation":
        positions = _max_positions(grid)
        # t - > slide count floor(t * n), +1e-9 against float dents in t * n
        cells = [positions[min(int(t * n + 1e-9), n - 1)] for t in ts]
    else:
        tab = StandardTableau(tuple(tuple(row) for row in grid))
        q = lazy_jdt_path(tab).q
        cells = [q[min(max(int(math.ceil(t * n - 1e-9)), 1), n) - 1] for t in ts]

    pts = []
    psi = None
    for t, cell in zip(ts, cells):
        x = cell.x / side
        y = cell.y / side
        lat = latitude(atlas, (x, y))
        lon = longitude(atlas, (x, y), clamp=True)
        pts.append(TrialPoint(t=t, x=x, y=y, latitude=lat, longitude=lon))
        if t == cfg.t0:
            psi = lon
    assert psi is not None

    lo, hi = cfg.boundary_cut, 1 - cfg.boundary_cut
    lat_sup = lon_sup = pt_sup = 0.0
    for p in pts:
        if not lo - 1e-9 <= p.t <= hi + 1e-9:
            continue
        target = _target_latitude(kind, p.t)
        lat_sup = max(lat_sup, abs(p.latitude - target))
        lon_sup = max(lon_sup, abs(p.longitude - psi))
        ref = nearest_meridian_point(atlas, target, psi)
        pt_sup = max(pt_sup, math.hypot(p.x - ref[0], p.y - ref[1]))
    return TrialReport(
        index=trial,
        psi=psi,
        points=tuple(pts),
        latitude_sup=lat_sup,
        longitude_sup=lon_sup,
        point_sup=pt_sup,
    )


def _trial_block(args) -> list[TrialReport]:
    kind, cfg, atlas, lo, hi = args
    return [_one_trial(kind, cfg, atlas, i) for i in range(lo, hi)]


def _quantiles(values: list[float]) -> dict[str, float]:
    if not values:
        return {}
    ordered = sorted(values)
    out = {}
    for q in (0.5, 0.9):
        # nearest-rank on the sorted list; exact median for q = 0.5
        if q == 0.5:
            out["0.5"] = float(statistics.median(ordered))
        else:
            idx = min(len(ordered) - 1, max(0, math.ceil(q * len(ordered)) - 1))
            out[str(q)] = float(ordered[idx])
    return out


def _run(kind: str, cfg: ExperimentConfig, atlas: GeographyAtlas,
         workers: int | None) -> tuple[ExperimentSummary, list[TrialReport]]:
    work = [(kind, cfg, atlas, lo, hi) for lo, hi in blocks(cfg.trials)]
    reports: list[TrialReport] = []
    for part in map_blocks(_trial_block, work, workers):
        reports.extend(part)
    psis = [r.psi for r in reports]
    summary = ExperimentSummary(
        kind=kind,
        version=VERSION,
        side=cfg.side,
        trials=cfg.trials,
        master_seed=cfg.master_seed,
        t0=cfg.t0,
        boundary_cut=cfg.boundary_cut,
        t_grid=cfg.t_grid,
        atlas_side=atlas.side,
        atlas_samples=atlas.samples,
        ks_statistic=ks_uniformity(psis) if psis else None,
        latitude_sup_quantiles=_quantiles([r.latitude_sup for r in reports]),
        longitude_sup_quantiles=_quantiles([r.longitude_sup for r in reports]),
        point_sup_quantiles=_quantiles([r.point_sup for r in reports]),
    )
    return summary, reports


def run_evacuation_experiment(cfg: ExperimentConfig, atlas: GeographyAtlas,
                              workers: int | None = None):
    return _run("evacuation", cfg, atlas, workers)


def run_lazy_path_experiment(cfg: ExperimentConfig, atlas: GeographyAtlas,
                             workers: int | None = None):
    return _run("lazy", cfg, atlas, workers)


def emit_reports(reports: list[TrialReport], summary: ExperimentSummary,
                 out_dir) -> tuple[Path, Path]:
    """Write paths.csv and summary.json under out_dir; returns both paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    csv_path = out / "paths.csv"
    lines = [f"# taquin-paths kind={summary.kind} side={summary.side}"]
    lines.append("trial,t,x,y,latitude,longitude")
    for rep in reports:
        for p in rep.points:
            lines.append(
                f"{rep.index},{p.t!r},{p.x!r},{p.y!r},{p.latitude!r},{p.longitude!r}"
            )
    csv_path.write_text("\n".join(lines) + "\n")

    summary_path = out / "summary.json"
    payload = {
        "kind": summary.kind,
        "version": summary.version,
        "side": summary.side,
        "trials": summary.trials,
        "master_seed": summary.master_seed,
        "t0": summary.t0,
        "boundary_cut": summary.boundary_cut,
        "t_grid": list(summary.t_grid),
        "atlas_side": summary.atlas_side,
        "atlas_samples": summary.atlas_samples,
        "ks_statistic": summary.ks_statistic,
        "latitude_sup_quantiles": summary.latitude_sup_quantiles,
        "longitude_sup_quantiles": summary.longitude_sup_quantiles,
        "point_sup_quantiles": summary.point_sup_quantiles,
    }
    summary_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return csv_path, summary_path
