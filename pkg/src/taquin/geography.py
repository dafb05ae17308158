"""Empirical geographic coordinates on the unit square.

Latitude is the mean height field of scaled random square tableaux (entry
value over n, averaged per grid cell, isotonic-cleaned so it is weakly
increasing in x and y).  Longitude at a point is the CDF of the scaled
u-coordinate of the boundary box for the point's latitude, estimated from the
per-latitude sample lists; the inverse map intersects a level set with a
u-line by bisection.

u-samples at side N live on the lattice (1/N)Z, so the raw empirical CDF is a
staircase with steps of noticeable mass.  Queries therefore evaluate a
smoothed CDF with each sample spread uniformly over half a lattice cell each
way.  The atlas file stores the raw sorted samples; smoothing happens at
query time and is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .parallel import blocks, map_blocks
from .rng import RngSpec
from .sampling import _hook_walk
from .tableaux import YoungDiagram

DEFAULT_GRID = 64
DEFAULT_ALPHA_GRID = tuple(round(0.02 * i, 2) for i in range(1, 50))


class AtlasFormatError(ValueError):
    pass


class UnsupportedVersionError(AtlasFormatError):
    pass


class BoundaryError(ValueError):
    pass


@dataclass(eq=False)
class GeographyAtlas:
    """height[iy, ix] is the cleaned mean scaled entry at the cell centered on
    ((ix+0.5)/G, (iy+0.5)/G); u_samples[j] is the sorted array of scaled
    u-coordinates of the box floor(alphas[j] * side^2) across samples."""

    side: int
    samples: int
    grid_size: int
    alphas: tuple[float, ...]
    height: np.ndarray
    u_samples: tuple[np.ndarray, ...]
    raw_violation_fraction: float

    def __post_init__(self):
        self._prefix_cache = None

    def __getstate__(self):
        # the prefix cache is derived data; rebuild it after unpickling
        state = self.__dict__.copy()
        state["_prefix_cache"] = None
        return state

    def _prefix(self, j: int) -> np.ndarray:
        if self._prefix_cache is None:
            self._prefix_cache = [
                np.concatenate(([0.0], np.cumsum(s))) for s in self.u_samples
            ]
        return self._prefix_cache[j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeographyAtlas):
            return NotImplemented
        return (
            self.side == other.side
            and self.samples == other.samples
            and self.grid_size == other.grid_size
            and self.alphas == other.alphas
            and np.array_equal(self.height, other.height)
            and len(self.u_samples) == len(other.u_samples)
            and all(
                np.array_equal(a, b) for a, b in zip(self.u_samples, other.u_samples)
            )
            and self.raw_violation_fraction == other.raw_violation_fraction
        )


def _pav(values: np.ndarray) -> np.ndarray:
    """Pool adjacent violators: nondecreasing least-squares fit, equal weights."""
    sums: list[float] = []
    counts: list[int] = []
    for v in values:
        s, c = float(v), 1
        while sums and sums[-1] * c > s * counts[-1]:
            s += sums.pop()
            c += counts.pop()
        sums.append(s)
        counts.append(c)
    out = np.empty(len(values))
    pos = 0
    for s, c in zip(sums, counts):
        out[pos : pos + c] = s / c
        pos += c
    return out


def _atlas_block(args) -> tuple[np.ndarray, list[list[float]]]:
    """Height sum and per-alpha u values for samples lo..hi-1, in order."""
    side, grid_size, alphas, master_seed, base_index, lo, hi = args
    n = side * side
    shape = YoungDiagram((side,) * side)
    # +1e-9 so decimal alphas whose float product lands just under an
    # integer still floor to it
    ks = [min(n, max(1, int(a * n + 1e-9))) for a in alphas]
    cell_of = [min(side - 1, int((i + 0.5) * side / grid_size)) for i in range(grid_size)]
    sel = np.ix_(cell_of, cell_of)
    acc = np.zeros((grid_size, grid_size))
    us: list[list[float]] = [[] for _ in alphas]
    for s in range(lo, hi):
        stream = RngSpec(master_seed, base_index + s).stream()
        grid, xs, ys = _hook_walk(shape, stream)
        entries = np.array(grid, dtype=np.float64)
        acc += entries[sel]
        for j, k in enumerate(ks):
            us[j].append((xs[k] - ys[k]) / side)
    return acc, us


def build_atlas(
    side: int,
    samples: int,
    rng: RngSpec,
    grid_size: int = DEFAULT_GRID,
    alphas: tuple[float, ...] = DEFAULT_ALPHA_GRID,
    cell_budget: int = 500_000_000,
    workers: int | None = None,
) -> GeographyAtlas:
    if side < 8:
        raise ValueError("atlas estimation needs side >= 8")
    if samples < 100:
        raise ValueError("atlas estimation needs samples >= 100")
    if side * side * samples > cell_budget:
        raise ValueError(
            f"resource budget exceeded: side^2 * samples = {side * side * samples} "
            f"> {cell_budget}"
        )
    alphas = tuple(float(a) for a in alphas)
    if not alphas or any(not 0 < a < 1 for a in alphas) or list(alphas) != sorted(alphas):
        raise ValueError("alpha grid must be sorted values strictly inside (0, 1)")

    work = [
        (side, grid_size, alphas, rng.master_seed, rng.stream_index, lo, hi)
        for lo, hi in blocks(samples)
    ]
    parts = map_blocks(_atlas_block, work, workers)

    acc = np.zeros((grid_size, grid_size))
    value_lists: list[list[float]] = [[] for _ in alphas]
    for height_part, us in parts:
        acc += height_part
        for j, vals in enumerate(us):
            value_lists[j].extend(vals)
    height = acc / (samples * side * side)

    down_x = int(np.sum(height[:, 1:] < height[:, :-1]))
    down_y = int(np.sum(height[1:, :] < height[:-1, :]))
    pairs = 2 * grid_size * (grid_size - 1)
    raw_violation_fraction = (down_x + down_y) / pairs

    for iy in range(grid_size):
        height[iy, :] = _pav(height[iy, :])
    for ix in range(grid_size):
        height[:, ix] = _pav(height[:, ix])

    u_samples = tuple(np.sort(np.array(v)) for v in value_lists)
    return GeographyAtlas(
        side=side,
        samples=samples,
        grid_size=grid_size,
        alphas=alphas,
        height=height,
        u_samples=u_samples,
        raw_violation_fraction=raw_violation_fraction,
    )


def _bilinear(height: np.ndarray, x: float, y: float, grid_size: int) -> float:
    # cell-centered lattice with flat extrapolation outside the centers
    gx = min(max(x * grid_size - 0.5, 0.0), grid_size - 1.0)
    gy = min(max(y * grid_size - 0.5, 0.0), grid_size - 1.0)
    ix0 = int(gx)
    iy0 = int(gy)
    ix1 = min(ix0 + 1, grid_size - 1)
    iy1 = min(iy0 + 1, grid_size - 1)
    fx = gx - ix0
    fy = gy - iy0
    top = (1 - fx) * height[iy1, ix0] + fx * height[iy1, ix1]
    bot = (1 - fx) * height[iy0, ix0] + fx * height[iy0, ix1]
    return float((1 - fy) * bot + fy * top)


def latitude(atlas: GeographyAtlas, p) -> float:
    x, y = p
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise ValueError(f"point {p!r} outside the unit square")
    return _bilinear(atlas.height, x, y, atlas.grid_size)


def _smoothed_cdf(samples: np.ndarray, prefix: np.ndarray, h: float, u: float) -> float:
    m = samples.size
    lo = int(np.searchsorted(samples, u - h, side="right"))
    hi = int(np.searchsorted(samples, u + h, side="left"))
    mid_sum = float(prefix[hi] - prefix[lo])
    cnt = hi - lo
    return (lo + ((u + h) * cnt - mid_sum) / (2 * h)) / m


def _cdf_at(atlas: GeographyAtlas, alpha: float, u: float) -> float:
    h = 1.0 / (2 * atlas.side)
    grid = atlas.alphas
    idx = int(np.searchsorted(grid, alpha))
    if idx <= 0:
        rows = ((0, 1.0),)
    elif idx >= len(grid):
        rows = ((len(grid) - 1, 1.0),)
    else:
        a0, a1 = grid[idx - 1], grid[idx]
        w = (alpha - a0) / (a1 - a0)
        rows = ((idx - 1, 1.0 - w), (idx, w))
    out = 0.0
    for j, w in rows:
        if w:
            out += w * _smoothed_cdf(atlas.u_samples[j], atlas._prefix(j), h, u)
    return out


def longitude(atlas: GeographyAtlas, p, clamp: bool = False) -> float:
    """CDF position of u(p) = x - y at the point's latitude.  Latitudes
    outside the alpha grid raise BoundaryError unless clamp=True pins them to
    the nearest covered latitude."""
    alpha = latitude(atlas, p)
    lo, hi = atlas.alphas[0], atlas.alphas[-1]
    if alpha < lo or alpha > hi:
        clamped = min(max(alpha, lo), hi)
        if not clamp:
            raise BoundaryError(
                f"latitude {alpha:.4f} outside atlas coverage, "
                f"nearest covered latitude is {clamped}"
            )
        alpha = clamped
    x, y = p
    return _cdf_at(atlas, alpha, x - y)


def _u_quantile(atlas: GeographyAtlas, alpha: float, psi: float) -> float:
    h = 1.0 / (2 * atlas.side)
    lo, hi = -1.0 - h, 1.0 + h
    for _ in range(52):
        mid = 0.5 * (lo + hi)
        if _cdf_at(atlas, alpha, mid) < psi:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def meridian_point(atlas: GeographyAtlas, alpha: float, psi: float) -> tuple[float, float]:
    """The point with the given latitude and longitude: intersect the level
    set {height = alpha} with the line x - y = u*(alpha, psi) by bisection
    along the line (height is monotone along it)."""
    if not (0.0 <= alpha <= 1.0 and 0.0 <= psi <= 1.0):
        raise ValueError("latitude and longitude must lie in [0, 1]")
    if alpha < atlas.alphas[0] or alpha > atlas.alphas[-1]:
        raise BoundaryError(
            f"latitude {alpha} outside atlas coverage "
            f"[{atlas.alphas[0]}, {atlas.alphas[-1]}]"
        )
    ustar = _u_quantile(atlas, alpha, psi)
    if abs(ustar) > 1.0:
        raise BoundaryError(f"u-quantile {ustar:.4f} leaves the unit square")
    lo = abs(ustar) / 2
    hi = 1.0 - abs(ustar) / 2

    def lat_at(s: float) -> float:
        return latitude(atlas, (s + ustar / 2, s - ustar / 2))

    if lat_at(lo) > alpha:
        raise BoundaryError(
            f"level {alpha} does not meet the line u={ustar:.4f} inside the square"
        )
    if lat_at(hi) < alpha:
        raise BoundaryError(
            f"level {alpha} does not meet the line u={ustar:.4f} inside the square"
        )
    for _ in range(52):
        mid = 0.5 * (lo + hi)
        if lat_at(mid) < alpha:
            lo = mid
        else:
            hi = mid
    s = 0.5 * (lo + hi)
    return (s + ustar / 2, s - ustar / 2)


def nearest_meridian_point(atlas: GeographyAtlas, alpha: float, psi: float) -> tuple[float, float]:
    """meridian_point made total: when the level set and the u-line fail to
    meet inside the square (extreme quantiles at desk sample sizes), return
    the end of the line nearest to the level instead of raising."""
    if alpha < atlas.alphas[0] or alpha > atlas.alphas[-1]:
        raise BoundaryError(
            f"latitude {alpha} outside atlas coverage "
            f"[{atlas.alphas[0]}, {atlas.alphas[-1]}]"
        )
    ustar = min(1.0, max(-1.0, _u_quantile(atlas, alpha, psi)))
    lo = abs(ustar) / 2
    hi = 1.0 - abs(ustar) / 2

    def lat_at(s: float) -> float:
        return latitude(atlas, (s + ustar / 2, s - ustar / 2))

    if lat_at(lo) >= alpha:
        s = lo
    elif lat_at(hi) <= alpha:
        s = hi
    else:
        for _ in range(52):
            mid = 0.5 * (lo + hi)
            if lat_at(mid) < alpha:
                lo = mid
            else:
                hi = mid
        s = 0.5 * (lo + hi)
    return (s + ustar / 2, s - ustar / 2)


def save_atlas(atlas: GeographyAtlas, path) -> None:
    G = atlas.grid_size
    out = ["taquin-atlas 1"]
    out.append(f"side {atlas.side}")
    out.append(f"samples {atlas.samples}")
    out.append(f"grid {G}")
    out.append("alphas " + " ".join(repr(float(a)) for a in atlas.alphas))
    out.append(f"raw_violations {atlas.raw_violation_fraction!r}")
    out.append("height")
    for iy in range(G):
        out.append(" ".join(repr(float(v)) for v in atlas.height[iy]))
    for a, s in zip(atlas.alphas, atlas.u_samples):
        out.append(f"ucdf {float(a)!r}")
        out.append(" ".join(repr(float(v)) for v in s))
    out.append("end")
    Path(path).write_text("\n".join(out) + "\n")


def _parse_floats(line: str, what: str) -> list[float]:
    try:
        return [float(tok) for tok in line.split()]
    except ValueError:
        raise AtlasFormatError(f"bad {what} line: {line[:60]!r}") from None


def load_atlas(path) -> GeographyAtlas:
    text = Path(path).read_text()
    lines = text.splitlines()
    pos = 0

    def take(what: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            raise AtlasFormatError(f"truncated atlas file: missing {what}")
        line = lines[pos]
        pos += 1
        return line

    head = take("header").split()
    if len(head) != 2 or head[0] != "taquin-atlas":
        raise AtlasFormatError("not an atlas file (bad header)")
    if head[1] != "1":
        raise UnsupportedVersionError(f"unsupported atlas schema version {head[1]}")

    def take_kv(key: str) -> str:
        line = take(key)
        parts = line.split(None, 1)
        if len(parts) != 2 or parts[0] != key:
            raise AtlasFormatError(f"expected '{key} ...', got {line[:60]!r}")
        return parts[1]

    try:
        side = int(take_kv("side"))
        samples = int(take_kv("samples"))
        grid_size = int(take_kv("grid"))
    except ValueError:
        raise AtlasFormatError("non-integer side/samples/grid") from None
    alphas = tuple(_parse_floats(take_kv("alphas"), "alphas"))
    try:
        raw_violations = float(take_kv("raw_violations"))
    except ValueError:
        raise AtlasFormatError("bad raw_violations value") from None
    if take("height marker") != "height":
        raise AtlasFormatError("missing height block")
    height = np.empty((grid_size, grid_size))
    for iy in range(grid_size):
        vals = _parse_floats(take(f"height row {iy}"), "height")
        if len(vals) != grid_size:
            raise AtlasFormatError(f"height row {iy} has {len(vals)} values, want {grid_size}")
        height[iy, :] = vals
    u_samples = []
    for a in alphas:
        marker = take("ucdf marker").split()
        if len(marker) != 2 or marker[0] != "ucdf" or float(marker[1]) != float(a):
            raise AtlasFormatError(f"expected 'ucdf {a!r}' marker")
        vals = np.array(_parse_floats(take("ucdf samples"), "ucdf"))
        if vals.size and np.any(np.diff(vals) < 0):
            raise AtlasFormatError("u samples are not sorted")
        u_samples.append(vals)
    if take("end marker") != "end":
        raise AtlasFormatError("missing end marker")
    return GeographyAtlas(
        side=side,
        samples=samples,
        grid_size=grid_size,
        alphas=alphas,
        height=height,
        u_samples=tuple(u_samples),
        raw_violation_fraction=raw_violations,
    )
