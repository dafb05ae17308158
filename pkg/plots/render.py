"""Render meridian and latitude charts from atlas and path files.

Reads the text formats produced by the taquin CLI (``atlas build`` and
``experiment``) and draws two panels: a fan of constant-longitude meridians
with sampled paths overlaid, and the latitude contour map.  This script is
deliberately standalone; it talks to the main package only through the file
formats.

Usage::

    python plots/render.py --paths paths.csv --atlas n40.atlas --out fig.png
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

MERIDIAN_LEVELS = tuple(k / 10 for k in range(1, 10))
LATITUDE_LEVELS = (0.25, 0.5, 0.75)


class RenderError(Exception):
    """Input file cannot be used for rendering."""


@dataclass
class Atlas:
    side: int
    grid: int
    alphas: list[float]
    height: list[list[float]]  # height[iy][ix], cell centers, bottom row first
    usamples: dict[float, list[float]]  # alpha -> sorted scaled u samples


@dataclass
class PathSet:
    kind: str
    side: int
    trials: dict[int, list[tuple[float, float]]]  # trial -> [(x, y), ...]


def _floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split()]
    except ValueError as exc:
        raise RenderError(f"bad number in atlas: {exc}") from None


def load_atlas(path: Path) -> Atlas:
    lines = path.read_text().splitlines()
    if not lines or lines[0] != "taquin-atlas 1":
        raise RenderError(f"{path}: not a version-1 atlas file")
    fields: dict[str, str] = {}
    i = 1
    while i < len(lines) and lines[i] != "height":
        key, _, rest = lines[i].partition(" ")
        fields[key] = rest
        i += 1
    if i == len(lines):
        raise RenderError(f"{path}: missing height block")
    try:
        side = int(fields["side"])
        grid = int(fields["grid"])
        alphas = _floats(fields["alphas"])
    except KeyError as exc:
        raise RenderError(f"{path}: missing header field {exc}") from None

    i += 1
    height = []
    for _ in range(grid):
        if i >= len(lines):
            raise RenderError(f"{path}: truncated height block")
        row = _floats(lines[i])
        if len(row) != grid:
            raise RenderError(f"{path}: height row has {len(row)} entries, expected {grid}")
        height.append(row)
        i += 1

    usamples: dict[float, list[float]] = {}
    while i < len(lines) and lines[i] != "end":
        key, _, rest = lines[i].partition(" ")
        if key != "ucdf":
            raise RenderError(f"{path}: expected ucdf line, got {lines[i][:40]!r}")
        if i + 1 >= len(lines):
            raise RenderError(f"{path}: ucdf block truncated")
        usamples[float(rest)] = _floats(lines[i + 1])
        i += 2
    if i == len(lines):
        raise RenderError(f"{path}: missing end marker")
    if set(usamples) != set(alphas):
        raise RenderError(f"{path}: ucdf blocks do not match the alpha list")
    return Atlas(side, grid, alphas, height, usamples)


def load_paths(path: Path) -> PathSet:
    lines = path.read_text().splitlines()
    if not lines or not lines[0].startswith("# taquin-paths "):
        raise RenderError(f"{path}: not a taquin paths file")
    meta = dict(tok.split("=", 1) for tok in lines[0].removeprefix("# taquin-paths ").split())
    try:
        kind = meta["kind"]
        side = int(meta["side"])
    except (KeyError, ValueError):
        raise RenderError(f"{path}: bad paths header {lines[0]!r}") from None
    if len(lines) < 2 or not lines[1].startswith("trial,t,x,y"):
        raise RenderError(f"{path}: missing column header")
    trials: dict[int, list[tuple[float, float]]] = {}
    for ln in lines[2:]:
        if not ln:
            continue
        parts = ln.split(",")
        try:
            trials.setdefault(int(parts[0]), []).append((float(parts[2]), float(parts[3])))
        except (IndexError, ValueError):
            raise RenderError(f"{path}: bad data row {ln!r}") from None
    return PathSet(kind, side, trials)


def bilinear_height(atlas: Atlas, x: float, y: float) -> float:
    """Interpolate the height field at a point of the unit square.

    Queries outside the cell-center lattice clamp to the nearest center,
    matching how the field was built.
    """
    g = atlas.grid
    half = 0.5 / g

    def locate(coord):
        c = min(max(coord, half), 1 - half)
        pos = c * g - 0.5
        lo = min(int(pos), g - 2)
        return lo, pos - lo

    ix, fx = locate(x)
    iy, fy = locate(y)
    h = atlas.height
    bottom = h[iy][ix] * (1 - fx) + h[iy][ix + 1] * fx
    top = h[iy + 1][ix] * (1 - fx) + h[iy + 1][ix + 1] * fx
    return bottom * (1 - fy) + top * fy


def quantile(sorted_values: list[float], psi: float) -> float:
    # plain linear interpolation between order statistics
    if not sorted_values:
        raise RenderError("empty sample list in atlas")
    pos = psi * (len(sorted_values) - 1)
    lo = int(pos)
    if lo >= len(sorted_values) - 1:
        return sorted_values[-1]
    frac = pos - lo
    return sorted_values[lo] * (1 - frac) + sorted_values[lo + 1] * frac


def meridian_points(atlas: Atlas, psi: float) -> list[tuple[float, float]]:
    """One point per latitude level: where longitude equals psi on that level.

    For each alpha the u value with empirical CDF psi is read off the stored
    samples, then the point on the diagonal line x - y = u whose height is
    alpha is found by bisection.  Levels the line never reaches are skipped.
    """
    points = []
    for alpha in atlas.alphas:
        u = quantile(atlas.usamples[alpha], psi)
        lo, hi = abs(u) / 2, 1 - abs(u) / 2
        if lo >= hi:
            continue

        def level(m):
            return bilinear_height(atlas, m + u / 2, m - u / 2)

        if not level(lo) <= alpha <= level(hi):
            continue
        for _ in range(50):
            mid = (lo + hi) / 2
            if level(mid) < alpha:
                lo = mid
            else:
                hi = mid
        m = (lo + hi) / 2
        points.append((m + u / 2, m - u / 2))
    return points


def render(atlas: Atlas, paths: PathSet, out: Path) -> list[str]:
    """Draw the two-panel figure and write it to ``out``.

    Returns a list of warning strings for conditions that do not stop the
    render (currently only a side mismatch between the two inputs).
    """
    warnings = []
    if paths.side != atlas.side:
        warnings.append(
            f"warning: paths side {paths.side} does not match atlas side {atlas.side}"
        )

    fig, (ax_mer, ax_lat) = plt.subplots(1, 2, figsize=(11, 5.5))
    for ax in (ax_mer, ax_lat):
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_aspect("equal")
        ax.set_xlabel("x")
        ax.set_ylabel("y")

    cmap = plt.get_cmap("viridis")
    for psi in MERIDIAN_LEVELS:
        pts = meridian_points(atlas, psi)
        if len(pts) < 2:
            continue
        xs, ys = zip(*pts)
        ax_mer.plot(xs, ys, color=cmap(psi), linewidth=1.4, label=f"{psi:.1f}")
    for pts in paths.trials.values():
        xs, ys = zip(*pts)
        ax_mer.plot(xs, ys, color="black", alpha=0.35, linewidth=0.9)
    ax_mer.set_title(f"meridians with {len(paths.trials)} {paths.kind} paths")
    ax_mer.legend(title="longitude", fontsize="x-small", loc="upper left")

    g = atlas.grid
    centers = [(i + 0.5) / g for i in range(g)]
    contours = ax_lat.contour(
        centers, centers, atlas.height, levels=list(LATITUDE_LEVELS), colors="tab:blue"
    )
    ax_lat.clabel(contours, fmt="%.2f", fontsize="x-small")
    ax_lat.set_title(f"latitude levels, side {atlas.side}")

    title = f"atlas side {atlas.side}, grid {atlas.grid}"
    if warnings:
        title += "  [side mismatch]"
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(out)
    plt.close(fig)
    return warnings


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--paths", required=True, type=Path, help="paths csv from an experiment run")
    parser.add_argument("--atlas", required=True, type=Path, help="atlas file")
    parser.add_argument("--out", required=True, type=Path, help="output image (.png or .svg)")
    args = parser.parse_args(argv)
    try:
        atlas = load_atlas(args.atlas)
        paths = load_paths(args.paths)
        warnings = render(atlas, paths, args.out)
    except (RenderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in warnings:
        print(line, file=sys.stderr)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
