"""The jeu de taquin engine.

One slide erases the bottom-left entry and pulls the smaller of the right and
above neighbors into the hole until neither exists.  Entry labels are kept as
they are (the modified variant is the only place that renumbers), so iterating
slides leaves a tableau whose labels are a tail of the original ones.

Inner loops run over plain list-of-lists grids, bottom row first.  A tableau
with n boxes undergoes n slides in the trajectory computations, so the loops
avoid attribute lookups and object churn; the list grid is converted back to
StandardTableau only at the edges.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .tableaux import Position, StandardTableau


@dataclass(frozen=True)
class JdtRecord:
    before: StandardTableau
    after: StandardTableau
    hole_path: tuple[Position, ...]


@dataclass(frozen=True)
class EvacuationPath:
    """positions[i] = position of the maximal entry after i slides."""

    positions: tuple[Position, ...]


@dataclass(frozen=True)
class LazyPath:
    """q[i-1] = last cell along the first slide's path whose entry is <= i."""

    q: tuple[Position, ...]


@dataclass(frozen=True)
class SurferCoupling:
    """Single-surfer and multisurfer tableaux over identical water.

    water has w boxes; single = water plus the surfer (entry w+1); multi =
    water plus k multisurfers (entries w+1..w+k) at cells of strictly
    increasing u.
    """

    water: StandardTableau
    single: StandardTableau
    multi: StandardTableau
    k: int


def _slide(grid: list[list[int]]) -> list[Position]:
    """One slide in place; returns the hole path.  The grid loses one cell;
    an emptied top row is dropped."""
    nrows = len(grid)
    r = c = 0
    path = [Position(1, 1)]
    while True:
        row = grid[r]
        right = row[c + 1] if c + 1 < len(row) else 0
        up = grid[r + 1][c] if r + 1 < nrows and c < len(grid[r + 1]) else 0
        if not right and not up:
            break
        if not up or (right and right < up):
            row[c] = right
            c += 1
        else:
            row[c] = up
            r += 1
        path.append(Position(c + 1, r + 1))
    grid[r].pop()
    if not grid[r]:
        # the hole can only empty the top row: any row above would have
        # offered an up-neighbor at column 1
        grid.pop()
    return path


def _max_positions(grid: list[list[int]]) -> list[Position]:
    """Position of the maximal label after 0..n-1 slides.  Consumes the grid.

    Same slide loop as _slide, duplicated here with inline label tracking;
    this is the hot path of the trajectory experiments.
    """
    maxv = 0
    tr = tc = 0
    for r, row in enumerate(grid):
        for c, v in enumerate(row):
            if v > maxv:
                maxv, tr, tc = v, r, c
    out = [Position(tc + 1, tr + 1)]
    nrows = len(grid)
    total = sum(len(row) for row in grid)
    for _ in range(total - 1):
        r = c = 0
        while True:
            row = grid[r]
            right = row[c + 1] if c + 1 < len(row) else 0
            up = grid[r + 1][c] if r + 1 < nrows and c < len(grid[r + 1]) else 0
            if not right and not up:
                break
            if not up or (right and right < up):
                row[c] = right
                if right == maxv:
                    tr, tc = r, c
                c += 1
            else:
                row[c] = up
                if up == maxv:
                    tr, tc = r, c
                r += 1
        grid[r].pop()
        if not grid[r]:
            grid.pop()
            nrows -= 1
        out.append(Position(tc + 1, tr + 1))
    return out


def _grid_of(t: StandardTableau) -> list[list[int]]:
    return [list(row) for row in t.rows]


def jdt_slide(t: StandardTableau) -> JdtRecord:
    """One slide.  Labels are retained, so the result's entries are the
    original ones minus the smallest."""
    if t.size == 0:
        raise ValueError("cannot slide the empty tableau")
    grid = _grid_of(t)
    path = _slide(grid)
    after = StandardTableau(tuple(tuple(row) for row in grid))
    return JdtRecord(before=t, after=after, hole_path=tuple(path))


def modified_jdt(t: StandardTableau) -> StandardTableau:
    """Slide, refill the final hole with a new maximal entry, shift all labels
    down by one.  Shape-preserving bijection on standard tableaux."""
    if t.size == 0:
        raise ValueError("cannot slide the empty tableau")
    grid = _grid_of(t)
    end = _slide(grid)[-1]
    grid = [[v - 1 for v in row] for row in grid]
    if end.y == len(grid) + 1:
        grid.append([])
    grid[end.y - 1].append(t.size)
    return StandardTableau(tuple(tuple(row) for row in grid))


def evacuation_path(t: StandardTableau) -> EvacuationPath:
    if t.size == 0:
        raise ValueError("empty tableau has no evacuation path")
    return EvacuationPath(tuple(_max_positions(_grid_of(t))))


def _refill_trajectory(t: StandardTableau) -> list[Position]:
    """Position of the ORIGINAL maximal label under slide-and-refill
    iteration.  Refilling with ever-larger labels instead of renumbering makes
    element i the position that the renumbering convention would call
    pos_{n-i} after i modified slides (a constant label shift changes no
    comparison), so the original max can be followed literally.
    """
    n = t.size
    maxv = t.max_entry
    grid = _grid_of(t)
    out = [t.position_of(maxv)]
    extra = maxv
    for _ in range(n - 1):
        end = _slide(grid)[-1]
        extra += 1
        if end.y == len(grid) + 1:
            grid.append([])
        grid[end.y - 1].append(extra)
        for r, row in enumerate(grid):
            for c, v in enumerate(row):
                if v == maxv:
                    out.append(Position(c + 1, r + 1))
    return out


def happy_box_check(t: StandardTableau, i: int) -> bool:
    """Exact identity: the max label after i plain slides sits where the
    (n-i)-th label sits after i modified slides.  Expected true always."""
    n = t.size
    if not 0 <= i <= n - 1:
        raise ValueError(f"step {i} outside 0..{n - 1}")
    return _max_positions(_grid_of(t))[i] == _refill_trajectory(t)[i]


def happy_box_all(t: StandardTableau) -> bool:
    """happy_box_check for every step at once (one pass per side)."""
    return _max_positions(_grid_of(t)) == _refill_trajectory(t)


def lazy_jdt_path(t: StandardTableau) -> LazyPath:
    if t.size == 0:
        raise ValueError("empty tableau has no lazy path")
    rec = jdt_slide(t)
    path = rec.hole_path
    entries = [t.entry_at(p) for p in path]
    q = []
    idx = 0
    last = len(path) - 1
    for i in range(1, t.size + 1):
        while idx < last and entries[idx + 1] <= i:
            idx += 1
        q.append(path[idx])
    return LazyPath(tuple(q))


def scaled_evacuation_curve(
    t: StandardTableau, t_grid: list[float]
) -> list[tuple[float, float]]:
    """X_t = (1/N) * position of the max entry after floor(t*N^2) slides, for
    a square N x N tableau.  One slide pass serves all requested times."""
    if not t.shape.is_square() or t.size == 0:
        raise ValueError("scaled curve requires a nonempty square tableau")
    side = len(t.rows)
    n = side * side
    positions = _max_positions(_grid_of(t))
    out = []
    for tt in t_grid:
        if not 0.0 <= tt <= 1.0:
            raise ValueError(f"time {tt} outside [0, 1]")
        # +1e-9: decimal grid times like 0.95 must hit the intended integer
        i = min(int(tt * n + 1e-9), n - 1)
        p = positions[i]
        out.append((p.x / side, p.y / side))
    return out


def is_pieri(t: StandardTableau, k: int) -> bool:
    """Do the k largest entries occupy cells of strictly increasing u?

    Entries need not be 1..n: a slid tableau keeps its original labels, and
    the k largest PRESENT entries are the ones examined."""
    n = t.size
    if k > n:
        raise ValueError(f"k={k} exceeds |T|={n}")
    if k <= 1:
        return True
    top = sorted(heapq.nlargest(k, t._inverse))
    us = [t.u_of(v) for v in top]
    return all(a < b for a, b in zip(us, us[1:]))


def _extend(t: StandardTableau, cells: list[Position]) -> StandardTableau:
    shape = t.shape
    grid = _grid_of(t)
    v = t.size
    for cell in cells:
        cell = Position(*cell)
        if cell not in shape.addable_corners():
            raise ValueError(f"cell {tuple(cell)} is not addable")
        shape = shape.add_cell(cell)
        v += 1
        if cell.y == len(grid) + 1:
            grid.append([])
        grid[cell.y - 1].append(v)
    return StandardTableau(tuple(tuple(row) for row in grid))


def build_coupling(
    water: StandardTableau,
    surfer_corner: Position,
    multi_cells: list[Position],
) -> SurferCoupling:
    """Synthetic coupling: caller chooses where the surfer and the
    multisurfers go; both extensions share the water verbatim."""
    if not multi_cells:
        raise ValueError("need at least one multisurfer cell")
    single = _extend(water, [surfer_corner])
    us = [Position(*c).u for c in multi_cells]
    if any(b <= a for a, b in zip(us, us[1:])):
        raise ValueError("multisurfer cells must have strictly increasing u")
    multi = _extend(water, list(multi_cells))
    return SurferCoupling(water=water, single=single, multi=multi, k=len(multi_cells))


def _label_positions(grid: list[list[int]], labels: set[int]) -> dict[int, Position]:
    found = {}
    for r, row in enumerate(grid):
        for c, v in enumerate(row):
            if v in labels:
                found[v] = Position(c + 1, r + 1)
    return found


def psi_tilde_sequence(c: SurferCoupling) -> tuple[Fraction, ...]:
    """For q = 0..w: the fraction of multisurfers strictly left (in u) of the
    surfer, both sides after q slides.  Empty max counts as 0.

    The comparison is strict: a multisurfer on the surfer's diagonal does not
    count as left.  With ties counted, a hole path that drains out of the water
    can pull the surfer down and a multisurfer left into the same cell in one
    slide, closing a u-gap of 2 to a tie and breaking monotonicity.  Under the
    strict rule the sequence is weakly decreasing in q.
    """
    w = c.water.size
    k = c.k
    sg = _grid_of(c.single)
    mg = _grid_of(c.multi)
    surfer = w + 1
    mlabels = set(range(w + 1, w + k + 1))
    out = []
    for q in range(w + 1):
        su = _label_positions(sg, {surfer})[surfer].u
        mpos = _label_positions(mg, mlabels)
        p = 0
        for j in range(1, k + 1):
            if mpos[w + j].u < su:
                p = j
        out.append(Fraction(p, k))
        if q < w:
            _slide(sg)
            _slide(mg)
    return tuple(out)


def multisurfer_longitude(
    m: StandardTableau, w: int, k: int, u: float, side: int
) -> Fraction:
    """Fraction of multisurfers whose scaled u-coordinate is <= u; the largest
    qualifying index over k, with 0 for none."""
    best = 0
    for p in range(1, k + 1):
        if m.u_of(w + p) / side <= u:
            best = p
    return Fraction(best, k)
