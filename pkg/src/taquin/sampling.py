"""Random generation: uniform standard tableaux by hook walk, uniform Pieri
tableaux by rejection, uniform permutations by shuffle.

Sampling operations are pure functions of an RngSpec: the same spec always
yields the same object.  Bulk consumers (atlas, experiments) address one
stream per sample/trial via the spec's stream_index.
"""

from __future__ import annotations

from .rng import RngSpec, Stream
from .tableaux import Position, StandardTableau, YoungDiagram
from .dynamics import SurferCoupling, build_coupling, is_pieri


def _as_stream(rng: RngSpec | Stream) -> Stream:
    return rng.stream() if isinstance(rng, RngSpec) else rng


def _hook_walk(shape: YoungDiagram, stream: Stream):
    """Place n..1, each by a uniformly started hook walk ending at a removable
    corner of the not-yet-filled part.  Returns (grid, xs, ys) where xs[k],
    ys[k] give the cell of entry k, 1-based.

    The walk: from the start cell jump to a uniform cell strictly right in the
    row or strictly above in the column (within the unfilled part), repeat
    until at a corner.  Start cells are drawn from a swap-delete list so each
    placement costs O(walk length), no scanning.
    """
    rows = list(shape.rows)
    ncols = shape.num_cols
    nrows = len(rows)
    cols = [shape.column_length(x) for x in range(1, ncols + 1)]
    grid = [[0] * r for r in shape.rows]
    n = shape.size
    xs = [0] * (n + 1)
    ys = [0] * (n + 1)
    below = stream.below
    remaining = [r * ncols + c for r in range(nrows) for c in range(rows[r])]
    pos_in = {cell: i for i, cell in enumerate(remaining)}
    m = n
    for entry in range(n, 0, -1):
        cell = remaining[below(m)]
        r, c = divmod(cell, ncols)
        while True:
            arm = rows[r] - 1 - c
            leg = cols[c] - 1 - r
            hook = arm + leg
            if hook == 0:
                break
            h = below(hook)
            if h < arm:
                c += h + 1
            else:
                r += h - arm + 1
        grid[r][c] = entry
        xs[entry] = c + 1
        ys[entry] = r + 1
        rows[r] -= 1
        cols[c] -= 1
        m -= 1
        cid = r * ncols + c
        p = pos_in[cid]
        last = remaining[m]
        remaining[p] = last
        pos_in[last] = p
        del pos_in[cid]
    return grid, xs, ys


def sample_uniform_syt(shape: YoungDiagram, rng: RngSpec | Stream) -> StandardTableau:
    """Exactly uniform on the standard tableaux of the shape."""
    if shape.size == 0:
        raise ValueError("cannot sample the empty shape")
    grid, _, _ = _hook_walk(shape, _as_stream(rng))
    return StandardTableau(tuple(tuple(row) for row in grid))


def sample_uniform_pieri(
    shape: YoungDiagram, k: int, rng: RngSpec | Stream
) -> StandardTableau:
    t, _ = sample_uniform_pieri_with_stats(shape, k, rng)
    return t


def sample_uniform_pieri_with_stats(
    shape: YoungDiagram, k: int, rng: RngSpec | Stream
) -> tuple[StandardTableau, int]:
    """Rejection from the uniform sampler until the k largest entries have
    strictly increasing u.  Uniform on the conditioned set by construction.
    Also returns the number of attempts (acceptance-rate diagnostic; about
    k!^-1 for large squares)."""
    if not 1 <= k <= shape.size:
        raise ValueError(f"k={k} outside 1..{shape.size}")
    stream = _as_stream(rng)
    attempts = 0
    while True:
        attempts += 1
        t = sample_uniform_syt(shape, stream)
        if is_pieri(t, k):
            return t, attempts


def sample_permutation(n: int, rng: RngSpec | Stream) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("n must be >= 1")
    items = list(range(1, n + 1))
    _as_stream(rng).shuffle(items)
    return tuple(items)


def random_subdiagram(max_side: int, stream: Stream) -> YoungDiagram:
    """A random nonempty diagram fitting in the max_side square.  Coverage
    helper for property sweeps; the distribution is unimportant, only that
    small and ragged shapes all occur."""
    rows = []
    width = max_side
    for _ in range(max_side):
        r = stream.below(width + 1)
        if r == 0:
            break
        rows.append(r)
        width = r
    if not rows:
        rows = [1 + stream.below(max_side)]
    return YoungDiagram(tuple(rows))


def random_coupling(max_side: int, k: int, stream: Stream) -> SurferCoupling:
    """Random water in the max_side square plus random surfer corner and a
    random addable k-cell sequence with strictly increasing u."""
    shape = random_subdiagram(max_side, stream)
    water = sample_uniform_syt(shape, stream)
    corners = shape.addable_corners()
    surfer = corners[stream.below(len(corners))]
    cells: list[Position] = []
    cur = shape
    last_u = None
    for _ in range(k):
        options = [c for c in cur.addable_corners() if last_u is None or c.u > last_u]
        # never empty: the bottom-row corner's u always exceeds the last pick
        choice = options[stream.below(len(options))]
        cells.append(choice)
        cur = cur.add_cell(choice)
        last_u = choice.u
    return build_coupling(water, surfer, cells)
