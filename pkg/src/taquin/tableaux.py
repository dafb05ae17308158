"""Young diagrams and standard tableaux.

French convention throughout: rows are indexed bottom to top, x is the column
and y the row, both 1-based.  The u-coordinate (content) of a cell is u = x - y.
Data is immutable; the slide engine in dynamics.py works on throwaway list
grids and converts back at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterator, NamedTuple

MAX_ENUMERATION_SIZE = 12
MAX_HOOK_SIZE = 400


class Position(NamedTuple):
    x: int
    y: int

    @property
    def u(self) -> int:
        return self.x - self.y


@dataclass(frozen=True)
class YoungDiagram:
    """Row lengths, bottom row first, weakly decreasing."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if r <= 0:
                raise ValueError("row lengths must be positive")
        for a, b in zip(rows, rows[1:]):
            if a < b:
                raise ValueError(f"row lengths must be weakly decreasing, got {rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return self.rows[0] if self.rows else 0

    def column_length(self, x: int) -> int:
        return sum(1 for r in self.rows if r >= x)

    def conjugate(self) -> "YoungDiagram":
        return YoungDiagram(tuple(self.column_length(x) for x in range(1, self.num_cols + 1)))

    def contains(self, pos: Position) -> bool:
        x, y = pos
        return 1 <= y <= len(self.rows) and 1 <= x <= self.rows[y - 1]

    def cells(self) -> Iterator[Position]:
        for y, r in enumerate(self.rows, start=1):
            for x in range(1, r + 1):
                yield Position(x, y)

    def removable_corners(self) -> list[Position]:
        out = []
        rows = self.rows
        for y, r in enumerate(rows, start=1):
            below_next = rows[y] if y < len(rows) else 0
            if r > below_next:
                out.append(Position(r, y))
        return out

    def addable_corners(self) -> list[Position]:
        rows = self.rows
        out = [Position(rows[0] + 1 if rows else 1, 1)]
        for y in range(2, len(rows) + 1):
            if rows[y - 1] < rows[y - 2]:
                out.append(Position(rows[y - 1] + 1, y))
        if rows:
            out.append(Position(1, len(rows) + 1))
        return out

    def add_cell(self, pos: Position) -> "YoungDiagram":
        x, y = pos
        if y == len(self.rows) + 1:
            if x != 1:
                raise ValueError(f"cell {pos!r} is not addable")
            return YoungDiagram(self.rows + (1,))
        if not (1 <= y <= len(self.rows)) or x != self.rows[y - 1] + 1:
            raise ValueError(f"cell {pos!r} is not addable")
        if y >= 2 and self.rows[y - 2] < x:
            raise ValueError(f"cell {pos!r} is not addable")
        rows = list(self.rows)
        rows[y - 1] += 1
        return YoungDiagram(tuple(rows))

    def is_rectangle(self) -> bool:
        return len(set(self.rows)) <= 1

    def is_square(self) -> bool:
        return self.is_rectangle() and (not self.rows or self.rows[0] == len(self.rows))


@dataclass(frozen=True)
class StandardTableau:
    """A filled diagram.  Construction checks only that the grid is a diagram
    of positive integers; standardness (distinct 1..n, increasing rows and
    columns) is the business of validate(), which reports instead of raising
    so that defective fillings can be described.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        for row in rows:
            if not row:
                raise ValueError("empty rows are not allowed")
            for v in row:
                if v <= 0:
                    raise ValueError("entries must be positive integers")
        for a, b in zip(rows, rows[1:]):
            if len(a) < len(b):
                raise ValueError("row lengths must be weakly decreasing")

    @cached_property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry_at(self, pos: Position) -> int:
        x, y = pos
        if not (1 <= y <= len(self.rows) and 1 <= x <= len(self.rows[y - 1])):
            raise ValueError(f"position {pos!r} outside the diagram")
        return self.rows[y - 1][x - 1]

    @cached_property
    def _inverse(self) -> dict[int, Position]:
        inv = {}
        for y, row in enumerate(self.rows, start=1):
            for x, v in enumerate(row, start=1):
                inv[v] = Position(x, y)
        return inv

    def position_of(self, k: int) -> Position:
        try:
            return self._inverse[k]
        except KeyError:
            raise ValueError(f"entry {k} not present") from None

    def u_of(self, k: int) -> int:
        return self.position_of(k).u

    @property
    def max_entry(self) -> int:
        return max(v for row in self.rows for v in row)

    def to_text(self) -> str:
        lines = [" ".join(str(len(r)) for r in self.rows)]
        for row in self.rows:
            lines.append(" ".join(str(v) for v in row))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "StandardTableau":
        lines = text.splitlines()
        if not lines:
            raise ValueError("empty tableau text")
        header = lines[0].split()
        try:
            lengths = [int(tok) for tok in header]
        except ValueError:
            raise ValueError(f"bad shape line: {lines[0]!r}") from None
        if not lengths:
            return StandardTableau(())
        body = [ln for ln in lines[1:] if ln.strip()]
        if len(body) != len(lengths):
            raise ValueError(f"expected {len(lengths)} rows, got {len(body)}")
        rows = []
        for i, (ln, want) in enumerate(zip(body, lengths), start=1):
            try:
                row = tuple(int(tok) for tok in ln.split())
            except ValueError:
                raise ValueError(f"bad entry in row {i}: {ln!r}") from None
            if len(row) != want:
                raise ValueError(f"row {i} has {len(row)} entries, shape says {want}")
            rows.append(row)
        return StandardTableau(tuple(rows))


def validate(t: StandardTableau) -> str | None:
    """None if t is a standard tableau, else a description naming the first
    offending cell (scanning rows bottom to top, left to right)."""
    n = t.size
    seen: dict[int, Position] = {}
    for y, row in enumerate(t.rows, start=1):
        for x, v in enumerate(row, start=1):
            if v in seen:
                return f"duplicate entry {v} at ({x},{y})"
            seen[v] = Position(x, y)
            if v > n:
                return f"entry {v} at ({x},{y}) outside 1..{n}"
    for y, row in enumerate(t.rows, start=1):
        for x, v in enumerate(row, start=1):
            if x < len(row) and row[x] <= v:
                return f"row violation at ({x},{y}): {v} >= {row[x]} to its right"
            if y <= len(t.rows) - 1 and x <= len(t.rows[y]) and t.rows[y][x - 1] <= v:
                return f"column violation at ({x},{y}): {v} >= {t.rows[y][x - 1]} above it"
    return None


def transpose(t: StandardTableau) -> StandardTableau:
    """Reflect across the main diagonal; u-coordinates negate."""
    if t.size == 0:
        return t
    conj = t.shape.conjugate()
    grid = [[0] * l for l in conj.rows]
    for y0, row in enumerate(t.rows):
        for x0, v in enumerate(row):
            grid[x0][y0] = v
    return StandardTableau(tuple(tuple(r) for r in grid))


def rotate_complement(t: StandardTableau) -> StandardTableau:
    """180-degree rotation with entry complementation, rectangles only."""
    if not t.shape.is_rectangle():
        raise ValueError("rotate_complement requires a rectangular shape")
    if t.size == 0:
        return t
    b = len(t.rows)
    a = len(t.rows[0])
    n = a * b
    grid = [[0] * a for _ in range(b)]
    for y0, row in enumerate(t.rows):
        for x0, v in enumerate(row):
            grid[b - 1 - y0][a - 1 - x0] = n + 1 - v
    return StandardTableau(tuple(tuple(r) for r in grid))


def renumber(t: StandardTableau) -> StandardTableau:
    """Relabel entries to 1..n preserving their order."""
    order = sorted(v for row in t.rows for v in row)
    rank = {v: i for i, v in enumerate(order, start=1)}
    return StandardTableau(tuple(tuple(rank[v] for v in row) for row in t.rows))


def hook_dimension(shape: YoungDiagram) -> int:
    """Number of standard tableaux of the shape, by the hook length formula.
    Exact big-integer arithmetic; guarded because the factorial grows fast."""
    n = shape.size
    if n > MAX_HOOK_SIZE:
        raise ValueError(f"hook_dimension limited to |shape| <= {MAX_HOOK_SIZE}")
    if n == 0:
        return 1
    cols = shape.conjugate().rows
    prod = 1
    for y, r in enumerate(shape.rows, start=1):
        for x in range(1, r + 1):
            prod *= (r - x) + (cols[x - 1] - y) + 1
    return factorial(n) // prod


def enumerate_syt(shape: YoungDiagram) -> list[StandardTableau]:
    """All standard tableaux of the shape, by placing n..1 at removable
    corners.  Deliberately independent of the hook length formula so the two
    can check each other."""
    n = shape.size
    if n > MAX_ENUMERATION_SIZE:
        raise ValueError(f"enumerate_syt limited to |shape| <= {MAX_ENUMERATION_SIZE}")
    if n == 0:
        return [StandardTableau(())]
    lengths = list(shape.rows)
    grid = [[0] * r for r in shape.rows]
    out: list[StandardTableau] = []

    def place(k: int) -> None:
        if k == 0:
            out.append(StandardTableau(tuple(tuple(row) for row in grid)))
            return
        for y in range(len(lengths)):
            l = lengths[y]
            if l == 0:
                break
            nxt = lengths[y + 1] if y + 1 < len(lengths) else 0
            if l > nxt:
                lengths[y] = l - 1
                grid[y][l - 1] = k
                place(k - 1)
                lengths[y] = l

    place(n)
    return out


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing positive tuples summing to n (n=0 gives the empty one)."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest
