"""Finite sets of unit cells on the integer grid and the named region families.

A cell ``(x, y)`` is the unit square ``[x, x+1] x [y, y+1]``.  Regions keep
their actual coordinates so that reductions can refer back to positions in
the starting region, but equality and hashing are translation invariant.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple

from .errors import InvalidArgumentError, RegionParseError

Cell = tuple[int, int]

# (a, b, c, d) acts on offsets as (x, y) -> (a*x + b*y, c*x + d*y).
SYMMETRIES: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (0, -1, 1, 0),
    (-1, 0, 0, -1),
    (0, 1, -1, 0),
    (-1, 0, 0, 1),
    (0, 1, 1, 0),
    (1, 0, 0, -1),
    (0, -1, -1, 0),
)
SYMMETRY_NAMES: tuple[str, ...] = (
    "identity",
    "rotate90",
    "rotate180",
    "rotate270",
    "flip_x",
    "transpose",
    "flip_y",
    "antitranspose",
)

NEIGHBOUR_OFFSETS: tuple[Cell, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


def symmetry_index(symmetry: int | str) -> int:
    if isinstance(symmetry, str):
        try:
            return SYMMETRY_NAMES.index(symmetry)
        except ValueError:
            raise InvalidArgumentError(f"unknown symmetry {symmetry!r}") from None
    if not 0 <= symmetry < 8:
        raise InvalidArgumentError(f"symmetry index {symmetry} not in 0..7")
    return symmetry


def apply_offset(symmetry: int, dx: int, dy: int) -> Cell:
    a, b, c, d = SYMMETRIES[symmetry]
    return a * dx + b * dy, c * dx + d * dy


def map_cell(symmetry: int, cell: Cell) -> Cell:
    """Image of a cell under a symmetry fixing the origin point (0, 0).

    Works on doubled centre coordinates so reflections land on whole cells.
    """
    a, b, c, d = SYMMETRIES[symmetry]
    cx, cy = 2 * cell[0] + 1, 2 * cell[1] + 1
    return (a * cx + b * cy - 1) // 2, (c * cx + d * cy - 1) // 2


class Region:
    """An immutable finite set of cells."""

    __slots__ = ("_cells", "_key")

    def __init__(self, cells: Iterable[Cell] = ()):
        self._cells = frozenset((int(x), int(y)) for x, y in cells)
        self._key: frozenset[Cell] | None = None

    @property
    def cells(self) -> frozenset[Cell]:
        return self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self._cells, key=lambda c: (c[1], c[0])))

    def __contains__(self, cell) -> bool:
        return cell in self._cells

    def __bool__(self) -> bool:
        return bool(self._cells)

    @property
    def cell_count(self) -> int:
        return len(self._cells)

    def bbox(self) -> tuple[int, int, int, int]:
        """``(min_x, min_y, max_x, max_y)``; raises on the empty region."""
        if not self._cells:
            raise InvalidArgumentError("empty region has no bounding box")
        xs = [x for x, _ in self._cells]
        ys = [y for _, y in self._cells]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def width(self) -> int:
        if not self._cells:
            return 0
        x0, _, x1, _ = self.bbox()
        return x1 - x0 + 1

    @property
    def height(self) -> int:
        if not self._cells:
            return 0
        _, y0, _, y1 = self.bbox()
        return y1 - y0 + 1

    def normalized_cells(self) -> frozenset[Cell]:
        if self._key is None:
            if not self._cells:
                self._key = frozenset()
            else:
                x0, y0, _, _ = self.bbox()
                self._key = frozenset((x - x0, y - y0) for x, y in self._cells)
        return self._key

    def normalized(self) -> Region:
        return Region(self.normalized_cells())

    def is_normalized(self) -> bool:
        return not self._cells or self.bbox()[:2] == (0, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return self.normalized_cells() == other.normalized_cells()

    def __hash__(self) -> int:
        return hash(self.normalized_cells())

    def same_cells(self, other: Region) -> bool:
        """Located equality: identical coordinates, not just up to translation."""
        return self._cells == other._cells

    def __repr__(self) -> str:
        return f"Region({len(self._cells)} cells, {self.height}x{self.width})"

    def __str__(self) -> str:
        return emit_region(self)

    def translate(self, dx: int, dy: int) -> Region:
        return Region((x + dx, y + dy) for x, y in self._cells)

    def union(self, other: Region) -> Region:
        return Region(self._cells | other._cells)

    def difference(self, cells: Iterable[Cell]) -> Region:
        return Region(self._cells.difference(cells))

    def black_white(self) -> tuple[int, int]:
        black = sum(1 for x, y in self._cells if (x + y) % 2 == 0)
        return black, len(self._cells) - black


class Domino(NamedTuple):
    a: Cell
    b: Cell

    @classmethod
    def of(cls, a: Cell, b: Cell) -> Domino:
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            raise InvalidArgumentError(f"cells {a} and {b} are not edge-adjacent")
        return cls(*sorted((a, b)))

    @property
    def horizontal(self) -> bool:
        return self.a[1] == self.b[1]


Tiling = frozenset  # of Domino


def is_tiling_of(tiling: Iterable[Domino], region: Region) -> bool:
    covered: set[Cell] = set()
    for dom in tiling:
        if abs(dom.a[0] - dom.b[0]) + abs(dom.a[1] - dom.b[1]) != 1:
            return False
        if dom.a in covered or dom.b in covered:
            return False
        covered.update(dom)
    return covered == region.cells


# -- builders ---------------------------------------------------------------


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidArgumentError(message)


def rectangle(a: int, b: int) -> Region:
    """The ``a``-row by ``b``-column rectangle N(a, b)."""
    _require(a >= 1 and b >= 1, f"rectangle needs positive sides, got {a}x{b}")
    return Region((x, y) for x in range(b) for y in range(a))


def holey_square(m: int, n: int) -> Region:
    """The 2n x 2n square with its centred 2m x 2m block removed."""
    _require(0 <= m < n, f"holey square needs 0 <= m < n, got m={m}, n={n}")
    lo, hi = n - m, n + m
    return Region(
        (x, y)
        for x in range(2 * n)
        for y in range(2 * n)
        if not (lo <= x < hi and lo <= y < hi)
    )


def holey_square_odd(m: int, n: int) -> Region:
    """The (2n+1)-square with its centred (2m+1)-block removed."""
    _require(0 <= m < n, f"odd holey square needs 0 <= m < n, got m={m}, n={n}")
    lo, hi = n - m, n + m
    return Region(
        (x, y)
        for x in range(2 * n + 1)
        for y in range(2 * n + 1)
        if not (lo <= x <= hi and lo <= y <= hi)
    )


def half_region(m: int, n: int) -> Region:
    """Lower half of ``holey_square(m, n)`` under the staircase cut.

    The cut runs in two-unit steps from ``(0, 2n-1)`` down to ``(2n, 1)``.
    Columns ``2t`` and ``2t+1`` keep the cells below height ``2n-2t-1``.
    """
    _require(0 <= m < n, f"half region needs 0 <= m < n, got m={m}, n={n}")
    square = holey_square(m, n)
    return Region(
        (x, y) for x, y in square.cells if y < 2 * n - 2 * (x // 2) - 1
    )


def half_region_odd(m: int, n: int) -> Region:
    """Lower half of ``holey_square_odd(m, n)``.

    Cells strictly below the anti-diagonal ``x + y = 2n`` belong to it, and the
    cells on that diagonal outside the hole alternate between the two halves
    in the order met along the diagonal; odd positions go to the lower half.
    The halves are exchanged by the half-turn about the square's centre.
    """
    _require(0 <= m < n, f"half region needs 0 <= m < n, got m={m}, n={n}")
    square = holey_square_odd(m, n)
    hole_lo, hole_hi = n - m, n + m

    def on_axis_lower(x: int) -> bool:
        position = x if x < hole_lo else x - (2 * m + 1)
        return position % 2 == 1

    cells = []
    for x, y in square.cells:
        if x + y < 2 * n:
            cells.append((x, y))
        elif x + y == 2 * n and not hole_lo <= x <= hole_hi and on_axis_lower(x):
            cells.append((x, y))
    return Region(cells)


def forced_domino(half: Region) -> tuple[Cell, Cell]:
    """The two cells of maximal x among the cells of minimal y."""
    low = min(y for _, y in half.cells)
    row = sorted(x for x, y in half.cells if y == low)
    if len(row) < 2:
        raise InvalidArgumentError("bottom row has fewer than two cells")
    return (row[-2], low), (row[-1], low)


def half_region_pruned(m: int, n: int) -> Region:
    half = half_region(m, n)
    return half.difference(forced_domino(half))


def half_region_odd_pruned(m: int, n: int) -> Region:
    half = half_region_odd(m, n)
    return half.difference(forced_domino(half))


def _centred_rows(widths: list[int]) -> Region:
    """Rows listed top to bottom, each centred on a common vertical axis."""
    widest = max(widths)
    cells = []
    for row, w in enumerate(widths):
        y = len(widths) - 1 - row
        left = (widest - w) // 2
        cells.extend((left + x, y) for x in range(w))
    return Region(cells)


def t_region(i: int, j: int, p: int) -> Region:
    """Rows j, j+2, ..., j+2(p-1) from the top, the widest repeated i times."""
    _require(i >= 1 and j >= 1 and p >= 1, f"T({i},{j},{p}) needs positive arguments")
    widths = [j + 2 * r for r in range(p - 1)] + [j + 2 * (p - 1)] * i
    return _centred_rows(widths)


def d_region(i: int, j: int, p: int) -> Region:
    """T(i, j, p) followed by the shrinking rows j+2(p-2), ..., j."""
    _require(i >= 1 and j >= 1 and p >= 1, f"D({i},{j},{p}) needs positive arguments")
    rising = [j + 2 * r for r in range(p - 1)]
    widths = rising + [j + 2 * (p - 1)] * i + rising[::-1]
    return _centred_rows(widths)


# -- geometry ---------------------------------------------------------------


def transform(region: Region, symmetry: int | str) -> Region:
    """Apply one of the eight square symmetries, then normalize."""
    g = symmetry_index(symmetry)
    return Region(map_cell(g, c) for c in region.cells).normalized()


def remove_cells(region: Region, cells: Iterable[Cell]) -> Region:
    cells = set(cells)
    outside = cells - region.cells
    if outside:
        raise InvalidArgumentError(f"cells not in region: {sorted(outside)}")
    return region.difference(cells)


def neighbours(region: Region, cell: Cell) -> list[Cell]:
    x, y = cell
    return [(x + dx, y + dy) for dx, dy in NEIGHBOUR_OFFSETS if (x + dx, y + dy) in region]


def dual_adjacency(region: Region) -> dict[Cell, set[Cell]]:
    return {c: set(neighbours(region, c)) for c in region.cells}


def dual_edges(region: Region) -> list[tuple[Cell, Cell]]:
    edges = []
    for x, y in region.cells:
        if (x + 1, y) in region:
            edges.append(((x, y), (x + 1, y)))
        if (x, y + 1) in region:
            edges.append(((x, y), (x, y + 1)))
    return sorted(edges)


def components(region: Region) -> list[Region]:
    seen: set[Cell] = set()
    parts = []
    for start in sorted(region.cells):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        part = []
        while queue:
            c = queue.popleft()
            part.append(c)
            for nb in neighbours(region, c):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        parts.append(Region(part))
    return parts


def is_connected(region: Region) -> bool:
    return len(components(region)) <= 1


# -- ASCII format -----------------------------------------------------------


def parse_region(text: str) -> Region:
    """Read the ``#``/``.`` grid format; the top line is the highest row.

    The result is normalized, so blank margins inside the text are dropped.
    """
    lines = [line.rstrip("\r") for line in text.split("\n")]
    numbered = list(enumerate(lines, start=1))
    while numbered and not numbered[0][1].strip():
        numbered.pop(0)
    while numbered and not numbered[-1][1].strip():
        numbered.pop()
    if not numbered:
        return Region()
    width = len(numbered[0][1])
    cells = []
    height = len(numbered)
    for row, (lineno, line) in enumerate(numbered):
        for col, ch in enumerate(line, start=1):
            if ch not in "#.":
                raise RegionParseError(f"unexpected character {ch!r}", lineno, col)
            if ch == "#":
                cells.append((col - 1, height - 1 - row))
        if len(line) != width:
            raise RegionParseError(
                f"ragged row: length {len(line)}, expected {width}",
                lineno,
                min(len(line), width) + 1,
            )
    return Region(cells)


def emit_region(region: Region, marks: dict[Cell, str] | None = None) -> str:
    """Render the bounding box of ``region``; ``marks`` overrides single cells."""
    if not region:
        return ""
    marks = marks or {}
    x0, y0, x1, y1 = region.bbox()
    rows = []
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            if (x, y) in marks:
                row.append(marks[(x, y)])
            else:
                row.append("#" if (x, y) in region else ".")
        rows.append("".join(row))
    return "\n".join(rows)
