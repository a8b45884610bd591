"""Corners, strips, walls and k-completeness.

Every corner is described in a canonical frame: local cell ``(u, v)`` maps to
``apex + g(u, v)`` for one of the eight square symmetries ``g``.  In that
frame the s-leg runs along +u with the outside below it and the t-leg runs
along +v with the outside to its left.

For ``p = 1`` the apex is the corner cell itself.  For ``p >= 2`` the
staircase occupies the local cells ``(p-1-r, r)`` (outer) and ``(p-r, r)``
(inner); the s-leg starts at ``(p-1, 0)``, the t-leg at ``(0, p-1)``, and the
apex ``(0, 0)`` is the vacant cell the staircase wraps around.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidArgumentError, NotApplicableError
from .region import SYMMETRIES, Cell, Region, apply_offset


def _swap_index(orientation: int) -> int:
    a, b, c, d = SYMMETRIES[orientation]
    return SYMMETRIES.index((b, a, d, c))


@dataclass(frozen=True, order=True)
class CornerFrame:
    apex: Cell
    orientation: int

    def to_global(self, u: int, v: int) -> Cell:
        dx, dy = apply_offset(self.orientation, u, v)
        return self.apex[0] + dx, self.apex[1] + dy

    @property
    def s_direction(self) -> Cell:
        return apply_offset(self.orientation, 1, 0)

    @property
    def t_direction(self) -> Cell:
        return apply_offset(self.orientation, 0, 1)

    def swapped(self) -> CornerFrame:
        return CornerFrame(self.apex, _swap_index(self.orientation))

    def shifted(self, du: int, dv: int) -> CornerFrame:
        return CornerFrame(self.to_global(du, dv), self.orientation)


@dataclass(frozen=True)
class StCorner:
    s: int
    t: int
    p: int
    frame: CornerFrame

    @property
    def apex(self) -> Cell:
        return self.frame.apex

    @property
    def orientation(self) -> int:
        return self.frame.orientation

    def swapped(self) -> StCorner:
        """The same corner with the roles of the two legs exchanged."""
        return StCorner(self.t, self.s, self.p, self.frame.swapped())

    def sort_key(self):
        return (self.apex, self.orientation)

    def geometric_key(self):
        """Identifies the corner independently of which leg is called s."""
        legs = frozenset(
            {(self.frame.s_direction, self.s), (self.frame.t_direction, self.t)}
        )
        return self.apex, self.p, legs

    def __str__(self) -> str:
        return f"({{{self.s},{self.t}}};{self.p})-corner at {self.apex} orient={self.orientation}"


@dataclass(frozen=True)
class Strip:
    """Width-one strip hugging a corner, listed from the s-end to the t-end."""

    i: int
    j: int
    p: int
    cells: tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)


def strip_local(p: int, i: int, j: int) -> tuple[tuple[int, int], ...]:
    """Local cells of the ({i,j};p)-strip, in path order."""
    if i < 1 or j < 1 or p < 1:
        raise InvalidArgumentError(f"strip ({{{i},{j}}};{p}) needs positive parameters")
    out = [(p - 1 + u, 0) for u in range(i - 1, -1, -1)]
    for r in range(1, p):
        out.append((p - r, r))
        out.append((p - 1 - r, r))
    out.extend((0, p - 1 + v) for v in range(1, j))
    return tuple(out)


def strip_cells(frame: CornerFrame, p: int, i: int, j: int) -> tuple[Cell, ...]:
    return tuple(frame.to_global(u, v) for u, v in strip_local(p, i, j))


def corner_at(region: Region, frame: CornerFrame, p: int) -> StCorner | None:
    """The ({s,t};p)-corner with this frame, if the region has one there."""
    inside = region.cells.__contains__

    def at(u: int, v: int) -> bool:
        return inside(frame.to_global(u, v))

    for r in range(p):
        u = p - 1 - r
        if not at(u, r) or at(u - 1, r) or at(u, r - 1):
            return None
        if r >= 1 and not at(u + 1, r):
            return None
    s = 0
    while at(p - 1 + s, 0) and not at(p - 1 + s, -1):
        s += 1
    t = 0
    while at(0, p - 1 + t) and not at(-1, p - 1 + t):
        t += 1
    if p >= 2 and min(s, t) < 2:
        return None
    return StCorner(s, t, p, frame)


def _staircase_length(region: Region, cell: Cell, orientation: int) -> int:
    """How many outer staircase cells continue up-left from ``cell``."""
    frame = CornerFrame(cell, orientation)
    inside = region.cells.__contains__
    length = 0
    while True:
        r = length
        here = frame.to_global(-r, r)
        if not inside(here) or inside(frame.to_global(-r - 1, r)) or inside(frame.to_global(-r, r - 1)):
            return length
        if r >= 1 and not inside(frame.to_global(1 - r, r)):
            return length
        length += 1


def find_corners(region: Region) -> list[StCorner]:
    """Every maximal ({s,t};p)-corner, once each, ordered by apex then orientation."""
    if not region:
        raise InvalidArgumentError("find_corners needs a nonempty region")
    found: dict = {}
    for cell in region.cells:
        for g in range(8):
            length = _staircase_length(region, cell, g)
            if length == 0:
                continue
            candidates = [corner_at(region, CornerFrame(cell, g), 1)]
            if length >= 2:
                apex = CornerFrame(cell, g).to_global(-(length - 1), 0)
                candidates.append(corner_at(region, CornerFrame(apex, g), length))
            for corner in candidates:
                if corner is None:
                    continue
                key = corner.geometric_key()
                if key not in found or corner.sort_key() < found[key].sort_key():
                    found[key] = corner
    return sorted(found.values(), key=StCorner.sort_key)


def extract_strip(region: Region, corner: StCorner, i: int, j: int) -> Strip:
    if not (1 <= i <= corner.s and 1 <= j <= corner.t):
        raise InvalidArgumentError(
            f"strip legs ({i},{j}) exceed corner legs ({corner.s},{corner.t})"
        )
    return strip_in(region, corner, i, j)


def strip_in(region: Region, corner: StCorner, i: int, j: int) -> Strip:
    """Like ``extract_strip`` but lets the legs overshoot the corner's legs."""
    cells = strip_cells(corner.frame, corner.p, i, j)
    for c in cells:
        if c not in region:
            raise NotApplicableError(f"strip cell {c} is not in the region", cell=c)
    return Strip(i, j, corner.p, cells)


def is_walled_at(region: Region, corner: StCorner, side: str = "s") -> bool:
    """Whether the chosen leg ends in a convex turn at its far end."""
    f, p = corner.frame, corner.p
    if side in ("s", "s-side"):
        return f.to_global(p - 1 + corner.s, 0) not in region
    if side in ("t", "t-side"):
        return f.to_global(0, p - 1 + corner.t) not in region
    raise InvalidArgumentError(f"side must be 's' or 't', got {side!r}")


def examined_is_grid_dual(cells) -> bool:
    """Cell-set regions cannot contain slits, so any examined set qualifies.

    Kept as an explicit check: two coordinate-adjacent cells of the set are
    always dual-adjacent in this model.
    """
    cells = set(cells)
    for x, y in cells:
        for nb in ((x + 1, y), (x, y + 1)):
            if nb in cells and abs(nb[0] - x) + abs(nb[1] - y) != 1:
                return False
    return True


def is_complete_up_to(region: Region, corner: StCorner, k: int) -> bool:
    """Whether the corner is i-complete for every i in 2..k."""
    if k == 1 and corner.p == 1:
        return True
    if not 2 <= k <= min(corner.s, corner.t):
        raise InvalidArgumentError(
            f"k={k} outside 2..{min(corner.s, corner.t)} for {corner}"
        )
    return _complete(region.cells, corner.frame, corner.p, k)


@lru_cache(maxsize=65536)
def _complete(cells: frozenset, frame: CornerFrame, p: int, k: int) -> bool:
    # Callers guarantee the corner exists in ``cells`` with both legs >= k.
    return all(_i_complete(cells, frame, p, i) for i in range(3, k + 1))


def _i_complete(cells: frozenset, frame: CornerFrame, p: int, i: int) -> bool:
    local = strip_local(p, i, i)
    strip = [frame.to_global(u, v) for u, v in local]
    x = frame.to_global(p + i - 2, 1)
    y = frame.to_global(1, p + i - 2)
    examined = set(strip) | {x, y}
    if x in cells or y in cells:
        inner = [frame.to_global(u + 1, v + 1) for u, v in strip_local(p, i - 1, i - 1)]
        if any(c not in cells for c in inner):
            return False
        examined.update(inner)
    if i - 2 >= 2:
        rest = cells.difference(strip)
        inner_corner = corner_at(Region(rest), frame.shifted(1, 1), p)
        if inner_corner is not None and i - 2 <= min(inner_corner.s, inner_corner.t):
            if not _complete(rest, inner_corner.frame, p, i - 2):
                return False
    return examined_is_grid_dual(c for c in examined if c in cells)


def max_complete(region: Region, corner: StCorner) -> int:
    """Largest k for which the corner is complete up to k (1 or 0 if none)."""
    best = 1 if corner.p == 1 else 0
    for k in range(2, min(corner.s, corner.t) + 1):
        if not is_complete_up_to(region, corner, k):
            break
        best = k
    return best
