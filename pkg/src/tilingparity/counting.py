"""Exact domino tiling counts.

``count_tilings`` and ``parity_tilings`` share one broken-profile dynamic
program; ``enumerate_tilings`` and ``count_via_matching`` are small,
independent oracles used to cross-check it.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .errors import ResourceLimitError
from .region import Cell, Domino, Region, components, neighbours

W_MAX = 20
ENUMERATION_GUARD = 28
MATCHING_GUARD = 36


def _balanced(region: Region) -> bool:
    black, white = region.black_white()
    return black == white


def _profile(region: Region, w_max: int | None) -> tuple[set[Cell], int, int]:
    """Re-express a region in a frame whose x axis is the narrow side."""
    if w_max is None:
        w_max = W_MAX
    x0, y0, x1, y1 = region.bbox()
    width, height = x1 - x0 + 1, y1 - y0 + 1
    if width <= height:
        cells = {(x - x0, y - y0) for x, y in region.cells}
    else:
        cells = {(y - y0, x - x0) for x, y in region.cells}
        width, height = height, width
    if width > w_max:
        raise ResourceLimitError(f"profile width {width} exceeds W_MAX={w_max}")
    return cells, width, height


def _sweep(cells: set[Cell], width: int, height: int, mod2: bool):
    # Bit x of a mask marks a cell already covered by a domino reaching into
    # it: in the next row for columns left of the scan position, in the
    # current row from the scan position on.
    if mod2:
        states = {0}
    else:
        states = {0: 1}
    for y in range(height):
        for x in range(width):
            bit = 1 << x
            here = (x, y) in cells
            up = (x, y + 1) in cells
            right = x + 1 < width and (x + 1, y) in cells
            if mod2:
                nxt: set[int] = set()

                def put(mask, nxt=nxt):
                    if mask in nxt:
                        nxt.remove(mask)
                    else:
                        nxt.add(mask)

                for mask in states:
                    if mask & bit:
                        put(mask & ~bit)
                    elif not here:
                        put(mask)
                    else:
                        if up:
                            put(mask | bit)
                        if right and not mask & (bit << 1):
                            put(mask | (bit << 1))
            else:
                nxt = defaultdict(int)
                for mask, ways in states.items():
                    if mask & bit:
                        nxt[mask & ~bit] += ways
                    elif not here:
                        nxt[mask] += ways
                    else:
                        if up:
                            nxt[mask | bit] += ways
                        if right and not mask & (bit << 1):
                            nxt[mask | (bit << 1)] += ways
            states = nxt
            if not states:
                return 0
    if mod2:
        return 1 if 0 in states else 0
    return states.get(0, 0)


def _count_component(region: Region, w_max: int | None, mod2: bool) -> int:
    if len(region) % 2 or not _balanced(region):
        return 0
    cells, width, height = _profile(region, w_max)
    return _sweep(cells, width, height, mod2)


def count_tilings(region: Region, w_max: int | None = None) -> int:
    """Number of domino tilings of ``region`` as an exact integer.

    ``w_max`` bounds the profile width; ``None`` uses the module's ``W_MAX``.
    """
    if len(region) % 2 or not _balanced(region):
        return 0
    total = 1
    for part in components(region):
        total *= _count_component(part, w_max, mod2=False)
        if total == 0:
            return 0
    return total


def parity_tilings(region: Region, w_max: int | None = None) -> int:
    """``count_tilings(region) % 2``, computed over GF(2) throughout."""
    if len(region) % 2 or not _balanced(region):
        return 0
    for part in components(region):
        if not _count_component(part, w_max, mod2=True):
            return 0
    return 1


class TilingList(list):
    """List of tilings; ``truncated`` is set when the cap cut enumeration short."""

    truncated: bool = False


def enumerate_tilings(region: Region, cap: int = 100_000) -> TilingList:
    """All tilings by plain backtracking, at most ``cap`` of them."""
    if len(region) > ENUMERATION_GUARD:
        raise ResourceLimitError(
            f"enumeration limited to {ENUMERATION_GUARD} cells, region has {len(region)}"
        )
    if cap < 1:
        raise ValueError("cap must be positive")
    order = sorted(region.cells, key=lambda c: (c[1], c[0]))
    free = set(region.cells)
    chosen: list[Domino] = []
    out = TilingList()

    def search(start: int) -> bool:
        while start < len(order) and order[start] not in free:
            start += 1
        if start == len(order):
            if len(out) >= cap:
                out.truncated = True
                return False
            out.append(frozenset(chosen))
            return True
        cell = order[start]
        x, y = cell
        free.discard(cell)
        for partner in ((x + 1, y), (x, y + 1)):
            if partner in free:
                free.discard(partner)
                chosen.append(Domino.of(cell, partner))
                keep_going = search(start + 1)
                chosen.pop()
                free.add(partner)
                if not keep_going:
                    free.add(cell)
                    return False
        free.add(cell)
        return True

    search(0)
    return out


def count_via_matching(region: Region) -> int:
    """Perfect matchings of the dual graph, memoized on the uncovered cell set."""
    if len(region) > MATCHING_GUARD:
        raise ResourceLimitError(
            f"matching oracle limited to {MATCHING_GUARD} cells, region has {len(region)}"
        )
    if len(region) % 2:
        return 0
    adjacency = {c: frozenset(neighbours(region, c)) for c in region.cells}

    @lru_cache(maxsize=None)
    def matchings(remaining: frozenset) -> int:
        if not remaining:
            return 1
        cell = min(remaining)
        rest = remaining - {cell}
        return sum(matchings(rest - {nb}) for nb in adjacency[cell] if nb in rest)

    return matchings(frozenset(region.cells))
