"""Seeded random regions for property and soundness checks.

Uniform blobs rarely contain long legs or staircase corners, so half of the
regions are grown from a planted corner of random shape.
"""

from __future__ import annotations

import random

from .corners import CornerFrame, find_corners, strip_cells
from .region import Region, SYMMETRIES, map_cell


def random_blob(rng: random.Random, max_cells: int = 26) -> Region:
    w = rng.randint(2, 6)
    h = rng.randint(2, 6)
    density = rng.uniform(0.55, 0.95)
    cells = [(x, y) for x in range(w) for y in range(h) if rng.random() < density]
    rng.shuffle(cells)
    return Region(cells[:max_cells])


def planted_corner(rng: random.Random, max_cells: int = 26) -> Region:
    p = rng.choice((1, 1, 2, 2, 3))
    s = rng.randint(2, 5)
    t = rng.randint(2, 5)
    frame = CornerFrame((0, 0), 0)
    cells = set(strip_cells(frame, p, s, t))
    # Fill the cone behind the strip, ring by ring, with random dropouts.
    for ring in range(1, 5):
        shifted = frame.shifted(ring, ring)
        legs_s = max(1, s - ring + rng.randint(-1, 1))
        legs_t = max(1, t - ring + rng.randint(-1, 1))
        keep = rng.uniform(0.5, 1.0)
        for c in strip_cells(shifted, p, legs_s, legs_t):
            if rng.random() < keep:
                cells.add(c)
    extras = rng.randint(0, 4)
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    for _ in range(extras):
        cells.add((rng.randint(min(xs), max(xs) + 1), rng.randint(min(ys), max(ys) + 1)))
    ordered = sorted(cells, key=lambda c: c[0] + c[1])
    g = rng.randrange(len(SYMMETRIES))
    return Region(map_cell(g, c) for c in ordered[:max_cells]).normalized()


def random_region(rng: random.Random, max_cells: int = 26) -> Region:
    if rng.random() < 0.5:
        return random_blob(rng, max_cells)
    return planted_corner(rng, max_cells)


def corpus_with_corners(seed: int, count: int, max_cells: int = 26) -> list[Region]:
    """``count`` nonempty regions, each with at least one corner of legs >= 2."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        region = random_region(rng, max_cells)
        if not region:
            continue
        if any(min(c.s, c.t) >= 2 for c in find_corners(region)):
            out.append(region)
    return out
