import random

import pytest

from tilingparity.corners import (
    CornerFrame,
    corner_at,
    extract_strip,
    find_corners,
    is_complete_up_to,
    is_walled_at,
    max_complete,
    strip_cells,
    strip_in,
)
from tilingparity.errors import InvalidArgumentError, NotApplicableError
from tilingparity.region import (
    Region,
    half_region_pruned,
    is_connected,
    rectangle,
    t_region,
    transform,
)


def at_origin(region):
    return next(c for c in find_corners(region) if c.apex == (0, 0))


def test_rectangle_has_four_corners():
    corners = find_corners(rectangle(3, 5))
    assert len(corners) == 4
    assert all({c.s, c.t} == {3, 5} and c.p == 1 for c in corners)
    for c in corners:
        assert max_complete(rectangle(3, 5), c) == 3
        assert is_walled_at(rectangle(3, 5), c, "s")
        assert is_walled_at(rectangle(3, 5), c, "t")


def test_single_cell_corners():
    corners = find_corners(Region([(0, 0)]))
    assert len(corners) == 4
    assert all((c.s, c.t, c.p) == (1, 1, 1) for c in corners)


def test_empty_region_has_no_corners():
    with pytest.raises(InvalidArgumentError):
        find_corners(Region())


def test_staircase_corner_in_t_region():
    region = t_region(2, 5, 4)
    deep = [c for c in find_corners(region) if c.p == 4]
    assert deep
    strip = extract_strip(region, deep[0], 2, 2)
    assert len(strip.cells) == 2 + 2 + 2 * 4 - 3


def test_l_strip_in_rectangle():
    region = rectangle(4, 5)
    corner = at_origin(region)
    strip = extract_strip(region, corner, 2, 3)
    assert len(strip.cells) == 4
    assert set(strip.cells) <= region.cells


@pytest.mark.parametrize("g", range(8))
def test_detection_is_symmetry_invariant(g):
    region = t_region(2, 4, 3).union(Region([(9, 9)]))
    base = sorted((c.s, c.t, c.p) for c in find_corners(region))
    moved = sorted((c.s, c.t, c.p) for c in find_corners(transform(region, g)))
    assert sorted(map(sorted, [x[:2] for x in base])) == sorted(map(sorted, [x[:2] for x in moved]))
    assert sorted(x[2] for x in base) == sorted(x[2] for x in moved)


def test_strip_lengths_random():
    rng = random.Random(5)
    for _ in range(20):
        p = rng.randint(1, 4)
        i, j = rng.randint(1, 6), rng.randint(1, 6)
        frame = CornerFrame((rng.randint(-5, 5), rng.randint(-5, 5)), rng.randrange(8))
        cells = strip_cells(frame, p, i, j)
        assert len(cells) == i + j + 2 * p - 3
        assert len(set(cells)) == len(cells)
        assert is_connected(Region(cells))


def test_strip_overshoot_names_missing_cell():
    region = rectangle(3, 5)
    corner = at_origin(region)
    with pytest.raises(NotApplicableError) as info:
        strip_in(region, corner, corner.s + 1, 1)
    assert info.value.cell not in region


def test_completeness_is_monotone():
    region = rectangle(5, 6)
    corner = at_origin(region)
    values = [is_complete_up_to(region, corner, k) for k in range(2, 6)]
    assert all(values)
    with pytest.raises(InvalidArgumentError):
        is_complete_up_to(region, corner, 7)


@pytest.mark.parametrize("drop,expected", [((1, 1), False), ((2, 1), False), ((1, 2), False), ((2, 2), True), ((3, 1), True)])
def test_one_examined_cell_breaks_completeness(drop, expected):
    region = rectangle(4, 6).difference([drop])
    corner = corner_at(region, CornerFrame((0, 0), 0), 1)
    assert is_complete_up_to(region, corner, 3) is expected


def test_bare_strip_is_complete():
    ell = Region([(x, 0) for x in range(5)] + [(0, y) for y in range(5)])
    corner = corner_at(ell, CornerFrame((0, 0), 0), 1)
    assert is_complete_up_to(ell, corner, 3)


def test_pruned_half_region_corner():
    region = half_region_pruned(1, 3)
    corner = next(c for c in find_corners(region) if {c.s, c.t} == {4, 5})
    four = "s" if corner.s == 4 else "t"
    assert is_walled_at(region, corner, four)
    assert is_complete_up_to(region, corner, 4)


def test_concave_end_is_not_walled():
    # L shape; the legs of the two inner corners run into the concave turn.
    ell = Region([(x, y) for x in range(4) for y in range(2)] + [(x, y) for x in range(2) for y in range(2, 4)])
    walls = {c.apex: (is_walled_at(ell, c, "s"), is_walled_at(ell, c, "t")) for c in find_corners(ell)}
    assert walls[(0, 0)] == (True, True)
    assert walls[(1, 3)] == (True, False)
    assert walls[(3, 1)] == (False, True)
