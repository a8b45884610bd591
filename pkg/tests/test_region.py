import pytest
from hypothesis import given, strategies as st

from tilingparity.errors import InvalidArgumentError, RegionParseError
from tilingparity.region import (
    SYMMETRIES,
    Domino,
    Region,
    d_region,
    dual_adjacency,
    dual_edges,
    emit_region,
    forced_domino,
    half_region,
    half_region_odd,
    half_region_pruned,
    holey_square,
    holey_square_odd,
    is_connected,
    is_tiling_of,
    map_cell,
    parse_region,
    rectangle,
    remove_cells,
    t_region,
    transform,
)


def rows(region):
    """Row widths listed from the top row down."""
    _, y0, _, y1 = region.bbox()
    return [sum(1 for _, y in region.cells if y == row) for row in range(y1, y0 - 1, -1)]


def test_rectangle_shape():
    r = rectangle(2, 3)
    assert len(r) == 6
    assert (r.height, r.width) == (2, 3)
    with pytest.raises(InvalidArgumentError):
        rectangle(0, 3)


def test_holey_square_sizes():
    assert len(holey_square(2, 5)) == 100 - 16
    assert len(holey_square(0, 3)) == 36
    assert len(holey_square_odd(1, 3)) == 49 - 9
    with pytest.raises(InvalidArgumentError):
        holey_square(3, 3)


@pytest.mark.parametrize("m,n", [(0, 2), (1, 3), (2, 5)])
def test_holey_square_symmetric(m, n):
    region = holey_square(m, n)
    for g in range(len(SYMMETRIES)):
        assert transform(region, g) == region


def _partition(whole, lower):
    cx = cy = max(x for x, _ in whole.cells)
    upper = {(cx - x, cy - y) for x, y in lower.cells}
    return not upper & lower.cells and upper | lower.cells == whole.cells


@pytest.mark.parametrize("n", range(1, 6))
def test_half_regions_partition_even_square(n):
    for m in range(n):
        half = half_region(m, n)
        assert len(half) * 2 == len(holey_square(m, n))
        assert _partition(holey_square(m, n), half)


@pytest.mark.parametrize("n", range(1, 5))
def test_half_regions_partition_odd_square(n):
    for m in range(n):
        whole = holey_square_odd(m, n)
        half = half_region_odd(m, n)
        assert len(half) * 2 == len(whole)
        assert _partition(whole, half)


def test_half_region_counts():
    assert len(half_region(2, 5)) == 42
    assert len(half_region(1, 2)) == 6
    assert len(half_region_pruned(2, 5)) == 40


def test_forced_domino_is_a_domino():
    a, b = forced_domino(half_region(2, 5))
    Domino.of(a, b)


def test_t_and_d_row_widths():
    assert rows(t_region(2, 5, 4)) == [5, 7, 9, 11, 11]
    assert rows(d_region(2, 5, 4)) == [5, 7, 9, 11, 11, 9, 7, 5]
    assert len(t_region(1, 2, 1)) == 2
    assert len(d_region(2, 3, 2)) == 16


@pytest.mark.parametrize("i,j,p", [(1, 3, 2), (2, 5, 4), (3, 2, 3)])
def test_d_region_is_mirror_symmetric(i, j, p):
    region = d_region(i, j, p)
    assert transform(region, "flip_y") == region
    assert transform(region, "flip_x") == region


def test_symmetry_group_is_closed():
    cell = (2, 5)
    images = {map_cell(g, cell) for g in range(8)}
    assert len(images) == 8
    for g in range(8):
        for h in range(8):
            composed = map_cell(g, map_cell(h, cell))
            assert composed in images


def test_remove_cells_rejects_outside():
    r = rectangle(2, 2)
    assert len(remove_cells(r, [(0, 0)])) == 3
    with pytest.raises(InvalidArgumentError):
        remove_cells(r, [(5, 5)])


def test_connectivity_and_adjacency():
    assert is_connected(holey_square(1, 3))
    assert not is_connected(Region([(0, 0), (2, 0)]))
    assert dual_edges(rectangle(1, 2)) == [((0, 0), (1, 0))]
    adj = dual_adjacency(rectangle(2, 2))
    assert all(len(v) == 2 for v in adj.values())


def test_region_equality_is_translation_invariant():
    a = rectangle(2, 3)
    b = a.translate(4, -7)
    assert a == b
    assert hash(a) == hash(b)
    assert not a.same_cells(b)


def test_domino_requires_adjacency():
    with pytest.raises(InvalidArgumentError):
        Domino.of((0, 0), (1, 1))
    tiling = {Domino.of((0, 0), (1, 0))}
    assert is_tiling_of(tiling, rectangle(1, 2))
    assert not is_tiling_of(tiling, rectangle(2, 2))


def test_parse_examples():
    assert parse_region("##\n##") == rectangle(2, 2)
    assert parse_region("\n#.\n##\n\n") == Region([(0, 0), (1, 0), (0, 1)])
    assert parse_region("") == Region()


def test_parse_errors_carry_position():
    with pytest.raises(RegionParseError) as info:
        parse_region("#x")
    assert (info.value.line, info.value.column) == (1, 2)
    with pytest.raises(RegionParseError):
        parse_region("##\n#")


cells = st.frozensets(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=30)


@given(cells)
def test_emit_parse_round_trip(cs):
    region = Region(cs)
    again = parse_region(emit_region(region))
    assert again == region


@given(cells, st.integers(0, 7))
def test_transform_preserves_size_and_colour_balance(cs, g):
    region = Region(cs)
    image = transform(region, g)
    assert len(image) == len(region)
    assert sorted(image.black_white()) == sorted(region.black_white())
