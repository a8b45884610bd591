"""Domino tiling counts and a mod-2 corner reduction calculus for grid regions."""

from .corners import (
    CornerFrame,
    StCorner,
    Strip,
    extract_strip,
    find_corners,
    is_complete_up_to,
    is_walled_at,
    max_complete,
)
from .counting import count_tilings, count_via_matching, enumerate_tilings, parity_tilings
from .errors import (
    InvalidArgumentError,
    NotApplicableError,
    PreconditionError,
    RegionParseError,
    ResourceLimitError,
    TilingError,
)
from .reduce import (
    even_by_double_wall,
    parse_trace,
    reduce_open,
    reduce_to_trace,
    reduce_wall,
    verify_trace,
)
from .region import (
    Domino,
    Region,
    d_region,
    emit_region,
    half_region,
    half_region_odd,
    half_region_odd_pruned,
    half_region_pruned,
    holey_square,
    holey_square_odd,
    parse_region,
    rectangle,
    t_region,
    transform,
)

__all__ = [name for name in dir() if not name.startswith("_")]
