"""Two-colored pair partitions with neutral blocks."""

from .brackets import (
    BracketInfo,
    ResidualKind,
    arg,
    associated_bracket,
    br,
    bracket_info,
    bracket_product,
    dual,
    gen_S0,
    gen_S_w,
    id_partition,
    is_bracket,
    is_dualizable,
    is_projective,
    residual_kind,
    start_color,
    strong_inversion,
    weak_inversion,
)
from .core import (
    BLACK,
    EMPTY,
    WHITE,
    Color,
    ParseError,
    Partition,
    PartitionError,
    PointId,
    Row,
    L,
    U,
    canonicalize,
    color_sum,
    cyclic_sequence,
    normalized_color,
    parse,
    render,
)
from .ops import (
    CompositionResult,
    RotationDirection,
    compose,
    erase,
    involution,
    rotate,
    rotate_cyclic,
    tensor,
    verticolor_reflect,
)
from .structure import (
    Sector,
    Turn,
    connected_components,
    crosses,
    is_connected,
    is_noncrossing,
    is_pair_neutral,
    sector,
    sectors,
    turn_blocks,
    turns,
)
from .sw import bracket_weight, in_S_w, sector_gcd, sector_sums

__version__ = "0.1.0"
