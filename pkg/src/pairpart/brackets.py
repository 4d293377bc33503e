"""Bracket calculus.

A bracket is a neutral pair partition that is projective (self-adjoint and
idempotent) and whose lower row is a sector, i.e. its two lower corner points
form a block.  ``arg`` strips the outer points and ``br`` puts them back, so
a bracket is determined by its start color and its argument.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    BLACK,
    Color,
    Partition,
    PartitionError,
    PointId,
    Row,
    L,
    U,
    color_sum,
    normalized_color,
)
from .ops import (
    compose,
    compose_chain,
    composable,
    erase,
    involution,
    rotate_cyclic,
    tensor,
    tensor_all,
    verticolor_reflect,
)
from .structure import (
    Sector,
    crosses,
    is_connected,
    is_pair_neutral,
    lower_sector,
    turn_blocks,
    turns,
)


def id_partition(cs) -> Partition:
    """Through strings ``Li-Ui`` over the color sequence ``cs``."""
    cs = tuple(cs)
    return Partition(cs, cs, [(L(i), U(i)) for i in range(1, len(cs) + 1)])


def is_projective(p: Partition) -> bool:
    return (p == involution(p) and composable(p, p)
            and compose(p, p).result == p)


def is_bracket(p: Partition) -> bool:
    n = len(p.lower)
    return (n >= 2 and is_pair_neutral(p)
            and (L(1), L(n)) in p.blocks and is_projective(p))


def _require_bracket(p: Partition) -> None:
    if not is_bracket(p):
        raise PartitionError(f"not a bracket: {p}")


def start_color(p: Partition) -> Color:
    _require_bracket(p)
    return p.lower[0]


def arg(p: Partition) -> Partition:
    """Erase the leftmost and rightmost point of both rows."""
    _require_bracket(p)
    n = len(p.lower)
    return erase(p, [L(1), L(n), U(1), U(n)])


def br(c: Color, a: Partition) -> Partition:
    """The bracket ``Br(c | a | c̄)``."""
    if not is_pair_neutral(a) or not is_projective(a):
        raise PartitionError(f"bracket argument must be a projective neutral pair partition: {a}")
    n = len(a.lower) + 2
    row = (c,) + a.lower + (c.inverse,)
    blocks = [(L(1), L(n)), (U(1), U(n))]
    blocks += [[PointId(pt.row, pt.index + 1) for pt in b] for b in a.blocks]
    return Partition(row, row, blocks)


def bracket_product(p: Partition, q: Partition) -> Partition:
    c = start_color(p)
    if start_color(q) is not c:
        raise PartitionError("bracket product needs brackets with the same start color")
    return br(c, tensor(arg(p), arg(q)))


def weak_inversion(p: Partition) -> Partition:
    return br(start_color(p).inverse, p)


def strong_inversion(p: Partition) -> Partition:
    c = start_color(p)
    inner = tensor_all([id_partition([c]), arg(p), id_partition([c.inverse])])
    return br(c.inverse, inner)


def is_verticolor_reflexive(p: Partition) -> bool:
    return verticolor_reflect(p) == p


def _middle_turn(p: Partition):
    n = len(p.lower)
    if n < 4 or n % 2:
        return None
    pts = (L(n // 2), L(n // 2 + 1))
    return pts if color_sum(p, pts) == 0 else None


def is_dualizable(p: Partition) -> bool:
    """Verticolor-reflexive, and the two middle lower points form a turn
    whose two turn blocks both cross the lower boundary block.

    A middle turn that is itself a block has no turn blocks and does not
    qualify.
    """
    _require_bracket(p)
    if not is_verticolor_reflexive(p):
        return False
    t = _middle_turn(p)
    if t is None:
        return False
    tb = turn_blocks(p, t)
    boundary = (L(1), L(len(p.lower)))
    return len(tb) == 2 and all(crosses(p, b, boundary) for b in tb)


def dual(p: Partition) -> Partition:
    if not is_dualizable(p):
        raise PartitionError(f"not a dualizable bracket: {p}")
    return rotate_cyclic(p, "left", len(p.lower) // 2)


class ResidualKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    NONE = "none"


def residual_kind(p: Partition) -> ResidualKind:
    _require_bracket(p)
    if not is_connected(p):
        return ResidualKind.NONE
    inner = turns(p, within=lower_sector(p).interior)
    if not inner:
        return ResidualKind.FIRST
    if len(inner) == 1 and is_dualizable(p):
        return ResidualKind.SECOND
    return ResidualKind.NONE


@dataclass(frozen=True)
class BracketInfo:
    partition: Partition
    lower_sector: Sector
    argument: Partition
    start_color: Color
    weight: int


def bracket_info(p: Partition) -> BracketInfo:
    _require_bracket(p)
    S = lower_sector(p)
    return BracketInfo(p, S, arg(p), p.lower[0], color_sum(p, S.points))


# -- sector equivalence and associated brackets ------------------------------

def _sector_signature(p: Partition, S: Sector):
    if S.host != p:
        S = Sector(p, S.points)
    pts = S.points
    if len(pts) < 2 or (tuple(sorted(S.boundary))) not in p.blocks:
        raise PartitionError("not a sector of the partition")
    pos = {pt: i for i, pt in enumerate(pts)}
    colors = tuple(normalized_color(p, pt) for pt in pts)
    boundary = tuple(sorted(S.boundary))
    crossing, pairs = [], set()
    for i, pt in enumerate(S.interior, 1):
        block = p.block_of(pt)
        crossing.append(crosses(p, block, boundary))
        for other in block:
            j = pos.get(other)
            if other != pt and j is not None and 0 < j < len(pts) - 1:
                pairs.add((min(i, j), max(i, j)))
    return len(pts), colors, tuple(crossing), frozenset(pairs)


def restriction_equivalent(p: Partition, S: Sector, q: Partition, S2: Sector) -> bool:
    return _sector_signature(p, S) == _sector_signature(q, S2)


def associated_bracket(p: Partition, S: Sector) -> Partition:
    """The bracket whose lower row restricts like ``p`` on ``S``.

    Both rows carry the normalized colors of ``S``.  Interior pairs of ``S``
    are copied onto each row and points paired outside ``S`` become
    through strings.
    """
    if not is_pair_neutral(p):
        raise PartitionError(f"not a neutral pair partition: {p}")
    pts = S.points
    if len(pts) < 2 or tuple(sorted(S.boundary)) not in p.blocks:
        raise PartitionError("not a sector of the partition")
    m = len(pts)
    row = tuple(normalized_color(p, pt) for pt in pts)
    pos = {pt: i for i, pt in enumerate(pts, 1)}
    blocks = [(L(1), L(m)), (U(1), U(m))]
    for i in range(2, m):
        (mate,) = [x for x in p.block_of(pts[i - 1]) if x != pts[i - 1]]
        j = pos.get(mate)
        if j is None:
            blocks.append((L(i), U(i)))
        elif i < j:
            blocks.append((L(i), L(j)))
            blocks.append((U(i), U(j)))
    return Partition(row, row, blocks)


# -- named generator families ------------------------------------------------

def _colors_of(c: Color, k: int) -> list[Color]:
    return [c] * k


def gen_S_w(w: int, c: Color = BLACK) -> Partition:
    """``Br(c | Id(c̄^w) | c̄)``: black corner, ``w`` white strings for c = black."""
    if w < 1:
        raise PartitionError("gen_S_w needs w >= 1")
    return br(c, id_partition(_colors_of(c.inverse, w)))


def gen_S0(v: int, c: Color = BLACK) -> Partition:
    """``Br(c | Id(c^v c̄^v) | c̄)``."""
    if v < 1:
        raise PartitionError("gen_S0 needs v >= 1")
    return br(c, id_partition(_colors_of(c, v) + _colors_of(c.inverse, v)))


def q_family(c: Color, v_prime: int, v: int) -> Partition:
    """``Id(c^(v-v')) ⊗ gen_S0(v', c) ⊗ Id(c̄^(v-v'))``."""
    if not 1 <= v_prime < v:
        raise PartitionError("q_family needs 1 <= v' < v")
    d = v - v_prime
    return tensor_all([id_partition(_colors_of(c, d)), gen_S0(v_prime, c),
                       id_partition(_colors_of(c.inverse, d))])


def dual_identity_chain(c: Color, v: int) -> Partition:
    """``gen_S0(v, c) · q(c, v-1) · ... · q(c, 1)``, bottom to top."""
    layers = [gen_S0(v, c)] + [q_family(c, vp, v) for vp in range(v - 1, 0, -1)]
    return compose_chain(layers).result
