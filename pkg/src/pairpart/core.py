"""Two-colored partitions: points, colors, the cyclic order and the text format.

A partition has an upper and a lower row of colored points and a set of
blocks covering all points.  Points are addressed positionally as
``(row, index)`` with 1-based indices, so a partition is a plain value.

The text format is ``<upper>/<lower>;<blocks>``, e.g. ``ww/ww;L1U2,L2U1``.
Colors are written ``w`` (white) and ``b`` (black); a block is a run of point
ids ``L<i>`` / ``U<i>``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class PartitionError(ValueError):
    """Domain error: an operation was applied outside its domain."""


class ParseError(PartitionError):
    """Malformed partition text."""


class Color(enum.Enum):
    WHITE = "w"
    BLACK = "b"

    @property
    def inverse(self) -> Color:
        return Color.BLACK if self is Color.WHITE else Color.WHITE

    def __invert__(self) -> Color:
        return self.inverse

    def __repr__(self) -> str:
        return self.value


WHITE = Color.WHITE
BLACK = Color.BLACK


class Row(enum.IntEnum):
    # int values give the canonical point order: lower before upper
    LOWER = 0
    UPPER = 1

    @property
    def letter(self) -> str:
        return "L" if self is Row.LOWER else "U"


class PointId(NamedTuple):
    row: Row
    index: int

    def __str__(self) -> str:
        return f"{self.row.letter}{self.index}"

    def __repr__(self) -> str:
        return str(self)


def L(i: int) -> PointId:
    return PointId(Row.LOWER, i)


def U(i: int) -> PointId:
    return PointId(Row.UPPER, i)


def colors(text: str) -> tuple[Color, ...]:
    """``colors("bww") -> (BLACK, WHITE, WHITE)``."""
    try:
        return tuple(Color(ch) for ch in text)
    except ValueError:
        raise ParseError(f"bad color string {text!r}") from None


def _block_key(block: tuple[PointId, ...]) -> tuple[int, int]:
    first = block[0]
    return (first.index, first.row)


def _normalize_blocks(blocks: Iterable[Iterable[PointId]]) -> tuple[tuple[PointId, ...], ...]:
    out = [tuple(sorted(PointId(Row(pt[0]), int(pt[1])) for pt in b)) for b in blocks]
    out.sort(key=_block_key)
    return tuple(out)


@dataclass(frozen=True, eq=True)
class Partition:
    """An immutable two-colored partition in canonical form.

    Blocks are stored sorted: points inside a block lower-row first, then by
    index; blocks ordered by their first point, compared by (index, row).
    Construction validates that the blocks cover every point exactly once.
    """

    upper: tuple[Color, ...]
    lower: tuple[Color, ...]
    blocks: tuple[tuple[PointId, ...], ...]

    def __init__(self, upper: Sequence[Color] | str, lower: Sequence[Color] | str,
                 blocks: Iterable[Iterable[PointId]] = ()):
        up = colors(upper) if isinstance(upper, str) else tuple(upper)
        lo = colors(lower) if isinstance(lower, str) else tuple(lower)
        bl = _normalize_blocks(blocks)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "blocks", bl)
        self._check()

    def _check(self) -> None:
        seen: set[PointId] = set()
        for block in self.blocks:
            if not block:
                raise PartitionError("empty block")
            for pt in block:
                if not 1 <= pt.index <= self.row_length(pt.row):
                    raise PartitionError(f"point {pt} out of range")
                if pt in seen:
                    raise PartitionError(f"point {pt} covered twice")
                seen.add(pt)
        missing = [pt for pt in self.points() if pt not in seen]
        if missing:
            raise PartitionError("uncovered points: " + ", ".join(map(str, missing)))

    # -- basic accessors -------------------------------------------------

    def row_length(self, row: Row) -> int:
        return len(self.lower) if row is Row.LOWER else len(self.upper)

    def __len__(self) -> int:
        return len(self.upper) + len(self.lower)

    @property
    def size(self) -> int:
        return len(self)

    def points(self) -> list[PointId]:
        return [L(i) for i in range(1, len(self.lower) + 1)] + \
               [U(i) for i in range(1, len(self.upper) + 1)]

    def color(self, pt: PointId) -> Color:
        self.check_point(pt)
        row = self.lower if pt.row is Row.LOWER else self.upper
        return row[pt.index - 1]

    def check_point(self, pt: PointId) -> None:
        if not 1 <= pt.index <= self.row_length(pt.row):
            raise PartitionError(f"point {pt} is not a point of {self}")

    def block_of(self, pt: PointId) -> tuple[PointId, ...]:
        for block in self.blocks:
            if pt in block:
                return block
        raise PartitionError(f"point {pt} is not a point of {self}")

    def block_map(self) -> dict[PointId, tuple[PointId, ...]]:
        return {pt: block for block in self.blocks for pt in block}

    @property
    def is_pair(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Partition({render(self)!r})"


EMPTY = Partition((), (), ())


# -- text format -----------------------------------------------------------

_POINT_RE = re.compile(r"([LU])(\d+)")


def _parse_block(token: str) -> list[PointId]:
    pts = []
    pos = 0
    while pos < len(token):
        m = _POINT_RE.match(token, pos)
        if not m or m.group(2).startswith("0"):
            raise ParseError(f"malformed block token {token!r}")
        row = Row.LOWER if m.group(1) == "L" else Row.UPPER
        pts.append(PointId(row, int(m.group(2))))
        pos = m.end()
    if not pts:
        raise ParseError(f"empty block token {token!r}")
    return pts


def parse_points(text: str) -> list[PointId]:
    """Points written like ``L1,U2`` or ``L1U2`` (separators optional)."""
    return _parse_block(text.replace(",", "").replace(" ", ""))


def parse(text: str) -> Partition:
    """Parse ``<upper>/<lower>;<blocks>`` into a canonical :class:`Partition`."""
    text = text.strip()
    head, sep, tail = text.partition(";")
    if not sep:
        raise ParseError(f"missing ';' in {text!r}")
    up, slash, lo = head.partition("/")
    if not slash or "/" in lo:
        raise ParseError(f"expected exactly one '/' in {head!r}")
    upper, lower = colors(up), colors(lo)
    tokens = tail.split(",") if tail else []
    blocks = []
    seen: dict[PointId, str] = {}
    for token in tokens:
        block = _parse_block(token)
        for pt in block:
            length = len(lower) if pt.row is Row.LOWER else len(upper)
            if pt.index > length:
                raise ParseError(f"point {pt} in block {token!r} is out of range")
            if pt in seen:
                raise ParseError(f"point {pt} in block {token!r} already covered by {seen[pt]!r}")
            seen[pt] = token
        blocks.append(block)
    try:
        return Partition(upper, lower, blocks)
    except ParseError:
        raise
    except PartitionError as exc:
        raise ParseError(str(exc)) from None


def render(p: Partition) -> str:
    row = lambda cs: "".join(c.value for c in cs)
    blocks = ",".join("".join(map(str, b)) for b in p.blocks)
    return f"{row(p.upper)}/{row(p.lower)};{blocks}"


def canonicalize(p: Partition) -> Partition:
    """Canonical form of ``p``.

    Partitions are normalized on construction, so this rebuilds the value
    from its blocks; ``render(canonicalize(p))`` is the equality key.
    """
    return Partition(p.upper, p.lower, p.blocks)


# -- cyclic order ----------------------------------------------------------

def cyclic_sequence(p: Partition) -> list[PointId]:
    """Lower row left to right, then upper row right to left."""
    return [L(i) for i in range(1, len(p.lower) + 1)] + \
           [U(i) for i in range(len(p.upper), 0, -1)]


def cyclic_position(p: Partition, pt: PointId) -> int:
    p.check_point(pt)
    if pt.row is Row.LOWER:
        return pt.index - 1
    return len(p.lower) + len(p.upper) - pt.index


def normalized_color(p: Partition, pt: PointId) -> Color:
    c = p.color(pt)
    return c if pt.row is Row.LOWER else c.inverse


def color_sum(p: Partition, points: Iterable[PointId]) -> int:
    """Normalized black points minus normalized white points."""
    total = 0
    for pt in points:
        total += 1 if normalized_color(p, pt) is BLACK else -1
    return total


class IntervalKind(enum.Enum):
    CLOSED = "closed"              # [a, b]
    HALF_OPEN_LEFT = "half-open-left"    # ]a, b]
    HALF_OPEN_RIGHT = "half-open-right"  # [a, b[
    OPEN = "open"                  # ]a, b[


def interval(p: Partition, a: PointId, b: PointId,
             kind: IntervalKind | str = IntervalKind.CLOSED) -> list[PointId]:
    """Points met walking the cyclic order from ``a`` to ``b``.

    ``[a, a]`` is ``{a}``; an interval that starts open at ``a`` and ends at
    ``a`` walks one full loop, so ``]a, a]`` is every point of ``p``.
    The result is returned in cyclic order.
    """
    kind = IntervalKind(kind)
    seq = cyclic_sequence(p)
    n = len(seq)
    i, j = cyclic_position(p, a), cyclic_position(p, b)
    if i == j:
        if kind is IntervalKind.CLOSED:
            return [a]
        walk = [seq[(i + t) % n] for t in range(n + 1)]
    else:
        walk = [seq[(i + t) % n] for t in range((j - i) % n + 1)]
    if kind in (IntervalKind.HALF_OPEN_LEFT, IntervalKind.OPEN):
        walk = walk[1:]
    if kind in (IntervalKind.HALF_OPEN_RIGHT, IntervalKind.OPEN):
        walk = walk[:-1]
    return walk


def reframe(p: Partition, start: int, lower_length: int) -> Partition:
    """The rotation of ``p`` whose cyclic sequence begins at position ``start``
    of ``p``'s and whose lower row holds the first ``lower_length`` points.

    Normalized colors and the cyclic order are preserved, so the result is
    obtained from ``p`` by rotations.
    """
    seq = cyclic_sequence(p)
    n = len(seq)
    if not 0 <= lower_length <= n:
        raise PartitionError(f"lower length {lower_length} out of range for {n} points")
    if n == 0:
        return p
    order = [seq[(start + t) % n] for t in range(n)]
    upper_length = n - lower_length
    new_id: dict[PointId, PointId] = {}
    lower: list[Color] = []
    upper: list[Color | None] = [None] * upper_length
    for t, pt in enumerate(order):
        nc = normalized_color(p, pt)
        if t < lower_length:
            new_id[pt] = L(t + 1)
            lower.append(nc)
        else:
            idx = n - t
            new_id[pt] = U(idx)
            upper[idx - 1] = nc.inverse
    blocks = [[new_id[pt] for pt in b] for b in p.blocks]
    return Partition(upper, lower, blocks)
