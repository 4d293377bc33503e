"""Crossings, connected components, sectors and turns."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    Partition,
    PartitionError,
    PointId,
    L,
    color_sum,
    cyclic_position,
    cyclic_sequence,
    interval,
)
from .ops import erase

Block = tuple[PointId, ...]


@dataclass(frozen=True)
class Sector:
    """A cyclic interval of ``host`` whose two endpoints form a block."""

    host: Partition
    points: tuple[PointId, ...]

    @property
    def boundary(self) -> tuple[PointId, PointId]:
        return (self.points[0], self.points[-1])

    @property
    def interior(self) -> tuple[PointId, ...]:
        return self.points[1:-1]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Turn:
    """Two cyclically adjacent points with color sum zero, in cyclic order."""

    host: Partition
    points: tuple[PointId, PointId]


def _check_block(p: Partition, block: Iterable[PointId]) -> Block:
    b = tuple(sorted(block))
    if b not in p.blocks:
        raise PartitionError(f"{','.join(map(str, b))} is not a block of {p}")
    return b


def _crosses_positions(a: Sequence[int], b: Sequence[int]) -> bool:
    # b crosses a iff b has points in at least two of the arcs cut out by a
    a = sorted(a)
    arcs = {bisect_right(a, x) % len(a) for x in b}
    return len(arcs) > 1


def crosses(p: Partition, B: Iterable[PointId], B2: Iterable[PointId]) -> bool:
    b1, b2 = _check_block(p, B), _check_block(p, B2)
    if b1 == b2:
        return False
    pos = lambda b: [cyclic_position(p, pt) for pt in b]
    return _crosses_positions(pos(b1), pos(b2))


def crossing_graph(p: Partition) -> list[set[int]]:
    pos = [[cyclic_position(p, pt) for pt in b] for b in p.blocks]
    adj: list[set[int]] = [set() for _ in p.blocks]
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            if _crosses_positions(pos[i], pos[j]):
                adj[i].add(j)
                adj[j].add(i)
    return adj


def connected_components(p: Partition) -> list[tuple[Block, ...]]:
    """Crossing classes of blocks, ordered by their first block."""
    adj = crossing_graph(p)
    seen: set[int] = set()
    out = []
    for start in range(len(p.blocks)):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in adj[i] - seen:
                seen.add(j)
                stack.append(j)
        out.append(tuple(p.blocks[i] for i in sorted(comp)))
    return out


def is_connected(p: Partition) -> bool:
    # the empty partition has no component and is not connected
    return len(connected_components(p)) == 1


def is_noncrossing(p: Partition) -> bool:
    return not any(crossing_graph(p))


def factor_partition(p: Partition, component: Iterable[Iterable[PointId]]) -> Partition:
    comp = {tuple(sorted(b)) for b in component}
    if tuple(sorted(comp)) not in {tuple(sorted(c)) for c in connected_components(p)}:
        raise PartitionError("not a connected component of the partition")
    keep = {pt for b in comp for pt in b}
    return erase(p, [pt for pt in p.points() if pt not in keep])


def is_pair_neutral(p: Partition) -> bool:
    return all(len(b) == 2 and color_sum(p, b) == 0 for b in p.blocks)


def _require_pairs(p: Partition) -> None:
    if not p.is_pair:
        raise PartitionError(f"sectors need a pair partition, got {p}")


def sector(p: Partition, a: PointId, b: PointId) -> Sector:
    """The sector ``[a, b]``; ``{a, b}`` must be a block."""
    _require_pairs(p)
    _check_block(p, (a, b))
    return Sector(p, tuple(interval(p, a, b, "closed")))


def sectors(p: Partition) -> list[Sector]:
    """Both sectors ``[a, b]`` and ``[b, a]`` of every block ``{a, b}``."""
    _require_pairs(p)
    out = []
    for a, b in p.blocks:
        out.append(Sector(p, tuple(interval(p, a, b, "closed"))))
        out.append(Sector(p, tuple(interval(p, b, a, "closed"))))
    return out


def lower_sector(p: Partition) -> Sector:
    """The lower row as a sector; its endpoints must form a block."""
    if len(p.lower) < 2:
        raise PartitionError("lower row has fewer than two points")
    return sector(p, L(1), L(len(p.lower)))


def turns(p: Partition, within: Iterable[PointId] | None = None) -> list[Turn]:
    """Neutral pairs of cyclically adjacent points.

    With ``within``, only turns with both points in that set are returned.
    For two points the pair is adjacent both ways and counted twice.
    """
    seq = cyclic_sequence(p)
    n = len(seq)
    if n < 2:
        return []
    allowed = None if within is None else set(within)
    out = []
    for i in range(n):
        a, b = seq[i], seq[(i + 1) % n]
        if allowed is not None and (a not in allowed or b not in allowed):
            continue
        if color_sum(p, (a, b)) == 0:
            out.append(Turn(p, (a, b)))
    return out


def turn_blocks(p: Partition, t: Turn | Iterable[PointId]) -> list[Block]:
    pts = set(t.points if isinstance(t, Turn) else t)
    return [b for b in p.blocks if set(b) != pts and pts.intersection(b)]


def crosses_boundary(p: Partition, S: Sector, block: Iterable[PointId]) -> bool:
    return crosses(p, block, S.boundary)
