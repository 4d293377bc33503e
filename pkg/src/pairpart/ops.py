"""Category operations on partitions: tensor, involution, composition,
verticolor reflection, rotations and erasing."""

from __future__ import annotations

import enum
from typing import Iterable, NamedTuple

from .core import (
    Partition,
    PartitionError,
    PointId,
    Row,
    L,
    U,
)


class RotationDirection(enum.Enum):
    DOWN_LEFT = "down-left"    # U1 becomes the new L1
    DOWN_RIGHT = "down-right"  # rightmost upper becomes rightmost lower
    UP_LEFT = "up-left"        # L1 becomes the new U1
    UP_RIGHT = "up-right"      # rightmost lower becomes rightmost upper


class CompositionResult(NamedTuple):
    result: Partition
    loops: int

    def __str__(self) -> str:
        return f"{self.result} loops={self.loops}"


def _relabel(p: Partition, upper, lower, mapping) -> Partition:
    return Partition(upper, lower, [[mapping(pt) for pt in b] for b in p.blocks])


def tensor(p: Partition, q: Partition) -> Partition:
    """Horizontal concatenation, ``p`` on the left."""
    m, k = len(p.lower), len(p.upper)

    def shift(pt: PointId) -> PointId:
        return PointId(pt.row, pt.index + (m if pt.row is Row.LOWER else k))

    blocks = list(p.blocks) + [[shift(pt) for pt in b] for b in q.blocks]
    return Partition(p.upper + q.upper, p.lower + q.lower, blocks)


def tensor_all(parts: Iterable[Partition]) -> Partition:
    out = Partition((), (), ())
    for q in parts:
        out = tensor(out, q)
    return out


def involution(p: Partition) -> Partition:
    """Swap the rows."""
    swap = lambda pt: PointId(Row(1 - pt.row), pt.index)
    return _relabel(p, p.lower, p.upper, swap)


def verticolor_reflect(p: Partition) -> Partition:
    """Mirror both rows left-right and invert every color."""
    m, k = len(p.lower), len(p.upper)

    def mirror(pt: PointId) -> PointId:
        n = m if pt.row is Row.LOWER else k
        return PointId(pt.row, n + 1 - pt.index)

    inv = lambda row: tuple(c.inverse for c in reversed(row))
    return _relabel(p, inv(p.upper), inv(p.lower), mirror)


def composable(p: Partition, q: Partition) -> bool:
    return p.upper == q.lower


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def compose(p: Partition, q: Partition) -> CompositionResult:
    """Vertical concatenation with ``p`` at the bottom and ``q`` on top.

    The upper row of ``p`` is glued to the lower row of ``q``.  Components
    living entirely in the glued middle row are counted as loops.
    """
    if not composable(p, q):
        raise PartitionError(
            f"not composable: upper row of {p} does not match lower row of {q}")
    m = len(p.lower)      # bottom row of the result
    mid = len(p.upper)
    k = len(q.upper)      # top row of the result
    # node ids: bottom 0..m-1, middle m..m+mid-1, top m+mid..
    def node_p(pt: PointId) -> int:
        return pt.index - 1 if pt.row is Row.LOWER else m + pt.index - 1

    def node_q(pt: PointId) -> int:
        return m + pt.index - 1 if pt.row is Row.LOWER else m + mid + pt.index - 1

    uf = _UnionFind(m + mid + k)
    for block in p.blocks:
        first = node_p(block[0])
        for pt in block[1:]:
            uf.union(first, node_p(pt))
    for block in q.blocks:
        first = node_q(block[0])
        for pt in block[1:]:
            uf.union(first, node_q(pt))

    groups: dict[int, list[PointId]] = {}
    for i in range(m):
        groups.setdefault(uf.find(i), []).append(L(i + 1))
    for j in range(k):
        groups.setdefault(uf.find(m + mid + j), []).append(U(j + 1))
    middle_roots = {uf.find(m + i) for i in range(mid)}
    loops = len(middle_roots - groups.keys())
    return CompositionResult(Partition(q.upper, p.lower, groups.values()), loops)


def compose_chain(parts: Iterable[Partition]) -> CompositionResult:
    """Compose bottom to top: ``parts[0]`` is the lowest layer."""
    it = iter(parts)
    try:
        acc = next(it)
    except StopIteration:
        raise PartitionError("empty composition chain") from None
    loops = 0
    for q in it:
        acc, extra = compose(acc, q)
        loops += extra
    return CompositionResult(acc, loops)


def rotate(p: Partition, direction: RotationDirection | str) -> Partition:
    """Move one corner point to the other row, inverting its color."""
    d = RotationDirection(direction)
    m, k = len(p.lower), len(p.upper)
    lower, upper = list(p.lower), list(p.upper)

    if d is RotationDirection.DOWN_LEFT:
        if not k:
            raise PartitionError("cannot rotate down-left: upper row is empty")
        moved = upper.pop(0)
        lower.insert(0, moved.inverse)

        def move(pt):
            if pt.row is Row.LOWER:
                return L(pt.index + 1)
            return L(1) if pt.index == 1 else U(pt.index - 1)
    elif d is RotationDirection.DOWN_RIGHT:
        if not k:
            raise PartitionError("cannot rotate down-right: upper row is empty")
        moved = upper.pop()
        lower.append(moved.inverse)

        def move(pt):
            return L(m + 1) if pt == U(k) else pt
    elif d is RotationDirection.UP_LEFT:
        if not m:
            raise PartitionError("cannot rotate up-left: lower row is empty")
        moved = lower.pop(0)
        upper.insert(0, moved.inverse)

        def move(pt):
            if pt.row is Row.UPPER:
                return U(pt.index + 1)
            return U(1) if pt.index == 1 else L(pt.index - 1)
    else:
        if not m:
            raise PartitionError("cannot rotate up-right: lower row is empty")
        moved = lower.pop()
        upper.append(moved.inverse)

        def move(pt):
            return U(k + 1) if pt == L(m) else pt

    return _relabel(p, upper, lower, move)


class CyclicDirection(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def rotate_cyclic(p: Partition, direction: CyclicDirection | str, k: int = 1) -> Partition:
    """Shift the cyclic order ``k`` times, keeping both row lengths.

    One left step is down-left then up-right; one right step is up-left then
    down-right.  If the row a step would take from is empty, the two
    rotations are applied in the opposite order, which gives the same shift.
    """
    d = CyclicDirection(direction)
    if k < 0:
        raise PartitionError("rotation count must be non-negative")
    if len(p) == 0:
        return p
    D = RotationDirection
    if d is CyclicDirection.LEFT:
        steps = (D.DOWN_LEFT, D.UP_RIGHT) if p.upper else (D.UP_RIGHT, D.DOWN_LEFT)
    else:
        steps = (D.UP_LEFT, D.DOWN_RIGHT) if p.lower else (D.DOWN_RIGHT, D.UP_LEFT)
    for _ in range(k):
        p = rotate(rotate(p, steps[0]), steps[1])
    return p


def erase(p: Partition, S: Iterable[PointId]) -> Partition:
    """Remove the points of ``S``.

    The surviving remnants of every block that met ``S`` are merged into a
    single block; untouched blocks are kept as they are.
    """
    gone = set(S)
    for pt in gone:
        p.check_point(pt)
    if not gone:
        return p
    keep_lower = [i for i in range(1, len(p.lower) + 1) if L(i) not in gone]
    keep_upper = [i for i in range(1, len(p.upper) + 1) if U(i) not in gone]
    new_lower = {old: new for new, old in enumerate(keep_lower, 1)}
    new_upper = {old: new for new, old in enumerate(keep_upper, 1)}

    def move(pt: PointId) -> PointId:
        if pt.row is Row.LOWER:
            return L(new_lower[pt.index])
        return U(new_upper[pt.index])

    blocks, merged = [], []
    for block in p.blocks:
        rest = [move(pt) for pt in block if pt not in gone]
        if len(rest) == len(block):
            blocks.append(rest)
        else:
            merged.extend(rest)
    if merged:
        blocks.append(merged)
    return Partition([p.upper[i - 1] for i in keep_upper],
                     [p.lower[i - 1] for i in keep_lower], blocks)
