"""Exhaustive enumeration of neutral pair partitions."""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import product
from typing import Iterator

from ..core import EMPTY, Partition, reframe
from .words import Word, one_line


class Shape(enum.Enum):
    ONE_LINE = "one-line"
    ALL_ROW_SPLITS = "all-row-splits"


def matchings(n: int) -> Iterator[tuple[int, ...]]:
    """Perfect matchings of ``range(n)`` as mate tuples."""
    if n % 2:
        return
    mates = [-1] * n

    def rec():
        try:
            i = mates.index(-1)
        except ValueError:
            yield tuple(mates)
            return
        for j in range(i + 1, n):
            if mates[j] < 0:
                mates[i], mates[j] = j, i
                yield from rec()
                mates[i] = mates[j] = -1

    yield from rec()


def neutral_words(n: int) -> Iterator[Word]:
    """One-line words with ``n`` points whose pairs are neutral.

    Each pair takes two opposite colors; the smaller point of the pair picks
    which.
    """
    for mates in matchings(n):
        firsts = [i for i in range(n) if i < mates[i]]
        for choice in product((0, 1), repeat=len(firsts)):
            colors = [0] * n
            for i, c in zip(firsts, choice):
                colors[i], colors[mates[i]] = c, 1 - c
            yield tuple(colors), mates


def words_upto(max_points: int) -> Iterator[Word]:
    for n in range(0, max_points + 1, 2):
        yield from neutral_words(n)


def enumerate_p2nb(max_points: int, shape: Shape | str = Shape.ALL_ROW_SPLITS,
                   exact: bool = False) -> list[Partition]:
    """All neutral pair partitions with at most ``max_points`` points.

    ``exact=True`` keeps only partitions with exactly ``max_points`` points.
    The empty partition is included unless ``exact`` excludes it.
    """
    shape = Shape(shape)
    out: list[Partition] = []
    sizes = [max_points] if exact else range(0, max_points + 1, 2)
    for n in sizes:
        if n % 2:
            continue
        if n == 0:
            out.append(EMPTY)
            continue
        for word in neutral_words(n):
            p = one_line(word)
            if shape is Shape.ONE_LINE:
                out.append(p)
            else:
                out.extend(reframe(p, 0, m) for m in range(n + 1))
    return out


def _fixed_colorings(mates: tuple[int, ...], perm: list[int], flip: int) -> int:
    # colorings with c[mate] = 1 - c and c[perm x] = c xor flip, by parity union-find
    n = len(mates)
    parent = list(range(n))
    parity = [0] * n

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    comps = n
    for x in range(n):
        for y, rel in ((mates[x], 1), (perm[x], flip)):
            rx, px = find(x)
            ry, py = find(y)
            if rx == ry:
                if px ^ py != rel:
                    return 0
            else:
                parent[rx] = ry
                parity[rx] = px ^ py ^ rel
                comps -= 1
    return 1 << comps


@lru_cache(maxsize=None)
def orbit_count(n: int, dihedral: bool = True) -> int:
    """Number of neutral words with ``n`` points up to rotation (and
    reflection when ``dihedral``), by Burnside's lemma."""
    if n % 2 or n < 0:
        return 0
    if n == 0:
        return 1
    group = [([(x + t) % n for x in range(n)], 0) for t in range(n)]
    if dihedral:
        # reflections reverse the order and invert colors
        group += [([(s - x) % n for x in range(n)], 1) for s in range(n)]
    total = 0
    for mates in matchings(n):
        for perm, flip in group:
            if all(mates[perm[x]] == perm[mates[x]] for x in range(n)):
                total += _fixed_colorings(mates, perm, flip)
    assert total % len(group) == 0
    return total // len(group)
