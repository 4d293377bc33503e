"""One-line words: a fast encoding of neutral pair partitions up to rotation.

A pair partition with ``n`` points is read along its cyclic order into two
tuples: ``colors[i]`` (normalized color, 0 = white, 1 = black) and
``mates[i]`` (position of the partner of point ``i``).  Rotations of the
partition are cyclic shifts of the word.  Involution and verticolor
reflection both act as "reverse and invert colors" up to a shift.

Orbit keys are ``bytes``: each point is coded as ``color | offset << 1``
with ``offset = (mate - i) mod n`` and the key is the least shift (and, for
the dihedral quotient, least shift of the reflected word).
"""

from __future__ import annotations

from math import gcd
from typing import Iterator, Sequence

from ..core import BLACK, WHITE, Partition, PartitionError, cyclic_sequence, normalized_color, reframe

Word = tuple[tuple[int, ...], tuple[int, ...]]  # (colors, mates)

EMPTY_WORD: Word = ((), ())


def codes(colors: Sequence[int], mates: Sequence[int]) -> bytes:
    n = len(colors)
    return bytes(colors[i] | (((mates[i] - i) % n) << 1) for i in range(n))


def reflected_codes(colors: Sequence[int], mates: Sequence[int]) -> bytes:
    n = len(colors)
    return bytes((1 - colors[i]) | (((i - mates[i]) % n) << 1) for i in range(n - 1, -1, -1))


def _min_shift(c: bytes) -> bytes:
    n = len(c)
    if n == 0:
        return c
    dd = c + c
    return min(dd[i:i + n] for i in range(n))


def orbit_key(colors: Sequence[int], mates: Sequence[int], dihedral: bool = True) -> bytes:
    k = _min_shift(codes(colors, mates))
    if dihedral:
        r = _min_shift(reflected_codes(colors, mates))
        if r < k:
            return r
    return k


def decode(key: bytes) -> Word:
    n = len(key)
    colors = tuple(b & 1 for b in key)
    mates = tuple((i + (b >> 1)) % n for i, b in enumerate(key))
    return colors, mates


def word_of(p: Partition) -> Word:
    """Read a pair partition along its cyclic order."""
    if not p.is_pair:
        raise PartitionError(f"words need a pair partition, got {p}")
    seq = cyclic_sequence(p)
    pos = {pt: i for i, pt in enumerate(seq)}
    colors = tuple(1 if normalized_color(p, pt) is BLACK else 0 for pt in seq)
    mates = [0] * len(seq)
    for a, b in p.blocks:
        mates[pos[a]], mates[pos[b]] = pos[b], pos[a]
    return colors, tuple(mates)


def one_line(word: Word) -> Partition:
    """The partition with empty upper row whose cyclic reading is ``word``."""
    from ..core import L

    colors, mates = word
    cs = [BLACK if c else WHITE for c in colors]
    blocks = [(L(i + 1), L(j + 1)) for i, j in enumerate(mates) if i < j]
    return Partition((), cs, blocks)


def splits(word: Word) -> Iterator[Partition]:
    """Every row split of the partition read as ``word`` starting at L1."""
    p = one_line(word)
    for m in range(len(word[0]) + 1):
        yield reframe(p, 0, m)


def rotations(word: Word, dihedral: bool) -> Iterator[Word]:
    """All shifts of the word, plus all shifts of its reflection if dihedral."""
    colors, mates = word
    n = len(colors)
    for s in range(n):
        yield (colors[s:] + colors[:s],
               tuple((mates[(s + i) % n] - s) % n for i in range(n)))
    if dihedral:
        rc = tuple(1 - colors[n - 1 - i] for i in range(n))
        rm = tuple(n - 1 - mates[n - 1 - i] for i in range(n))
        for s in range(n):
            yield (rc[s:] + rc[:s],
                   tuple((rm[(s + i) % n] - s) % n for i in range(n)))


def is_neutral_word(word: Word) -> bool:
    colors, mates = word
    return all(colors[i] != colors[j] for i, j in enumerate(mates))


def sector_gcd_word(word: Word) -> int:
    """gcd of all sector sums, computed from prefix sums of the word."""
    colors, mates = word
    n = len(colors)
    pre = [0]
    for c in colors:
        pre.append(pre[-1] + (1 if c else -1))
    total = pre[-1]
    g = 0
    for i, j in enumerate(mates):
        if i < j:
            s = pre[j + 1] - pre[i]       # [i, j]
            g = gcd(g, s)
            g = gcd(g, total - s + (1 if colors[i] else -1) + (1 if colors[j] else -1))
    return g


def erase_turn(word: Word, i: int) -> Word | None:
    """Erase the adjacent points ``i`` and ``i+1``; None if not a turn."""
    colors, mates = word
    n = len(colors)
    j = (i + 1) % n
    if n < 2 or colors[i] == colors[j]:
        return None
    if n == 2:
        return EMPTY_WORD
    # renumber the survivors starting right after j
    order = [(j + 1 + t) % n for t in range(n - 2)]
    new = {old: t for t, old in enumerate(order)}
    a, b = mates[i], mates[j]
    nm = [0] * (n - 2)
    for old, t in new.items():
        m = mates[old]
        if m == i:
            m = b
        elif m == j:
            m = a
        nm[t] = new[m]
    return tuple(colors[o] for o in order), tuple(nm)


def insert(word: Word, gap: int, other: Word) -> Word:
    """Insert ``other`` before position ``gap`` of ``word`` (a tensor product)."""
    c1, m1 = word
    c2, m2 = other
    n1, n2 = len(c1), len(c2)
    # a shift of the plain insertion: other, then word from gap onwards
    colors = c2 + c1[gap:] + c1[:gap]
    mates = [0] * (n1 + n2)
    for i in range(n2):
        mates[i] = m2[i]
    for i in range(n1):
        mates[n2 + (i - gap) % n1] = n2 + (m1[i] - gap) % n1
    return colors, tuple(mates)


def glue(word: Word, start: int, k: int, other: Word) -> Word | None:
    """Glue the arc ``word[start:start+k]`` onto ``other[0:k]``.

    This is the one-line form of a composition: the arc plays the role of
    the upper row of the bottom factor and ``other[:k]`` the lower row of the
    top factor.  Returns None when the colors do not match.  The result
    reads the rest of ``word`` after the arc, then the rest of ``other``.
    """
    c1, m1 = word
    c2, m2 = other
    n1, n2 = len(c1), len(c2)
    for t in range(k):
        if c1[(start + t) % n1] == c2[k - 1 - t]:
            return None
    rel = lambda i: (i - start) % n1   # arc at [0, k), rest at [k, n1)
    out_n = n1 + n2 - 2 * k
    mates = [-1] * out_n
    colors = [0] * out_n
    x = n1 - k
    for t in range(k, n1):
        colors[t - k] = c1[(start + t) % n1]
    for u in range(k, n2):
        colors[x + u - k] = c2[u]

    def walk_from_p(t: int) -> int:
        # t: relative position in word with t >= k; follow until an outer point
        side, pos = 0, rel(m1[(start + t) % n1])
        while True:
            if side == 0:
                if pos >= k:
                    return pos - k
                side, pos = 1, m2[k - 1 - pos]
            else:
                if pos >= k:
                    return x + pos - k
                side, pos = 0, rel(m1[(start + k - 1 - pos) % n1])

    def walk_from_q(u: int) -> int:
        side, pos = 1, m2[u]
        while True:
            if side == 1:
                if pos >= k:
                    return x + pos - k
                side, pos = 0, rel(m1[(start + k - 1 - pos) % n1])
            else:
                if pos >= k:
                    return pos - k
                side, pos = 1, m2[k - 1 - pos]

    for t in range(k, n1):
        o = t - k
        if mates[o] < 0:
            e = walk_from_p(t)
            mates[o], mates[e] = e, o
    for u in range(k, n2):
        o = x + u - k
        if mates[o] < 0:
            e = walk_from_q(u)
            mates[o], mates[e] = e, o
    return tuple(colors), tuple(mates)
