"""Word-level operations against the partition-level ones they stand for."""

import itertools

import pytest
from hypothesis import given, strategies as st

from pairpart.core import PartitionError, cyclic_sequence, parse, reframe
from pairpart.engine.enumeration import neutral_words
from pairpart.engine.words import (
    decode,
    erase_turn,
    glue,
    insert,
    is_neutral_word,
    one_line,
    orbit_key,
    rotations,
    sector_gcd_word,
    word_of,
)
from pairpart.named import CROSS_WW, GEN2, P_B1
from pairpart.ops import compose, erase, tensor
from pairpart.sw import sector_gcd

SMALL = [w for n in (2, 4) for w in neutral_words(n)]


def key(word):
    return orbit_key(*word)


def test_round_trip():
    for p in (CROSS_WW, GEN2, P_B1):
        w = word_of(p)
        assert is_neutral_word(w)
        assert decode(orbit_key(*w, dihedral=False)) in set(rotations(w, False))
        assert key(word_of(one_line(w))) == key(w)
    with pytest.raises(PartitionError):
        word_of(parse("/bwb;L1L2L3"))


def test_rotations_stay_in_orbit():
    for w in SMALL:
        for v in rotations(w, True):
            assert key(v) == key(w)


def test_glue_is_composition():
    for w, v in itertools.product(SMALL, SMALL):
        n, m = len(w[0]), len(v[0])
        for k in range(1, min(n, m) + 1):
            for s in range(n):
                g = glue(w, s, k, v)
                bottom = reframe(one_line(w), (s + k) % n, n - k)
                top = reframe(one_line(v), 0, k)
                if bottom.upper != top.lower:
                    assert g is None
                    continue
                assert g is not None
                r = compose(bottom, top).result
                assert key(word_of(r)) == key(g)


def test_insert_is_tensor():
    for w, v in itertools.product(SMALL, SMALL):
        n = len(w[0])
        for gap in range(n):
            p = reframe(one_line(w), gap, n)
            assert key(insert(w, gap, v)) == key(word_of(tensor(one_line(v), p)))


def test_erase_turn_matches_erase():
    for w in neutral_words(6):
        p = one_line(w)
        seq = cyclic_sequence(p)
        for i in range(6):
            e = erase_turn(w, i)
            pts = [seq[i], seq[(i + 1) % 6]]
            if w[0][i] == w[0][(i + 1) % 6]:
                assert e is None
            else:
                assert key(e) == key(word_of(erase(p, pts)))


@given(st.sampled_from([w for n in (2, 4, 6) for w in neutral_words(n)]))
def test_gcd_agrees(w):
    assert sector_gcd_word(w) == sector_gcd(one_line(w))
