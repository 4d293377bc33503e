from collections import Counter

import pytest

from pairpart.brackets import bracket_product, weak_inversion
from pairpart.core import PartitionError, parse
from pairpart.engine.enumeration import enumerate_p2nb
from pairpart.engine.words import sector_gcd_word, word_of
from pairpart.named import GEN1, GEN2, HALF_LIB_WBW, P_B1
from pairpart.ops import verticolor_reflect
from pairpart.sw import bracket_weight, divides, in_S_w, sector_gcd, sector_sums
from pairpart.brackets import is_bracket


def test_sector_sums():
    assert sector_sums(parse("/bw;L1L2")) == [0, 0]
    # the outer block U1U4 contributes +-2 as well as L1L4
    assert Counter(sector_sums(GEN2)) == Counter({-2: 2, 2: 2, 0: 4})
    assert Counter(sector_sums(parse("/bbww;L1L3,L2L4"))) == Counter({1: 2, -1: 2})
    with pytest.raises(PartitionError):
        sector_sums(parse("/bb;L1L2"))


def test_membership():
    assert in_S_w(GEN2, 2)
    assert not in_S_w(GEN2, 4)
    assert in_S_w(HALF_LIB_WBW, 0)
    assert not in_S_w(parse("/bb;L1L2"), 1)
    with pytest.raises(PartitionError):
        in_S_w(GEN2, -1)


def test_divides():
    assert divides(0, 0) and not divides(0, 2)
    assert divides(2, 0) and divides(2, -4) and not divides(3, 2)


def test_bracket_weight():
    assert bracket_weight(GEN2) == -2
    assert bracket_weight(P_B1) == 0
    assert bracket_weight(bracket_product(GEN1, GEN1)) == 2 * bracket_weight(GEN1)
    with pytest.raises(PartitionError):
        bracket_weight(HALF_LIB_WBW)


def test_membership_lattice_and_word_gcd():
    for p in enumerate_p2nb(6):
        g = sector_gcd(p)
        assert g == sector_gcd_word(word_of(p))
        assert in_S_w(p, 1)
        for w in range(0, 5):
            for w2 in range(1, 5):
                # w2 Z ⊆ w Z whenever w divides w2
                if w and w2 % w == 0 and in_S_w(p, w2):
                    assert in_S_w(p, w)
            if in_S_w(p, 0):
                assert in_S_w(p, w)


def test_anti_symmetry_small():
    for p in enumerate_p2nb(6):
        if not len(p):
            continue
        sums = sector_sums(p)
        assert all(a == -b for a, b in zip(sums[::2], sums[1::2]))


def test_weight_under_reflection_and_inversion():
    for p in enumerate_p2nb(8):
        if len(p.lower) != len(p.upper) or not is_bracket(p):
            continue
        assert bracket_weight(weak_inversion(p)) == bracket_weight(p)
        assert bracket_weight(verticolor_reflect(p)) == -bracket_weight(p)
