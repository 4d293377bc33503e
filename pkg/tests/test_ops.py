import itertools

import pytest
from hypothesis import given

from pairpart.core import EMPTY, PartitionError, L, U, parse
from pairpart.engine.enumeration import enumerate_p2nb
from pairpart.named import CROSS_WW, GEN2, HALF_LIB_BWB, HALF_LIB_WBW, P_B1
from pairpart.ops import (
    compose,
    compose_chain,
    composable,
    erase,
    involution,
    rotate,
    rotate_cyclic,
    tensor,
    verticolor_reflect,
)
from strategies import neutral_pair_partitions


def test_tensor():
    assert str(tensor(parse("w/w;L1U1"), parse("b/b;L1U1"))) == "wb/wb;L1U1,L2U2"
    assert tensor(GEN2, EMPTY) == GEN2 == tensor(EMPTY, GEN2)
    assert str(tensor(parse("/bw;L1L2"), parse("/bw;L1L2"))) == "/bwbw;L1L2,L3L4"


def test_involution():
    assert str(involution(parse("/bw;L1L2"))) == "bw/;U1U2"
    assert str(involution(parse("w/w;L1U1"))) == "w/w;L1U1"
    assert involution(GEN2) == GEN2


def test_composable():
    assert composable(CROSS_WW, CROSS_WW)
    assert not composable(parse("w/w;L1U1"), parse("b/b;L1U1"))
    assert composable(parse("bw/;U1U2"), parse("/bw;L1L2"))


def test_compose_examples():
    r = compose(CROSS_WW, CROSS_WW)
    assert str(r.result) == "ww/ww;L1U1,L2U2" and r.loops == 0
    r = compose(parse("bw/;U1U2"), parse("/bw;L1L2"))
    assert r.result == EMPTY and r.loops == 1
    with pytest.raises(PartitionError):
        compose(parse("w/w;L1U1"), parse("b/b;L1U1"))


def test_compose_gen2_square():
    # the upper cap U1U4 of the bottom copy and the lower cup L1L4 of the top
    # copy close one circle
    r = compose(GEN2, GEN2)
    assert r.result == GEN2
    assert r.loops == 1


def test_compose_orientation():
    # p is the bottom factor: result keeps p's lower row and q's upper row
    p = parse("wbw/w;L1U3,U1U2")
    q = parse("w/wbw;L1L2,L3U1")
    assert composable(p, q)
    r = compose(p, q)
    assert r.result == parse("w/w;L1U1")
    assert r.loops == 1
    flipped = compose(q, p).result
    assert flipped.lower == q.lower and flipped.upper == p.upper
    with pytest.raises(PartitionError):
        compose(p, GEN2)


def test_verticolor_reflect():
    assert str(verticolor_reflect(parse("/bw;L1L2"))) == "/bw;L1L2"
    assert verticolor_reflect(HALF_LIB_WBW) == HALF_LIB_BWB
    assert verticolor_reflect(P_B1) == P_B1


def test_rotate():
    assert str(rotate(parse("w/w;L1U1"), "down-left")) == "/bw;L1L2"
    assert str(rotate(parse("/bw;L1L2"), "up-left")) == "w/w;L1U1"
    assert str(rotate(parse("bw/;U1U2"), "down-right")) == "b/b;L1U1"
    with pytest.raises(PartitionError):
        rotate(parse("/bw;L1L2"), "down-left")


def test_rotate_cyclic():
    assert rotate_cyclic(HALF_LIB_WBW, "left", 3) == HALF_LIB_BWB
    assert rotate_cyclic(GEN2, "left", 0) == GEN2
    assert str(rotate_cyclic(P_B1, "left", 2)) == "wwbb/wwbb;L1L4,U1U4,L2U2,L3U3"
    # rows may run empty along the way
    cap = parse("/bw;L1L2")
    assert rotate_cyclic(cap, "left", 2) == cap
    assert rotate_cyclic(cap, "right", 2) == cap


def test_erase():
    assert str(erase(parse("/bwbw;L1L2,L3L4"), [L(1), L(2)])) == "/bw;L1L2"
    assert str(erase(parse("/bbww;L1L3,L2L4"), [L(2), L(3)])) == "/bw;L1L2"
    assert erase(GEN2, []) == GEN2


@given(neutral_pair_partitions())
def test_involution_is_an_involution(p):
    assert involution(involution(p)) == p
    assert verticolor_reflect(verticolor_reflect(p)) == p


@given(neutral_pair_partitions(min_points=2))
def test_cyclic_rotation_inverse(p):
    n = len(p)
    assert rotate_cyclic(rotate_cyclic(p, "left", 1), "right", 1) == p
    assert rotate_cyclic(p, "left", n) == p


@given(neutral_pair_partitions(), neutral_pair_partitions())
def test_tensor_involution(p, q):
    assert involution(tensor(p, q)) == tensor(involution(p), involution(q))


def _small():
    return [p for p in enumerate_p2nb(4) if len(p.lower) <= 2 and len(p.upper) <= 2]


def test_compose_associative_with_loops():
    ps = _small()
    by_lower = {}
    for p in ps:
        by_lower.setdefault(p.lower, []).append(p)
    checked = 0
    for p in ps:
        for q in by_lower.get(p.upper, ()):
            for r in by_lower.get(q.upper, ()):
                a = compose(p, q)
                left = compose(a.result, r)
                b = compose(q, r)
                right = compose(p, b.result)
                assert left.result == right.result
                assert a.loops + left.loops == b.loops + right.loops
                checked += 1
    assert checked > 100


def test_compose_chain_matches_pairwise():
    chain = compose_chain([CROSS_WW, CROSS_WW, CROSS_WW])
    assert chain.result == CROSS_WW and chain.loops == 0
