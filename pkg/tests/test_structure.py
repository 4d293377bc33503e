import pytest
from hypothesis import given

from pairpart.core import PartitionError, L, U, parse
from pairpart.named import CROSS_WW, GEN2, P_B1
from pairpart.ops import tensor
from pairpart.structure import (
    connected_components,
    crosses,
    crossing_graph,
    factor_partition,
    is_connected,
    is_noncrossing,
    is_pair_neutral,
    lower_sector,
    sector,
    sectors,
    turn_blocks,
    turns,
)
from strategies import neutral_pair_partitions

FIGURE = parse("bwbwb/bwbbwbw;L1L2,L4L6,L5L7,L3U3,U1U4,U2U5")
DISJOINT = parse("/bwbw;L1L2,L3L4")


def test_crosses():
    assert crosses(CROSS_WW, (L(1), U(2)), (L(2), U(1)))
    assert not crosses(DISJOINT, (L(1), L(2)), (L(3), L(4)))
    p = parse("/bbww;L1L3,L2L4")
    assert crosses(p, (L(1), L(3)), (L(2), L(4)))
    with pytest.raises(PartitionError):
        crosses(p, (L(1), L(2)), (L(2), L(4)))


def test_components():
    comps = connected_components(FIGURE)
    assert len(comps) == 3
    assert sorted(len(c) for c in comps) == [1, 2, 3]
    assert len(connected_components(CROSS_WW)) == 1
    assert len(connected_components(DISJOINT)) == 2


def test_is_connected():
    assert is_connected(CROSS_WW)
    assert not is_connected(DISJOINT)
    assert is_connected(P_B1)
    assert not is_connected(parse("/;"))


def test_factor_partitions():
    assert factor_partition(CROSS_WW, connected_components(CROSS_WW)[0]) == CROSS_WW
    second = connected_components(DISJOINT)[1]
    assert str(factor_partition(DISJOINT, second)) == "/bw;L1L2"
    sizes = sorted(len(factor_partition(FIGURE, c)) for c in connected_components(FIGURE))
    assert sizes == [2, 4, 6]
    with pytest.raises(PartitionError):
        factor_partition(DISJOINT, [(L(1), L(3))])


def test_noncrossing_and_neutrality():
    assert not is_noncrossing(CROSS_WW)
    assert is_noncrossing(DISJOINT)
    assert not is_noncrossing(GEN2)
    assert is_pair_neutral(CROSS_WW)
    assert not is_pair_neutral(parse("/bb;L1L2"))
    assert not is_pair_neutral(parse("/bwb;L1L2L3"))
    assert is_pair_neutral(DISJOINT)


def test_sectors():
    cap = parse("/bw;L1L2")
    ss = sectors(cap)
    assert [s.points for s in ss] == [(L(1), L(2)), (L(2), L(1))]
    assert len(sectors(GEN2)) == 8
    assert sector(CROSS_WW, L(1), U(2)).points == (L(1), L(2), U(2))
    assert sector(CROSS_WW, U(2), L(1)).points == (U(2), U(1), L(1))
    assert lower_sector(GEN2).points == tuple(L(i) for i in range(1, 5))
    with pytest.raises(PartitionError):
        sector(CROSS_WW, L(1), L(2))
    with pytest.raises(PartitionError):
        sectors(parse("/bwb;L1L2L3"))


def test_turns():
    cap = parse("/bw;L1L2")
    assert [t.points for t in turns(cap)] == [(L(1), L(2)), (L(2), L(1))]
    p = parse("/bbww;L1L3,L2L4")
    assert [t.points for t in turns(p)] == [(L(2), L(3)), (L(4), L(1))]
    assert turns(parse("/bbww;L1L4,L2L3"), within=[L(1), L(2)]) == []
    assert turns(parse("bb/bb;L1U1,L2U2")) != []  # upper points count inverted


def test_turn_blocks():
    assert turn_blocks(parse("/bw;L1L2"), (L(1), L(2))) == []
    p = parse("/bbww;L1L3,L2L4")
    assert sorted(turn_blocks(p, (L(2), L(3)))) == [(L(1), L(3)), (L(2), L(4))]


@given(neutral_pair_partitions())
def test_component_sizes_sum_to_points(p):
    comps = connected_components(p)
    assert sum(2 * len(c) for c in comps) == len(p)
    assert is_noncrossing(p) == all(len(c) == 1 for c in comps)


@given(neutral_pair_partitions(max_points=6), neutral_pair_partitions(max_points=6))
def test_tensor_adds_components(p, q):
    assert len(connected_components(tensor(p, q))) == (
        len(connected_components(p)) + len(connected_components(q)))


def test_crossing_graph_symmetric():
    g = crossing_graph(GEN2)
    for i, nbrs in enumerate(g):
        for j in nbrs:
            assert i in g[j]
