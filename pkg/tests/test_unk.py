import pytest

from pairpart.brackets import br, gen_S_w, id_partition
from pairpart.core import WHITE, PartitionError, colors, parse
from pairpart.engine.closure import closure
from pairpart.engine.unk import (
    block_swap_to_outer_cross,
    bracket_to_outer_cross,
    nested_caps,
    outer_cross_to_block_swap,
    outer_cross_to_bracket,
    unk_block_swap,
    unk_generators,
    unk_outer_cross,
)
from pairpart.named import CROSS_WW
from pairpart.sw import in_S_w, sector_gcd

KS = [1, 2, 3, 4]


def test_shapes():
    assert unk_outer_cross(1) == CROSS_WW
    assert unk_block_swap(1) == CROSS_WW
    assert unk_outer_cross(3) == parse("wwww/wwww;L1U4,L2U2,L3U3,L4U1")
    assert unk_block_swap(2) == parse("wwww/wwww;L1U3,L2U4,L3U1,L4U2")
    assert str(nested_caps(1)) == "/;"
    assert nested_caps(2) == parse("wb/;U1U2")
    with pytest.raises(PartitionError):
        unk_outer_cross(0)


@pytest.mark.parametrize("k", KS)
def test_sector_gcd_is_k(k):
    assert sector_gcd(unk_outer_cross(k)) == k
    assert sector_gcd(unk_block_swap(k)) == k
    assert in_S_w(unk_generators(k)[1], k)


@pytest.mark.parametrize("k", KS)
def test_figures(k):
    assert block_swap_to_outer_cross(k) == unk_outer_cross(k)
    assert outer_cross_to_block_swap(k) == unk_block_swap(k)
    assert outer_cross_to_bracket(k) == br(WHITE, id_partition([WHITE] * k))
    assert bracket_to_outer_cross(k) == unk_outer_cross(k)


@pytest.mark.parametrize("k", [1, 2])
def test_generators_agree(k):
    a, b = unk_generators(k)
    assert closure([a], 8).keys == closure([b], 8).keys
    assert closure([unk_block_swap(k)], 8).keys == closure([b], 8).keys
