import pytest

from pairpart.brackets import (
    ResidualKind,
    arg,
    associated_bracket,
    br,
    bracket_info,
    bracket_product,
    dual,
    dual_identity_chain,
    gen_S0,
    gen_S_w,
    id_partition,
    is_bracket,
    is_dualizable,
    is_projective,
    residual_kind,
    restriction_equivalent,
    start_color,
    strong_inversion,
    weak_inversion,
)
from pairpart.core import BLACK, EMPTY, WHITE, L, PartitionError, U, colors, parse
from pairpart.engine.enumeration import enumerate_p2nb
from pairpart.named import CROSS_WW, GEN1, GEN2, P_B1
from pairpart.ops import compose, involution, rotate_cyclic, verticolor_reflect
from pairpart.structure import sector, sectors
from pairpart.sw import bracket_weight


def test_generators():
    assert GEN2 == parse("bwww/bwww;L1L4,U1U4,L2U2,L3U3")
    assert gen_S0(1) == parse("bbww/bbww;L1L4,U1U4,L2U2,L3U3")
    assert gen_S0(1) == P_B1
    with pytest.raises(PartitionError):
        gen_S_w(0)


def test_bracket_predicates():
    assert is_bracket(GEN2)
    assert not is_bracket(CROSS_WW)
    assert not is_bracket(parse("bw/bw;L1U1,L2U2"))
    assert is_projective(id_partition(colors("bw")))
    assert not is_projective(CROSS_WW)


def test_arg_and_br_round_trip():
    assert arg(GEN2) == id_partition(colors("ww"))
    assert br(BLACK, arg(GEN2)) == GEN2
    assert br(WHITE, EMPTY) == parse("wb/wb;L1L2,U1U2")
    with pytest.raises(PartitionError):
        br(BLACK, CROSS_WW)


def test_start_color_and_info():
    assert start_color(GEN2) is BLACK
    info = bracket_info(GEN2)
    assert info.weight == -2 == bracket_weight(GEN2)
    assert info.argument == id_partition(colors("ww"))
    with pytest.raises(PartitionError):
        start_color(CROSS_WW)


def test_product():
    assert bracket_product(GEN1, GEN1) == GEN2
    with pytest.raises(PartitionError):
        bracket_product(GEN1, gen_S_w(1, WHITE))


def test_inversions():
    win = weak_inversion(GEN1)
    assert win == br(WHITE, GEN1)
    assert len(win) == 10
    sin = strong_inversion(GEN1)
    assert sin == br(WHITE, id_partition(colors("bww")))
    assert bracket_weight(strong_inversion(GEN2)) == bracket_weight(GEN2)


def test_dual():
    assert not is_dualizable(GEN2)
    for v in (1, 2):
        p = gen_S0(v)
        d = dual(gen_S0(v, WHITE))
        assert d == dual_identity_chain(BLACK, v)
        assert dual(d) == gen_S0(v, WHITE)
        assert rotate_cyclic(p, "left", len(p.lower) // 2) == rotate_cyclic(p, "right", len(p.lower) // 2)


def test_dual_is_involution_on_small_brackets():
    for p in enumerate_p2nb(10):
        if len(p.lower) != len(p.upper) or not is_bracket(p) or not is_dualizable(p):
            continue
        assert dual(dual(p)) == p


def test_residual_kind():
    # connected, nothing turns inside the lower sector
    assert residual_kind(GEN2) is ResidualKind.FIRST
    assert residual_kind(br(BLACK, EMPTY)) is ResidualKind.NONE  # two caps
    assert residual_kind(P_B1) is ResidualKind.SECOND
    assert residual_kind(br(BLACK, id_partition(colors("bwbw")))) is ResidualKind.NONE


def test_associated_brackets_frozen():
    got = {str(associated_bracket(CROSS_WW, S)) for S in sectors(CROSS_WW)}
    assert got == {
        "wwb/wwb;L1L3,U1U3,L2U2",
        "bbw/bbw;L1L3,U1U3,L2U2",
        "wbb/wbb;L1L3,U1U3,L2U2",
        "bww/bww;L1L3,U1U3,L2U2",
    }
    S = sector(CROSS_WW, L(1), U(2))
    assert str(associated_bracket(CROSS_WW, S)) == "wwb/wwb;L1L3,U1U3,L2U2"


def test_associated_bracket_is_bracket_and_equivalent():
    for p in enumerate_p2nb(6):
        if not len(p):
            continue
        for S in sectors(p):
            b = associated_bracket(p, S)
            assert is_bracket(b)
            assert restriction_equivalent(p, S, b, sector(b, L(1), L(len(b.lower))))


def test_verticolor_and_involution_of_brackets():
    for p in (GEN1, GEN2, P_B1):
        assert is_bracket(involution(p))
        assert is_bracket(verticolor_reflect(p))
        assert compose(p, p).result == p


def test_listed_examples():
    assert str(arg(P_B1)) == "bw/bw;L1U1,L2U2"
    assert bracket_product(GEN1, GEN2) == br(BLACK, id_partition(colors("www")))
    s1 = sector(GEN1, L(1), L(3))
    s2 = sector(GEN2, L(1), L(4))
    assert not restriction_equivalent(GEN1, s1, GEN2, s2)
    assert restriction_equivalent(GEN2, s2, GEN2, s2)
