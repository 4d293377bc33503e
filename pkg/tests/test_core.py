import pytest
from hypothesis import given

from pairpart.core import (
    BLACK,
    EMPTY,
    WHITE,
    ParseError,
    Partition,
    PartitionError,
    L,
    U,
    canonicalize,
    color_sum,
    cyclic_sequence,
    interval,
    normalized_color,
    parse,
    parse_points,
    reframe,
    render,
)
from strategies import neutral_pair_partitions

FIGURE = "bwbwb/bwbbwbw;L1L2,L4L6,L5L7,L3U3,U1U4,U2U5"


def test_cyclic_sequence():
    assert cyclic_sequence(parse("ww/ww;L1U2,L2U1")) == [L(1), L(2), U(2), U(1)]
    assert cyclic_sequence(parse("/bw;L1L2")) == [L(1), L(2)]
    seq = cyclic_sequence(parse(FIGURE))
    assert seq == [L(i) for i in range(1, 8)] + [U(i) for i in range(5, 0, -1)]


def test_normalized_color():
    p = parse("w/w;U1L1")
    assert normalized_color(p, L(1)) is WHITE
    assert normalized_color(p, U(1)) is BLACK
    assert normalized_color(parse("bw/;U1U2"), U(2)) is BLACK
    with pytest.raises(PartitionError):
        normalized_color(p, L(2))


def test_color_sum():
    p = parse("/bbww;L1L3,L2L4")
    assert color_sum(p, []) == 0
    assert color_sum(p, [L(1), L(2), L(3)]) == 1
    gen2 = parse("bwww/bwww;L1L4,U1U4,L2U2,L3U3")
    assert color_sum(gen2, [L(i) for i in range(1, 5)]) == -2


def test_interval_kinds():
    assert interval(parse("/bw;L1L2"), L(1), L(2), "closed") == [L(1), L(2)]
    p = parse("/bbww;L1L3,L2L4")
    assert interval(p, L(3), L(1), "open") == [L(4)]
    assert interval(p, L(2), L(2), "closed") == [L(2)]
    # ]a, a] runs once around the circle
    assert len(interval(p, L(2), L(2), "half-open-left")) == 4
    assert interval(p, L(1), L(3), "half-open-right") == [L(1), L(2)]


def test_canonicalize_and_render():
    assert render(parse("ww/ww;L2U1,L1U2")) == "ww/ww;L1U2,L2U1"
    assert render(parse("w/w;U1L1")) == "w/w;L1U1"
    assert render(EMPTY) == "/;"
    assert parse("/;") == EMPTY
    p = Partition([WHITE], [WHITE], [(U(1), L(1))])
    assert canonicalize(p) == p and str(p) == "w/w;L1U1"


def test_block_order_is_by_first_point():
    # lower points sort before upper points within a block; blocks by first point
    assert str(parse("bw/wb;U2L2,U1L1")) == "bw/wb;L1U1,L2U2"


@pytest.mark.parametrize("text, token", [
    ("ww/ww;L1U1", "L2"),
    ("w/w;L1U1,L1U1", "L1U1"),
    ("w/w;L1U2", "L1U2"),
    ("w/w;L1X1", "L1X1"),
    ("wx/w;L1U1", "x"),
])
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert token in str(exc.value)


def test_parse_errors_structure():
    for bad in ("w/w", "w/w/w;L1U1", "ww;L1L2"):
        with pytest.raises(ParseError):
            parse(bad)


def test_parse_points():
    assert parse_points("L1,U2") == [L(1), U(2)]
    assert parse_points("L1U2") == [L(1), U(2)]


def test_reframe_is_a_rotation():
    p = parse("ww/ww;L1U2,L2U1")
    q = reframe(p, 1, 3)
    assert len(q.lower) == 3 and len(q.upper) == 1
    assert reframe(q, 3, 2) == p


@given(neutral_pair_partitions())
def test_render_parse_round_trip(p):
    assert parse(render(p)) == p
    assert render(parse(render(p))) == render(p)


@given(neutral_pair_partitions())
def test_total_color_sum_vanishes(p):
    assert color_sum(p, p.points()) == 0
