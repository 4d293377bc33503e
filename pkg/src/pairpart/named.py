"""Named partitions used throughout the tests, the CLI and the verification suites."""

from __future__ import annotations

from .brackets import br, gen_S_w, id_partition
from .core import BLACK, WHITE, Partition, PartitionError, colors, parse

CROSS_WW = parse("ww/ww;L1U2,L2U1")
GEN1 = gen_S_w(1, BLACK)
GEN2 = gen_S_w(2, BLACK)
GEN3 = gen_S_w(3, BLACK)
P_B1 = parse("bbww/bbww;L1L4,U1U4,L2U2,L3U3")
HALF_LIB_WBW = parse("wbw/wbw;L1U3,L2U2,L3U1")
HALF_LIB_BWB = parse("bwb/bwb;L1U3,L2U2,L3U1")
BRACKET_BWBW = br(BLACK, id_partition(colors("wb")))
BRACKET_WBWB = br(WHITE, id_partition(colors("bw")))

NAMED: dict[str, Partition] = {
    "crossWW": CROSS_WW,
    "GEN1": GEN1,
    "GEN2": GEN2,
    "GEN3": GEN3,
    "P_b1": P_B1,
    "halflib_wbw": HALF_LIB_WBW,
    "halflib_bwb": HALF_LIB_BWB,
    "bracket_bwbw": BRACKET_BWBW,
    "bracket_wbwb": BRACKET_WBWB,
}

_FOLDED = {k.lower(): v for k, v in NAMED.items()}


def lookup(text: str) -> Partition:
    """A named partition (case-insensitive) or the parse of ``text``."""
    p = _FOLDED.get(text.strip().lower())
    if p is not None:
        return p
    if "/" not in text:
        raise PartitionError(f"unknown partition name {text!r}; known: {', '.join(NAMED)}")
    return parse(text)
