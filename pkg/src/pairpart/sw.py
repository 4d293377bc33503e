"""Membership in the categories S_w and the bracket weight."""

from __future__ import annotations

from math import gcd

from .core import Partition, PartitionError, color_sum
from .structure import is_pair_neutral, sectors


def sector_sums(p: Partition) -> list[int]:
    """Color sums of all sectors, in the order returned by ``sectors``."""
    if not is_pair_neutral(p):
        raise PartitionError(f"not a neutral pair partition: {p}")
    return [color_sum(p, s.points) for s in sectors(p)]


def sector_gcd(p: Partition) -> int:
    """gcd of all sector sums; ``p`` lies in S_w exactly when w divides it.

    Zero means every sector is neutral, i.e. ``p`` lies in S_0.
    """
    g = 0
    for s in sector_sums(p):
        g = gcd(g, s)
    return g


def divides(w: int, g: int) -> bool:
    # w Z contains g; 0 Z = {0}
    return g == 0 if w == 0 else g % w == 0


def in_S_w(p: Partition, w: int) -> bool:
    if w < 0:
        raise PartitionError("w must be non-negative")
    if not is_pair_neutral(p):
        return False
    return divides(w, sector_gcd(p))


def bracket_weight(p: Partition) -> int:
    """Color sum of the lower row of a bracket."""
    from .brackets import is_bracket

    if not is_bracket(p):
        raise PartitionError(f"not a bracket: {p}")
    return color_sum(p, p.points()[: len(p.lower)])
