"""Enumeration, bounded closure and verification."""

from .analysis import (
    CaseResult,
    ClassifyReport,
    ClosureCache,
    Report,
    brackets_of,
    classify,
    s_w_filter_keys,
    verify_category_closed,
    verify_lemmas,
)
from .closure import ALL_OPS, BASE_PARTITIONS, ClosureConfig, ClosureSet, closure, parse_ops
from .enumeration import Shape, enumerate_p2nb
from .unk import unk_block_swap, unk_generators, unk_outer_cross

__all__ = [
    "ALL_OPS", "BASE_PARTITIONS", "CaseResult", "ClassifyReport", "ClosureCache", "ClosureConfig",
    "ClosureSet", "Report", "Shape", "brackets_of", "classify", "closure", "enumerate_p2nb",
    "parse_ops", "s_w_filter_keys", "unk_block_swap", "unk_generators", "unk_outer_cross",
    "verify_category_closed", "verify_lemmas",
]
