"""Classification, closedness checks and the bounded lemma suites.

Reports are line oriented ``key=value`` records::

    suite=de_erasing case=GEN2/T=L1L2/B=L1L4/S=1 status=pass

with an optional ``counterexample=`` field holding canonical partition text
(several partitions are joined with ``|``).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Iterator, Sequence

from .. import ops as _ops
from ..brackets import (
    ResidualKind,
    associated_bracket,
    bracket_product,
    is_bracket,
    residual_kind,
    start_color,
    strong_inversion,
    weak_inversion,
    arg,
)
from ..core import (
    Partition,
    PartitionError,
    color_sum,
    cyclic_position,
    cyclic_sequence,
    interval,
    reframe,
)
from ..named import (
    BRACKET_BWBW,
    BRACKET_WBWB,
    GEN1,
    GEN2,
    HALF_LIB_BWB,
    HALF_LIB_WBW,
    NAMED,
    P_B1,
)
from ..structure import is_pair_neutral, sector, sectors, turn_blocks, turns
from ..sw import bracket_weight, divides, in_S_w, sector_gcd
from .closure import ClosureConfig, ClosureSet, closure
from .enumeration import enumerate_p2nb, words_upto
from .words import Word, is_neutral_word, one_line, orbit_key, rotations, sector_gcd_word, word_of

log = logging.getLogger(__name__)


# -- reports ---------------------------------------------------------------------

@dataclass(frozen=True)
class CaseResult:
    suite: str
    case: str
    ok: bool
    counterexample: str = ""
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def line(self) -> str:
        out = f"suite={self.suite} case={self.case} status={self.status}"
        if self.counterexample:
            out += f" counterexample={self.counterexample}"
        if self.detail:
            out += f" {self.detail}"
        return out


@dataclass
class Report:
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def add(self, suite: str, case: str, ok: bool, counterexample: str = "", detail: str = "") -> CaseResult:
        c = CaseResult(suite, case, ok, counterexample, detail)
        self.cases.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.cases.extend(other.cases)
        return self

    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.ok]

    def lines(self) -> list[str]:
        return [c.line() for c in self.cases]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _join(*ps: Partition) -> str:
    return "|".join(str(p) for p in ps)


# -- closure cache ------------------------------------------------------------------

class ClosureCache:
    """Reuses closures whose generator sets provably give the same result.

    ``closure(G)`` equals a cached ``closure(H)`` whenever ``H ⊆ G`` and
    ``G ⊆ closure(H)``.
    """

    def __init__(self, **config):
        self.config = config
        self._entries: list[tuple[int, frozenset, ClosureSet]] = []
        self.hits = 0

    def _gen_keys(self, gens: Iterable[Partition], dihedral: bool) -> frozenset:
        return frozenset(orbit_key(*word_of(g), dihedral=dihedral) if g.is_pair else str(g)
                         for g in gens)

    def get(self, gens: Sequence[Partition], bound: int) -> ClosureSet:
        cfg = ClosureConfig(bound, **self.config)
        dihedral = cfg.quotient == "dihedral"
        keys = self._gen_keys(gens, dihedral)
        for b, hkeys, cs in self._entries:
            if b == bound and hkeys <= keys and all(g in cs for g in gens):
                self.hits += 1
                return cs
        cs = closure(list(gens), cfg)
        self._entries.append((bound, keys, cs))
        return cs


def same_upto(a: ClosureSet, b: ClosureSet, compare: int) -> bool:
    if a.quotient != b.quotient:
        raise PartitionError("closures use different quotients")
    return a.keys_upto(compare) == b.keys_upto(compare)


# -- S_w filters and classification ---------------------------------------------------

def s_w_filter_keys(w: int, max_points: int, quotient: str = "dihedral") -> frozenset:
    """Keys (in the given quotient) of every member of S_w with at most ``max_points`` points."""
    if quotient == "none":
        return frozenset(str(p) for p in enumerate_p2nb(max_points) if in_S_w(p, w))
    dihedral = quotient == "dihedral"
    return frozenset(orbit_key(*word, dihedral=dihedral)
                     for word in words_upto(max_points)
                     if divides(w, sector_gcd_word(word)))


def _bracket_splits(word: Word, dihedral: bool) -> Iterator[Partition]:
    n = len(word[0])
    if n < 4 or n % 2:
        return
    half = n // 2
    for v in dict.fromkeys(rotations(word, dihedral)):
        if v[1][0] == half - 1:
            p = reframe(one_line(v), 0, half)
            if is_bracket(p):
                yield p


def brackets_of(s: ClosureSet, max_points: int | None = None) -> Iterator[Partition]:
    """Every bracket among the members (each row split and orientation)."""
    limit = s.bound if max_points is None else max_points
    if s.quotient == "none":
        for p in s.partitions(limit):
            if len(p.lower) == len(p.upper) and is_bracket(p):
                yield p
        return
    for word in s.words():
        if len(word[0]) <= limit:
            yield from _bracket_splits(word, s.quotient == "dihedral")


@dataclass(frozen=True)
class ClassifyReport:
    subset_of_S0: bool
    detected_w: int
    matches_S_w_at_bound: bool

    def __str__(self) -> str:
        out = f"w={self.detected_w} matches={'true' if self.matches_S_w_at_bound else 'false'}"
        if self.subset_of_S0:
            out += " subset_of_S0=true"
        return out


def classify(s: ClosureSet, compare_bound: int) -> ClassifyReport:
    if compare_bound > s.bound:
        raise PartitionError("compare bound exceeds the closure bound")
    subset = True
    g = 0
    if s.quotient == "none":
        for p in s.partitions():
            if not (is_pair_neutral(p) and sector_gcd(p) == 0):
                subset = False
            if len(p.lower) == len(p.upper) and is_bracket(p):
                g = gcd(g, abs(bracket_weight(p)))
    else:
        dihedral = s.quotient == "dihedral"
        for word in s.words():
            if not is_neutral_word(word) or sector_gcd_word(word) != 0:
                subset = False
            for p in _bracket_splits(word, dihedral):
                g = gcd(g, abs(bracket_weight(p)))
    matches = s.keys_upto(compare_bound) == s_w_filter_keys(g, compare_bound, s.quotient)
    return ClassifyReport(subset, g, matches)


# -- closedness ---------------------------------------------------------------------------

CHECK_OPS = ("tensor", "compose", "involute", "rotate", "verticolor_reflect", "erase_neutral_interval")


def verify_category_closed(s: ClosureSet | Iterable[Partition], max_points: int | None = None,
                           ops: Iterable[str] = CHECK_OPS, limit_examples: int = 3) -> Report:
    """Apply every operation to members and report results missing from the set.

    Only operands and results with at most ``max_points`` points are
    considered (default: the closure bound, or the largest member).
    """
    if isinstance(s, ClosureSet):
        bound = s.bound if max_points is None else min(max_points, s.bound)
        members = list(s.partitions(bound))
        contains: Callable[[Partition], bool] = s.__contains__
    else:
        members = list(s)
        bound = max_points if max_points is not None else max((len(p) for p in members), default=0)
        members = [p for p in members if len(p) <= bound]
        texts = {str(p) for p in members}
        contains = lambda p: str(p) in texts
    ops = set(ops)
    report = Report()
    misses: dict[str, list[str]] = {op: [] for op in CHECK_OPS if op in ops}
    counts = dict.fromkeys(misses, 0)

    def check(op: str, q: Partition, *src: Partition) -> None:
        if len(q) > bound:
            return
        counts[op] += 1
        if not contains(q) and len(misses[op]) < limit_examples:
            misses[op].append(_join(q, *src))
        elif not contains(q):
            misses[op].append("")

    by_lower: dict[tuple, list[Partition]] = {}
    for p in members:
        by_lower.setdefault(p.lower, []).append(p)
    for p in members:
        if "involute" in ops:
            check("involute", _ops.involution(p), p)
        if "verticolor_reflect" in ops:
            check("verticolor_reflect", _ops.verticolor_reflect(p), p)
        if "rotate" in ops:
            for d in _ops.RotationDirection:
                try:
                    check("rotate", _ops.rotate(p, d), p)
                except PartitionError:
                    pass
        if "erase_neutral_interval" in ops:
            for t in turns(p):
                check("erase_neutral_interval", _ops.erase(p, t.points), p)
        if "tensor" in ops:
            for q in members:
                if len(p) + len(q) <= bound:
                    check("tensor", _ops.tensor(p, q), p, q)
        if "compose" in ops:
            for q in by_lower.get(p.upper, ()):
                if len(p.lower) + len(q.upper) <= bound:
                    check("compose", _ops.compose(p, q).result, p, q)
    for op, bad in misses.items():
        examples = [b for b in bad if b]
        report.add("category_closed", op, not bad, examples[0] if examples else "",
                   f"checked={counts[op]} missing={len(bad)}")
    return report


# -- lemma suites ---------------------------------------------------------------------------

def check_anti_symmetry(max_points: int) -> Report:
    """The two sectors of every block have opposite color sums."""
    report = Report()
    checked = 0
    bad = None
    for p in enumerate_p2nb(max_points):
        for a, b in p.blocks:
            checked += 1
            s1 = color_sum(p, interval(p, a, b, "closed"))
            s2 = color_sum(p, interval(p, b, a, "closed"))
            if s1 != -s2 and bad is None:
                bad = p
    report.add("anti_symmetry", f"enumerate{max_points}", bad is None,
               str(bad) if bad is not None else "", f"checked={checked}")
    return report


def check_decomposition(max_points: int) -> Report:
    """sigma(]a,c]) = sigma(]a,b]) + sigma(]b,c]) for all points a, b, c."""
    report = Report()
    checked = 0
    bad = None
    for p in enumerate_p2nb(max_points):
        seq = cyclic_sequence(p)
        n = len(seq)
        # half-open interval sums through the library, then all triples
        table = [[color_sum(p, interval(p, a, b, "half-open-left")) for b in seq] for a in seq]
        for i in range(n):
            row = table[i]
            for j in range(n):
                rj = table[j]
                for k in range(n):
                    if row[k] != row[j] + rj[k]:
                        bad = bad or p
        checked += n ** 3
    report.add("decomposition", f"enumerate{max_points}", bad is None,
               str(bad) if bad is not None else "", f"checked={checked}")
    return report


def associated_bracket_oracle(p: Partition, S) -> Partition:
    """Rotate so that the sector is the lower row, then compose with the involution."""
    pos = cyclic_position(p, S.points[0])
    rotated = reframe(p, pos, len(S.points))
    return _ops.compose(rotated, _ops.involution(rotated)).result


def check_associated_brackets(max_points: int) -> Report:
    report = Report()
    checked = 0
    bad = None
    for p in enumerate_p2nb(max_points):
        if not len(p):
            continue
        for S in sectors(p):
            checked += 1
            if bad is None and associated_bracket(p, S) != associated_bracket_oracle(p, S):
                bad = p
    report.add("associated_bracket", f"oracle{max_points}", bad is None,
               str(bad) if bad is not None else "", f"checked={checked}")
    return report


DE_ERASING_INSTANCES = ("GEN1", "GEN2", "P_b1", "halflib_wbw")


def de_erasing_cases(p: Partition) -> Iterator[tuple[str, Partition, Partition]]:
    """``(label, E(p,T), B(p,S))`` for every turn ``T``, turn block and sector of it."""
    for t in turns(p):
        e = _ops.erase(p, t.points)
        tl = "".join(map(str, t.points))
        for blk in turn_blocks(p, t):
            a, b = blk
            for i, (x, y) in enumerate(((a, b), (b, a)), 1):
                S = sector(p, x, y)
                yield f"T={tl}/B={''.join(map(str, blk))}/S={i}", e, associated_bracket(p, S)


def check_de_erasing(names: Iterable[str], cache: ClosureCache, bound: int, compare: int) -> Report:
    report = Report()
    for name in names:
        p = NAMED[name]
        base = cache.get([p], bound)
        seen: set[tuple[str, str]] = set()
        for label, e, b in de_erasing_cases(p):
            if (str(e), str(b)) in seen:
                continue
            seen.add((str(e), str(b)))
            big = max(len(e), len(b))
            nb = bound if big <= bound else big
            lhs = base if nb == bound else cache.get([p], nb)
            rhs = cache.get([e, b], nb)
            ok = same_upto(lhs, rhs, compare)
            detail = f"bound={nb}" + ("" if nb == bound else " raised_bound=true")
            report.add("de_erasing", f"{name}/{label}", ok, "" if ok else _join(p, e, b), detail)
    return report


def _bound_for(parts: Iterable[Partition], bound: int) -> int:
    return max([bound] + [len(q) for q in parts])


def check_inversions(names: Iterable[str], cache: ClosureCache, bound: int, compare: int) -> Report:
    """Weak inversion keeps the generated category; strong inversion adds the half-liberation."""
    report = Report()
    for name in names:
        p = NAMED[name]
        w = weak_inversion(p)
        nb = _bound_for([w], bound)
        ok = same_upto(cache.get([p], nb), cache.get([w], nb), compare)
        report.add("weak_inversion", name, ok, "" if ok else _join(p, w), f"bound={nb}")
        s = strong_inversion(p)
        nb = _bound_for([s], bound)
        ok = same_upto(cache.get([p, HALF_LIB_WBW], nb), cache.get([s], nb), compare)
        report.add("strong_inversion", name, ok, "" if ok else _join(p, s), f"bound={nb}")
    return report


def check_four_way(cache: ClosureCache, bound: int, compare: int) -> Report:
    report = Report()
    gens = [("bracket_bwbw", BRACKET_BWBW), ("halflib_wbw", HALF_LIB_WBW),
            ("halflib_bwb", HALF_LIB_BWB), ("bracket_wbwb", BRACKET_WBWB)]
    ref = cache.get([gens[0][1]], bound)
    for name, g in gens[1:]:
        ok = same_upto(ref, cache.get([g], bound), compare)
        report.add("four_way", f"bracket_bwbw=={name}", ok, "" if ok else str(g), f"bound={bound}")
    return report


def check_bracket_generation(names: Iterable[str], cache: ClosureCache, bound: int, compare: int) -> Report:
    """The brackets of a closure, and already its residual brackets, regenerate it."""
    report = Report()
    for name in names:
        c = cache.get([NAMED[name]], bound)
        brs = list(dict.fromkeys(brackets_of(c)))
        ok = same_upto(c, closure(brs, ClosureConfig(bound, **cache.config)), compare)
        report.add("bracket_generation", name, ok, "", f"brackets={len(brs)}")
        res = [q for q in brs if residual_kind(q) is not ResidualKind.NONE]
        ok = same_upto(c, closure(res, ClosureConfig(bound, **cache.config)), compare)
        report.add("residual_generation", name, ok, "", f"residual={len(res)}")
    return report


def check_bracket_operations(names: Iterable[str], cache: ClosureCache, bound: int) -> Report:
    """Arg(p) ∈ <p> and p ⊠ q ∈ <p, q> for same-colored pairs of the instances."""
    report = Report()
    ps = [(n, NAMED[n]) for n in names if is_bracket(NAMED[n])]
    for name, p in ps:
        a = arg(p)
        report.add("arg_member", name, a in cache.get([p], bound), "", "")
    for i, (n1, p) in enumerate(ps):
        for n2, q in ps[i:]:
            if start_color(p) is not start_color(q):
                continue
            r = bracket_product(p, q)
            if len(r) > bound:
                continue
            ok = r in cache.get([p, q], bound)
            report.add("product_member", f"{n1}*{n2}", ok, "" if ok else str(r), "")
    return report


def verify_lemmas(max_points: int = 8, closure_bound: int = 10, compare: int = 6,
                  cache: ClosureCache | None = None, closures: bool = True) -> Report:
    """Exhaustive invariant suites up to ``max_points`` plus the bounded generation lemmas."""
    report = Report()
    report.extend(check_anti_symmetry(max_points))
    report.extend(check_decomposition(max_points))
    report.extend(check_associated_brackets(max_points))
    if closures:
        cache = cache or ClosureCache()
        report.extend(check_de_erasing(DE_ERASING_INSTANCES, cache, closure_bound, compare))
        report.extend(check_inversions(("GEN1", "GEN2", "P_b1"), cache, closure_bound, compare))
        report.extend(check_four_way(cache, closure_bound, compare))
        report.extend(check_bracket_operations(("GEN1", "GEN2", "P_b1"), cache, closure_bound))
    return report
