"""The ten acceptance criteria as runnable checks.

Each ``criterion_N`` returns a :class:`CriterionResult`; its status is pass
only when every case passes and the wall time stays under the budget.
All bounds, seeds and budgets are fixed here.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from math import prod
from typing import Callable

from .. import ops as _ops
from ..brackets import (
    arg,
    br,
    bracket_product,
    dual,
    dual_identity_chain,
    gen_S0,
    gen_S_w,
    is_bracket,
    is_dualizable,
    start_color,
    verticolor_reflect,
    weak_inversion,
)
from ..core import BLACK, WHITE, Partition, parse, reframe
from ..ops import CyclicDirection, rotate_cyclic
from ..named import CROSS_WW
from ..structure import is_pair_neutral
from ..sw import bracket_weight, in_S_w
from .analysis import (
    ClosureCache,
    Report,
    check_anti_symmetry,
    check_associated_brackets,
    check_de_erasing,
    check_decomposition,
    check_four_way,
    check_inversions,
    classify,
    verify_category_closed,
    DE_ERASING_INSTANCES,
)
from .closure import ClosureConfig, closure
from .enumeration import enumerate_p2nb, neutral_words
from .unk import (
    block_swap_to_outer_cross,
    bracket_to_outer_cross,
    outer_cross_to_block_swap,
    outer_cross_to_bracket,
    unk_block_swap,
    unk_generators,
    unk_outer_cross,
)
from .words import one_line, sector_gcd_word

log = logging.getLogger(__name__)

BUDGETS = {1: 10, 2: 300, 3: 900, 4: 60, 5: 300, 6: 60, 7: 120, 8: 1200, 9: 1800, 10: 600}
NAMES = {
    1: "enumeration_oracle",
    2: "s1_identification",
    3: "generator_theorem",
    4: "color_sum_lemmas",
    5: "s_w_category",
    6: "bracket_calculus",
    7: "associated_bracket_oracle",
    8: "de_erasing_and_inversions",
    9: "classification",
    10: "unitary_series",
}
RANDOM_SEED = 20161017
RANDOM_SETS = 100


@dataclass
class CriterionResult:
    number: int
    report: Report
    elapsed: float
    budget: float
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.report.ok and self.elapsed < self.budget

    def summary(self) -> str:
        failed = len(self.report.failures())
        return (f"criterion={self.number} name={NAMES[self.number]} "
                f"status={'pass' if self.ok else 'fail'} cases={len(self.report.cases)} "
                f"failed={failed} elapsed={self.elapsed:.1f}s budget={self.budget:.0f}s")


def _timed(number: int, body: Callable[[Report], None]) -> CriterionResult:
    report = Report()
    t0 = time.perf_counter()
    body(report)
    elapsed = time.perf_counter() - t0
    res = CriterionResult(number, report, elapsed, BUDGETS[number])
    log.info(res.summary())
    return res


def _texts(ps) -> set[str]:
    return {str(p) for p in ps}


def _double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def naive_one_line(n: int, neutral_only: bool = True) -> set[str]:
    """Generate-and-filter: all pairings from permutations, all colorings."""
    pairings = set()
    for perm in permutations(range(n)):
        pairings.add(tuple(sorted(tuple(sorted(perm[i:i + 2])) for i in range(0, n, 2))))
    out = set()
    for pairing in pairings:
        blocks = ",".join(f"L{a + 1}L{b + 1}" for a, b in pairing)
        for cs in product("wb", repeat=n):
            if neutral_only and any(cs[a] == cs[b] for a, b in pairing):
                continue
            out.add(str(parse(f"/{''.join(cs)};{blocks}")))
    return out


# -- 1 ------------------------------------------------------------------------------------

def criterion_1() -> CriterionResult:
    def body(r: Report) -> None:
        for k in (1, 2, 3, 4):
            n = 2 * k
            got = _texts(enumerate_p2nb(n, "one-line", exact=True))
            expected = _double_factorial(n - 1) * 2 ** k
            oracle = naive_one_line(n)
            r.add("enumeration", f"points={n}", len(got) == expected and got == oracle, "",
                  f"count={len(got)} expected={expected} oracle={len(oracle)}")
    return _timed(1, body)


# -- 2 ------------------------------------------------------------------------------------

def criterion_2(max_points: int = 8) -> CriterionResult:
    def body(r: Report) -> None:
        bad = None
        checked = 0
        for p in enumerate_p2nb(max_points):
            checked += 1
            if in_S_w(p, 1) != is_pair_neutral(p):
                bad = bad or p
        # pair partitions with non-neutral blocks must be rejected too
        for n in range(2, max_points + 1, 2):
            for text in naive_one_line(n, neutral_only=False) if n <= 6 else ():
                p = parse(text)
                for m in range(n + 1):
                    q = reframe(p, 0, m)
                    checked += 1
                    if in_S_w(q, 1) != is_pair_neutral(q):
                        bad = bad or q
        r.add("s1_membership", f"upto{max_points}", bad is None, str(bad) if bad else "",
              f"checked={checked}")
        c = closure([CROSS_WW], ClosureConfig(10))
        got = _texts(c.partitions(6))
        want = _texts(enumerate_p2nb(6))
        r.add("s1_closure", "crossWW/bound=10/compare=6", got == want, "",
              f"closure={len(got)} enumerate={len(want)}")
    return _timed(2, body)


# -- 3 ------------------------------------------------------------------------------------

def criterion_3(ws=(1, 2, 3), bound: int = 12, compare: int = 6) -> CriterionResult:
    def body(r: Report) -> None:
        universe = enumerate_p2nb(compare)
        for w in ws:
            c = closure([gen_S_w(w, BLACK)], ClosureConfig(bound))
            got = _texts(c.partitions(compare))
            want = _texts(p for p in universe if in_S_w(p, w))
            r.add("generator_theorem", f"w={w}/bound={bound}/compare={compare}", got == want, "",
                  f"closure={len(got)} filter={len(want)}")
            bad = None
            for word in c.words():
                rep = one_line(word)
                if sector_gcd_word(word) % w or not in_S_w(rep, w):
                    bad = rep
                    break
            r.add("soundness", f"w={w}/bound={bound}", bad is None, str(bad) if bad else "",
                  f"orbits={len(c)}")
    return _timed(3, body)


# -- 4 ------------------------------------------------------------------------------------

def criterion_4(max_points: int = 8) -> CriterionResult:
    def body(r: Report) -> None:
        r.extend(check_anti_symmetry(max_points))
        r.extend(check_decomposition(max_points))
    return _timed(4, body)


# -- 5 ------------------------------------------------------------------------------------

def criterion_5(ws=(0, 1, 2, 3), max_points: int = 6) -> CriterionResult:
    def body(r: Report) -> None:
        universe = enumerate_p2nb(max_points)
        for w in ws:
            members = [p for p in universe if in_S_w(p, w)]
            sub = verify_category_closed(members, max_points)
            for c in sub.cases:
                r.add("s_w_closed", f"w={w}/{c.case}", c.ok, c.counterexample, c.detail)
    return _timed(5, body)


# -- 6 ------------------------------------------------------------------------------------

def brackets_upto(max_points: int) -> list[Partition]:
    """Every bracket with at most ``max_points`` points."""
    out = []
    for n in range(4, max_points + 1, 2):
        half = n // 2
        if half < 2:
            continue
        for word in neutral_words(n):
            if word[1][0] == half - 1:
                p = reframe(one_line(word), 0, half)
                if is_bracket(p):
                    out.append(p)
    return out


def criterion_6() -> CriterionResult:
    def body(r: Report) -> None:
        b10 = brackets_upto(10)
        bad = [p for p in b10 if br(start_color(p), arg(p)) != p]
        r.add("br_arg", "upto10", not bad, str(bad[0]) if bad else "", f"brackets={len(b10)}")

        b8 = [p for p in b10 if len(p) <= 8]
        bad_assoc = bad_weight = None
        triples = 0
        for p in b8:
            for q in b8:
                if start_color(q) is not start_color(p):
                    continue
                pq = bracket_product(p, q)
                if bracket_weight(pq) != bracket_weight(p) + bracket_weight(q):
                    bad_weight = bad_weight or (p, q)
                for s in b8:
                    if start_color(s) is not start_color(p):
                        continue
                    triples += 1
                    if bracket_product(pq, s) != bracket_product(p, bracket_product(q, s)):
                        bad_assoc = bad_assoc or (p, q, s)
        r.add("product_associative", "upto8", bad_assoc is None,
              "|".join(map(str, bad_assoc)) if bad_assoc else "", f"triples={triples}")
        r.add("weight_additive", "upto8", bad_weight is None,
              "|".join(map(str, bad_weight)) if bad_weight else "", f"brackets={len(b8)}")

        duals = [p for p in b10 if is_dualizable(p)]
        bad_dual = [p for p in duals
                    if dual(dual(p)) != p
                    or rotate_cyclic(p, CyclicDirection.LEFT, len(p) // 2)
                    != rotate_cyclic(p, CyclicDirection.RIGHT, len(p) // 2)]
        r.add("dual_involutive", "upto10", not bad_dual, str(bad_dual[0]) if bad_dual else "",
              f"dualizable={len(duals)}")

        bad_inv = [p for p in b10 if bracket_weight(weak_inversion(p)) != bracket_weight(p)
                   or not is_bracket(verticolor_reflect(p))
                   or start_color(verticolor_reflect(p)) is not start_color(p)]
        r.add("inversion_weights", "upto10", not bad_inv, str(bad_inv[0]) if bad_inv else "", "")

        for c in (BLACK, WHITE):
            for v in (1, 2, 3, 4):
                lhs = dual(gen_S0(v, c.inverse))
                rhs = dual_identity_chain(c, v)
                r.add("dual_identity", f"c={c.value}/v={v}", lhs == rhs,
                      "" if lhs == rhs else f"{lhs}|{rhs}", "")
    return _timed(6, body)


# -- 7 ------------------------------------------------------------------------------------

def criterion_7(max_points: int = 8) -> CriterionResult:
    return _timed(7, lambda r: r.extend(check_associated_brackets(max_points)))


# -- 8 ------------------------------------------------------------------------------------

def criterion_8(bound: int = 10, compare: int = 6, cache: ClosureCache | None = None) -> CriterionResult:
    cache = cache or ClosureCache()

    def body(r: Report) -> None:
        r.extend(check_de_erasing(DE_ERASING_INSTANCES, cache, bound, compare))
        r.extend(check_inversions(("GEN1", "GEN2", "P_b1"), cache, bound, compare))
        r.extend(check_four_way(cache, bound, compare))
    return _timed(8, body)


# -- 9 ------------------------------------------------------------------------------------

def random_generator_sets(count: int = RANDOM_SETS, seed: int = RANDOM_SEED,
                          max_points: int = 6) -> list[list[Partition]]:
    universe = enumerate_p2nb(max_points)
    rng = random.Random(seed)
    return [rng.sample(universe, rng.randint(1, 2)) for _ in range(count)]


def criterion_9(bound: int = 10, compare: int = 6, count: int = RANDOM_SETS,
                seed: int = RANDOM_SEED, cache: ClosureCache | None = None) -> CriterionResult:
    cache = cache or ClosureCache()

    def body(r: Report) -> None:
        memo: dict[int, object] = {}
        for i, gens in enumerate(random_generator_sets(count, seed)):
            c = cache.get(gens, bound)
            rep = memo.get(id(c))
            if rep is None:
                rep = memo[id(c)] = classify(c, compare)
            consistent = not rep.subset_of_S0 or rep.detected_w == 0
            ok = consistent and (rep.subset_of_S0 or rep.matches_S_w_at_bound)
            r.add("classification", f"draw={i}", ok, "" if ok else "|".join(map(str, gens)),
                  f"w={rep.detected_w} subset_of_S0={str(rep.subset_of_S0).lower()} "
                  f"matches={str(rep.matches_S_w_at_bound).lower()}")
    return _timed(9, body)


# -- 10 -----------------------------------------------------------------------------------

def criterion_10(bound: int = 10, compare: int = 6, cache: ClosureCache | None = None) -> CriterionResult:
    cache = cache or ClosureCache()

    def body(r: Report) -> None:
        for k in (1, 2, 3):
            x, g = unk_generators(k)
            ok = cache.get([x], bound).keys_upto(compare) == cache.get([g], bound).keys_upto(compare)
            r.add("unk_closure", f"k={k}", ok, "" if ok else f"{x}|{g}", f"bound={bound}")
            if len(unk_block_swap(k)) <= bound:
                swap = unk_block_swap(k)
                ok = cache.get([swap], bound).keys_upto(compare) == cache.get([g], bound).keys_upto(compare)
                r.add("unk_block_swap_closure", f"k={k}", ok, "" if ok else str(swap), f"bound={bound}")
        for k in (2, 3):
            got = block_swap_to_outer_cross(k)
            r.add("figure_close_strings", f"k={k}", got == unk_outer_cross(k), str(got), "")
            got = outer_cross_to_block_swap(k)
            r.add("figure_stack_crosses", f"k={k}", got == unk_block_swap(k), str(got), "")
            got = outer_cross_to_bracket(k)
            want = br(WHITE, _ops.tensor_all([parse("w/w;L1U1")] * k))
            r.add("figure_to_bracket", f"k={k}", got == want, str(got), "")
            got = bracket_to_outer_cross(k)
            r.add("figure_from_bracket", f"k={k}", got == unk_outer_cross(k), str(got), "")
    return _timed(10, body)


# -- driver -------------------------------------------------------------------------------

def run_all(max_points: int = 8, only=None) -> list[CriterionResult]:
    """Run the criteria in order.  A shared closure cache serves 8, 9 and 10."""
    cache = ClosureCache()
    runners = {
        1: criterion_1,
        2: lambda: criterion_2(max_points),
        3: criterion_3,
        4: lambda: criterion_4(max_points),
        5: criterion_5,
        6: criterion_6,
        7: lambda: criterion_7(max_points),
        8: lambda: criterion_8(cache=cache),
        9: lambda: criterion_9(cache=cache),
        10: lambda: criterion_10(cache=cache),
    }
    return [runners[n]() for n in sorted(runners) if only is None or n in only]
