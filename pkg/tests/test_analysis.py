import pytest

from pairpart.core import PartitionError, parse
from pairpart.engine.analysis import (
    CaseResult,
    ClosureCache,
    Report,
    associated_bracket_oracle,
    brackets_of,
    check_anti_symmetry,
    check_associated_brackets,
    check_de_erasing,
    check_decomposition,
    classify,
    de_erasing_cases,
    s_w_filter_keys,
    verify_category_closed,
)
from pairpart.brackets import associated_bracket, is_bracket
from pairpart.engine.closure import closure
from pairpart.engine.enumeration import enumerate_p2nb
from pairpart.named import CROSS_WW, GEN1, GEN2, GEN3, HALF_LIB_WBW
from pairpart.structure import sectors


def test_classify():
    r = classify(closure([GEN2], 10), 6)
    assert (r.detected_w, r.matches_S_w_at_bound, r.subset_of_S0) == (2, True, False)
    assert str(r) == "w=2 matches=true"
    r = classify(closure([GEN2, GEN3], 10), 6)
    assert r.detected_w == 1 and r.matches_S_w_at_bound
    r = classify(closure([HALF_LIB_WBW], 8), 6)
    assert r.subset_of_S0 and r.detected_w == 0
    assert str(r).endswith("subset_of_S0=true")
    with pytest.raises(PartitionError):
        classify(closure([CROSS_WW], 6), 8)


def test_brackets_of_closure():
    bs = list(brackets_of(closure([GEN2], 8)))
    assert GEN2 in bs
    assert all(is_bracket(b) for b in bs)


def test_filter_keys():
    assert len(s_w_filter_keys(1, 6)) == 1 + 1 + 4 + 19
    assert s_w_filter_keys(2, 6) < s_w_filter_keys(1, 6)


def test_verify_closed_sets():
    rep = verify_category_closed(closure([CROSS_WW], 6))
    assert rep.ok and len(rep.cases) == 6
    rep = verify_category_closed([CROSS_WW], 4)
    assert not rep.ok
    bad = {c.case for c in rep.failures()}
    assert "involute" not in bad and "compose" in bad
    line = rep.failures()[0].line()
    assert line.startswith("suite=category_closed case=") and "status=fail" in line
    assert "counterexample=" in line and "missing=" in line


def test_report_format():
    r = Report()
    r.add("s", "c", True, detail="x=1")
    assert str(r) == "suite=s case=c status=pass x=1"
    assert CaseResult("s", "c", False, "p").line() == "suite=s case=c status=fail counterexample=p"
    assert not Report([CaseResult("s", "c", False)]).ok


def test_small_suites():
    assert check_anti_symmetry(6).ok
    assert check_decomposition(6).ok
    assert check_associated_brackets(6).ok


def test_associated_oracle_matches():
    for p in enumerate_p2nb(4):
        if len(p):
            for S in sectors(p):
                assert associated_bracket(p, S) == associated_bracket_oracle(p, S)


def test_de_erasing():
    cases = list(de_erasing_cases(GEN1))
    assert len(cases) == 16
    assert all(len(E) == 4 for _, E, _ in cases)
    cache = ClosureCache()
    rep = check_de_erasing(["GEN1"], cache, 10, 6)
    assert rep.ok, str(rep)
    assert cache.hits > 0


def test_cache_reuses_subsets():
    cache = ClosureCache()
    a = cache.get([GEN1], 8)
    b = cache.get([GEN1, GEN2], 8)
    assert cache.hits == 1 and a.keys == b.keys
