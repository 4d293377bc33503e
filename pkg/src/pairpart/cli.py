"""Command-line front end.

Results go to stdout in canonical text; progress goes to stderr.  Exit
status: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import ops
from .brackets import (
    arg,
    bracket_info,
    bracket_product,
    dual,
    is_bracket,
    is_dualizable,
    residual_kind,
    strong_inversion,
    weak_inversion,
)
from .core import PartitionError, parse_points
from .engine.analysis import classify, verify_category_closed, verify_lemmas
from .engine.closure import ALL_OPS, ClosureConfig, closure, parse_ops
from .engine.enumeration import Shape, enumerate_p2nb
from .named import NAMED, lookup
from .structure import connected_components, is_noncrossing, is_pair_neutral
from .sw import in_S_w, sector_gcd

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class _Failed(Exception):
    pass


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _fmt(b: bool) -> str:
    return "true" if b else "false"


def _partition_arg(text: str):
    return lookup(text)


def _parser() -> argparse.ArgumentParser:
    names = ", ".join(NAMED)
    ap = argparse.ArgumentParser(
        prog="pairpart",
        description="Two-colored pair partitions with neutral blocks. "
                    f"Partitions are given as 'upper/lower;blocks' or by name ({names}).")
    ap.add_argument("-q", "--quiet", action="store_true", help="suppress progress on stderr")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("show", help="canonical form and basic properties")
    p.add_argument("partition")

    p = sub.add_parser("op", help="apply a category operation")
    p.add_argument("name", choices=["tensor", "compose", "involution", "verticolor-reflect",
                                    "rotate", "rotate-cyclic", "erase"])
    p.add_argument("partitions", nargs="+")
    p.add_argument("--direction", help="rotate: down-left|down-right|up-left|up-right; "
                                       "rotate-cyclic: left|right")
    p.add_argument("--steps", type=int, default=1, help="rotate-cyclic step count")
    p.add_argument("--points", help="erase: points such as L1,L2")

    p = sub.add_parser("member", help="membership in S_w")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("partition")

    p = sub.add_parser("sector-gcd", help="gcd of all sector sums (0 means S_0)")
    p.add_argument("partition")

    p = sub.add_parser("bracket", help="bracket calculus")
    p.add_argument("action", choices=["info", "arg", "product", "win", "sin", "dual", "residual"])
    p.add_argument("partitions", nargs="+")

    p = sub.add_parser("enumerate", help="list neutral pair partitions")
    p.add_argument("--max-points", type=int, required=True)
    p.add_argument("--shape", choices=[s.value for s in Shape], default=Shape.ALL_ROW_SPLITS.value)
    p.add_argument("--exact", action="store_true", help="only partitions with exactly max-points points")
    p.add_argument("--count", action="store_true", help="print only the number of partitions")

    def closure_flags(p):
        p.add_argument("--gen", action="append", default=[], help="generator (repeatable)")
        p.add_argument("--bound", type=int, default=10)
        p.add_argument("--ops", default=",".join(sorted(ALL_OPS)), help="csv of operation names")
        p.add_argument("--seed-base", type=_bool, default=True)
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("closure", help="bounded closure of generators")
    closure_flags(p)
    p.add_argument("--compare", type=int, help="list members up to this many points")
    p.add_argument("--verify", action="store_true", help="check the result is closed")

    p = sub.add_parser("classify", help="detected w of a bounded closure")
    closure_flags(p)
    p.add_argument("--compare", type=int, default=6)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=["all", "lemmas", "closed", "criterion"])
    p.add_argument("--max-points", type=int, default=8)
    p.add_argument("--criteria", default="", help="csv of criterion numbers for 'criterion'")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--compare", type=int, default=6)
    p.add_argument("--gen", action="append", default=[], help="generators for 'closed'")
    return ap


def _one(ps, n: int, what: str):
    if len(ps) != n:
        raise PartitionError(f"{what} takes {n} partition(s), got {len(ps)}")
    return ps


def _config(a) -> ClosureConfig:
    return ClosureConfig(a.bound, parse_ops(a.ops), a.seed_base, max(1, a.jobs))


def _run(a, out) -> int:
    cmd = a.command
    if cmd == "show":
        p = lookup(a.partition)
        print(p, file=out)
        print(f"points={len(p)} lower={len(p.lower)} upper={len(p.upper)} blocks={len(p.blocks)}", file=out)
        neutral = is_pair_neutral(p)
        print(f"pair_neutral={_fmt(neutral)} noncrossing={_fmt(is_noncrossing(p))} "
              f"components={len(connected_components(p))}", file=out)
        if neutral:
            print(f"sector_gcd={sector_gcd(p)}", file=out)
        print(f"bracket={_fmt(is_bracket(p))}", file=out)
        return EXIT_OK

    if cmd == "op":
        ps = [lookup(t) for t in a.partitions]
        name = a.name
        if name == "tensor":
            print(ops.tensor_all(ps), file=out)
        elif name == "compose":
            p, q = _one(ps, 2, "compose")
            print(ops.compose(p, q), file=out)
        elif name == "involution":
            print(ops.involution(_one(ps, 1, name)[0]), file=out)
        elif name == "verticolor-reflect":
            print(ops.verticolor_reflect(_one(ps, 1, name)[0]), file=out)
        elif name == "rotate":
            if not a.direction:
                raise PartitionError("rotate needs --direction")
            print(ops.rotate(_one(ps, 1, name)[0], a.direction), file=out)
        elif name == "rotate-cyclic":
            print(ops.rotate_cyclic(_one(ps, 1, name)[0], a.direction or "left", a.steps), file=out)
        else:
            if not a.points:
                raise PartitionError("erase needs --points")
            print(ops.erase(_one(ps, 1, name)[0], parse_points(a.points)), file=out)
        return EXIT_OK

    if cmd == "member":
        print(_fmt(in_S_w(lookup(a.partition), a.w)), file=out)
        return EXIT_OK

    if cmd == "sector-gcd":
        print(sector_gcd(lookup(a.partition)), file=out)
        return EXIT_OK

    if cmd == "bracket":
        ps = [lookup(t) for t in a.partitions]
        act = a.action
        if act == "product":
            p, q = _one(ps, 2, "product")
            print(bracket_product(p, q), file=out)
            return EXIT_OK
        (p,) = _one(ps, 1, act)
        if act == "info":
            info = bracket_info(p)
            print(info.partition, file=out)
            print(f"start_color={info.start_color.value} weight={info.weight} "
                  f"argument={info.argument} residual={residual_kind(p).value} "
                  f"dualizable={_fmt(is_dualizable(p))}", file=out)
        elif act == "arg":
            print(arg(p), file=out)
        elif act == "win":
            print(weak_inversion(p), file=out)
        elif act == "sin":
            print(strong_inversion(p), file=out)
        elif act == "dual":
            print(dual(p), file=out)
        else:
            print(residual_kind(p).value, file=out)
        return EXIT_OK

    if cmd == "enumerate":
        ps = enumerate_p2nb(a.max_points, a.shape, exact=a.exact)
        if a.count:
            print(len(ps), file=out)
        else:
            for p in sorted(ps, key=lambda p: (len(p), str(p))):
                print(p, file=out)
        return EXIT_OK

    if cmd in ("closure", "classify"):
        gens = [lookup(t) for t in a.gen]
        cs = closure(gens, _config(a))
        if cmd == "classify":
            print(classify(cs, a.compare), file=out)
            return EXIT_OK
        print(f"bound={cs.bound} quotient={cs.quotient} classes={len(cs)} rounds={cs.rounds}", file=out)
        status = EXIT_OK
        if a.compare is not None:
            for p in sorted(cs.partitions(a.compare), key=lambda p: (len(p), str(p))):
                print(p, file=out)
        if a.verify:
            rep = verify_category_closed(cs, min(cs.bound, a.compare or 6))
            print(rep, file=out)
            status = EXIT_OK if rep.ok else EXIT_VERIFY
        return status

    if cmd == "verify":
        return _verify(a, out)
    raise AssertionError(cmd)


def _verify(a, out) -> int:
    if a.suite == "lemmas":
        rep = verify_lemmas(a.max_points, a.bound, a.compare)
        print(rep, file=out)
        return EXIT_OK if rep.ok else EXIT_VERIFY
    if a.suite == "closed":
        gens = [lookup(t) for t in a.gen]
        cs = closure(gens, ClosureConfig(a.bound))
        rep = verify_category_closed(cs, a.max_points)
        print(rep, file=out)
        return EXIT_OK if rep.ok else EXIT_VERIFY
    from .engine.acceptance import run_all

    only = None
    if a.suite == "criterion":
        try:
            only = {int(x) for x in a.criteria.split(",") if x.strip()}
        except ValueError:
            raise PartitionError(f"bad criterion list {a.criteria!r}") from None
        if not only:
            raise PartitionError("verify criterion needs --criteria")
    ok = True
    for res in run_all(a.max_points, only):
        print(res.summary(), file=out)
        for c in res.report.cases:
            if not c.ok:
                print("  " + c.line(), file=out)
        ok = ok and res.ok
    return EXIT_OK if ok else EXIT_VERIFY


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = _parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING if a.quiet else logging.INFO,
                        format="%(message)s", stream=sys.stderr)
    try:
        return _run(a, out)
    except PartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
