"""Bounded closure of a generator set under category operations.

Two engines compute the same least fixpoint:

* the orbit engine stores one-line words up to rotation (and reflection when
  involution or verticolor reflection is enabled).  It is used whenever the
  rotations are among the operations and all generators are pair partitions;
* the explicit engine stores every partition with its row split and applies
  the operations literally.  It handles every other configuration and doubles
  as an independent check of the orbit engine at small bounds.

Both run semi-naively: each round only combines new members with all members.
"""

from __future__ import annotations

import logging
import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from ..core import Partition, PartitionError, cyclic_sequence, parse
from .. import ops as _ops
from ..structure import is_pair_neutral
from . import _fast
from .enumeration import orbit_count
from .words import (
    Word,
    decode,
    erase_turn,
    glue,
    insert,
    is_neutral_word,
    orbit_key,
    rotations,
    splits,
    word_of,
)

log = logging.getLogger(__name__)

ALL_OPS = frozenset({"tensor", "compose", "involute", "rotate",
                     "verticolor_reflect", "erase_neutral_interval"})
_ALIASES = {"involution": "involute", "erase": "erase_neutral_interval",
            "reflect": "verticolor_reflect", "verticolor": "verticolor_reflect",
            "rotation": "rotate"}

# universe sizes are counted up front only this far (0.5 s at 12 points)
SATURATION_MAX_POINTS = 12
SATURATION_CHUNK = 2048

BASE_PARTITIONS = tuple(parse(t) for t in ("w/w;L1U1", "b/b;L1U1", "/wb;L1L2", "/bw;L1L2"))


def parse_ops(names: Iterable[str] | str) -> frozenset[str]:
    if isinstance(names, str):
        names = [x for x in names.split(",") if x.strip()]
    out = set()
    for name in names:
        name = _ALIASES.get(name.strip(), name.strip())
        if name not in ALL_OPS:
            raise PartitionError(f"unknown operation {name!r}; known: {', '.join(sorted(ALL_OPS))}")
        out.add(name)
    if not out:
        raise PartitionError("operation set must not be empty")
    return frozenset(out)


@dataclass(frozen=True)
class ClosureConfig:
    max_points: int
    op_set: frozenset[str] = ALL_OPS
    seed_base: bool = True
    jobs: int = 1
    engine: str = "auto"    # "auto", "orbit" or "explicit"
    kernel: str = "auto"    # "auto" uses the compiled gluing kernel when present

    def __post_init__(self):
        if self.max_points < 2:
            raise PartitionError("max_points must be at least 2")
        object.__setattr__(self, "op_set", parse_ops(self.op_set))
        if self.engine not in ("auto", "orbit", "explicit"):
            raise PartitionError(f"unknown engine {self.engine!r}")
        if self.kernel not in ("auto", "python"):
            raise PartitionError(f"unknown kernel {self.kernel!r}")

    @property
    def quotient(self) -> str:
        """``dihedral``, ``cyclic`` or ``none`` depending on the operations."""
        if "rotate" not in self.op_set:
            return "none"
        if self.op_set & {"involute", "verticolor_reflect"}:
            return "dihedral"
        return "cyclic"


@dataclass
class ClosureSet:
    """A closure result.

    For the orbit engine ``keys`` holds one canonical word per orbit; for the
    explicit engine it holds the canonical text of every member.  Use
    ``in``, :meth:`partitions` and :meth:`keys_upto` rather than the raw keys.
    """

    bound: int
    generators: tuple[Partition, ...]
    config: ClosureConfig
    quotient: str
    keys: frozenset = field(repr=False)
    rounds: int = 0

    def key_of(self, p: Partition):
        if self.quotient == "none":
            return str(p)
        if not p.is_pair:
            return None
        return orbit_key(*word_of(p), dihedral=self.quotient == "dihedral")

    def __contains__(self, p: Partition) -> bool:
        return len(p) <= self.bound and self.key_of(p) in self.keys

    def __len__(self) -> int:
        return len(self.keys)

    def keys_upto(self, max_points: int) -> frozenset:
        if self.quotient == "none":
            return frozenset(k for k in self.keys if len(parse(k)) <= max_points)
        return frozenset(k for k in self.keys if len(k) <= max_points)

    def words(self) -> Iterator[Word]:
        if self.quotient == "none":
            raise PartitionError("explicit closures have no word form")
        for k in sorted(self.keys, key=lambda k: (len(k), k)):
            yield decode(k)

    def partitions(self, max_points: int | None = None) -> Iterator[Partition]:
        """Every member partition, each row split and orientation included."""
        limit = self.bound if max_points is None else max_points
        if self.quotient == "none":
            for k in sorted(self.keys):
                p = parse(k)
                if len(p) <= limit:
                    yield p
            return
        seen: set[str] = set()
        for word in self.words():
            if len(word[0]) > limit:
                continue
            for variant in rotations(word, self.quotient == "dihedral") if word[0] else [word]:
                for p in splits(variant):
                    text = str(p)
                    if text not in seen:
                        seen.add(text)
                        yield p

    @property
    def members(self) -> frozenset[Partition]:
        return frozenset(self.partitions())


def closure(generators: Sequence[Partition], cfg: ClosureConfig | int,
            order_seed: int | None = None) -> ClosureSet:
    """Least set containing the generators and closed under ``cfg.op_set``,
    keeping only partitions with at most ``cfg.max_points`` points.

    ``order_seed`` shuffles the processing order; the result must not depend
    on it.
    """
    if isinstance(cfg, int):
        cfg = ClosureConfig(cfg)
    gens = tuple(generators)
    for g in gens:
        if len(g) > cfg.max_points:
            raise PartitionError(f"generator {g} exceeds the bound {cfg.max_points}")
    seeds = list(gens) + (list(BASE_PARTITIONS) if cfg.seed_base else [])
    use_orbits = cfg.quotient != "none" and all(p.is_pair for p in seeds)
    if cfg.engine == "orbit" and not use_orbits:
        raise PartitionError("the orbit engine needs rotations and pair partitions")
    if cfg.engine == "explicit" or not use_orbits:
        keys, rounds = _explicit_closure(seeds, cfg, order_seed)
        return ClosureSet(cfg.max_points, gens, cfg, "none", frozenset(keys), rounds)
    dihedral = cfg.quotient == "dihedral"
    keys, rounds = _OrbitClosure(cfg, dihedral, order_seed).run([word_of(p) for p in seeds])
    return ClosureSet(cfg.max_points, gens, cfg, cfg.quotient, frozenset(keys), rounds)


# -- orbit engine --------------------------------------------------------------

# worker state for process pools (inherited through fork)
_SHARED: dict = {}


class _OrbitClosure:
    def __init__(self, cfg: ClosureConfig, dihedral: bool, order_seed: int | None):
        self.cfg = cfg
        self.N = cfg.max_points
        self.dihedral = dihedral
        self.order_seed = order_seed
        ops = cfg.op_set
        self.do_tensor = "tensor" in ops
        self.do_compose = "compose" in ops
        self.do_erase = "erase_neutral_interval" in ops
        # Gluing k arc points equals gluing k-1 of them and erasing the turn
        # left behind.  With turn erasing available only the least k whose
        # result fits the bound is glued directly; k = 0 is the tensor product.
        self.minimal_glue_only = self.do_erase
        # A cap (adjacent mates) away from the gluing boundary can be split
        # off: the result is a smaller gluing plus a turn erasure or a tensor
        # product with a base pair.  Only the compiled kernel prunes this way;
        # the python path stays exhaustive as a reference.
        self.prune_caps = self.do_erase and self.do_tensor
        self.words: dict[bytes, Word] = {}
        self.rank: dict[bytes, int] = {}
        self.variants: dict[bytes, list[Word]] = {}
        # (size, k, prefix colors) -> list of (key, variant)
        self.index: dict[tuple, list] = defaultdict(list)
        self.by_size: dict[int, list[bytes]] = defaultdict(list)
        self.fast = (self.do_compose and cfg.kernel == "auto" and _fast.available(self.N))
        self._vrows: list[tuple[Word, int]] = []   # (variant, owner rank)
        self._arrays = None

    def key(self, word: Word) -> bytes:
        return orbit_key(word[0], word[1], self.dihedral)

    def _add(self, key: bytes) -> None:
        word = decode(key)
        self.words[key] = word
        self.rank[key] = len(self.rank)
        n = len(word[0])
        self.by_size[n].append(key)
        vs = list(rotations(word, self.dihedral)) if n else [word]
        # drop repeated variants of symmetric words
        uniq = list(dict.fromkeys(vs))
        self.variants[key] = uniq
        if self.fast:
            r = self.rank[key]
            self._vrows.extend((v, r) for v in uniq)
        elif self.do_compose:
            for v in uniq:
                colors = v[0]
                for k in range(1, n + 1):
                    self.index[(n, k, colors[:k])].append((key, v))

    def run(self, seeds: list[Word]) -> tuple[set[bytes], int]:
        new = sorted({self.key(w) for w in seeds})
        for k in new:
            self._add(k)
        # Every operation keeps pairs neutral, so neutral seeds can never
        # leave the neutral words.  Once every size is full the closure is
        # that whole universe and the search can stop.
        target = None
        if self.N <= SATURATION_MAX_POINTS and all(is_neutral_word(w) for w in seeds):
            target = {n: orbit_count(n, self.dihedral) for n in range(0, self.N + 1, 2)}
        rounds = 0
        while new:
            rounds += 1
            if self.order_seed is not None:
                random.Random(self.order_seed + rounds).shuffle(new)
            if self.fast:
                self._prepare_arrays(set(new))
            found, full = self._round_chunked(new, target)
            fresh = sorted(k for k in found if k not in self.words)
            if self.order_seed is not None:
                random.Random(self.order_seed - rounds).shuffle(fresh)
            log.info("round %d: %d new, %d members%s", rounds, len(fresh),
                     len(self.words) + len(fresh), " (saturated)" if full else "")
            for k in fresh:
                self._add(k)
            new = [] if full else fresh
        return set(self.words), rounds

    def _round_chunked(self, new: list[bytes], target: dict[int, int] | None):
        if target is None:
            return self._round(new, set(new)), False
        new_set = set(new)
        counts = {n: len(self.by_size.get(n, ())) for n in target}
        found: set[bytes] = set()
        step = SATURATION_CHUNK * max(1, self.cfg.jobs)
        for i in range(0, len(new), step):
            for k in self._round(new[i:i + step], new_set):
                if k not in found and k not in self.words:
                    found.add(k)
                    counts[len(k)] += 1
            if counts == target:
                return found, True
        return found, False

    def _round(self, new: list[bytes], new_set: set[bytes]) -> set[bytes]:
        jobs = max(1, self.cfg.jobs)
        if jobs == 1 or len(new) < 2 * jobs:
            return self.expand(new, new_set)
        chunks = [new[i::jobs] for i in range(jobs)]
        _SHARED["engine"] = self
        _SHARED["new_set"] = new_set
        try:
            import multiprocessing as mp
            ctx = mp.get_context("fork")
            with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
                parts = list(pool.map(_expand_chunk, chunks))
        finally:
            _SHARED.clear()
        out: set[bytes] = set()
        for part in parts:
            out |= part
        return out

    def expand(self, new: list[bytes], new_set: set[bytes] | None = None) -> set[bytes]:
        """Everything one operation makes from ``new`` and the members.

        ``new_set`` is the whole round's new keys; pairs of two new keys are
        expanded from the higher ranked side only.
        """
        out: set[bytes] = set()
        new_set = set(new) if new_set is None else new_set
        words, N = self.words, self.N
        for key in new:
            word = words[key]
            n = len(word[0])
            if self.do_erase:
                for i in range(n):
                    w = erase_turn(word, i)
                    if w is not None:
                        out.add(self.key(w))
            if self.do_tensor:
                self._tensor(key, word, new_set, out)
            if self.do_compose and not self.fast:
                self._compose(key, word, new_set, out)
                if not self.do_tensor:
                    self._glue_empty(key, word, new_set, out)
        if self.fast:
            self._compose_fast(new, new_set, out)
            if not self.do_tensor:
                # the kernel skips the empty interface; do it here
                for key in new:
                    self._glue_empty(key, words[key], new_set, out)
        return out

    def _prepare_arrays(self, new_set: set[bytes]) -> None:
        N = self.N
        rows = self._vrows
        V = len(rows)
        vcol = np.zeros((V, N), dtype=np.int64)
        vmate = np.zeros((V, N), dtype=np.int64)
        vsize = np.zeros(V, dtype=np.int64)
        vrank = np.zeros(V, dtype=np.int64)
        vcap = np.zeros(V, dtype=np.int64)
        for i, ((c, m), r) in enumerate(rows):
            n = len(c)
            vcol[i, :n] = c
            vmate[i, :n] = m
            vsize[i] = n
            vrank[i] = r
            vcap[i] = _fast.cap_mask(m)
        new_ranks = np.array(sorted(self.rank[k] for k in new_set), dtype=np.int64)
        vnew = np.isin(vrank, new_ranks)
        # prefix bits of every variant, bit t = color t
        weights = (1 << np.arange(N, dtype=np.int64))
        prefixes = np.cumsum(vcol * weights, axis=1)
        half = N // 2 + 1
        offs = np.zeros((N + 1, half, (1 << N) + 1), dtype=np.int64)
        entries = np.zeros((N + 1, max(V, 1)), dtype=np.int64)
        for k in range(1, N + 1):
            ids = np.nonzero(vsize >= k)[0]
            code = (vsize[ids] // 2) * (1 << k) + prefixes[ids, k - 1]
            order = np.argsort(code, kind="stable")
            ids, code = ids[order], code[order]
            entries[k, : len(ids)] = ids
            grid = np.arange(half * (1 << k) + 1, dtype=np.int64)
            bounds = np.searchsorted(code, grid, side="left")
            offs[k, :, : (1 << k) + 1] = np.stack(
                [bounds[h * (1 << k): (h + 1) * (1 << k) + 1] for h in range(half)])
        known = np.array(sorted(_fast.pack_key(k) for k in self.words), dtype=np.uint64)
        self._arrays = (vcol, vmate, vsize, vrank, vcap, vnew, offs, entries, known)

    def _compose_fast(self, new: list[bytes], new_set: set[bytes], out: set[bytes]) -> None:
        N = self.N
        B = len(new)
        bcol = np.zeros((B, N), dtype=np.int64)
        bmate = np.zeros((B, N), dtype=np.int64)
        bsize = np.zeros(B, dtype=np.int64)
        brank = np.zeros(B, dtype=np.int64)
        bcap = np.zeros(B, dtype=np.int64)
        for i, key in enumerate(new):
            c, m = self.words[key]
            bcol[i, : len(c)] = c
            bmate[i, : len(m)] = m
            bsize[i] = len(c)
            brank[i] = self.rank[key]
            bcap[i] = _fast.cap_mask(m)
        vcol, vmate, vsize, vrank, vcap, vnew, offs, entries, known = self._arrays
        res = _fast.compose_kernel(bcol, bmate, bsize, brank, bcap, vcol, vmate, vsize, vrank,
                                   vcap, vnew, offs, entries, known, N, self.dihedral,
                                   self.minimal_glue_only, self.do_tensor, self.prune_caps)
        for v in res.tolist():
            out.add(_fast.unpack_key(v, _fast.packed_size(v)))

    def _glue_empty(self, key: bytes, word: Word, new_set: set[bytes], out: set[bytes]) -> None:
        n = len(word[0])
        for m in range(0, self.N - n + 1, 2):
            for q in self._partners(key, new_set, m):
                for v in self.variants[q]:
                    for gap in range(max(n, 1)):
                        out.add(self.key(insert(word, gap, v)))

    def _partners(self, key: bytes, new_set: set[bytes], size: int) -> Iterator[bytes]:
        r = self.rank[key]
        for q in self.by_size.get(size, ()):
            if q not in new_set or self.rank[q] >= r:
                yield q

    def _tensor(self, key: bytes, word: Word, new_set: set[bytes], out: set[bytes]) -> None:
        n = len(word[0])
        for m in range(0, self.N - n + 1, 2):
            for q in self._partners(key, new_set, m):
                for v in self.variants[q]:
                    for gap in range(max(n, 1)):
                        out.add(self.key(insert(word, gap, v)))

    def _compose(self, key: bytes, word: Word, new_set: set[bytes], out: set[bytes]) -> None:
        colors = word[0]
        n = len(colors)
        N = self.N
        r = self.rank[key]
        rank = self.rank
        for m in range(0, N + 1, 2):
            kmin = max(0, (n + m - N + 1) // 2)
            kmax = min(n, m)
            if self.minimal_glue_only:
                if kmin == 0 and self.do_tensor:
                    continue
                kmax = min(kmax, kmin)
            for k in range(kmin, kmax + 1):
                if k == 0:
                    # empty interface: the tensor product, done separately
                    continue
                for s in range(n):
                    target = tuple(1 - colors[(s + k - 1 - t) % n] for t in range(k))
                    for q, v in self.index.get((m, k, target), ()):
                        if q in new_set and rank[q] < r:
                            continue
                        w = glue(word, s, k, v)
                        if w is not None:
                            out.add(self.key(w))


def _expand_chunk(chunk: list[bytes]) -> set[bytes]:
    return _SHARED["engine"].expand(chunk, _SHARED["new_set"])


# -- explicit engine -------------------------------------------------------------

def _turns_of(p: Partition) -> list[tuple]:
    seq = cyclic_sequence(p)
    n = len(seq)
    if n < 2:
        return []
    out = []
    from ..core import color_sum
    for i in range(n):
        pair = (seq[i], seq[(i + 1) % n])
        if color_sum(p, pair) == 0 and pair[0] != pair[1]:
            out.append(pair)
    return out


def _explicit_closure(seeds: list[Partition], cfg: ClosureConfig,
                      order_seed: int | None) -> tuple[set[str], int]:
    N = cfg.max_points
    opset = cfg.op_set
    members: dict[str, Partition] = {}
    by_lower: dict[tuple, list[str]] = defaultdict(list)
    by_upper: dict[tuple, list[str]] = defaultdict(list)
    by_size: dict[int, list[str]] = defaultdict(list)

    def add(p: Partition) -> None:
        t = str(p)
        members[t] = p
        by_lower[p.lower].append(t)
        by_upper[p.upper].append(t)
        by_size[len(p)].append(t)

    new = sorted({str(p) for p in seeds})
    for t in new:
        add(parse(t))
    rounds = 0
    while new:
        rounds += 1
        if order_seed is not None:
            random.Random(order_seed + rounds).shuffle(new)
        found: set[str] = set()
        new_set = set(new)

        def emit(q: Partition) -> None:
            if len(q) <= N:
                found.add(str(q))

        for t in new:
            p = members[t]
            if "involute" in opset:
                emit(_ops.involution(p))
            if "verticolor_reflect" in opset:
                emit(_ops.verticolor_reflect(p))
            if "rotate" in opset:
                for d in _ops.RotationDirection:
                    try:
                        emit(_ops.rotate(p, d))
                    except PartitionError:
                        pass
            if "erase_neutral_interval" in opset:
                for pair in _turns_of(p):
                    emit(_ops.erase(p, pair))
            if "tensor" in opset:
                for size in range(0, N - len(p) + 1):
                    for u in list(by_size.get(size, ())):
                        q = members[u]
                        emit(_ops.tensor(p, q))
                        if u not in new_set:
                            emit(_ops.tensor(q, p))
            if "compose" in opset:
                for u in list(by_lower.get(p.upper, ())):
                    q = members[u]
                    if len(p.lower) + len(q.upper) <= N:
                        emit(_ops.compose(p, q).result)
                # p on top of an old member
                for u in list(by_upper.get(p.lower, ())):
                    if u in new_set:
                        continue
                    q = members[u]
                    if len(q.lower) + len(p.upper) <= N:
                        emit(_ops.compose(q, p).result)
        fresh = sorted(found - members.keys())
        log.info("explicit round %d: %d new", rounds, len(fresh))
        for t in fresh:
            add(parse(t))
        new = fresh
    return set(members), rounds
