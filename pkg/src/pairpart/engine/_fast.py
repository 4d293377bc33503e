"""Compiled composition kernel for the orbit engine.

Words of up to 12 points are packed into one uint64, five bits per point
(``color | offset << 1``), most significant point first, so integer order
agrees with the byte order used by :func:`words.orbit_key`.
"""

from __future__ import annotations

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

MAX_PACKED = 12
BITS = 5

if numba is not None:

    @njit(cache=True)
    def _pack_min(col, mate, n, dihedral):
        best = np.uint64(0xFFFFFFFFFFFFFFFF)
        for s in range(n):
            v = np.uint64(0)
            for t in range(n):
                i = (s + t) % n
                code = col[i] | (((mate[i] - i) % n) << 1)
                v = (v << np.uint64(BITS)) | np.uint64(code)
            if v < best:
                best = v
        if dihedral:
            # reflected word: position i -> n-1-i, color inverted, offset negated
            for s in range(n):
                v = np.uint64(0)
                for t in range(n):
                    r = (s + t) % n
                    i = n - 1 - r
                    code = (1 - col[i]) | (((i - mate[i]) % n) << 1)
                    v = (v << np.uint64(BITS)) | np.uint64(code)
                if v < best:
                    best = v
        return best

    @njit(cache=True)
    def _glue(c1, m1, n1, start, k, c2, m2, n2, oc, om):
        # colors already checked by the caller; returns the result size
        x = n1 - k
        out_n = n1 + n2 - 2 * k
        for i in range(out_n):
            om[i] = -1
        for t in range(k, n1):
            oc[t - k] = c1[(start + t) % n1]
        for u in range(k, n2):
            oc[x + u - k] = c2[u]
        for o in range(out_n):
            if om[o] >= 0:
                continue
            if o < x:
                side = 0
                pos = (m1[(start + o + k) % n1] - start) % n1
            else:
                side = 1
                pos = m2[o - x + k]
            while True:
                if side == 0:
                    if pos >= k:
                        e = pos - k
                        break
                    side = 1
                    pos = m2[k - 1 - pos]
                else:
                    if pos >= k:
                        e = x + pos - k
                        break
                    side = 0
                    pos = (m1[(start + k - 1 - pos) % n1] - start) % n1
            om[o] = e
            om[e] = o
        return out_n

    @njit(cache=True)
    def compose_kernel(bcol, bmate, bsize, brank, bcap, vcol, vmate, vsize, vrank, vcap, vnew,
                       offs, entries, known, N, dihedral, minimal_only, skip_k0, prune_caps):
        """Glue every base word with every indexed variant it may compose with.

        ``bcap``/``vcap`` hold one bit per adjacency ``(i, i+1)`` whose points
        are mates.  With ``prune_caps`` a gluing is skipped when a cap lies
        wholly inside the glued arc or wholly outside it on either side: the
        result then follows from a smaller gluing plus a turn erasure or a
        tensor product with a base pair.

        Returns the packed canonical keys of results not in ``known``.
        """
        found = set()
        found.add(np.uint64(0))
        found.remove(np.uint64(0))
        oc = np.empty(2 * N + 2, dtype=np.int64)
        om = np.empty(2 * N + 2, dtype=np.int64)
        nb = bsize.shape[0]
        for b in range(nb):
            n = bsize[b]
            c1 = bcol[b]
            m1 = bmate[b]
            r = brank[b]
            caps = bcap[b]
            for m in range(0, N + 1, 2):
                kmin = n + m - N
                if kmin < 0:
                    kmin = 0
                kmin = (kmin + 1) // 2
                kmax = min(n, m)
                if minimal_only:
                    if kmin == 0 and skip_k0:
                        continue
                    if kmax > kmin:
                        kmax = kmin
                for k in range(max(kmin, 1), kmax + 1):
                    for s in range(n):
                        if prune_caps and caps:
                            edge = (1 << ((s + k - 1) % n)) | (1 << ((s + n - 1) % n))
                            if caps & ~edge:
                                continue
                        prefix = 0
                        for t in range(k):
                            bit = 1 - c1[(s + k - 1 - t) % n]
                            prefix |= bit << t
                        lo = offs[k, m // 2, prefix]
                        hi = offs[k, m // 2, prefix + 1]
                        for e in range(lo, hi):
                            v = entries[k, e]
                            if vnew[v] and vrank[v] < r:
                                continue
                            if prune_caps and vcap[v] & ~((1 << (k - 1)) | (1 << (vsize[v] - 1))):
                                continue
                            out_n = _glue(c1, m1, n, s, k, vcol[v], vmate[v], vsize[v], oc, om)
                            key = _pack_min(oc, om, out_n, dihedral) if out_n > 0 else np.uint64(0)
                            j = np.searchsorted(known, key)
                            if j < known.shape[0] and known[j] == key:
                                continue
                            found.add(key)
        out = np.empty(len(found), dtype=np.uint64)
        i = 0
        for key in found:
            out[i] = key
            i += 1
        return out


def cap_mask(mates) -> int:
    n = len(mates)
    return sum(1 << i for i in range(n) if n > 1 and mates[i] == (i + 1) % n)


def available(N: int) -> bool:
    return numba is not None and N <= MAX_PACKED


def pack_key(key: bytes) -> int:
    v = 0
    for b in key:
        v = (v << BITS) | b
    return v


def unpack_key(v: int, n: int) -> bytes:
    out = bytearray(n)
    for i in range(n - 1, -1, -1):
        out[i] = v & ((1 << BITS) - 1)
        v >>= BITS
    return bytes(out)


def packed_size(v: int) -> int:
    # every code is non-zero (offsets are at least 1), so the size is the
    # number of 5-bit digits
    n = 0
    while v:
        v >>= BITS
        n += 1
    return n
