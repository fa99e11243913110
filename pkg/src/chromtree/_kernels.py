"""Edge-subset enumeration kernels.

Every kernel walks the edge subsets ``mask`` in ``range(start, stop)`` of a
graph given as parallel endpoint arrays ``us, vs``. Two interchangeable
backends exist: numba ``@njit`` loops and a vectorized pure-numpy path. The
numpy path is used when numba is missing or when the environment variable
``CHROMTREE_DISABLE_NUMBA`` is set to a truthy value.

Component types are packed into one int64 per subset: with the parts sorted
descending, bit ``s - 1`` is set for every proper partial sum ``s < n``.
Distinct partitions of ``n`` get distinct ``(n-1)``-bit masks.
"""

from __future__ import annotations

import os

import numpy as np

DISABLE_ENV = "CHROMTREE_DISABLE_NUMBA"

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

NUMBA_CHUNK = 1 << 20
NUMPY_CHUNK = 1 << 15


def _env_disables_numba() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


def default_backend() -> str:
    if HAVE_NUMBA and not _env_disables_numba():
        return "numba"
    return "numpy"


def encode_type(parts, n: int) -> int:
    code = 0
    s = 0
    for p in sorted(parts, reverse=True):
        s += p
        if s < n:
            code |= 1 << (s - 1)
    return code


def decode_type(code: int, n: int) -> tuple[int, ...]:
    parts = []
    last = 0
    for s in range(1, n):
        if code >> (s - 1) & 1:
            parts.append(s - last)
            last = s
    parts.append(n - last)
    return tuple(parts)


# ---------------------------------------------------------------- numpy path


def _bits(start: int, stop: int, m: int) -> np.ndarray:
    masks = np.arange(start, stop, dtype=np.int64)
    return ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(bool)


def _type_codes_numpy(n, us, vs, start, stop):
    m = len(us)
    bits = _bits(start, stop, m)
    count = stop - start
    labels = np.tile(np.arange(n, dtype=np.int64), (count, 1))
    changed = m > 0
    while changed:
        changed = False
        for e in range(m):
            lu = labels[:, us[e]]
            lv = labels[:, vs[e]]
            upd = bits[:, e] & (lu != lv)
            if upd.any():
                low = np.minimum(lu, lv)[upd]
                labels[upd, us[e]] = low
                labels[upd, vs[e]] = low
                changed = True
    sizes = (labels[:, :, None] == np.arange(n)).sum(axis=1)
    sizes = -np.sort(-sizes, axis=1)
    sums = np.cumsum(sizes, axis=1)
    valid = (sizes > 0) & (sums < n)
    shifts = np.where(valid, sums - 1, 0)
    codes = np.where(valid, np.left_shift(np.int64(1), shifts), 0).sum(axis=1).astype(np.int64)
    parity = (bits.sum(axis=1) & 1).astype(np.int8)
    return codes, parity


def _subtree_stats_numpy(n, us, vs, start, stop):
    m = len(us)
    bits = _bits(start, stop, m).astype(np.int64)
    incidence = np.zeros((m, n), dtype=np.int64)
    incidence[np.arange(m), us] = 1
    incidence[np.arange(m), vs] = 1
    deg = bits @ incidence
    k = bits.sum(axis=1)
    touched = (deg > 0).sum(axis=1)
    ok = (k >= 1) & (touched == k + 1)
    leafy = ((deg[:, us] == 1) | (deg[:, vs] == 1)) & bits.astype(bool)
    leaves = leafy.sum(axis=1)
    sizes = np.where(ok, k, -1).astype(np.int64)
    return sizes, np.where(ok, leaves, 0).astype(np.int64)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _type_codes_numba(n, us, vs, start, stop):
        m = us.shape[0]
        count = stop - start
        codes = np.empty(count, np.int64)
        parity = np.empty(count, np.int8)
        parent = np.empty(n, np.int64)
        size = np.empty(n, np.int64)
        hist = np.zeros(n + 1, np.int64)
        one = np.int64(1)
        for idx in range(count):
            mask = np.int64(start + idx)
            for v in range(n):
                parent[v] = v
                size[v] = 1
            nbits = 0
            for e in range(m):
                if (mask >> e) & 1:
                    nbits += 1
                    a = us[e]
                    while parent[a] != a:
                        parent[a] = parent[parent[a]]
                        a = parent[a]
                    b = vs[e]
                    while parent[b] != b:
                        parent[b] = parent[parent[b]]
                        b = parent[b]
                    if a != b:
                        if size[a] < size[b]:
                            a, b = b, a
                        parent[b] = a
                        size[a] += size[b]
            for v in range(n):
                if parent[v] == v:
                    hist[size[v]] += 1
            code = np.int64(0)
            s = 0
            for part in range(n, 0, -1):
                c = hist[part]
                if c:
                    for _ in range(c):
                        s += part
                        if s < n:
                            code |= one << (s - 1)
                    hist[part] = 0
            codes[idx] = code
            parity[idx] = nbits & 1
        return codes, parity

    @njit(cache=True)
    def _subtree_stats_numba(n, us, vs, start, stop):
        m = us.shape[0]
        count = stop - start
        sizes = np.empty(count, np.int64)
        leaves = np.zeros(count, np.int64)
        deg = np.zeros(n, np.int64)
        for idx in range(count):
            mask = np.int64(start + idx)
            for v in range(n):
                deg[v] = 0
            k = 0
            for e in range(m):
                if (mask >> e) & 1:
                    k += 1
                    deg[us[e]] += 1
                    deg[vs[e]] += 1
            touched = 0
            for v in range(n):
                if deg[v] > 0:
                    touched += 1
            if k >= 1 and touched == k + 1:
                sizes[idx] = k
                nleaf = 0
                for e in range(m):
                    if (mask >> e) & 1:
                        if deg[us[e]] == 1 or deg[vs[e]] == 1:
                            nleaf += 1
                leaves[idx] = nleaf
            else:
                sizes[idx] = -1
        return sizes, leaves


# ---------------------------------------------------------------- dispatch


def _as_arrays(edges):
    us = np.array([u for u, _ in edges], dtype=np.int64)
    vs = np.array([v for _, v in edges], dtype=np.int64)
    return us, vs


def _run(kernel_name, n, edges, backend, start=0, stop=None):
    backend = backend or default_backend()
    us, vs = _as_arrays(edges)
    if stop is None:
        stop = 1 << len(edges)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        fn = _type_codes_numba if kernel_name == "types" else _subtree_stats_numba
        chunk = NUMBA_CHUNK
    elif backend == "numpy":
        fn = _type_codes_numpy if kernel_name == "types" else _subtree_stats_numpy
        chunk = NUMPY_CHUNK
    else:
        raise ValueError(f"unknown backend {backend!r}")
    for lo in range(start, stop, chunk):
        hi = min(stop, lo + chunk)
        yield lo, fn(n, us, vs, lo, hi)


def type_counts(n: int, edges, backend: str | None = None, forbidden: int | None = None) -> dict[int, int]:
    """Signed count ``sum (-1)^|A|`` per packed component type over all edge subsets.

    When ``forbidden`` is a bitmask, subsets containing all of its bits are skipped.
    """
    totals: dict[int, int] = {}
    for lo, (codes, parity) in _run("types", n, edges, backend):
        if forbidden is not None:
            masks = np.arange(lo, lo + len(codes), dtype=np.int64)
            keep = (masks & forbidden) != forbidden
            codes, parity = codes[keep], parity[keep]
        keys = codes * 2 + parity
        uniq, counts = np.unique(keys, return_counts=True)
        for key, cnt in zip(uniq.tolist(), counts.tolist()):
            code, odd = key >> 1, key & 1
            totals[code] = totals.get(code, 0) + (-cnt if odd else cnt)
    return {c: v for c, v in totals.items() if v}


def subtree_counts(n: int, edges, backend: str | None = None) -> dict[tuple[int, int], int]:
    """``{(edges, leaf_edges): count}`` over connected nonempty edge subsets of a tree."""
    totals: dict[tuple[int, int], int] = {}
    for _, (sizes, leaves) in _run("subtrees", n, edges, backend):
        ok = sizes >= 0
        keys = sizes[ok] * 64 + leaves[ok]
        uniq, counts = np.unique(keys, return_counts=True)
        for key, cnt in zip(uniq.tolist(), counts.tolist()):
            k = (key // 64, key % 64)
            totals[k] = totals.get(k, 0) + cnt
    return totals
