"""Hook-length statistics over every partition of n.

Both backends split P(n) into chunks by largest part ``a = n, n-1, ..., 1``
(this is the reverse-lexicographic order), and produce per chunk:

* ``dist[k, v]``: number of partitions in the chunk with exactly v cells of
  hook length k;
* ``best[k]`` / ``wit[k]``: the largest such v and the first partition (in
  enumeration order) attaining it.

Chunks are combined by :func:`combine_chunks`, so the result is independent of
how chunks are scheduled.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from ._accel import njit, prange

# rows per numpy block; bounds peak memory at roughly ROWS * n * n * 8 bytes
_NUMPY_BLOCK_ROWS = 2048


def bounded_partitions(m: int, cap: int) -> Iterator[list[int]]:
    """Partitions of ``m`` with parts <= ``cap`` in reverse-lex order.

    Yields the same mutable list each time; copy it if you keep it.
    """
    if m == 0:
        yield []
        return
    cap = min(cap, m)
    if cap < 1:
        return
    q, r = divmod(m, cap)
    p = [cap] * q + ([r] if r else [])
    while True:
        yield p
        i = len(p) - 1
        while i >= 0 and p[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(p) - i  # trailing ones plus the unit taken from p[i]
        v = p[i] - 1
        del p[i:]
        p.append(v)
        q, r = divmod(rem, v)
        p.extend([v] * q)
        if r:
            p.append(r)


def chunk_array(n: int, a: int) -> np.ndarray:
    """All partitions of ``n`` with largest part ``a``, zero-padded to width ``n``."""
    rows = [[a] + list(p) for p in bounded_partitions(n - a, a)]
    out = np.zeros((len(rows), n), dtype=np.int64)
    for r, parts in enumerate(rows):
        out[r, : len(parts)] = parts
    return out


def _histograms_numpy(block: np.ndarray, n: int) -> np.ndarray:
    """Hook-length histograms of a block of padded partitions, shape (rows, n + 1)."""
    rows = block.shape[0]
    j = np.arange(n)
    # conj[r, j] = number of parts of row r exceeding j (0-based column j)
    conj = (block[:, :, None] > j[None, None, :]).sum(axis=1)
    i = np.arange(n)
    hooks = block[:, :, None] - j[None, None, :] + conj[:, None, :] - i[None, :, None] - 1
    valid = j[None, None, :] < block[:, :, None]
    owner = np.broadcast_to(np.arange(rows)[:, None, None], hooks.shape)
    flat = owner[valid] * (n + 1) + hooks[valid]
    return np.bincount(flat, minlength=rows * (n + 1)).reshape(rows, n + 1)


def chunk_stats_numpy(n: int, a: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    arr = chunk_array(n, a)
    dist = np.zeros((n + 1, n + 1), dtype=np.int64)
    best = np.full(n + 1, -1, dtype=np.int64)
    wit = np.zeros((n + 1, n), dtype=np.int64)
    for start in range(0, arr.shape[0], _NUMPY_BLOCK_ROWS):
        block = arr[start : start + _NUMPY_BLOCK_ROWS]
        hist = _histograms_numpy(block, n)
        for k in range(1, n + 1):
            col = hist[:, k]
            dist[k] += np.bincount(col, minlength=n + 1)[: n + 1]
            r = int(np.argmax(col))
            if col[r] > best[k]:
                best[k] = col[r]
                wit[k] = block[r]
    return dist, best, wit


@njit
def _histogram_one(p, length, conj, hist):
    ncols = p[0]
    for j in range(ncols):
        conj[j] = 0
    for i in range(length):
        for j in range(p[i]):
            conj[j] += 1
    for h in range(hist.shape[0]):
        hist[h] = 0
    for i in range(length):
        for j in range(p[i]):
            hist[p[i] - j + conj[j] - i - 1] += 1


@njit
def _chunk_stats_numba(n, a, dist, best, wit):
    """Enumerate partitions of n with largest part a in place; O(n) working memory."""
    p = np.zeros(n + 1, dtype=np.int64)
    conj = np.zeros(n + 1, dtype=np.int64)
    hist = np.zeros(n + 1, dtype=np.int64)
    for k in range(n + 1):
        best[k] = -1
    # first partition: a followed by the greedy fill of n - a with parts <= a
    p[0] = a
    length = 1
    rem = n - a
    while rem > 0:
        v = min(a, rem)
        p[length] = v
        length += 1
        rem -= v
    while True:
        _histogram_one(p, length, conj, hist)
        for k in range(1, n + 1):
            v = hist[k]
            dist[k, v] += 1
            if v > best[k]:
                best[k] = v
                for c in range(n):
                    wit[k, c] = p[c] if c < length else 0
        # advance within the chunk, never touching p[0]
        i = length - 1
        while i >= 1 and p[i] == 1:
            i -= 1
        if i < 1:
            break
        rem = length - i
        v = p[i] - 1
        p[i] = v
        length = i + 1
        while rem >= v:
            p[length] = v
            length += 1
            rem -= v
        if rem > 0:
            p[length] = rem
            length += 1
        for c in range(length, n + 1):
            p[c] = 0


@njit(parallel=True)
def _all_chunks_numba(n, dist, best, wit):
    # chunk c handles largest part a = n - c
    for c in prange(n):
        _chunk_stats_numba(n, n - c, dist[c], best[c], wit[c])


def chunk_stats_numba(n: int, a: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    dist = np.zeros((n + 1, n + 1), dtype=np.int64)
    best = np.zeros(n + 1, dtype=np.int64)
    wit = np.zeros((n + 1, n), dtype=np.int64)
    _chunk_stats_numba(n, a, dist, best, wit)
    return dist, best, wit


def all_chunks_numba(n: int) -> list[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    dist = np.zeros((n, n + 1, n + 1), dtype=np.int64)
    best = np.zeros((n, n + 1), dtype=np.int64)
    wit = np.zeros((n, n + 1, n), dtype=np.int64)
    _all_chunks_numba(n, dist, best, wit)
    return [(dist[c], best[c], wit[c]) for c in range(n)]


def all_chunks_numpy(n: int) -> list[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    return [chunk_stats_numpy(n, a) for a in range(n, 0, -1)]


def combine_chunks(
    n: int, chunks: list[tuple[np.ndarray, np.ndarray, np.ndarray]]
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Merge chunk results given in enumeration order; ties keep the earliest chunk."""
    dist = np.zeros((n + 1, n + 1), dtype=np.int64)
    best = np.full(n + 1, -1, dtype=np.int64)
    wit = np.zeros((n + 1, max(n, 1)), dtype=np.int64)
    for cdist, cbest, cwit in chunks:
        dist += cdist
        for k in range(1, n + 1):
            if cbest[k] > best[k]:
                best[k] = cbest[k]
                wit[k, :n] = cwit[k]
    return dist, best, wit
