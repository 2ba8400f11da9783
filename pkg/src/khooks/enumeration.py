"""Brute-force oracle over P(n).

:func:`partitions_of` is the reference stream. :func:`hook_stats` computes
the same information in bulk through the compiled kernels (or their numpy
fallback) and backs :func:`b_brute`, :func:`alpha_sum` and
:func:`alpha_weighted_sum`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from . import _kernels
from ._accel import resolve_backend
from .partition import Partition

# refuse to brute-force beyond this; p(70) is about 4.1 million
SAFETY_LIMIT = 70


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` exactly once, in lexicographically decreasing order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield Partition()
        return
    for a in range(n, 0, -1):
        for rest in _kernels.bounded_partitions(n - a, a):
            yield Partition((a, *rest))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > n:
            break
        sign = 1 if j % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = j * (3 * j + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        j += 1
    return total


@dataclass(frozen=True)
class HookStats:
    """Distribution of alpha_k over P(n) for every k in 1..n.

    ``dist[k][v]`` counts partitions of n with exactly v cells of hook length
    k; ``best[k]`` is the maximum v and ``witness[k]`` the first partition in
    stream order attaining it.
    """

    n: int
    dist: np.ndarray
    best: np.ndarray
    witness: tuple[Partition, ...]

    @property
    def count(self) -> int:
        return int(self.dist[1].sum()) if self.n else 1


def _check_n(n: int, limit: int | None) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    cap = SAFETY_LIMIT if limit is None else limit
    if n > cap:
        raise ValueError(f"brute force over P({n}) exceeds the safety limit {cap}")


def hook_stats(n: int, backend: str | None = None, limit: int | None = None) -> HookStats:
    """Hook statistics of P(n); cached per (n, backend)."""
    _check_n(n, limit)
    return _hook_stats(n, resolve_backend(backend))


def clear_cache() -> None:
    """Forget memoized hook statistics (for timing runs)."""
    _hook_stats.cache_clear()


@lru_cache(maxsize=128)
def _hook_stats(n: int, backend: str) -> HookStats:
    if n == 0:
        dist = np.zeros((1, 1), dtype=np.int64)
        return HookStats(0, dist, np.zeros(1, dtype=np.int64), (Partition(),))
    if backend == "numba":
        chunks = _kernels.all_chunks_numba(n)
    else:
        chunks = _kernels.all_chunks_numpy(n)
    dist, best, wit = _kernels.combine_chunks(n, chunks)
    witnesses = [Partition()]
    for k in range(1, n + 1):
        row = wit[k]
        witnesses.append(Partition(tuple(int(x) for x in row[row > 0])))
    dist.setflags(write=False)
    best.setflags(write=False)
    return HookStats(n, dist, best, tuple(witnesses))


class BruteMax(NamedTuple):
    value: int
    witness: Partition


def b_brute_with_witness(n: int, k: int, backend: str | None = None) -> BruteMax:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if n < k:
        # no cell can have hook length k; the first partition of n is a witness
        _check_n(n, None)
        return BruteMax(0, Partition((n,)) if n else Partition())
    stats = hook_stats(n, backend)
    return BruteMax(int(stats.best[k]), stats.witness[k])


def b_brute(n: int, k: int, backend: str | None = None) -> int:
    """max alpha_k over P(n), by exhaustive evaluation."""
    return b_brute_with_witness(n, k, backend).value


def alpha_distribution(n: int, k: int, backend: str | None = None) -> list[int]:
    """``out[v]`` = number of partitions of n with exactly v k-hooks."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > n:
        _check_n(n, None)
        return [partition_count(n)]
    row = hook_stats(n, backend).dist[k]
    top = int(np.flatnonzero(row).max())
    return [int(c) for c in row[: top + 1]]


def alpha_sum(n: int, k: int, backend: str | None = None) -> int:
    """Sum of alpha_k over P(n)."""
    return sum(v * c for v, c in enumerate(alpha_distribution(n, k, backend)))


def alpha_weighted_sum(n: int, k: int, x: int, backend: str | None = None) -> int:
    """Sum of x ** alpha_k(lam) over P(n), exact (``0 ** 0 == 1``)."""
    return sum(c * x**v for v, c in enumerate(alpha_distribution(n, k, backend)))
