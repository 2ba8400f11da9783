"""Nearly k-triangular partitions and the closed form for b(n, k)."""

from __future__ import annotations

from math import comb

from .partition import Partition


def _check(m: int, k: int) -> None:
    if m < 0:
        raise ValueError(f"expected a nonnegative integer, got {m}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")


def nearly_triangular(m: int, k: int) -> Partition:
    """T_m^(k): r parts (l+1)k, then k parts each of lk, ..., 2k, k, where m = lk + r."""
    _check(m, k)
    l, r = divmod(m, k)
    parts = [(l + 1) * k] * r
    for level in range(l, 0, -1):
        parts += [level * k] * k
    return Partition(tuple(parts))


def is_nearly_triangular(lam: Partition, k: int) -> bool:
    return lam == nearly_triangular(lam.length, k)


def t_weight(m: int, k: int) -> int:
    """Weight of T_m^(k)."""
    _check(m, k)
    l = m // k
    return m * (l + 1) * k - comb(l + 1, 2) * k * k


def t_weight_closed(j: int, r: int, k: int) -> int:
    """t(jk + r, k) in the form C(j+1, 2) k^2 + r (j+1) k."""
    _check(j, k)
    if not 0 <= r < k:
        raise ValueError(f"residue r must satisfy 0 <= r < k, got r={r}, k={k}")
    return comb(j + 1, 2) * k * k + r * (j + 1) * k


def b_formula(n: int, k: int) -> int:
    """The unique m with t(m, k) <= n < t(m + 1, k)."""
    _check(n, k)
    m = 0
    while t_weight(m + 1, k) <= n:
        m += 1
    return m


def b1_formula(n: int) -> int:
    """The unique m with C(m+1, 2) <= n < C(m+2, 2)."""
    _check(n, 1)
    m = 0
    while comb(m + 2, 2) <= n:
        m += 1
    return m


def max_witness(n: int, k: int, trace: bool = False):
    """A partition of ``n`` with ``b_formula(n, k)`` cells of hook length ``k``.

    For k = 1 this is the staircase (m, m-1, ..., 2, 1, ..., 1). For k > 1 it
    grows T_m^(k) one cell at a time with :func:`khooks.transforms.grow_one`.
    With ``trace=True`` returns ``(partition, TransformTrace)``.
    """
    from .transforms import TransformTrace, grow_one_traced

    _check(n, k)
    m = b_formula(n, k)
    if k == 1:
        ones = n - comb(m + 1, 2) + 1
        lam = Partition(tuple(range(m, 1, -1)) + (1,) * ones) if n else Partition()
        if not trace:
            return lam
        tr = TransformTrace(k)
        tr.record("staircase", lam)
        return lam, tr
    lam = nearly_triangular(m, k)
    tr = TransformTrace(k)
    tr.record("start", lam)
    for _ in range(n - t_weight(m, k)):
        lam = grow_one_traced(lam, k, tr)
    return (lam, tr) if trace else lam
