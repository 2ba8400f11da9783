from __future__ import annotations

from collections import Counter

from hypothesis import strategies as st

from khooks.partition import Partition


def direct_hook(parts: tuple[int, ...], i: int, j: int) -> int:
    """Hook length by counting cells: u itself, cells right of u, cells below u (1-based)."""
    right = parts[i - 1] - j
    below = sum(1 for r in range(i + 1, len(parts) + 1) if parts[r - 1] >= j)
    return 1 + right + below


def direct_alpha(parts: tuple[int, ...], k: int, row: int | None = None) -> int:
    rows = range(1, len(parts) + 1) if row is None else [row]
    return sum(
        1
        for i in rows
        if i <= len(parts)
        for j in range(1, parts[i - 1] + 1)
        if direct_hook(parts, i, j) == k
    )


def all_partitions_recursive(n: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """Independent enumerator: first part descending, recursion on the remainder."""
    if cap is None:
        cap = n
    if n == 0:
        return [()]
    out = []
    for a in range(min(n, cap), 0, -1):
        out.extend((a, *rest) for rest in all_partitions_recursive(n - a, a))
    return out


@st.composite
def partitions(draw, max_n: int = 20) -> Partition:
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
