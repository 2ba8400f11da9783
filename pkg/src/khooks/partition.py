"""Partitions, Young-diagram cells, hook lengths and the k-hook statistic.

Rows and columns are 1-based in every public function: ``Cell(1, 1)`` is the
top-left cell and ``lam.part(i)`` is the i-th part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class PartitionError(ValueError):
    """Invalid partition text, parts, cell or row index."""


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """An immutable integer partition stored as a weakly decreasing tuple."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"part {p!r} is not an integer")
            if p < 1:
                raise PartitionError(f"part {p} at row {i + 1} is not positive")
            if i and parts[i - 1] < p:
                raise PartitionError(
                    f"parts are not weakly decreasing at row {i + 1}: {parts[i - 1]} < {p}"
                )

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based); rows past the end have length 0."""
        if i < 1:
            raise PartitionError(f"row index {i} is not positive")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def cells(self) -> Iterator[Cell]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield Cell(i, j)

    def __contains__(self, cell: object) -> bool:
        if not isinstance(cell, tuple) or len(cell) != 2:
            return False
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def __str__(self) -> str:
        return format_partition(self)


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` (no sorting) and wrap them in a Partition."""
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts, e.g. ``"10,7,4,3,3,3,3"``; ``""`` is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc
    return make_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam.parts))


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    cols = [0] * lam.parts[0]
    for p in lam.parts:
        for j in range(p):
            cols[j] += 1
    return Partition(tuple(cols))


def _check_cell(lam: Partition, u: tuple[int, int]) -> Cell:
    u = Cell(*u)
    if u not in lam:
        raise PartitionError(f"cell {tuple(u)} is not in the diagram of ({lam})")
    return u


def hook_length(lam: Partition, u: tuple[int, int], conj: Partition | None = None) -> int:
    """Arm + leg + 1 for cell ``u``; pass ``conj`` to reuse a precomputed conjugate."""
    i, j = _check_cell(lam, u)
    if conj is None:
        conj = conjugate(lam)
    return lam.parts[i - 1] - j + conj.parts[j - 1] - i + 1


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Row-major grid of hook lengths; row ``i - 1`` holds row i of the diagram."""
    conj = conjugate(lam).parts
    return [
        [p - j + conj[j - 1] - i + 1 for j in range(1, p + 1)]
        for i, p in enumerate(lam.parts, start=1)
    ]


@dataclass(frozen=True)
class MarkSet:
    """The cells of a partition whose hook length equals ``k``."""

    k: int
    cells: frozenset[Cell]

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def in_row(self, i: int) -> int:
        return sum(1 for c in self.cells if c.row == i)

    def in_column(self, j: int) -> list[Cell]:
        return sorted(c for c in self.cells if c.col == j)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"hook length k must be positive, got {k}")


def mark_set(lam: Partition, k: int) -> MarkSet:
    _check_k(k)
    grid = hook_lengths(lam)
    cells = frozenset(
        Cell(i, j)
        for i, row in enumerate(grid, start=1)
        for j, h in enumerate(row, start=1)
        if h == k
    )
    return MarkSet(k, cells)


def alpha_k(lam: Partition, k: int) -> int:
    """Number of cells of ``lam`` with hook length ``k``."""
    _check_k(k)
    return sum(row.count(k) for row in hook_lengths(lam))


def alpha_row(lam: Partition, k: int, i: int) -> int:
    """Number of cells with hook length ``k`` in row ``i``."""
    _check_k(k)
    if not 1 <= i <= lam.length:
        raise PartitionError(f"row {i} out of range for ({lam})")
    return hook_lengths(lam)[i - 1].count(k)


def hook_grid_text(lam: Partition, k: int | None = None) -> str:
    """Render hook lengths as text; cells of hook length ``k`` get a trailing ``*``."""
    grid = hook_lengths(lam)
    if not grid:
        return ""
    width = len(str(max(max(r) for r in grid))) + (1 if k is not None else 0)
    lines = []
    for row in grid:
        toks = [f"{h}*" if h == k else str(h) for h in row]
        lines.append(" ".join(t.rjust(width) for t in toks))
    return "\n".join(lines)
