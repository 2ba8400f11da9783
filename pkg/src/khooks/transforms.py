"""Young-diagram rewriting: row deletion D_i, the removal cascade P_i, the
addition cascade Q_j, reduction to a nearly k-triangular partition, and
one-cell growth.

Marked cells (hook length k) are recomputed from hook lengths after every
single-cell edit. Every applied operation is recorded in a
:class:`TransformTrace`; the elementary cell edits inside a cascade are kept
as sub-steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .partition import Partition, PartitionError, alpha_k, format_partition
from .triangular import is_nearly_triangular, nearly_triangular


class PreconditionError(PartitionError):
    """An operation was applied to a row where it is not defined."""


class TransformError(RuntimeError):
    """A structural guarantee of a cascade was violated."""


@dataclass(frozen=True)
class TraceStep:
    label: str
    partition: Partition
    weight: int
    alpha: int
    substeps: tuple["TraceStep", ...] = ()

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "label": self.label,
            "partition": list(self.partition.parts),
            "weight": self.weight,
            "alpha_k": self.alpha,
        }
        if self.substeps:
            out["substeps"] = [s.to_dict() for s in self.substeps]
        return out


def _step(label: str, lam: Partition, k: int, substeps=()) -> TraceStep:
    return TraceStep(label, lam, lam.weight, alpha_k(lam, k), tuple(substeps))


@dataclass
class TransformTrace:
    """Ordered log of operations applied to a partition for a fixed k."""

    k: int
    steps: list[TraceStep] = field(default_factory=list)

    def record(self, label: str, lam: Partition, substeps=()) -> TraceStep:
        step = _step(label, lam, self.k, substeps)
        self.steps.append(step)
        return step

    def append(self, step: TraceStep) -> None:
        self.steps.append(step)

    @property
    def final(self) -> Partition:
        return self.steps[-1].partition

    def to_lines(self, substeps: bool = False) -> list[str]:
        lines: list[str] = []

        def emit(step: TraceStep, depth: int) -> None:
            lines.append(
                f"{'  ' * depth}{step.label}\t{format_partition(step.partition)}"
                f"\tweight={step.weight}\talpha_k={step.alpha}"
            )
            if substeps:
                for s in step.substeps:
                    emit(s, depth + 1)

        for s in self.steps:
            emit(s, 0)
        return lines

    def to_text(self, substeps: bool = False) -> str:
        return "\n".join(self.to_lines(substeps))

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "steps": [s.to_dict() for s in self.steps]}


def _part(parts: list[int], i: int) -> int:
    """1-based row length; row 0 is infinitely long and rows past the end are empty."""
    if i == 0:
        return math.inf
    return parts[i - 1] if i <= len(parts) else 0


def _marked_row(parts: list[int], col: int, k: int, skip_row: int | None = None) -> int | None:
    """Row of the unique cell of hook length k in column ``col``, or None."""
    height = sum(1 for p in parts if p >= col)
    rows = [
        r
        for r in range(1, height + 1)
        if r != skip_row and parts[r - 1] - col + height - r + 1 == k
    ]
    if len(rows) > 1:
        raise TransformError(f"column {col} of {parts} holds {len(rows)} cells of hook length {k}")
    return rows[0] if rows else None


def _remove(parts: list[int], i: int) -> list[int]:
    out = list(parts)
    out[i - 1] -= 1
    if out[i - 1] == 0:
        out.pop()
    return out


def _add(parts: list[int], i: int) -> list[int]:
    out = list(parts)
    if i == len(out) + 1:
        out.append(1)
    else:
        out[i - 1] += 1
    return out


def op_D(lam: Partition, i: int) -> Partition:
    """Delete row ``i``."""
    if not 1 <= i <= lam.length:
        raise PreconditionError(f"D_{i}: row out of range for ({lam})")
    return Partition(lam.parts[: i - 1] + lam.parts[i:])


def _cascade_P(lam: Partition, i: int, k: int) -> tuple[Partition, list[TraceStep]]:
    parts = list(lam.parts)
    if not 1 <= i <= len(parts):
        raise PreconditionError(f"P_{i}: row out of range for ({lam})")
    if parts[i - 1] <= _part(parts, i + 1):
        raise PreconditionError(f"P_{i} needs lambda_{i} > lambda_{i + 1} in ({lam})")
    subs: list[TraceStep] = []

    def log(label: str, p: list[int]) -> list[int]:
        subs.append(_step(label, Partition(tuple(p)), k))
        return p

    # drop u, the last cell of row i
    before = parts
    u_row, u_col = i, parts[i - 1]
    mu = log(f"remove({u_row},{u_col})", _remove(before, u_row))
    while True:
        # a k-hook w1 above u in u's column (hooks taken before the removal) loses its status
        j = _marked_row(before, u_col, k, skip_row=u_row)
        if j is None:
            return Partition(tuple(mu)), subs
        if j >= u_row:
            raise TransformError(f"P_{i} cascade did not move upward: row {j} after row {u_row}")
        if _part(mu, j) == _part(mu, j - 1):
            return Partition(tuple(mu)), subs
        v_col = mu[j - 1] + 1
        nu = log(f"add({j},{v_col})", _add(mu, j))
        # the new cell v may push a k-hook w2 of mu in v's column off k
        h = _marked_row(mu, v_col, k)
        if h is None:
            return Partition(tuple(nu)), subs
        if h >= j:
            raise TransformError(f"P_{i} cascade did not move upward: row {h} after row {j}")
        if _part(nu, h) == _part(nu, h + 1):
            return Partition(tuple(nu)), subs
        u_row, u_col = h, nu[h - 1]
        before, mu = nu, log(f"remove({u_row},{u_col})", _remove(nu, h))


def op_P(lam: Partition, i: int, k: int) -> Partition:
    """Remove the last cell of row ``i`` and run the rebalancing cascade."""
    return _cascade_P(lam, i, k)[0]


def _cascade_Q(lam: Partition, j: int, k: int) -> tuple[Partition, list[TraceStep]]:
    parts = list(lam.parts)
    if not 1 <= j <= len(parts) + 1:
        raise PreconditionError(f"Q_{j}: row out of range for ({lam})")
    if not _part(parts, j - 1) > _part(parts, j):
        raise PreconditionError(f"Q_{j} needs lambda_{j - 1} > lambda_{j} in ({lam})")
    col = _part(parts, j) + 1
    mu = _add(parts, j)
    subs = [_step(f"add({j},{col})", Partition(tuple(mu)), k)]
    h = _marked_row(parts, col, k)
    if h is None or _part(mu, h) == _part(mu, h + 1):
        return Partition(tuple(mu)), subs
    mu_p = Partition(tuple(mu))
    nu, psubs = _cascade_P(mu_p, h, k)
    subs.append(_step(f"P_{h}", nu, k, substeps=psubs))
    return nu, subs


def op_Q(lam: Partition, j: int, k: int) -> Partition:
    """Add a cell at the end of row ``j`` and run the rebalancing cascade."""
    return _cascade_Q(lam, j, k)[0]


def _frame_label(ops: list[str]) -> str:
    """Collapse runs: ["P_3", "D_3"] -> "P_3 D_3", four "P_1" -> "P_1^4"."""
    runs: list[list] = []
    for op in ops:
        if runs and runs[-1][0] == op:
            runs[-1][1] += 1
        else:
            runs.append([op, 1])
    return " ".join(op if c == 1 else f"{op}^{c}" for op, c in runs)


def reduce_to_triangular(lam: Partition, k: int) -> tuple[Partition, TransformTrace]:
    """Rewrite ``lam`` row by row, bottom to top, into some T_s^(k) with s >= alpha_k(lam).

    The trace holds one frame per rewritten row; the individual D and P
    applications of that row are its substeps. Weight never increases and
    alpha_k never decreases from frame to frame.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    trace = TransformTrace(k)
    trace.record("start", lam)
    t = lam.length
    for i in range(lam.length, 0, -1):
        target = nearly_triangular(t, k)
        if lam.part(i) == target.part(i):
            continue
        ops: list[TraceStep] = []

        def apply_P(cur: Partition, times: int) -> Partition:
            for _ in range(times):
                cur, subs = _cascade_P(cur, i, k)
                ops.append(_step(f"P_{i}", cur, k, subs))
            return cur

        gap = lam.part(i) - lam.part(i + 1)
        if (t - i) % k == 0:
            # row i closes a block of T_t: it should sit exactly k past row i + 1
            if gap < k:
                lam = apply_P(lam, gap)
                if lam.length >= i:
                    lam = op_D(lam, i)
                    ops.append(_step(f"D_{i}", lam, k))
                t -= 1
            else:
                lam = apply_P(lam, gap - k)
        else:
            lam = apply_P(lam, gap)
        if ops:
            trace.record(_frame_label([s.label for s in ops]), lam, ops)
    if not is_nearly_triangular(lam, k):
        raise TransformError(f"reduction ended at ({lam}), which is not nearly {k}-triangular")
    return lam, trace


def grow_one_traced(lam: Partition, k: int, trace: TransformTrace) -> Partition:
    """:func:`grow_one`, recording each Q application in ``trace``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    n, r = lam.weight, lam.length
    cur = lam
    for step in range(k - 1):
        j = cur.length + 1
        if j != r + step + 1:
            raise TransformError(f"Q_{j} applied to a partition with {cur.length} parts")
        cur, subs = _cascade_Q(cur, j, k)
        trace.record(f"Q_{j}", cur, substeps=subs)
        if cur.weight == n + 1:
            return cur
        if cur.weight != n:
            raise TransformError(f"Q_{j} changed the weight from {n} to {cur.weight}")
    cur = Partition(cur.parts + (1,))
    trace.record("append(1)", cur)
    return cur


def grow_one(lam: Partition, k: int) -> Partition:
    """A partition of ``|lam| + 1`` with at least ``alpha_k(lam)`` cells of hook length k."""
    return grow_one_traced(lam, k, TransformTrace(k))


def grow(lam: Partition, k: int, steps: int) -> tuple[Partition, TransformTrace]:
    trace = TransformTrace(k)
    trace.record("start", lam)
    for _ in range(steps):
        lam = grow_one_traced(lam, k, trace)
    return lam, trace
