"""Cross-checks between the closed formula, the brute-force oracle, the
generating functions and the diagram transformations.

Each check returns a :class:`CheckResult`; sweeps run in increasing n and stop
at the first counterexample, so a failure names the smallest one found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import qseries, triangular
from .enumeration import (
    alpha_sum,
    alpha_weighted_sum,
    b_brute,
    partition_count,
    partitions_of,
)
from .partition import Partition, alpha_k, alpha_row, format_partition, hook_lengths
from .transforms import grow_one, op_P, op_Q, reduce_to_triangular


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"{self.name}\t{status}\t{self.detail}".rstrip()


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


def check_formula_vs_brute(n_max: int = 45, k_max: int = 6) -> CheckResult:
    name = "formula_vs_brute"
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            f, b = triangular.b_formula(n, k), b_brute(n, k)
            if f != b:
                return _fail(name, f"n={n} k={k} b_formula={f} b_brute={b}")
    return CheckResult(name, True, f"n<={n_max} k<={k_max}")


def check_bn_series(n_max: int = 45, order: int = 200) -> CheckResult:
    name = "bn_series"
    s = qseries.gf_bn_rhs(order)
    for n in range(min(n_max, order) + 1):
        if s[n] != b_brute(n, 1):
            return _fail(name, f"n={n} k=1 series={s[n]} b_brute={b_brute(n, 1)}")
    for n in range(order + 1):
        if s[n] != triangular.b1_formula(n):
            return _fail(name, f"n={n} k=1 series={s[n]} b1_formula={triangular.b1_formula(n)}")
    return CheckResult(name, True, f"brute n<={n_max}, formula n<={order}")


def check_bnk_series(order: int = 200, k_max: int = 8) -> CheckResult:
    name = "bnk_series"
    for k in range(1, k_max + 1):
        s = qseries.gf_bnk_rhs(k, order)
        for n in range(order + 1):
            f = triangular.b_formula(n, k)
            if s[n] != f:
                return _fail(name, f"n={n} k={k} series={s[n]} b_formula={f}")
    return CheckResult(name, True, f"n<={order} k<={k_max}")


def check_bnk_telescoping(order: int = 200, k_max: int = 8) -> CheckResult:
    """(1 - q) * sum b(n,k) q^n + 1 equals sum_m q^{t(m,k)}."""
    name = "bnk_telescoping"
    for k in range(1, k_max + 1):
        left = qseries.gf_bnk_rhs(k, order).mul_binomial(-1, 1) + 1
        rep = qseries.check_identity(name, left, qseries.theta_t_series(k, order))
        if not rep.ok:
            return _fail(name, f"k={k} first mismatch at q^{rep.first_mismatch}")
    return CheckResult(name, True, f"order={order} k<={k_max}")


def check_jacobi(order: int = 150, k_max: int = 4) -> CheckResult:
    name = "jacobi_form"
    for k in range(1, k_max + 1):
        try:
            left = qseries.gf_bnk_jacobi(k, order)
        except ArithmeticError as exc:
            return _fail(name, f"k={k} halving failed: {exc}")
        rep = qseries.check_identity(name, left, qseries.gf_bnk_rhs(k, order))
        if not rep.ok:
            return _fail(name, f"k={k} first mismatch at q^{rep.first_mismatch}")
    return CheckResult(name, True, f"order={order} k<={k_max}")


def check_han_sum(n_max: int = 40, k_max: int = 4) -> CheckResult:
    name = "han_pak_sum"
    pak = qseries.gf_pak_rhs(n_max)
    for n in range(n_max + 1):
        if pak[n] != alpha_sum(n, 1):
            return _fail(name, f"pak n={n} series={pak[n]} brute={alpha_sum(n, 1)}")
    for k in range(1, k_max + 1):
        s = qseries.gf_han_rhs(k, n_max)
        for n in range(n_max + 1):
            a = alpha_sum(n, k)
            if s[n] != a:
                return _fail(name, f"n={n} k={k} series={s[n]} brute={a}")
    return CheckResult(name, True, f"n<={n_max} k<={k_max}")


def check_han_bivariate(n_max: int = 30, k_max: int = 3, xs: tuple[int, ...] = (0, 2, 3)) -> CheckResult:
    name = "han_bivariate"
    for x in xs:
        for k in range(1, k_max + 1):
            s = qseries.gf_han_bivariate_eval(k, x, n_max)
            for n in range(n_max + 1):
                a = alpha_weighted_sum(n, k, x)
                if s[n] != a:
                    return _fail(name, f"n={n} k={k} x={x} series={s[n]} brute={a}")
    return CheckResult(name, True, f"n<={n_max} k<={k_max} x in {list(xs)}")


def check_partition_counts(n_max: int = 45, order: int = 200) -> CheckResult:
    name = "partition_counts"
    inv = qseries.partition_series(order)
    if qseries.pochhammer(1, 1, 1, order) * inv != qseries.QSeries.one(order):
        return _fail(name, f"(q;q) * 1/(q;q) != 1 to order {order}")
    for n in range(order + 1):
        if inv[n] != partition_count(n):
            return _fail(name, f"n={n} series={inv[n]} recurrence={partition_count(n)}")
    for n in range(min(n_max, 30) + 1):
        c = sum(1 for _ in partitions_of(n))
        if c != partition_count(n):
            return _fail(name, f"n={n} stream={c} recurrence={partition_count(n)}")
    return CheckResult(name, True, f"order={order}")


def check_gauss(order: int = 200) -> CheckResult:
    rep = qseries.gauss_report(order)
    if rep.ok:
        return CheckResult("gauss", True, f"order={order}")
    return _fail("gauss", f"first mismatch at q^{rep.first_mismatch}")


def legal_P_rows(lam: Partition) -> Iterator[int]:
    for i in range(1, lam.length + 1):
        if lam.part(i) > lam.part(i + 1):
            yield i


def legal_Q_rows(lam: Partition) -> Iterator[int]:
    for j in range(1, lam.length + 2):
        if j == 1 or lam.part(j - 1) > lam.part(j):
            yield j


def _row_alpha(lam: Partition, k: int, i: int) -> int:
    return alpha_row(lam, k, i) if i <= lam.length else 0


def removal_counterexample(lam: Partition, i: int, k: int) -> str | None:
    res = op_P(lam, i, k)
    if res.weight > lam.weight:
        return f"weight grew {lam.weight}->{res.weight}"
    before = alpha_k(lam, k) - _row_alpha(lam, k, i)
    after = alpha_k(res, k) - _row_alpha(res, k, i)
    if before > after:
        return f"row-excluded alpha {before} > {after} (result {format_partition(res)})"
    return None


def addition_counterexample(lam: Partition, j: int, k: int) -> str | None:
    res = op_Q(lam, j, k)
    if not lam.weight <= res.weight <= lam.weight + 1:
        return f"weight {lam.weight}->{res.weight}"
    before = alpha_k(lam, k) - _row_alpha(lam, k, j)
    after = alpha_k(res, k) - _row_alpha(res, k, j)
    if before > after:
        return f"row-excluded alpha {before} > {after} (result {format_partition(res)})"
    return None


def check_removal_cascade(n_max: int = 18, k_max: int = 4) -> CheckResult:
    name = "removal_cascade"
    for n in range(n_max + 1):
        for lam in partitions_of(n):
            for k in range(1, k_max + 1):
                for i in legal_P_rows(lam):
                    bad = removal_counterexample(lam, i, k)
                    if bad:
                        return _fail(name, f"n={n} k={k} lam={format_partition(lam)} i={i}: {bad}")
    return CheckResult(name, True, f"n<={n_max} k<={k_max}")


def check_addition_cascade(n_max: int = 18, k_max: int = 4, k_min: int = 1) -> CheckResult:
    name = "addition_cascade" if k_min == 1 else f"addition_cascade(k>={k_min})"
    if k_min > k_max:
        return CheckResult(name, True, "skipped: empty k range")
    for n in range(n_max + 1):
        for lam in partitions_of(n):
            for k in range(k_min, k_max + 1):
                for j in legal_Q_rows(lam):
                    bad = addition_counterexample(lam, j, k)
                    if bad:
                        return _fail(name, f"n={n} k={k} lam={format_partition(lam)} j={j}: {bad}")
    return CheckResult(name, True, f"n<={n_max} {k_min}<=k<={k_max}")


def reduction_counterexample(lam: Partition, k: int) -> str | None:
    end, trace = reduce_to_triangular(lam, k)
    a = alpha_k(lam, k)
    s = end.length
    if end != triangular.nearly_triangular(s, k):
        return f"endpoint {format_partition(end)} is not T_{s}"
    if s < a:
        return f"s={s} < alpha_k={a}"
    for x, y in zip(trace.steps, trace.steps[1:]):
        if y.weight > x.weight or y.alpha < x.alpha:
            return f"{y.label}: weight {x.weight}->{y.weight}, alpha {x.alpha}->{y.alpha}"
        prev = x.weight
        for sub in y.substeps:
            if sub.weight > prev:
                return f"{sub.label} inside {y.label} increased the weight"
            prev = sub.weight
    if lam.weight < triangular.t_weight(a, k):
        return f"|lam|={lam.weight} < t({a},{k})={triangular.t_weight(a, k)}"
    return None


def check_reduction(n_max: int = 20, k_max: int = 4) -> CheckResult:
    name = "reduction"
    for n in range(n_max + 1):
        for lam in partitions_of(n):
            for k in range(1, k_max + 1):
                bad = reduction_counterexample(lam, k)
                if bad:
                    return _fail(name, f"n={n} k={k} lam={format_partition(lam)}: {bad}")
    return CheckResult(name, True, f"n<={n_max} k<={k_max}")


def random_partition(n: int, rng: random.Random) -> Partition:
    """Random partition of n by uniformly random cuts of an n-composition."""
    cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
    bounds = [0, *cuts, n]
    return Partition(tuple(sorted((b - a for a, b in zip(bounds, bounds[1:]) if b > a), reverse=True)))


def check_reduction_random(seed: int = 0, samples: int = 200, n_range: tuple[int, int] = (21, 60), k_max: int = 6) -> CheckResult:
    name = "reduction_random"
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(*n_range)
        k = rng.randint(1, k_max)
        lam = random_partition(n, rng)
        bad = reduction_counterexample(lam, k)
        if bad:
            return _fail(name, f"seed={seed} n={n} k={k} lam={format_partition(lam)}: {bad}")
    return CheckResult(name, True, f"seed={seed} samples={samples}")


def check_growth(m_max: int = 6, k_max: int = 4, extra: int = 15) -> CheckResult:
    name = "growth"
    for k in range(1, k_max + 1):
        for m in range(m_max + 1):
            lam = triangular.nearly_triangular(m, k)
            for _ in range(extra):
                nxt = grow_one(lam, k)
                if nxt.weight != lam.weight + 1 or alpha_k(nxt, k) < alpha_k(lam, k):
                    return _fail(name, f"k={k} m={m} from {format_partition(lam)} to {format_partition(nxt)}")
                if alpha_k(nxt, k) < m:
                    return _fail(name, f"k={k} m={m} n={nxt.weight}: fewer than m hooks")
                lam = nxt
    return CheckResult(name, True, f"m<={m_max} k<={k_max} +{extra} cells")


def check_witness(n_max: int = 45, k_max: int = 5) -> CheckResult:
    name = "max_witness"
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            w = triangular.max_witness(n, k)
            if w.weight != n or alpha_k(w, k) != triangular.b_formula(n, k):
                return _fail(name, f"n={n} k={k} witness={format_partition(w)}")
    return CheckResult(name, True, f"n<={n_max} k<={k_max}")


def check_family(m_max: int = 100, k_max: int = 8) -> CheckResult:
    name = "triangular_family"
    for k in range(1, k_max + 1):
        for m in range(m_max + 1):
            lam = triangular.nearly_triangular(m, k)
            if lam.weight != triangular.t_weight(m, k):
                return _fail(name, f"m={m} k={k} weight={lam.weight} t={triangular.t_weight(m, k)}")
            per_row = [row.count(k) for row in hook_lengths(lam)]
            if any(c != 1 for c in per_row):
                return _fail(name, f"m={m} k={k}: a row without exactly one marked cell")
            if alpha_k(lam, k) != m:
                return _fail(name, f"m={m} k={k} alpha={alpha_k(lam, k)}")
    return CheckResult(name, True, f"m<={m_max} k<={k_max}")


WORKED_REDUCTION_START = Partition((10, 7, 4, 3, 3, 3, 3))
WORKED_REDUCTION_END = Partition((6, 6, 3, 3, 3))
WORKED_REDUCTION_WEIGHTS = [33, 30, 26, 25, 21]


def check_worked_reduction() -> CheckResult:
    name = "worked_reduction"
    end, trace = reduce_to_triangular(WORKED_REDUCTION_START, 3)
    frames = trace.steps
    weights = [f.weight for f in frames]
    alphas = [f.alpha for f in frames]
    if end != WORKED_REDUCTION_END or weights != WORKED_REDUCTION_WEIGHTS or set(alphas) != {5}:
        return _fail(name, f"end={format_partition(end)} weights={weights} alphas={alphas}")
    return CheckResult(name, True, "(10,7,4,3,3,3,3) -> (6,6,3,3,3)")


def check_worked_growth() -> CheckResult:
    name = "worked_growth"
    lam = Partition((3, 3, 3))
    for _ in range(3):
        lam = grow_one(lam, 3)
    if lam.weight != 12 or alpha_k(lam, 3) < 3 or b_brute(12, 3) != 3:
        return _fail(name, f"end={format_partition(lam)} alpha={alpha_k(lam, 3)} b_brute={b_brute(12, 3)}")
    return CheckResult(name, True, f"(3,3,3) -> ({format_partition(lam)})")


KNOWN_ADDITION_K1 = "k=1 lam=1 j=2: row-excluded alpha 1 > 0 (result 1,1)"


def suite(n_max: int = 45, k_max: int = 6, order: int = 200, seed: int = 0) -> list[tuple[str, Callable[[], CheckResult]]]:
    """The checks run by ``khooks verify``, scaled to the given limits."""
    small_k = min(k_max, 4)
    return [
        ("formula_vs_brute", lambda: check_formula_vs_brute(n_max, k_max)),
        ("bn_series", lambda: check_bn_series(n_max, order)),
        ("bnk_series", lambda: check_bnk_series(order, max(k_max, 1))),
        ("bnk_telescoping", lambda: check_bnk_telescoping(order, max(k_max, 1))),
        ("jacobi_form", lambda: check_jacobi(min(order, 150), small_k)),
        ("han_pak_sum", lambda: check_han_sum(min(n_max, 40), small_k)),
        ("han_bivariate", lambda: check_han_bivariate(min(n_max, 30), min(k_max, 3))),
        ("partition_counts", lambda: check_partition_counts(n_max, order)),
        ("gauss", lambda: check_gauss(order)),
        ("removal_cascade", lambda: check_removal_cascade(min(n_max, 18), small_k)),
        ("addition_cascade", lambda: check_addition_cascade(min(n_max, 18), small_k, k_min=2)),
        ("reduction", lambda: check_reduction(min(n_max, 20), small_k)),
        ("reduction_random", lambda: check_reduction_random(seed, k_max=max(k_max, 1))),
        ("growth", lambda: check_growth(6, small_k)),
        ("max_witness", lambda: check_witness(n_max, min(k_max, 5))),
        ("triangular_family", lambda: check_family(100, max(k_max, 1))),
        ("worked_reduction", check_worked_reduction),
        ("worked_growth", check_worked_growth),
    ]
