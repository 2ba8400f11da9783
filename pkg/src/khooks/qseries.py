"""Truncated power series in q with exact integer coefficients, and the
generating functions for b(n, k) and for the k-hook statistic.

A :class:`QSeries` of order N stores the coefficients of q^0 .. q^N. Binary
operations on series of different orders truncate to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

DEFAULT_ORDER = 200


@dataclass(frozen=True)
class QSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, e: int, order: int, c: int = 1) -> QSeries:
        """``c * q**e``; vanishes if ``e > order``."""
        out = [0] * (order + 1)
        if e <= order:
            out[e] = c
        return cls(tuple(out))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], order: int) -> QSeries:
        """Sum of ``q**e`` over ``exponents`` (with multiplicity), truncated."""
        out = [0] * (order + 1)
        for e in exponents:
            if 0 <= e <= order:
                out[e] += 1
        return cls(tuple(out))

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    def _pair(self, other: QSeries | int) -> tuple[Sequence[int], Sequence[int], int]:
        if isinstance(other, int):
            other = QSeries.monomial(0, self.order, other)
        n = min(self.order, other.order)
        return self.coeffs, other.coeffs, n

    def __add__(self, other: QSeries | int) -> QSeries:
        a, b, n = self._pair(other)
        return QSeries(tuple(a[i] + b[i] for i in range(n + 1)))

    __radd__ = __add__

    def __sub__(self, other: QSeries | int) -> QSeries:
        a, b, n = self._pair(other)
        return QSeries(tuple(a[i] - b[i] for i in range(n + 1)))

    def __rsub__(self, other: int) -> QSeries:
        return (-self) + other

    def __neg__(self) -> QSeries:
        return QSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: QSeries | int) -> QSeries:
        if isinstance(other, int):
            return QSeries(tuple(c * other for c in self.coeffs))
        a, b, n = self._pair(other)
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QSeries:
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = QSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, e: int) -> QSeries:
        """Multiply by ``q**e``."""
        n = self.order
        return QSeries((0,) * min(e, n + 1) + self.coeffs[: max(n + 1 - e, 0)])

    def mul_binomial(self, c: int, e: int) -> QSeries:
        """Multiply by ``1 + c * q**e`` (``e >= 1``) in O(order)."""
        if e < 1:
            raise ValueError("exponent must be positive")
        out = list(self.coeffs)
        for i in range(len(out) - 1, e - 1, -1):
            out[i] += c * out[i - e]
        return QSeries(tuple(out))

    def geom_div(self, e: int) -> QSeries:
        """Divide by ``1 - q**e``, i.e. multiply by ``1 + q**e + q**(2e) + ...``."""
        if e < 1:
            raise ValueError("exponent must be positive")
        out = list(self.coeffs)
        for i in range(e, len(out)):
            out[i] += out[i - e]
        return QSeries(tuple(out))

    def halve(self) -> QSeries:
        """Exact division by 2; raises if some coefficient is odd."""
        odd = [i for i, c in enumerate(self.coeffs) if c % 2]
        if odd:
            raise ArithmeticError(f"coefficient of q^{odd[0]} is odd ({self.coeffs[odd[0]]})")
        return QSeries(tuple(c // 2 for c in self.coeffs))

    def first_mismatch(self, other: QSeries) -> int | None:
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def lines(self) -> list[str]:
        return [f"{n}\t{c}" for n, c in enumerate(self.coeffs)]


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")


def pochhammer(sign: int, a: int, b: int, order: int = DEFAULT_ORDER) -> QSeries:
    """``(sign * q**a; q**b)_inf`` = prod_{j>=0} (1 - sign * q**(a + j*b)), truncated.

    ``sign=-1`` gives ``(-q**a; q**b)_inf``.
    """
    _check_order(order)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if b < 1:
        raise ValueError("step b must be positive")
    if a < 0:
        raise ValueError("offset a must be nonnegative")
    out = QSeries.one(order)
    if a == 0:
        if sign == 1:
            raise ValueError("(q^0; q^b) has a zero factor")
        out = out * 2
        a = b
    e = a
    while e <= order:
        out = out.mul_binomial(-sign, e)
        e += b
    return out


def pochhammer_inverse(sign: int, a: int, b: int, order: int = DEFAULT_ORDER) -> QSeries:
    """``1 / (q**a; q**b)_inf`` for ``sign=+1`` and ``a >= 1``, by repeated geometric division."""
    _check_order(order)
    if sign != 1 or a < 1 or b < 1:
        raise ValueError("only 1/(q^a; q^b)_inf with a, b >= 1 is supported")
    out = QSeries.one(order)
    e = a
    while e <= order:
        out = out.geom_div(e)
        e += b
    return out


def partition_series(order: int = DEFAULT_ORDER) -> QSeries:
    """``1 / (q; q)_inf`` = sum p(n) q^n."""
    return pochhammer_inverse(1, 1, 1, order)


def gf_bn_rhs(order: int = DEFAULT_ORDER) -> QSeries:
    """(1/(1-q)) ((q^2; q^2)^2 / (q; q) - 1)."""
    _check_order(order)
    inner = pochhammer(1, 2, 2, order) ** 2 * partition_series(order)
    return (inner - 1).geom_div(1)


def gf_bnk_rhs(k: int, order: int = DEFAULT_ORDER) -> QSeries:
    """(1/(1-q)) (sum_{t>=1} q^{C(t,2) k^2} (1 - q^{t k^2}) / (1 - q^{t k}) - 1).

    The quotient in each summand is the polynomial sum_{r<k} q^{r t k}.
    """
    _check_order(order)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    exps = []
    t = 1
    while comb(t, 2) * k * k <= order:
        base = comb(t, 2) * k * k
        exps.extend(base + r * t * k for r in range(k))
        t += 1
    return (QSeries.from_exponents(exps, order) - 1).geom_div(1)


def theta_t_series(k: int, order: int = DEFAULT_ORDER) -> QSeries:
    """sum_{m>=0} q^{t(m, k)}, the weights of the nearly k-triangular partitions."""
    from .triangular import t_weight

    exps = []
    m = 0
    while (w := t_weight(m, k)) <= order:
        exps.append(w)
        m += 1
    return QSeries.from_exponents(exps, order)


def gf_pak_rhs(order: int = DEFAULT_ORDER) -> QSeries:
    """q / ((1-q) (q; q)_inf)."""
    _check_order(order)
    return partition_series(order).geom_div(1).shift(1)


def gf_han_rhs(k: int, order: int = DEFAULT_ORDER) -> QSeries:
    """k q^k / ((1-q^k) (q; q)_inf)."""
    _check_order(order)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return (partition_series(order).geom_div(k) * k).shift(k)


def gf_han_bivariate_eval(k: int, x: int, order: int = DEFAULT_ORDER) -> QSeries:
    """prod_{j>=1} (1 + (x-1) q^{kj})^k / (1 - q^j) at an integer ``x``."""
    _check_order(order)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out = partition_series(order)
    if x == 1:
        return out
    e = k
    while e <= order:
        for _ in range(k):
            out = out.mul_binomial(x - 1, e)
        e += k
    return out


def triangular_theta(order: int = DEFAULT_ORDER) -> QSeries:
    """sum_{n>=0} q^{C(n+1, 2)}."""
    _check_order(order)
    exps = []
    n = 0
    while comb(n + 1, 2) <= order:
        exps.append(comb(n + 1, 2))
        n += 1
    return QSeries.from_exponents(exps, order)


def gauss_product(order: int = DEFAULT_ORDER) -> QSeries:
    """(q^2; q^2)_inf / (q; q^2)_inf."""
    return pochhammer(1, 2, 2, order) * pochhammer_inverse(1, 1, 2, order)


@dataclass(frozen=True)
class IdentityReport:
    name: str
    order: int
    first_mismatch: int | None
    left: int | None = None
    right: int | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}\tpass\torder={self.order}"
        return (
            f"{self.name}\tfail\torder={self.order}\tfirst_mismatch=q^{self.first_mismatch}"
            f"\tleft={self.left}\tright={self.right}"
        )


def check_identity(name: str, left: QSeries, right: QSeries) -> IdentityReport:
    n = min(left.order, right.order)
    i = left.first_mismatch(right)
    if i is None:
        return IdentityReport(name, n, None)
    return IdentityReport(name, n, i, left[i], right[i])


def gauss_report(order: int = DEFAULT_ORDER) -> IdentityReport:
    return check_identity("gauss", triangular_theta(order), gauss_product(order))


def gauss_check(order: int = DEFAULT_ORDER) -> bool:
    """Whether sum q^{C(n+1,2)} equals (q^2;q^2)/(q;q^2) through ``q**order``."""
    return gauss_report(order).ok


def gf_bnk_jacobi(k: int, order: int = DEFAULT_ORDER) -> QSeries:
    """The triple-product form of the b(n, k) generating function.

    (1/(1-q)) ( (q^{2k^2}; q^{2k^2}) / (q^{k^2}; q^{2k^2})
               + 1/2 sum_{r=1}^{k-1} (-q^{rk}; q^{k^2}) (-q^{k^2-rk}; q^{k^2}) (q^{k^2}; q^{k^2})
               - (k+1)/2 )

    The bracket is built doubled in integers and halved exactly; an odd
    coefficient raises ArithmeticError.
    """
    _check_order(order)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    kk = k * k
    theta = pochhammer(1, 2 * kk, 2 * kk, order) * pochhammer_inverse(1, kk, 2 * kk, order)
    doubled = theta * 2 - (k + 1)
    if k > 1:
        base = pochhammer(1, kk, kk, order)
        for r in range(1, k):
            doubled = doubled + pochhammer(-1, r * k, kk, order) * pochhammer(-1, kk - r * k, kk, order) * base
    return doubled.halve().geom_div(1)


SERIES_BUILDERS = {
    "bn": gf_bn_rhs,
    "bnk": gf_bnk_rhs,
    "pak": gf_pak_rhs,
    "han": gf_han_rhs,
    "han-eval": gf_han_bivariate_eval,
    "jacobi": gf_bnk_jacobi,
}
