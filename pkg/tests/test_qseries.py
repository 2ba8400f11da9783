import pytest
from hypothesis import given
from hypothesis import strategies as st

from khooks.enumeration import partition_count
from khooks.qseries import (
    QSeries,
    check_identity,
    gauss_check,
    gauss_product,
    gf_bn_rhs,
    gf_bnk_jacobi,
    gf_bnk_rhs,
    gf_han_bivariate_eval,
    gf_han_rhs,
    gf_pak_rhs,
    partition_series,
    pochhammer,
    triangular_theta,
)
from khooks.triangular import b1_formula, b_formula

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=65)


def series(xs: list[int]) -> QSeries:
    return QSeries(tuple(xs))


def pentagonal_oracle(order: int) -> list[int]:
    out = [0] * (order + 1)
    for j in range(-order, order + 1):
        e = j * (3 * j - 1) // 2
        if 0 <= e <= order:
            out[e] += -1 if j % 2 else 1
    return out


def test_basic_ring_examples():
    one_plus = series([1, 1, 0, 0])
    one_minus = series([1, -1, 0, 0])
    assert (one_plus * one_minus).coeffs == (1, 0, -1, 0)
    a = series([3, 1, 4, 1])
    assert a + QSeries.zero(3) == a
    geo = series([1] * 10)
    assert geo * series([1, -1] + [0] * 8) == QSeries.one(9)


def test_mismatched_orders_truncate():
    a = series([1, 2, 3, 4])
    b = series([1, 1])
    assert (a + b).coeffs == (2, 3)
    assert (a * b).order == 1


def test_int_operands():
    a = series([1, 2, 3])
    assert (a + 1).coeffs == (2, 2, 3)
    assert (1 - a).coeffs == (0, -2, -3)
    assert (a * 2).coeffs == (2, 4, 6)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(x, y, z):
    a, b, c = series(x), series(y), series(z)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QSeries.zero(a.order)


@given(coeff_lists, st.integers(1, 20))
def test_geom_div_inverts_binomial(x, e):
    a = series(x)
    assert a.mul_binomial(-1, e).geom_div(e) == a
    assert a.geom_div(e).mul_binomial(-1, e) == a


def test_geom_div_examples():
    assert QSeries.one(7).geom_div(1).coeffs == (1,) * 8
    assert QSeries.monomial(1, 9).geom_div(1)[5] == 1
    assert QSeries.one(12).mul_binomial(-1, 3).geom_div(3) == QSeries.one(12)


def test_geom_div_rejects_nonpositive():
    with pytest.raises(ValueError):
        QSeries.one(3).geom_div(0)


def test_pochhammer_pentagonal():
    for order in (10, 100):
        assert list(pochhammer(1, 1, 1, order).coeffs) == pentagonal_oracle(order)
    assert pochhammer(1, 1, 1, 10).coeffs[:8] == (1, -1, -1, 0, 0, 1, 0, 1)


def test_pochhammer_large_base_is_trivial():
    assert pochhammer(1, 12, 3, 10) == QSeries.one(10)
    assert pochhammer(1, 4, 20, 10) == QSeries.one(10).mul_binomial(-1, 4)


def test_pochhammer_zero_base_rejected():
    with pytest.raises(ValueError):
        pochhammer(1, 0, 1, 5)


def test_pochhammer_times_partition_series_is_one():
    order = 200
    inv = QSeries.one(order)
    for e in range(1, order + 1):
        inv = inv.geom_div(e)
    assert pochhammer(1, 1, 1, order) * inv == QSeries.one(order)
    assert inv == partition_series(order)
    assert [inv[n] for n in range(61)] == [partition_count(n) for n in range(61)]


def test_halve():
    assert series([2, -4, 0]).halve().coeffs == (1, -2, 0)
    with pytest.raises(ArithmeticError):
        series([2, 3]).halve()


def test_bn_rhs_examples():
    s = gf_bn_rhs(200)
    assert [s[n] for n in range(10)] == [0, 1, 1, 2, 2, 2, 3, 3, 3, 3]
    assert all(s[n] == b1_formula(n) for n in range(201))
    assert s == gf_bnk_rhs(1, 200)


def test_bnk_rhs_k3():
    s = gf_bnk_rhs(3, 14)
    assert list(s.coeffs) == [0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 3]


def test_bnk_rhs_telescoping():
    for k in range(1, 6):
        s = gf_bnk_rhs(k, 60)
        assert all(s[n] == b_formula(n, k) for n in range(61))


def test_bn_telescoping_to_triangular_theta():
    order = 200
    assert gf_bn_rhs(order).mul_binomial(-1, 1) + 1 == triangular_theta(order)


def test_pak_examples():
    s = gf_pak_rhs(10)
    assert (s[0], s[1], s[3]) == (0, 1, 4)
    assert s == gf_han_rhs(1, 10)


def test_han_low_coefficients_vanish():
    for k in range(2, 6):
        assert gf_han_rhs(k, 20)[k - 1] == 0


def test_bivariate_special_values():
    assert gf_han_bivariate_eval(2, 1, 40) == partition_series(40)
    s = gf_han_bivariate_eval(1, 0, 30)
    assert s[0] == 1 and all(s[n] == 0 for n in range(1, 31))
    assert gf_han_bivariate_eval(1, 2, 5)[3] == 8


def test_gauss():
    assert gauss_check(200)
    assert gauss_check(1)
    theta = triangular_theta(60)
    tri = {m * (m + 1) // 2 for m in range(12)}
    assert all(theta[n] == (1 if n in tri else 0) for n in range(61))
    assert gauss_product(60) == theta


def test_jacobi_matches_rhs():
    for k in range(1, 5):
        assert gf_bnk_jacobi(k, 150) == gf_bnk_rhs(k, 150)
    assert gf_bnk_jacobi(1, 50) == gf_bn_rhs(50)
    assert gf_bnk_jacobi(3, 10)[0] == 0


def test_identity_report():
    rep = check_identity("x", QSeries.one(5), QSeries.one(5).shift(1) + 1)
    assert not rep.ok and rep.first_mismatch == 1
    assert check_identity("y", QSeries.one(3), QSeries.one(3)).ok


def test_order_zero_series():
    assert gf_bnk_rhs(3, 0).lines() == ["0\t0"]


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        gf_bn_rhs(-1)
