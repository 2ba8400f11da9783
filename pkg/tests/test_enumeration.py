import pytest

from conftest import all_partitions_recursive, direct_alpha
from khooks import enumeration
from khooks.enumeration import (
    alpha_distribution,
    alpha_sum,
    alpha_weighted_sum,
    b_brute,
    b_brute_with_witness,
    hook_stats,
    partition_count,
    partitions_of,
)
from khooks.partition import Partition, alpha_k
from khooks.qseries import gf_han_bivariate_eval, gf_han_rhs, partition_series

BACKENDS = ["numba", "numpy"]


def test_partitions_of_zero():
    assert list(partitions_of(0)) == [Partition()]


def test_partitions_of_four_in_order():
    got = [p.parts for p in partitions_of(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_ten_count():
    ps = list(partitions_of(10))
    assert len(ps) == 42 == partition_count(10)
    assert len(set(ps)) == 42


def test_stream_matches_independent_enumerator():
    for n in range(22):
        assert [p.parts for p in partitions_of(n)] == all_partitions_recursive(n)


def test_stream_is_lexicographically_decreasing():
    ps = [p.parts for p in partitions_of(18)]
    assert all(a > b for a, b in zip(ps, ps[1:]))


def test_pentagonal_recurrence_known_values():
    # p(n) values from direct enumeration for small n, then two standard large values
    assert [partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partition_count(50) == 204226
    assert partition_count(60) == 966467


def test_python_stream_count_matches_recurrence():
    for n in range(41):
        assert sum(1 for _ in partitions_of(n)) == partition_count(n)


def test_kernel_stream_count_matches_recurrence_to_60():
    for n in range(61):
        assert hook_stats(n).count == partition_count(n)


def test_b_brute_examples():
    assert b_brute(12, 3) == 3
    assert b_brute(0, 5) == 0
    assert b_brute(5, 1) == 2


def test_b_brute_examples_by_direct_scan():
    # oracle: scan the stream with the cell-counting hook definition
    for n, k in [(12, 3), (5, 1), (9, 2), (14, 4)]:
        best = max(direct_alpha(p, k) for p in all_partitions_recursive(n))
        assert b_brute(n, k) == best


def test_b_brute_witness_is_first_maximizer():
    for n in range(14):
        for k in range(1, 5):
            parts = all_partitions_recursive(n)
            vals = [direct_alpha(p, k) for p in parts]
            value, wit = b_brute_with_witness(n, k)
            assert value == max(vals)
            assert wit.parts == parts[vals.index(value)]


def test_witness_properties_to_45():
    for n in range(46):
        for k in range(1, 7):
            value, wit = b_brute_with_witness(n, k)
            assert wit.weight == n
            assert alpha_k(wit, k) == value


def test_b_brute_weakly_increasing():
    for k in range(1, 7):
        vals = [b_brute(n, k) for n in range(46)]
        assert vals == sorted(vals)


def test_alpha_sum_examples():
    assert alpha_sum(3, 1) == 4
    assert alpha_sum(0, 3) == 0


def test_alpha_sum_matches_series_at_6_2():
    # coefficient of q^6 in 2 q^2 / ((1 - q^2) (q; q)) computed independently below
    inv = partition_series(6)
    coeff = sum(2 * inv[6 - 2 - 2 * m] for m in range(0, 3))
    assert alpha_sum(6, 2) == coeff == gf_han_rhs(2, 6)[6]
    assert alpha_sum(6, 2) == sum(direct_alpha(p, 2) for p in all_partitions_recursive(6))


def test_alpha_weighted_sum_examples():
    assert alpha_weighted_sum(3, 1, 2) == 8
    for n in range(20):
        for k in (1, 2, 5):
            assert alpha_weighted_sum(n, k, 1) == partition_count(n)
    assert alpha_weighted_sum(5, 2, 3) == gf_han_bivariate_eval(2, 3, 5)[5]


def test_alpha_weighted_sum_zero_x_counts_hook_free():
    # x = 0 counts partitions with no cell of hook length k
    for n in range(15):
        for k in (1, 2, 3):
            direct = sum(1 for p in all_partitions_recursive(n) if direct_alpha(p, k) == 0)
            assert alpha_weighted_sum(n, k, 0) == direct


def test_alpha_distribution_sums_to_count():
    for n in range(1, 25):
        for k in range(1, n + 2):
            assert sum(alpha_distribution(n, k)) == partition_count(n)


def test_safety_limit():
    with pytest.raises(ValueError, match="safety limit"):
        hook_stats(enumeration.SAFETY_LIMIT + 1)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        list(partitions_of(-1))
    with pytest.raises(ValueError):
        b_brute(-1, 1)


@pytest.mark.parametrize("backend", BACKENDS)
def test_backends_agree_with_python_scan(backend):
    for n in range(0, 13):
        parts = all_partitions_recursive(n)
        for k in range(1, n + 2):
            vals = [alpha_k(Partition(p), k) for p in parts]
            assert alpha_sum(n, k, backend) == sum(vals)
            assert b_brute(n, k, backend) == max(vals)
