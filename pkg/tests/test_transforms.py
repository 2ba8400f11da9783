import pytest
from hypothesis import given, settings

from conftest import all_partitions_recursive, direct_alpha, partitions
from khooks.partition import Partition, PartitionError, alpha_k
from khooks.transforms import (
    PreconditionError,
    TransformTrace,
    grow,
    grow_one,
    op_D,
    op_P,
    op_Q,
    reduce_to_triangular,
)
from khooks.triangular import is_nearly_triangular, nearly_triangular, t_weight


def row_excluded(parts: tuple[int, ...], k: int, i: int) -> int:
    return direct_alpha(parts, k) - direct_alpha(parts, k, row=i)


@pytest.mark.parametrize(
    "parts, i, out",
    [((6, 6, 3, 3, 3, 3), 4, (6, 6, 3, 3, 3)), ((5,), 1, ()), ((3, 2, 1), 2, (3, 1))],
)
def test_op_D(parts, i, out):
    assert op_D(Partition(parts), i).parts == out


@pytest.mark.parametrize("i", [0, 4])
def test_op_D_rejects_row(i):
    with pytest.raises(PartitionError):
        op_D(Partition((3, 2, 1)), i)


def test_op_P_plain_removal():
    lam = Partition((6, 6, 3, 3, 3, 3, 1))
    assert op_P(lam, 7, 3).parts == (6, 6, 3, 3, 3, 3)
    assert op_P(Partition((2,)), 1, 5).parts == (1,)


def test_op_P_row_one_chain():
    lam = Partition((7, 4, 3, 3, 3, 3))
    out = op_P(lam, 1, 3)
    assert out.weight <= 23
    assert row_excluded(lam.parts, 3, 1) <= row_excluded(out.parts, 3, 1)

    cur = Partition((10, 6, 3, 3, 3))
    for _ in range(4):
        cur = op_P(cur, 1, 3)
    assert cur.parts == (6, 6, 3, 3, 3)


def test_op_P_cascade_moves_a_cell():
    # worked by hand: removing (3,1) frees the 2-hook at (2,1), so a cell goes
    # to row 2; that lands under the 2-hook at (1,2), so row 1 gives one up
    lam = Partition((3, 1, 1))
    out = op_P(lam, 3, 2)
    assert out.parts == (2, 2)
    assert row_excluded(lam.parts, 2, 3) == 2 == row_excluded(out.parts, 2, 3)

    out = op_P(Partition((3, 3, 1, 1)), 4, 2)
    assert out.parts == (4, 2, 2)
    assert row_excluded((3, 3, 1, 1), 2, 4) <= row_excluded(out.parts, 2, 4)


@pytest.mark.parametrize("parts, i", [((3, 3), 1), ((2, 2, 1), 1), ((1,), 2)])
def test_op_P_precondition(parts, i):
    with pytest.raises(PreconditionError):
        op_P(Partition(parts), i, 2)


def test_op_Q_examples():
    out = op_Q(Partition((3, 3, 3)), 4, 3)
    assert out.length == 4 and out.weight in (9, 10) and alpha_k(out, 3) >= 3
    assert op_Q(Partition(), 1, 1).parts == (1,)
    out = op_Q(Partition((2, 1)), 2, 2)
    assert out.weight in (3, 4)
    assert row_excluded((2, 1), 2, 2) <= row_excluded(out.parts, 2, 2)


@pytest.mark.parametrize("parts, j", [((2, 2), 2), ((1,), 3), ((1,), 0)])
def test_op_Q_precondition(parts, j):
    with pytest.raises(PreconditionError):
        op_Q(Partition(parts), j, 2)


def legal_P(parts):
    ext = parts + (0,)
    return [i for i in range(1, len(parts) + 1) if ext[i - 1] > ext[i]]


def legal_Q(parts):
    ext = parts + (0,)
    return [j for j in range(1, len(parts) + 2) if j == 1 or ext[j - 2] > ext[j - 1]]


def test_removal_inequality_sweep():
    for n in range(13):
        for parts in all_partitions_recursive(n):
            for k in range(1, 5):
                for i in legal_P(parts):
                    out = op_P(Partition(parts), i, k).parts
                    assert sum(out) <= n
                    assert row_excluded(parts, k, i) <= row_excluded(out, k, i)


def test_addition_inequality_sweep_k_at_least_2():
    for n in range(13):
        for parts in all_partitions_recursive(n):
            for k in range(2, 5):
                for j in legal_Q(parts):
                    out = op_Q(Partition(parts), j, k).parts
                    assert n <= sum(out) <= n + 1
                    assert row_excluded(parts, k, j) <= row_excluded(out, k, j)


def test_addition_inequality_fails_at_k1():
    # at k = 1 the added cell is itself the moved mark, and it lies in the excluded row
    out = op_Q(Partition((1,)), 2, 1)
    assert out.parts == (1, 1)
    assert row_excluded((1,), 1, 2) == 1
    assert row_excluded(out.parts, 1, 2) == 0


@settings(max_examples=150)
@given(partitions(max_n=24))
def test_P_and_Q_results_are_partitions(lam):
    for k in (1, 2, 3):
        for i in legal_P(lam.parts):
            assert isinstance(op_P(lam, i, k), Partition)
        for j in legal_Q(lam.parts):
            assert isinstance(op_Q(lam, j, k), Partition)


def test_reduction_frames():
    end, trace = reduce_to_triangular(Partition((10, 7, 4, 3, 3, 3, 3)), 3)
    assert end.parts == (6, 6, 3, 3, 3)
    assert [s.weight for s in trace.steps] == [33, 30, 26, 25, 21]
    assert [s.alpha for s in trace.steps] == [5] * 5
    assert [s.label for s in trace.steps] == ["start", "D_4", "P_3 D_3", "P_2", "P_1^4"]


def test_reduce_fixed_point():
    lam = nearly_triangular(5, 3)
    end, trace = reduce_to_triangular(lam, 3)
    assert end == lam and len(trace.steps) == 1


def test_reduce_4_4_4_k2():
    end, trace = reduce_to_triangular(Partition((4, 4, 4)), 2)
    assert is_nearly_triangular(end, 2)
    alphas = [s.alpha for s in trace.steps]
    assert alphas == sorted(alphas)


def test_reduce_sweep_small():
    for n in range(15):
        for parts in all_partitions_recursive(n):
            for k in range(1, 5):
                end, trace = reduce_to_triangular(Partition(parts), k)
                a = direct_alpha(parts, k)
                assert end == nearly_triangular(end.length, k)
                assert end.length >= a
                assert n >= t_weight(a, k)
                for x, y in zip(trace.steps, trace.steps[1:]):
                    assert y.weight <= x.weight and y.alpha >= x.alpha
                for s in trace.steps:
                    assert s.alpha == direct_alpha(s.partition.parts, k)


def test_trace_text_format():
    _, trace = reduce_to_triangular(Partition((4, 1)), 1)
    assert trace.to_lines() == [
        "start\t4,1\tweight=5\talpha_k=2",
        "P_1^2\t2,1\tweight=3\talpha_k=2",
    ]
    nested = trace.to_lines(substeps=True)
    assert nested[2] == "  P_1\t3,1\tweight=4\talpha_k=2"
    assert nested[3] == "    remove(1,4)\t3,1\tweight=4\talpha_k=2"


def test_trace_dict_tree():
    _, trace = reduce_to_triangular(Partition((4, 1)), 1)
    d = trace.to_dict()
    assert d["k"] == 1
    assert d["steps"][1]["partition"] == [2, 1]
    assert [s["label"] for s in d["steps"][1]["substeps"]] == ["P_1", "P_1"]


def test_grow_one_examples():
    lam = grow_one(Partition((3, 3, 3)), 3)
    assert lam.weight == 10 and alpha_k(lam, 3) >= 3
    assert grow_one(Partition(), 1).parts == (1,)


def test_growth_chain_from_333():
    end, trace = grow(Partition((3, 3, 3)), 3, 3)
    assert [s.label for s in trace.steps] == ["start", "Q_4", "Q_5", "Q_6"]
    assert [s.partition.parts for s in trace.steps] == [
        (3, 3, 3), (4, 3, 2, 1), (4, 4, 1, 1, 1), (4, 4, 1, 1, 1, 1),
    ]
    assert end.weight == 12 and alpha_k(end, 3) == 3


def test_growth_reaches_every_n():
    for k in range(1, 5):
        for m in range(7):
            lam = nearly_triangular(m, k)
            for _ in range(15):
                nxt = grow_one(lam, k)
                assert nxt.weight == lam.weight + 1
                assert alpha_k(nxt, k) >= alpha_k(lam, k) >= m
                lam = nxt


def test_empty_trace_final():
    trace = TransformTrace(2)
    trace.record("start", Partition((2,)))
    assert trace.final.parts == (2,)
