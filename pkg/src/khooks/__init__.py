"""Exact computation of b(n, k), the maximum number of cells of hook length k
over the partitions of n, by closed formula, brute force and q-series."""

from .enumeration import (
    alpha_sum,
    alpha_weighted_sum,
    b_brute,
    b_brute_with_witness,
    hook_stats,
    partition_count,
    partitions_of,
)
from .partition import (
    Cell,
    MarkSet,
    Partition,
    PartitionError,
    alpha_k,
    alpha_row,
    conjugate,
    hook_length,
    make_partition,
    mark_set,
    parse_partition,
)
from .qseries import QSeries
from .transforms import (
    TransformTrace,
    grow_one,
    op_D,
    op_P,
    op_Q,
    reduce_to_triangular,
)
from .triangular import (
    b1_formula,
    b_formula,
    max_witness,
    nearly_triangular,
    t_weight,
    t_weight_closed,
)

__version__ = "0.1.0"
