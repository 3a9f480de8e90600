"""Exact combinatorics of partition cores, quotients, hook statistics, and
their walk-weighted layer averages, with mechanical verification suites."""

from .boundary import BoundarySequence, partition_from_word
from .corners import (
    CornerData,
    StatSpec,
    content_delta,
    corners,
    hook_delta_power,
    hook_delta_power_total,
    q_increment,
    q_k,
    q_partition,
    q_tuple,
    stat_eval,
)
from .littlewood import (
    CoreOffsets,
    IdentityCheck,
    LittlewoodDecomposition,
    bk_identities,
    bk_pairs,
    core_offsets,
    decompose,
    gbinom2,
    is_t_core,
    recompose,
    residue_hook_count,
    t_core,
    t_quotients,
)
from .operators import (
    DifferenceTable,
    PartitionStatistic,
    apply_Dt,
    apply_Dt_power,
    certify_polynomiality,
    covers,
    forward_differences,
    layer_sum,
    plancherel_average,
)
from .partitions import (
    CellStat,
    Partition,
    cell_stats,
    contents,
    enumerate_partitions,
    hook_lengths,
    hook_multiset_mod,
    syt_count_oracle,
)
from .suites import SUITES, SuiteReport
from .weights import (
    F_lambda,
    F_skew,
    G_lambda,
    enumerate_layer,
    enumerate_layer_above,
    f_lambda,
    f_skew,
    hook_product,
    multinomial,
)

__version__ = "0.1.0"

__all__ = [
    "BoundarySequence",
    "CellStat",
    "CoreOffsets",
    "CornerData",
    "DifferenceTable",
    "F_lambda",
    "F_skew",
    "G_lambda",
    "IdentityCheck",
    "LittlewoodDecomposition",
    "Partition",
    "PartitionStatistic",
    "StatSpec",
    "SUITES",
    "SuiteReport",
    "apply_Dt",
    "apply_Dt_power",
    "bk_identities",
    "bk_pairs",
    "cell_stats",
    "certify_polynomiality",
    "content_delta",
    "contents",
    "core_offsets",
    "corners",
    "covers",
    "decompose",
    "enumerate_layer",
    "enumerate_layer_above",
    "enumerate_partitions",
    "f_lambda",
    "f_skew",
    "forward_differences",
    "gbinom2",
    "hook_delta_power",
    "hook_delta_power_total",
    "hook_lengths",
    "hook_multiset_mod",
    "hook_product",
    "is_t_core",
    "layer_sum",
    "multinomial",
    "partition_from_word",
    "plancherel_average",
    "q_increment",
    "q_k",
    "q_partition",
    "q_tuple",
    "recompose",
    "residue_hook_count",
    "stat_eval",
    "syt_count_oracle",
    "t_core",
    "t_quotients",
]
