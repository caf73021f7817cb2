"""Forcibly-biconnected degree sequence toolkit."""

from ._core import (
    CutWitness,
    SplitWitness,
    __version__,
    candidate_orders,
    check_unimodal,
    count_filtered,
    enum_partitions,
    enum_sequences,
    extremal_largest_term,
    find_cut_witnesses,
    forcibly_biconnected,
    forcibly_biconnected_basic,
    forcibly_connected,
    ghh,
    is_graphical,
    multiset_combinations,
    normalize,
    oracle_verdict,
    potentially_biconnected,
    potentially_connected,
    random_sequences,
    ratio_report,
    realization_count,
)

__all__ = [
    "CutWitness",
    "SplitWitness",
    "__version__",
    "candidate_orders",
    "check_unimodal",
    "count_filtered",
    "enum_partitions",
    "enum_sequences",
    "extremal_largest_term",
    "find_cut_witnesses",
    "forcibly_biconnected",
    "forcibly_biconnected_basic",
    "forcibly_connected",
    "ghh",
    "is_graphical",
    "multiset_combinations",
    "normalize",
    "oracle_verdict",
    "potentially_biconnected",
    "potentially_connected",
    "random_sequences",
    "ratio_report",
    "realization_count",
]
