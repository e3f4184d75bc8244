"""Duplicate-aware quicksort workbench.

Thin Python surface over the C++ core: the sort family and its baselines,
deterministic dataset generation, and single benchmark cells (operation
counting or wall-clock timing) that mirror the CLI's `counts` and `bench`
subcommands.
"""

from ._core import (
    counting_cell,
    distinct_count,
    eq_partition,
    methods,
    pattern_sequence,
    sort,
    sort_with_counts,
    timing_cell,
    uniform_multiset,
)

__all__ = [
    "counting_cell",
    "distinct_count",
    "eq_partition",
    "methods",
    "pattern_sequence",
    "sort",
    "sort_with_counts",
    "timing_cell",
    "uniform_multiset",
]
