"""Splits and split systems: tree-likeness, reconstruction, restriction and partition fits."""

from treepart.splits.recursive import (
    compatible_by_peeling,
    is_compatible_recursive,
    is_r_compatible_recursive,
    r_compatible_by_peeling,
)
from treepart.splits.system import (
    Split,
    SplitSystem,
    meet_of_splits,
    pairwise_compatible,
    split_system_of_partition,
)
from treepart.splits.trees import (
    is_compatible_splits,
    restrict,
    split_of_edge,
    splits_of,
    tree_of_splits,
)


__all__ = [
    "Split",
    "SplitSystem",
    "compatible_by_peeling",
    "is_compatible_recursive",
    "is_compatible_splits",
    "is_r_compatible_recursive",
    "meet_of_splits",
    "pairwise_compatible",
    "r_compatible_by_peeling",
    "restrict",
    "split_of_edge",
    "split_system_of_partition",
    "splits_of",
    "tree_of_splits",
]
