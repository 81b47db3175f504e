"""Compatibility of trees and partitions, forest partitions and separating edge sets."""

from treepart.compat.decide import (
    is_compatible,
    is_compatible_unrooted,
    is_compatible_via_closures,
    is_r_compatible,
)
from treepart.compat.forest import (
    forest_partition,
    forest_partition_of_union,
    verify_separating_set,
)
from treepart.compat.models import CompatVerdict, SeparatingEdgeSet, VerdictStatus
from treepart.compat.separating import (
    canonical_separating_edges,
    maximum_separating_edges,
    minimum_separating_edges,
)


__all__ = [
    "CompatVerdict",
    "SeparatingEdgeSet",
    "VerdictStatus",
    "canonical_separating_edges",
    "forest_partition",
    "forest_partition_of_union",
    "is_compatible",
    "is_compatible_unrooted",
    "is_compatible_via_closures",
    "is_r_compatible",
    "maximum_separating_edges",
    "minimum_separating_edges",
    "verify_separating_set",
]
