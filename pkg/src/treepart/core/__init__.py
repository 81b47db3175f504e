"""Ground types: labels, partitions, hierarchies and the partition lattice."""

from treepart.core.hierarchy import Hierarchy, closure, validate_hierarchy
from treepart.core.lattice import join, locally_comparable, meet, meet_all, refines
from treepart.core.partition import (
    BlockId,
    Label,
    LabelSet,
    Partition,
    ground_tuple,
    overlaps,
    validate_partition,
)
from treepart.core.union_find import UnionFind


__all__ = [
    "BlockId",
    "Hierarchy",
    "Label",
    "LabelSet",
    "Partition",
    "UnionFind",
    "closure",
    "ground_tuple",
    "join",
    "locally_comparable",
    "meet",
    "meet_all",
    "overlaps",
    "refines",
    "validate_hierarchy",
    "validate_partition",
]
