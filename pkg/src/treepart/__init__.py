"""treepart - compatibility of partitions with phylogenetic trees."""

from .compat import (
    CompatVerdict,
    VerdictStatus,
    canonical_separating_edges,
    forest_partition,
    is_compatible,
    is_compatible_unrooted,
    is_r_compatible,
    maximum_separating_edges,
    minimum_separating_edges,
)
from .core import Hierarchy, Partition, validate_hierarchy, validate_partition
from .io import parse_newick, parse_partition_line, serialize_newick
from .refine import build_refinement, refine_hierarchy, unresolved_blocks
from .splits import Split, SplitSystem, is_compatible_splits, splits_of, tree_of_splits
from .systems import FitchMap, compat_tp, exist_tp, symm_fitch_recognition
from .tracing import init_tracing, trace_step
from .tree import RootedTree, UnrootedTree, root_at, unroot


__all__ = [
    # Core types
    "Hierarchy",
    "Partition",
    "RootedTree",
    "UnrootedTree",
    "validate_hierarchy",
    "validate_partition",
    "root_at",
    "unroot",
    # Text formats
    "parse_newick",
    "parse_partition_line",
    "serialize_newick",
    # Compatibility
    "CompatVerdict",
    "VerdictStatus",
    "is_compatible",
    "is_compatible_unrooted",
    "is_r_compatible",
    "forest_partition",
    "canonical_separating_edges",
    "minimum_separating_edges",
    "maximum_separating_edges",
    # Refinement
    "build_refinement",
    "refine_hierarchy",
    "unresolved_blocks",
    # Splits
    "Split",
    "SplitSystem",
    "is_compatible_splits",
    "splits_of",
    "tree_of_splits",
    # Partition systems
    "FitchMap",
    "compat_tp",
    "exist_tp",
    "symm_fitch_recognition",
    # Tracing
    "init_tracing",
    "trace_step",
]
