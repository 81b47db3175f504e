"""Partition systems: fixed-tree checks, the refinement search and Fitch maps."""

from treepart.systems.fitch import (
    explainable,
    fitch_map_of,
    is_symmetrized_fitch,
    monochromatic_partition,
    monochromatic_partitions,
    symm_fitch_recognition,
)
from treepart.systems.fixed import meet_system, system_compatible_fixed
from treepart.systems.fpt import (
    binary_shapes,
    compat_tp,
    count_binary_refinements,
    double_factorial,
    enumerate_binary_refinements,
    exist_tp,
    resolution_stats,
)
from treepart.systems.models import (
    Color,
    EdgeColoredTree,
    FitchMap,
    PartitionSystem,
    ResolutionStats,
    SystemVerdict,
)
from treepart.systems.settings import SolverSettings, get_settings


__all__ = [
    "Color",
    "EdgeColoredTree",
    "FitchMap",
    "PartitionSystem",
    "ResolutionStats",
    "SolverSettings",
    "SystemVerdict",
    "binary_shapes",
    "compat_tp",
    "count_binary_refinements",
    "double_factorial",
    "enumerate_binary_refinements",
    "exist_tp",
    "explainable",
    "fitch_map_of",
    "get_settings",
    "is_symmetrized_fitch",
    "meet_system",
    "monochromatic_partition",
    "monochromatic_partitions",
    "resolution_stats",
    "symm_fitch_recognition",
    "system_compatible_fixed",
]
