"""Text formats: Newick trees, partitions, split systems, edge colors and Fitch maps."""

from treepart.io.colors import (
    format_edge_colors,
    parse_colors,
    parse_edge_colored_tree,
    parse_edge_colors,
    resolve_vertex,
)
from treepart.io.fitch import format_fitch_map, parse_fitch_map
from treepart.io.newick import (
    NewickDocument,
    parse_newick,
    parse_newick_document,
    serialize_newick,
)
from treepart.io.partitions import (
    PartitionDocument,
    parse_partition_document,
    parse_partition_line,
    parse_partition_system,
    parse_split_system,
)


__all__ = [
    "NewickDocument",
    "PartitionDocument",
    "format_edge_colors",
    "format_fitch_map",
    "parse_colors",
    "parse_edge_colored_tree",
    "parse_edge_colors",
    "parse_fitch_map",
    "parse_newick",
    "parse_newick_document",
    "parse_partition_document",
    "parse_partition_line",
    "parse_partition_system",
    "parse_split_system",
    "resolve_vertex",
]
