"""Rooted and unrooted phylogenetic trees, LCA queries and tree/hierarchy conversion."""

from treepart.tree.convert import (
    contract_edge,
    hierarchy_of,
    is_refinement,
    same_topology,
    tree_of,
)
from treepart.tree.lca import BLOCK, LcaIndex, build_lca_index, lca
from treepart.tree.rooted import EdgeRef, RootedTree
from treepart.tree.unrooted import (
    UnrootedEdge,
    UnrootedTree,
    default_root,
    edge_key,
    root_at,
    root_on_edge,
    unroot,
)


__all__ = [
    "BLOCK",
    "EdgeRef",
    "LcaIndex",
    "RootedTree",
    "UnrootedEdge",
    "UnrootedTree",
    "build_lca_index",
    "contract_edge",
    "default_root",
    "edge_key",
    "hierarchy_of",
    "is_refinement",
    "lca",
    "root_at",
    "root_on_edge",
    "same_topology",
    "tree_of",
    "unroot",
]
