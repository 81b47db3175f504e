"""Correspondence between rooted trees and hierarchies, refinement and contraction."""

from __future__ import annotations

from treepart.core.hierarchy import Hierarchy
from treepart.errors import LeafSetMismatchError, NotInnerVertexError, UnknownVertexError
from treepart.tree.rooted import RootedTree


def hierarchy_of(t: RootedTree) -> Hierarchy:
    """The cluster set ``{L(T(v)) : v in V(T)}``; one cluster per vertex."""
    return Hierarchy(frozenset(t.clusters), t.ground)


def tree_of(h: Hierarchy) -> RootedTree:
    """The unique rooted tree whose hierarchy is ``h``, in canonical numbering."""
    clusters = h.vertex_clusters
    vertex = {cluster: i for i, cluster in enumerate(clusters)}
    parent_map = h.parent_map
    parents = [-1 if (up := parent_map[c]) is None else vertex[up] for c in clusters]
    labels = [None if h.child_map[c] else next(iter(c)) for c in clusters]
    return RootedTree.from_parents(parents, labels)


def is_refinement(t_star: RootedTree, t: RootedTree) -> bool:
    """True iff every cluster of ``t`` is a cluster of ``t_star``.

    Raises:
        LeafSetMismatchError: The trees have different leaf sets.
    """
    if t_star.ground != t.ground:
        msg = "trees have different leaf sets"
        raise LeafSetMismatchError(msg)
    return set(t.clusters) <= set(t_star.clusters)


def same_topology(first: RootedTree, second: RootedTree) -> bool:
    """Isomorphism test for leaf-labeled trees: equal cluster sets."""
    return first.ground == second.ground and set(first.clusters) == set(second.clusters)


def contract_edge(t: RootedTree, v: int) -> RootedTree:
    """Remove the edge above inner vertex ``v``, handing its children to its parent."""
    if not 0 <= v < len(t) or v == t.root:
        msg = f"vertex {v} has no edge above it"
        raise UnknownVertexError(msg)
    if t.is_leaf(v):
        msg = f"vertex {v} is a leaf; pendant edges cannot be contracted"
        raise NotInnerVertexError(msg)
    keep = [u for u in range(len(t)) if u != v]
    new_id = {old: new for new, old in enumerate(keep)}
    parents = []
    for old in keep:
        p = t.parent[old]
        if p == v:
            p = t.parent[v]
        parents.append(-1 if p == -1 else new_id[p])
    return RootedTree.from_parents(
        parents, [t.labels[u] for u in keep], [t.names[u] for u in keep]
    ).canonical()


__all__ = ["contract_edge", "hierarchy_of", "is_refinement", "same_topology", "tree_of"]
