"""Canonical, minimum and maximum separating edge sets of a compatible pair."""

from __future__ import annotations

import logging

from treepart.coloring import (
    UNCOLORED,
    EdgeColoring,
    RefusalWitness,
    check_leaf_sets,
    color_edges,
    local_unresolved_vertices,
)
from treepart.compat.models import SeparatingEdgeSet
from treepart.core.partition import Partition
from treepart.errors import NotCompatibleError
from treepart.tree.rooted import RootedTree


logger = logging.getLogger(__name__)


def compatible_coloring(
    t: RootedTree, p: Partition, gamma: EdgeColoring | None = None
) -> EdgeColoring:
    """Return the coloring of ``(t, p)``, raising unless the pair is compatible.

    Raises:
        LeafSetMismatchError: ``t`` and ``p`` are over different leaf sets.
        NotCompatibleError: Some edge carries two colors or some vertex must be split.
    """
    check_leaf_sets(t, p)
    coloring = gamma if gamma is not None else color_edges(t, p)
    if isinstance(coloring, RefusalWitness):
        msg = f"the edge above vertex {coloring.edge} lies inside two blocks"
        raise NotCompatibleError(msg)
    unresolved = local_unresolved_vertices(t, p, coloring)
    if unresolved:
        u, block = min(unresolved)
        msg = f"vertex {u} would have to be split to separate block {p.blocks[block]}"
        raise NotCompatibleError(msg)
    return coloring


def canonical_from_coloring(gamma: EdgeColoring) -> SeparatingEdgeSet:
    """The edges above the last common ancestor of each block, the root excepted."""
    root = gamma.tree.root
    return SeparatingEdgeSet(gamma.tree, frozenset(v for v in gamma.tops if v != root))


def canonical_separating_edges(
    t: RootedTree, p: Partition, gamma: EdgeColoring | None = None
) -> SeparatingEdgeSet:
    """One edge above ``lca(A)`` for every block ``A`` whose lca is not the root.

    Raises:
        NotCompatibleError: ``t`` and ``p`` are not compatible.
    """
    return canonical_from_coloring(compatible_coloring(t, p, gamma))


def minimum_separating_edges(
    t: RootedTree, p: Partition, gamma: EdgeColoring | None = None
) -> SeparatingEdgeSet:
    """A separating set with exactly ``|P| - 1`` edges.

    When no block reaches up to the root, the canonical set has ``|P|`` edges
    and one of them is dropped: the edge of the first block (by smallest label)
    whose lca has no other block's lca above it. Its component then absorbs the
    otherwise leafless root component.

    Raises:
        NotCompatibleError: ``t`` and ``p`` are not compatible.
    """
    coloring = compatible_coloring(t, p, gamma)
    canonical = canonical_from_coloring(coloring)
    if len(canonical) < len(p):
        return canonical
    tops = coloring.tops
    is_top = [False] * len(t)
    for v in tops:
        is_top[v] = True
    below_top = [False] * len(t)
    for v in t.preorder:
        parent = t.parent[v]
        if parent != -1:
            below_top[v] = below_top[parent] or is_top[parent]
    dropped = next(v for v in tops if not below_top[v])
    logger.debug("dropping the edge above vertex %d from the canonical set", dropped)
    return SeparatingEdgeSet(t, canonical.edges - {dropped})


def maximum_separating_edges(
    t: RootedTree, p: Partition, gamma: EdgeColoring | None = None
) -> SeparatingEdgeSet:
    """All uncolored edges; every separating set of ``(t, p)`` is contained in it.

    Raises:
        NotCompatibleError: ``t`` and ``p`` are not compatible.
    """
    coloring = compatible_coloring(t, p, gamma)
    colors = coloring.colors
    return SeparatingEdgeSet(t, frozenset(v for v in t.edges if colors[v] == UNCOLORED))


__all__ = [
    "canonical_from_coloring",
    "canonical_separating_edges",
    "compatible_coloring",
    "maximum_separating_edges",
    "minimum_separating_edges",
]
