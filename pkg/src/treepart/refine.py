"""Compatible refinements of r-compatible trees and hierarchies.

A block ``A`` is unresolved when its closure ``A_H`` is not a cluster that can
be cut off: some other block ``B`` meets ``A_H`` and ``A_H`` lies inside
``B_H``. Each unresolved block gets one new cluster ``Y_A``, the union of the
child clusters of ``A_H`` that meet ``A``. On a tree this is a new vertex
inserted between ``lca(A)`` and the children whose edges ``A`` colors.
"""

from __future__ import annotations

import logging
from collections.abc import Collection
from dataclasses import dataclass

from treepart.coloring import (
    EdgeColoring,
    RefusalWitness,
    check_leaf_sets,
    color_edges,
    local_unresolved_vertices,
)
from treepart.core.hierarchy import Hierarchy, closure, validate_hierarchy
from treepart.core.partition import BlockId, LabelSet, Partition
from treepart.errors import GroundSetMismatchError, NotRCompatibleError, OverlapViolationError
from treepart.tree.rooted import RootedTree


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnresolvedSet:
    """Unresolved blocks, each paired with the vertex ``lca(A)`` that holds ``A_H``."""

    partition: Partition
    vertices: tuple[tuple[BlockId, int], ...]

    @property
    def blocks(self) -> frozenset[BlockId]:
        return frozenset(block for block, _ in self.vertices)

    def vertex_of(self, block: BlockId) -> int:
        return dict(self.vertices)[block]

    def __contains__(self, block: object) -> bool:
        return block in self.blocks

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class RefinementPlan:
    """Children to regroup under a new vertex, one group per unresolved block.

    Groups are ``(vertex, block, children)`` in preorder of ``vertex``; every
    group has at least two children.
    """

    tree: RootedTree
    groups: tuple[tuple[int, BlockId, tuple[int, ...]], ...]

    def apply(self) -> RootedTree:
        """Build the refined tree; new vertices get ids after the existing ones."""
        if not self.groups:
            return self.tree
        t = self.tree
        parents = list(t.parent)
        labels = list(t.labels)
        names = list(t.names)
        for vertex, _, children in self.groups:
            new = len(parents)
            parents.append(vertex)
            labels.append(None)
            names.append(None)
            for child in children:
                parents[child] = new
        return RootedTree.from_parents(parents, labels, names)


def _coloring(t: RootedTree, p: Partition, gamma: EdgeColoring | None) -> EdgeColoring:
    check_leaf_sets(t, p)
    coloring = gamma if gamma is not None else color_edges(t, p)
    if isinstance(coloring, RefusalWitness):
        raise NotRCompatibleError(coloring)
    return coloring


def unresolved_blocks(
    t: RootedTree, p: Partition, gamma: EdgeColoring | None = None
) -> UnresolvedSet:
    """Blocks that keep ``(t, p)`` from being compatible; empty iff compatible.

    Raises:
        LeafSetMismatchError: ``t`` and ``p`` are over different leaf sets.
        NotRCompatibleError: Some edge carries two colors.
    """
    coloring = _coloring(t, p, gamma)
    pairs = local_unresolved_vertices(t, p, coloring)
    return UnresolvedSet(p, tuple(sorted((block, u) for u, block in pairs)))


def plan_refinement(
    t: RootedTree, p: Partition, gamma: EdgeColoring | None = None
) -> RefinementPlan:
    """Work out which children move under which new vertex."""
    coloring = _coloring(t, p, gamma)
    colors = coloring.colors
    by_vertex: dict[int, list[BlockId]] = {}
    for u, block in local_unresolved_vertices(t, p, coloring):
        by_vertex.setdefault(u, []).append(block)
    groups = []
    for u in t.inner_vertices:
        for block in sorted(by_vertex.get(u, ())):
            children = tuple(c for c in t.children[u] if colors[c] == block)
            groups.append((u, block, children))
    return RefinementPlan(t, tuple(groups))


def build_refinement(
    t: RootedTree, p: Partition, gamma: EdgeColoring | None = None
) -> RootedTree:
    """A refinement of ``t`` compatible with ``p``; ``t`` itself if already compatible.

    Raises:
        LeafSetMismatchError: ``t`` and ``p`` are over different leaf sets.
        NotRCompatibleError: No refinement of ``t`` is compatible with ``p``.
    """
    plan = plan_refinement(t, p, gamma)
    if plan.groups:
        logger.debug("inserting %d vertices into a %d-vertex tree", len(plan.groups), len(t))
    return plan.apply()


def find_overlap_violation(
    h: Hierarchy, p: Partition
) -> tuple[LabelSet, LabelSet, LabelSet] | None:
    """A cluster of ``h`` overlapping two distinct blocks of ``p``, with both blocks."""
    if h.ground != p.ground:
        msg = "hierarchy and partition are over different ground sets"
        raise GroundSetMismatchError(msg)
    for cluster in sorted(h.clusters, key=lambda c: (len(c), sorted(c))):
        hit = []
        for block in sorted({p.block_index[label] for label in cluster}):
            members = p.block_sets[block]
            if not members <= cluster:
                hit.append(members)
                if len(hit) == 2:  # noqa: PLR2004
                    return (cluster, hit[0], hit[1])
    return None


def unresolved_family(h: Hierarchy, p: Partition) -> dict[BlockId, LabelSet]:
    """Unresolved blocks with their closures, computed from closures alone."""
    closures = [closure(h, block) for block in p.blocks]
    family = {}
    for a, a_h in enumerate(closures):
        for b, b_h in enumerate(closures):
            if b != a and p.block_sets[b] & a_h and a_h <= b_h:
                family[a] = a_h
                break
    return family


def new_cluster(h: Hierarchy, block: Collection[str], a_h: LabelSet) -> LabelSet:
    """``Y_A``: the union of the child clusters of ``a_h`` that meet ``block``."""
    members = frozenset(block)
    return frozenset().union(*(c for c in h.children_of(a_h) if c & members))


def refine_hierarchy(h: Hierarchy, p: Partition) -> Hierarchy:
    """Add ``Y_A`` for every unresolved block ``A``.

    Raises:
        GroundSetMismatchError: ``h`` and ``p`` are over different ground sets.
        OverlapViolationError: A cluster overlaps two distinct blocks, so no
            refinement of ``h`` is compatible with ``p``.
    """
    violation = find_overlap_violation(h, p)
    if violation is not None:
        raise OverlapViolationError(*violation)
    added = {
        new_cluster(h, p.blocks[a], a_h) for a, a_h in unresolved_family(h, p).items()
    }
    return validate_hierarchy(h.clusters | added, h.ground)


__all__ = [
    "RefinementPlan",
    "UnresolvedSet",
    "build_refinement",
    "find_overlap_violation",
    "new_cluster",
    "plan_refinement",
    "refine_hierarchy",
    "unresolved_blocks",
    "unresolved_family",
]
