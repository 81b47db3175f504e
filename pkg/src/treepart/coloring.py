"""The edge coloring induced by a partition on a rooted tree.

Block ``A`` colors edge ``e`` iff ``e`` lies on the path between two leaves of
``A``. A tree can be refined to fit the partition iff no edge gets two colors,
so :func:`color_edges` stops at the first edge that would.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from treepart.core.partition import BlockId, Partition
from treepart.errors import ForeignEdgeError, LeafSetMismatchError
from treepart.tree.lca import LcaIndex
from treepart.tree.rooted import EdgeRef, RootedTree


logger = logging.getLogger(__name__)

UNCOLORED = -1


@dataclass(frozen=True)
class RefusalWitness:
    """An edge that lies on paths inside two different blocks."""

    edge: EdgeRef
    first: BlockId
    second: BlockId


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """At most one block per edge, indexed by child vertex.

    ``colors[v]`` is the block coloring the edge above ``v`` or
    :data:`UNCOLORED`; the root's slot is always uncolored. ``tops[i]`` is the
    last common ancestor of block ``i``.
    """

    tree: RootedTree
    partition: Partition
    colors: tuple[int, ...]
    tops: tuple[int, ...]
    painted: int

    def color(self, edge: EdgeRef) -> BlockId | None:
        value = self.colors[edge]
        return None if value == UNCOLORED else value

    def colored_edges(self) -> tuple[EdgeRef, ...]:
        return tuple(e for e in self.tree.edges if self.colors[e] != UNCOLORED)

    def uncolored_edges(self) -> tuple[EdgeRef, ...]:
        return tuple(e for e in self.tree.edges if self.colors[e] == UNCOLORED)


def check_leaf_sets(t: RootedTree, p: Partition) -> None:
    if t.ground != p.ground:
        msg = (
            f"tree leaves {{{','.join(t.ground)}}} differ from "
            f"partition ground set {{{','.join(p.ground)}}}"
        )
        raise LeafSetMismatchError(msg)


def color_edges(
    t: RootedTree, p: Partition, index: LcaIndex | None = None
) -> EdgeColoring | RefusalWitness:
    """Paint every edge with the block whose internal paths use it.

    The tops of all blocks come from one batched lca query. Each leaf then
    paints its path upward until it reaches the top of its block or an edge
    its block already painted, so every edge is painted at most once overall.

    Returns:
        The complete coloring, or the first edge that would get a second color.

    Raises:
        LeafSetMismatchError: ``t`` and ``p`` are over different leaf sets.
    """
    check_leaf_sets(t, p)
    idx = index if index is not None else t.lca_index
    leaf_of = t.leaf_of
    groups = [[leaf_of[label] for label in block] for block in p.blocks]
    tops = idx.of_groups(groups)
    parent = t.parent
    colors = [UNCOLORED] * len(t)
    painted = 0
    for block_id, group in enumerate(groups):
        top = tops[block_id]
        for leaf in (*group[1:], group[0]):
            v = leaf
            while v != top and colors[v] != block_id:
                if colors[v] != UNCOLORED:
                    logger.debug("edge above %d carries blocks %d and %d", v, colors[v], block_id)
                    return RefusalWitness(edge=v, first=colors[v], second=block_id)
                colors[v] = block_id
                painted += 1
                v = parent[v]
    logger.debug("painted %d of %d edges", painted, len(t) - 1)
    return EdgeColoring(
        tree=t, partition=p, colors=tuple(colors), tops=tuple(tops), painted=painted
    )


def color_of_edge_naive(t: RootedTree, p: Partition, e: EdgeRef) -> frozenset[BlockId]:
    """All blocks meeting both the leaves below ``e`` and the leaves outside it."""
    if not 0 <= e < len(t) or e == t.root:
        msg = f"vertex {e} has no edge above it"
        raise ForeignEdgeError(msg)
    below = t.leaves_below(e)
    return frozenset(
        i for i, block in enumerate(p.block_sets) if block & below and block - below
    )


def local_unresolved_vertices(
    t: RootedTree, p: Partition, gamma: EdgeColoring
) -> frozenset[tuple[int, BlockId]]:
    """Pairs ``(u, A)`` where ``u`` must be split to separate ``A`` from another block.

    ``A`` colors a child edge of ``u`` but not the edge above ``u``, and some
    other child edge of ``u`` carries a different color.
    """
    check_leaf_sets(t, p)
    colors = np.asarray(gamma.colors, dtype=np.int64)
    parents = np.asarray(t.parent, dtype=np.int64)
    colored = (colors != UNCOLORED) & (parents != -1)
    below, owner = colors[colored], parents[colored]
    lowest = np.full(len(t), np.iinfo(np.int64).max, dtype=np.int64)
    highest = np.full(len(t), UNCOLORED, dtype=np.int64)
    np.minimum.at(lowest, owner, below)
    np.maximum.at(highest, owner, below)
    found: set[tuple[int, BlockId]] = set()
    # only vertices with two distinct child colors can be unresolved
    for u in np.flatnonzero((highest != UNCOLORED) & (lowest != highest)).tolist():
        seen = {gamma.colors[c] for c in t.children[u]} - {UNCOLORED}
        above = gamma.colors[u]
        found.update((u, block) for block in seen if block != above)
    return frozenset(found)


__all__ = [
    "UNCOLORED",
    "EdgeColoring",
    "RefusalWitness",
    "check_leaf_sets",
    "color_edges",
    "color_of_edge_naive",
    "local_unresolved_vertices",
]
