"""The partition ``F(T, H)`` cut out of a tree by removing a set of edges."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from treepart.compat.models import SeparatingEdgeSet
from treepart.core.lattice import meet
from treepart.core.partition import Partition
from treepart.core.union_find import UnionFind
from treepart.errors import ForeignEdgeError
from treepart.tree.rooted import EdgeRef, RootedTree
from treepart.tree.unrooted import UnrootedEdge, UnrootedTree


logger = logging.getLogger(__name__)

EdgeSet = SeparatingEdgeSet | Iterable[EdgeRef] | Iterable[UnrootedEdge]


def _rooted_cut(t: RootedTree, h: Iterable[EdgeRef]) -> set[EdgeRef]:
    cut = set()
    for e in h:
        if not isinstance(e, int) or not 0 <= e < len(t) or e == t.root:
            msg = f"{e!r} is not an edge of the tree"
            raise ForeignEdgeError(msg)
        cut.add(e)
    return cut


def forest_partition(t: RootedTree | UnrootedTree, h: EdgeSet) -> Partition:
    """Group the leaves by the connected components of ``t - h``.

    Rooted edges are named by their child vertex, unrooted ones by vertex pairs.
    Components without leaves are dropped.

    Raises:
        ForeignEdgeError: Some member of ``h`` is not an edge of ``t``.
    """
    edges = h.edges if isinstance(h, SeparatingEdgeSet) else h
    forest = UnionFind(len(t))
    if isinstance(t, RootedTree):
        cut: set = _rooted_cut(t, edges)  # type: ignore[arg-type]
        for v in t.edges:
            if v not in cut:
                forest.unite(v, t.parent[v])
    else:
        cut = {t.check_edge(e) for e in edges}  # type: ignore[arg-type]
        for u, v in t.edges:
            if (u, v) not in cut:
                forest.unite(u, v)
    components: dict[int, list[str]] = {}
    for label, leaf in t.leaf_of.items():
        components.setdefault(forest.find(leaf), []).append(label)
    logger.debug("%d cut edges leave %d leaf components", len(cut), len(components))
    return Partition.trusted(components.values(), t.ground)


def forest_partition_of_union(
    t: RootedTree | UnrootedTree, first: EdgeSet, second: EdgeSet
) -> Partition:
    """``F(T, H1 | H2)``, computed as the meet ``F(T, H1) & F(T, H2)``."""
    return meet(forest_partition(t, first), forest_partition(t, second))


def verify_separating_set(t: RootedTree | UnrootedTree, p: Partition, h: EdgeSet) -> bool:
    """True iff cutting ``h`` out of ``t`` yields exactly ``p``."""
    return forest_partition(t, h) == p


__all__ = ["EdgeSet", "forest_partition", "forest_partition_of_union", "verify_separating_set"]
