"""Meet, join and order relations in the lattice of partitions of a fixed set."""

from __future__ import annotations

from collections.abc import Iterable
from functools import reduce

from treepart.core.partition import Partition
from treepart.core.union_find import UnionFind
from treepart.errors import EmptySystemError, GroundSetMismatchError


def _same_ground(p1: Partition, p2: Partition) -> None:
    if p1.ground != p2.ground:
        msg = f"ground sets differ: {{{','.join(p1.ground)}}} vs {{{','.join(p2.ground)}}}"
        raise GroundSetMismatchError(msg)


def meet(p1: Partition, p2: Partition) -> Partition:
    """Common refinement: all non-empty intersections of a block of each."""
    _same_ground(p1, p2)
    cells: dict[tuple[int, int], list[str]] = {}
    for label in p1.ground:
        cells.setdefault((p1.block_index[label], p2.block_index[label]), []).append(label)
    return Partition.trusted(cells.values(), p1.ground)


def meet_all(partitions: Iterable[Partition]) -> Partition:
    """Fold :func:`meet` over a non-empty family."""
    members = list(partitions)
    if not members:
        msg = "the meet of an empty family is undefined"
        raise EmptySystemError(msg)
    return reduce(meet, members)


def join(p1: Partition, p2: Partition) -> Partition:
    """Finest partition refined by both, by merging blocks that intersect."""
    _same_ground(p1, p2)
    index = {label: i for i, label in enumerate(p1.ground)}
    forest = UnionFind(len(p1.ground))
    for block in (*p1.blocks, *p2.blocks):
        head = index[block[0]]
        for label in block[1:]:
            forest.unite(head, index[label])
    groups = forest.groups()
    return Partition.trusted(([p1.ground[i] for i in group] for group in groups), p1.ground)


def refines(p1: Partition, p2: Partition) -> bool:
    """True iff every block of ``p1`` lies inside a block of ``p2``."""
    _same_ground(p1, p2)
    return all(len({p2.block_index[label] for label in block}) == 1 for block in p1.blocks)


def locally_comparable(p1: Partition, p2: Partition) -> bool:
    """True iff every pair of blocks is either nested or disjoint."""
    _same_ground(p1, p2)
    for block, members in zip(p1.blocks, p1.block_sets, strict=True):
        hits = {p2.block_index[label] for label in block}
        # block spans several blocks of p2: each of them must lie inside block
        if len(hits) > 1 and any(not p2.block_sets[j] <= members for j in hits):
            return False
    return True


__all__ = ["join", "locally_comparable", "meet", "meet_all", "refines"]
