"""Block-peeling procedures deciding compatibility from splits alone.

A partition with a single block fits any tree. Otherwise some block ``A``
must be peelable: for compatibility the split ``A|(Y-A)`` is present in the
system restricted to the remaining leaves ``Y``; for r-compatibility it only
has to agree with every restricted split. The rest of the partition must then
fit the system restricted to ``Y - A``.

These procedures are exponential in the number of blocks and serve as an
independent reference for the linear-time checks.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import cache

from treepart.core.partition import LabelSet, Partition
from treepart.errors import LeafSetMismatchError
from treepart.splits.system import SplitSystem
from treepart.splits.trees import splits_of
from treepart.tree.unrooted import UnrootedTree


_Admissible = Callable[[LabelSet, LabelSet, set[LabelSet]], bool]


def _split_present(block: LabelSet, y: LabelSet, sides: set[LabelSet]) -> bool:
    return (block if min(y) in block else y - block) in sides


def _split_agrees(block: LabelSet, y: LabelSet, sides: set[LabelSet]) -> bool:
    rest = y - block
    for side in sides:
        other = y - side
        if block & side and block & other and rest & side and rest & other:
            return False
    return True


def _peel(s: SplitSystem, p: Partition, admissible: _Admissible) -> bool:
    if s.ground != p.ground:
        msg = "split system and partition are over different leaf sets"
        raise LeafSetMismatchError(msg)
    blocks = p.block_sets

    @cache
    def solve(remaining: frozenset[int]) -> bool:
        if len(remaining) == 1:
            return True
        y = frozenset().union(*(blocks[i] for i in remaining))
        sides = s.restrict(y)
        return any(
            admissible(blocks[i], y, sides) and solve(remaining - {i})
            for i in sorted(remaining)
        )

    return solve(frozenset(range(len(blocks))))


def compatible_by_peeling(s: SplitSystem, p: Partition) -> bool:
    """Peel blocks whose split is in the restricted system."""
    return _peel(s, p, _split_present)


def r_compatible_by_peeling(s: SplitSystem, p: Partition) -> bool:
    """Peel blocks whose split is compatible with every restricted split."""
    return _peel(s, p, _split_agrees)


def is_compatible_recursive(t_bar: UnrootedTree, p: Partition) -> bool:
    """Compatibility of an unrooted tree, decided by peeling blocks off its splits.

    Raises:
        LeafSetMismatchError: ``t_bar`` and ``p`` are over different leaf sets.
    """
    return compatible_by_peeling(splits_of(t_bar), p)


def is_r_compatible_recursive(t_bar: UnrootedTree, p: Partition) -> bool:
    """R-compatibility of an unrooted tree, decided by peeling blocks off its splits.

    Raises:
        LeafSetMismatchError: ``t_bar`` and ``p`` are over different leaf sets.
    """
    return r_compatible_by_peeling(splits_of(t_bar), p)


__all__ = [
    "compatible_by_peeling",
    "is_compatible_recursive",
    "is_r_compatible_recursive",
    "r_compatible_by_peeling",
]
