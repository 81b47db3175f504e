"""Partition systems against a fixed tree."""

from __future__ import annotations

from collections.abc import Iterable

from treepart.coloring import check_leaf_sets
from treepart.compat.decide import is_compatible
from treepart.core.lattice import meet_all
from treepart.core.partition import Partition
from treepart.systems.models import SystemVerdict
from treepart.tree.rooted import RootedTree


def system_compatible_fixed(t: RootedTree, ps: Iterable[Partition]) -> SystemVerdict:
    """Check every member against ``t``; the system fits iff every member does.

    Raises:
        LeafSetMismatchError: Some member is over a different leaf set than ``t``.
    """
    members = list(ps)
    for p in members:
        check_leaf_sets(t, p)
    index = t.lca_index
    verdicts = tuple(is_compatible(t, p, index) for p in members)
    return SystemVerdict(all(v.is_compatible for v in verdicts), verdicts)


def meet_system(ps: Iterable[Partition]) -> Partition:
    """Common refinement of all members.

    Raises:
        EmptySystemError: The system has no members.
        GroundSetMismatchError: Members are over different ground sets.
    """
    return meet_all(ps)


__all__ = ["meet_system", "system_compatible_fixed"]
