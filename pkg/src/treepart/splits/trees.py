"""Split systems of unrooted trees, their reconstruction, restriction and partition fits."""

from __future__ import annotations

import logging
from collections.abc import Collection

from treepart.compat.decide import is_compatible_unrooted
from treepart.core.hierarchy import validate_hierarchy
from treepart.core.partition import Partition
from treepart.errors import (
    EmptySubsetError,
    GroundSetMismatchError,
    MissingSingletonSplitsError,
    NotTreeLikeError,
    TooFewLeavesError,
    UnknownLabelError,
)
from treepart.splits.system import Split, SplitSystem, meet_of_splits
from treepart.tree.convert import tree_of
from treepart.tree.unrooted import UnrootedEdge, UnrootedTree, root_at, unroot


logger = logging.getLogger(__name__)

_MIN_UNROOTED_LEAVES = 3


def splits_of(t_bar: UnrootedTree) -> SplitSystem:
    """One split per edge, pendant edges giving the singleton splits."""
    t = root_at(t_bar)
    return SplitSystem.of((Split.of(t.clusters[v], t.ground) for v in t.edges), t.ground)


def split_of_edge(t_bar: UnrootedTree, edge: UnrootedEdge) -> Split:
    """The split obtained by deleting ``edge``.

    Raises:
        ForeignEdgeError: ``edge`` is not an edge of ``t_bar``.
    """
    u, v = t_bar.check_edge(edge)
    t = root_at(t_bar)
    child = v if t.parent[v] == u else u
    return Split.of(t.leaves_below(child), t.ground)


def _check_tree_like(s: SplitSystem) -> None:
    pair = s.incompatible_pair
    if pair is not None:
        raise NotTreeLikeError(str(pair[0]), str(pair[1]))


def tree_of_splits(s: SplitSystem) -> UnrootedTree:
    """The unique unrooted tree whose split system is ``s``.

    The sides avoiding the smallest label form a hierarchy once that label and
    X are added; its tree, with the root suppressed, is the answer.

    Raises:
        NotTreeLikeError: Two splits of ``s`` are incompatible.
        MissingSingletonSplitsError: Some singleton split is missing.
        TooFewLeavesError: The ground set has fewer than three labels.
    """
    _check_tree_like(s)
    if missing := s.missing_singletons():
        raise MissingSingletonSplitsError(missing[0])
    if len(s.ground) < _MIN_UNROOTED_LEAVES:
        msg = f"an unrooted tree needs at least 3 leaves, got {len(s.ground)}"
        raise TooFewLeavesError(msg)
    anchor = frozenset(s.ground[:1])
    clusters = [split.other for split in s] + [anchor]
    return unroot(tree_of(validate_hierarchy(clusters, s.ground, autocomplete=True)))


def restrict(t_bar: UnrootedTree, y: Collection[str]) -> UnrootedTree:
    """The tree ``t_bar`` induced on the leaves ``y``, degree-2 vertices suppressed.

    Raises:
        EmptySubsetError: ``y`` is empty.
        UnknownLabelError: ``y`` leaves the leaf set of ``t_bar``.
        TooFewLeavesError: ``y`` has fewer than three labels.
    """
    keep = frozenset(y)
    if not keep:
        msg = "cannot restrict a tree to the empty set"
        raise EmptySubsetError(msg)
    if unknown := keep - t_bar.ground_set:
        raise UnknownLabelError(min(unknown))
    if len(keep) < _MIN_UNROOTED_LEAVES:
        msg = f"a restriction needs at least 3 leaves, got {len(keep)}"
        raise TooFewLeavesError(msg)
    labels = tuple(sorted(keep))
    sides = splits_of(t_bar).restrict(keep)
    return tree_of_splits(SplitSystem.of((Split.of(side, labels) for side in sides), labels))


def is_compatible_splits(s: SplitSystem, p: Partition) -> SplitSystem | None:
    """A subset of ``s`` whose common refinement is ``p``, or None if there is none.

    The tree of ``s`` (singleton splits added) is checked with the linear-time
    algorithm and the splits of its canonical separating edges are returned
    when they all belong to ``s``. Otherwise the answer is decided by the
    splits of ``s`` that cut no block: their common refinement is the finest
    reachable from ``s`` above ``p``.

    Raises:
        NotTreeLikeError: ``s`` is not pairwise compatible.
        GroundSetMismatchError: ``s`` and ``p`` are over different ground sets.
    """
    if s.ground != p.ground:
        msg = "split system and partition are over different ground sets"
        raise GroundSetMismatchError(msg)
    _check_tree_like(s)
    if len(s.ground) >= _MIN_UNROOTED_LEAVES:
        verdict = is_compatible_unrooted(tree_of_splits(s.with_singletons()), p)
        if not verdict.is_compatible:
            return None
        assert verdict.separating is not None  # noqa: S101
        chosen = {Split.of(verdict.tree.clusters[v], s.ground) for v in verdict.separating}
        if chosen <= s.members:
            return SplitSystem.of(chosen, s.ground)
        logger.debug("canonical splits leave the system; falling back to non-cutting splits")
    kept = [split for split in s if not any(split.cuts(block) for block in p.blocks)]
    if meet_of_splits(kept, s.ground) != p:
        return None
    return SplitSystem.of(kept, s.ground)


__all__ = ["is_compatible_splits", "restrict", "split_of_edge", "splits_of", "tree_of_splits"]
