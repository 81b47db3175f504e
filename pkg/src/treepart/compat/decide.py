"""Compatibility and r-compatibility decisions for a tree and a partition."""

from __future__ import annotations

import logging

from treepart.coloring import (
    RefusalWitness,
    check_leaf_sets,
    color_edges,
    local_unresolved_vertices,
)
from treepart.compat.models import CompatVerdict, VerdictStatus
from treepart.compat.separating import canonical_from_coloring
from treepart.core.hierarchy import Hierarchy, closure
from treepart.core.partition import Partition
from treepart.errors import LeafSetMismatchError
from treepart.refine import build_refinement
from treepart.tree.lca import LcaIndex
from treepart.tree.rooted import RootedTree
from treepart.tree.unrooted import UnrootedTree, root_at


logger = logging.getLogger(__name__)


def _decide(
    t: RootedTree, p: Partition, index: LcaIndex | None, *, refine: bool
) -> CompatVerdict:
    gamma = color_edges(t, p, index)
    if isinstance(gamma, RefusalWitness):
        return CompatVerdict(VerdictStatus.INCOMPATIBLE, t, p, refusal=gamma)
    unresolved = local_unresolved_vertices(t, p, gamma)
    if not unresolved:
        separating = canonical_from_coloring(gamma)
        logger.debug("compatible; %d canonical separating edges", len(separating))
        return CompatVerdict(
            VerdictStatus.COMPATIBLE, t, p, separating=separating, refined=t if refine else None
        )
    refined = build_refinement(t, p, gamma) if refine else None
    return CompatVerdict(
        VerdictStatus.R_COMPATIBLE_ONLY, t, p, refined=refined, unresolved=unresolved
    )


def is_compatible(t: RootedTree, p: Partition, index: LcaIndex | None = None) -> CompatVerdict:
    """Decide whether some set of edges of ``t`` cuts out exactly ``p``.

    ``t`` is compatible with ``p`` iff the coloring succeeds and no vertex has
    two differently colored child edges. Runs in time linear in the tree apart
    from building the lca index, which can be passed in for repeated queries.

    Returns:
        A compatible verdict with the canonical separating edges, an
        r-compatible verdict listing the vertices to split, or an
        incompatible verdict with the refusing edge.

    Raises:
        LeafSetMismatchError: ``t`` and ``p`` are over different leaf sets.
    """
    return _decide(t, p, index, refine=False)


def is_r_compatible(t: RootedTree, p: Partition, index: LcaIndex | None = None) -> CompatVerdict:
    """Like :func:`is_compatible`, also building the compatible refinement when one exists."""
    return _decide(t, p, index, refine=True)


def is_compatible_via_closures(h: Hierarchy, p: Partition) -> bool:
    """Decide compatibility from closures alone.

    ``h`` is compatible with ``p`` iff every closure ``A_H`` is a union of
    blocks and distinct blocks have distinct closures.

    Raises:
        LeafSetMismatchError: ``h`` and ``p`` are over different ground sets.
    """
    if h.ground != p.ground:
        msg = "hierarchy and partition are over different leaf sets"
        raise LeafSetMismatchError(msg)
    seen = set()
    for block in p.blocks:
        a_h = closure(h, block)
        if any(not p.block_sets[p.block_index[label]] <= a_h for label in a_h):
            return False
        if a_h in seen:
            return False
        seen.add(a_h)
    return True


def is_compatible_unrooted(t_bar: UnrootedTree, p: Partition) -> CompatVerdict:
    """Root ``t_bar`` at its default inner vertex and decide there.

    The verdict does not depend on where the tree is rooted; its witnesses
    refer to the rooted tree, which keeps the vertex ids of ``t_bar``.
    """
    t = root_at(t_bar)
    check_leaf_sets(t, p)
    return is_compatible(t, p)


__all__ = [
    "is_compatible",
    "is_compatible_unrooted",
    "is_compatible_via_closures",
    "is_r_compatible",
]
