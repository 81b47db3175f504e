"""Symmetrized Fitch maps and edge-colored trees that explain them.

An edge-colored tree explains a map ``eps`` when ``m`` is in ``eps(x, y)``
exactly if some edge on the path between ``x`` and ``y`` carries ``m``. For a
single color this happens iff the non-neighbours of the color's graph form a
partition compatible with the tree, which turns recognition into a search for
a tree compatible with one partition per color.
"""

from __future__ import annotations

import logging
from itertools import combinations

from treepart.compat.decide import is_compatible
from treepart.compat.forest import forest_partition
from treepart.core.partition import Partition
from treepart.core.union_find import UnionFind
from treepart.errors import LeafSetMismatchError, NotMonochromaticFitchError, UnknownColorError
from treepart.systems.fpt import exist_tp
from treepart.systems.models import Color, EdgeColoredTree, FitchMap
from treepart.tracing import trace_step
from treepart.tree.rooted import RootedTree
from treepart.tree.unrooted import UnrootedTree, root_at


logger = logging.getLogger(__name__)


def fitch_map_of(tc: EdgeColoredTree) -> FitchMap:
    """The map explained by ``tc``: the colors met on each leaf-to-leaf path."""
    t = tc.tree
    labels = t.ground
    pairs: dict[tuple[str, str], set[Color]] = {}
    for color in tc.palette:
        cut = [e for e in t.edges if color in tc.of(e)]
        if not cut:
            continue
        components = forest_partition(t, cut).block_index
        for x, y in combinations(labels, 2):
            if components[x] != components[y]:
                pairs.setdefault((x, y), set()).add(color)
    return FitchMap.from_pairs(pairs, labels, tc.palette)


def monochromatic_partition(eps: FitchMap, color: Color) -> Partition | None:
    """Independent sets of the graph of ``color``, if that graph is complete multipartite.

    Returns None when two labels share a block of the non-adjacency closure
    but are joined by a ``color`` edge.

    Raises:
        UnknownColorError: ``color`` is not in the palette.
    """
    if color not in eps.palette:
        msg = f"color {color} is not in the palette {list(eps.palette)}"
        raise UnknownColorError(msg)
    bit = 1 << eps.palette.index(color)
    index = {label: i for i, label in enumerate(eps.ground)}
    forest = UnionFind(len(eps.ground))
    masks = list(eps.masks())
    for x, y, mask in masks:
        if not mask & bit:
            forest.unite(index[x], index[y])
    for x, y, mask in masks:
        if mask & bit and forest.find(index[x]) == forest.find(index[y]):
            logger.debug("color %d: %s and %s are joined but share a class", color, x, y)
            return None
    groups = forest.groups()
    return Partition.trusted(([eps.ground[i] for i in group] for group in groups), eps.ground)


def monochromatic_partitions(eps: FitchMap) -> list[Partition]:
    """One partition per color in palette order.

    Raises:
        NotMonochromaticFitchError: Some color graph is not complete multipartite.
    """
    partitions = []
    for color in eps.palette:
        p = monochromatic_partition(eps, color)
        if p is None:
            raise NotMonochromaticFitchError(color)
        partitions.append(p)
    return partitions


def explainable(eps: FitchMap, t: RootedTree | UnrootedTree) -> EdgeColoredTree | None:
    """Color the edges of ``t`` so that it explains ``eps``, or return None.

    Color ``m`` goes on the canonical separating edges of its partition.
    Unrooted trees are rooted at their default vertex first.

    Raises:
        LeafSetMismatchError: ``eps`` and ``t`` are over different leaf sets.
        NotMonochromaticFitchError: Some color graph is not complete multipartite.
    """
    rooted = root_at(t) if isinstance(t, UnrootedTree) else t
    if rooted.ground != eps.ground:
        msg = "Fitch map and tree are over different leaf sets"
        raise LeafSetMismatchError(msg)
    colors: dict[int, set[Color]] = {}
    for color, p in zip(eps.palette, monochromatic_partitions(eps), strict=True):
        verdict = is_compatible(rooted, p)
        if verdict.separating is None:
            logger.debug("color %d does not fit the tree", color)
            return None
        for edge in verdict.separating:
            colors.setdefault(edge, set()).add(color)
    frozen = {edge: frozenset(values) for edge, values in colors.items()}
    return EdgeColoredTree(rooted, frozen, eps.palette)


def symm_fitch_recognition(eps: FitchMap, budget: int | None = None) -> EdgeColoredTree | None:
    """Find some edge-colored tree explaining ``eps``, or None if there is none.

    Raises:
        NotMonochromaticFitchError: Some color graph is not complete multipartite.
        BudgetExceededError: The tree search would exceed ``budget``.
    """
    with trace_step("symm_fitch_recognition", {"colors": len(eps.palette)}):
        partitions = monochromatic_partitions(eps)
        tree = exist_tp(partitions, budget, ground=eps.ground)
        if tree is None:
            return None
        return explainable(eps, tree)


def is_symmetrized_fitch(eps: FitchMap, budget: int | None = None) -> bool:
    """True iff some edge-colored tree explains ``eps``.

    Raises:
        BudgetExceededError: The tree search would exceed ``budget``.
    """
    try:
        return symm_fitch_recognition(eps, budget) is not None
    except NotMonochromaticFitchError:
        return False


__all__ = [
    "explainable",
    "fitch_map_of",
    "is_symmetrized_fitch",
    "monochromatic_partition",
    "monochromatic_partitions",
    "symm_fitch_recognition",
]
