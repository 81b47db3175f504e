"""Exact search for a refinement of a tree that fits a whole partition system.

A refinement compatible with every member exists iff a binary one does, so
the solver enumerates the binary refinements of the input tree. A vertex with
``d`` children can be resolved in ``(2d - 3)!!`` ways, which makes the search
exponential only in how far the tree is from binary.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator
from fractions import Fraction
from itertools import product

from treepart.coloring import RefusalWitness, check_leaf_sets, color_edges
from treepart.compat.decide import is_compatible
from treepart.core.partition import Partition
from treepart.errors import BudgetExceededError, EmptySystemError, TooFewLeavesError
from treepart.systems.models import PartitionSystem, ResolutionStats
from treepart.systems.settings import get_settings
from treepart.tracing import qualify, trace_step
from treepart.tree.rooted import RootedTree


logger = logging.getLogger(__name__)

_MIN_LEAVES = 3

Shape = dict[int, int]


def double_factorial(n: int) -> int:
    """``n!!`` for ``n >= -1``, with ``(-1)!! = 0!! = 1``."""
    if n < -1:
        msg = f"double factorial is undefined for {n}"
        raise ValueError(msg)
    return math.prod(range(n, 0, -2))


def resolution_stats(t: RootedTree) -> ResolutionStats:
    """Resolution ``(|V| - |X| - 1) / (|X| - 2)`` and the excess over binary.

    Raises:
        TooFewLeavesError: ``t`` has fewer than three leaves.
    """
    leaves = len(t.leaves)
    if leaves < _MIN_LEAVES:
        msg = f"resolution is defined for at least 3 leaves, got {leaves}"
        raise TooFewLeavesError(msg)
    per_vertex = {
        v: len(t.children[v]) - 2
        for v in t.inner_vertices
        if len(t.children[v]) > 2  # noqa: PLR2004
    }
    return ResolutionStats(
        resolution=Fraction(len(t) - leaves - 1, leaves - 2),
        excess=2 * leaves - (len(t) - 1) - 2,
        per_vertex=per_vertex,
    )


def count_binary_refinements(t: RootedTree) -> int:
    """Product of ``(2d - 3)!!`` over inner vertices with ``d`` children."""
    return math.prod(double_factorial(2 * len(t.children[v]) - 3) for v in t.inner_vertices)


def binary_shapes(d: int) -> Iterator[Shape]:
    """All rooted binary trees on leaves ``0 .. d-1`` as child-to-parent maps.

    Inner nodes get ids from ``d`` upwards and the root maps to ``-1``. Each
    shape is grown by hanging leaf ``k`` onto one of the ``2k - 1`` edges of a
    shape on ``k`` leaves, the edge above the root included.
    """

    def grow(parents: Shape, k: int, next_id: int) -> Iterator[Shape]:
        if k == d:
            yield parents
            return
        for node in list(parents):
            grown = dict(parents)
            grown[next_id] = parents[node]
            grown[node] = next_id
            grown[k] = next_id
            yield from grow(grown, k + 1, next_id + 1)

    yield from grow({0: d, 1: d, d: -1}, 2, d + 1)


def _resolve(t: RootedTree, choices: Iterable[tuple[int, tuple[int, ...], Shape]]) -> RootedTree:
    parents = list(t.parent)
    labels = list(t.labels)
    names = list(t.names)
    for v, kids, shape in choices:
        actual = dict(enumerate(kids))
        for node, parent in shape.items():
            if parent == -1:
                actual[node] = v
            elif node not in actual:
                actual[node] = len(parents)
                parents.append(v)
                labels.append(None)
                names.append(None)
        for node, parent in shape.items():
            if parent != -1:
                parents[actual[node]] = actual[parent]
    return RootedTree.from_parents(parents, labels, names)


def enumerate_binary_refinements(t: RootedTree) -> Iterator[RootedTree]:
    """Every binary refinement of ``t`` exactly once, in a fixed order.

    Non-binary vertices are resolved independently; new vertices are appended
    after the existing ids. A binary ``t`` yields only itself.
    """
    wide = [v for v in t.inner_vertices if len(t.children[v]) > 2]  # noqa: PLR2004
    if not wide:
        yield t
        return
    options = [
        [(v, t.children[v], shape) for shape in binary_shapes(len(t.children[v]))]
        for v in wide
    ]
    for combination in product(*options):
        yield _resolve(t, combination)


def _fits_all(t: RootedTree, members: list[Partition]) -> bool:
    index = t.lca_index
    return all(is_compatible(t, p, index).is_compatible for p in members)


def compat_tp(
    t: RootedTree,
    ps: Iterable[Partition],
    budget: int | None = None,
    *,
    prune: bool = True,
) -> RootedTree | None:
    """A refinement of ``t`` compatible with every member of ``ps``, or None.

    The result is always binary. When ``t`` already fits, that is the first
    binary refinement of ``t``; otherwise the first one that fits, in
    enumeration order.

    Args:
        t: The tree to refine.
        ps: The partition system.
        budget: Largest number of candidates to enumerate; defaults to the
            ``budget`` solver setting.
        prune: Reject at once when some member has no compatible refinement
            of ``t`` at all. Never changes the answer.

    Raises:
        LeafSetMismatchError: Some member is over a different leaf set.
        BudgetExceededError: ``t`` has more binary refinements than ``budget``.
    """
    members = list(ps)
    for p in members:
        check_leaf_sets(t, p)
    limit = budget if budget is not None else get_settings().budget
    count = count_binary_refinements(t)
    attributes = {"candidates": count, "members": len(members), "budget": limit}
    with trace_step("compat_tp", attributes) as span:
        if count > limit:
            logger.info("refusing to enumerate %d binary refinements (budget %d)", count, limit)
            raise BudgetExceededError(count, limit)
        if prune:
            for i, p in enumerate(members):
                if isinstance(color_edges(t, p), RefusalWitness):
                    logger.info("member %d has no compatible refinement; pruned", i)
                    span.set_attribute(qualify("pruned"), True)
                    return None
        if _fits_all(t, members):
            # refining a compatible tree keeps it compatible
            logger.info("input tree fits all %d members; resolving it", len(members))
            return next(enumerate_binary_refinements(t))
        checked = 0
        for candidate in enumerate_binary_refinements(t):
            checked += 1
            if _fits_all(candidate, members):
                span.set_attribute(qualify("checked"), checked)
                logger.info("found a common refinement after %d of %d candidates", checked, count)
                return candidate
        span.set_attribute(qualify("checked"), checked)
        logger.info("none of %d binary refinements fits all %d members", count, len(members))
        return None


def exist_tp(
    ps: Iterable[Partition], budget: int | None = None, *, ground: Iterable[str] | None = None
) -> RootedTree | None:
    """Any tree on X compatible with every member: :func:`compat_tp` on the star.

    Raises:
        EmptySystemError: ``ps`` is empty and no ``ground`` is given.
        GroundSetMismatchError: Members are over different ground sets.
        BudgetExceededError: The star has more binary refinements than ``budget``.
    """
    system = ps if isinstance(ps, PartitionSystem) else PartitionSystem.of(ps, ground)
    labels = tuple(ground) if ground is not None else system.ground
    if not labels:
        msg = "an empty partition system does not determine a leaf set"
        raise EmptySystemError(msg)
    return compat_tp(RootedTree.star(labels), system.members, budget)


__all__ = [
    "binary_shapes",
    "compat_tp",
    "count_binary_refinements",
    "double_factorial",
    "enumerate_binary_refinements",
    "exist_tp",
    "resolution_stats",
]
