"""Brute-force reference implementations.

Everything here follows the definitions directly and is exponential. Size
guards come from :class:`~treepart.systems.settings.SolverSettings` and raise
:class:`~treepart.errors.TooLargeError` instead of running for hours.
"""

from __future__ import annotations

from collections.abc import Collection, Iterable, Iterator
from functools import cache
from itertools import chain, combinations, product

from treepart.compat.forest import forest_partition
from treepart.core.hierarchy import validate_hierarchy
from treepart.core.partition import BlockId, LabelSet, Partition, ground_tuple
from treepart.errors import EmptyArgumentError, EmptySystemError, TooLargeError
from treepart.splits.system import Split, SplitSystem, meet_of_splits
from treepart.systems.settings import get_settings
from treepart.tree.convert import hierarchy_of, is_refinement, tree_of
from treepart.tree.rooted import EdgeRef, RootedTree


def _guard(size: int, limit: int, what: str) -> None:
    if size > limit:
        msg = f"{size} {what} exceed the brute-force limit of {limit}"
        raise TooLargeError(msg)


def _subsets(items: tuple[EdgeRef, ...]) -> Iterator[tuple[EdgeRef, ...]]:
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def brute_cut_table(t: RootedTree) -> dict[Partition, list[frozenset[EdgeRef]]]:
    """Every partition some edge subset of ``t`` cuts out, with all such subsets.

    Raises:
        TooLargeError: ``t`` has more edges than ``oracle_max_edges``.
    """
    _guard(len(t.edges), get_settings().oracle_max_edges, "edges")
    table: dict[Partition, list[frozenset[EdgeRef]]] = {}
    for h in _subsets(t.edges):
        table.setdefault(forest_partition(t, h), []).append(frozenset(h))
    return table


def brute_separating_sets(t: RootedTree, p: Partition) -> list[frozenset[EdgeRef]]:
    """Every edge set whose removal cuts ``t`` into exactly ``p``.

    Raises:
        TooLargeError: ``t`` has more edges than ``oracle_max_edges``.
    """
    _guard(len(t.edges), get_settings().oracle_max_edges, "edges")
    return [frozenset(h) for h in _subsets(t.edges) if forest_partition(t, h) == p]


def brute_compatible(t: RootedTree, p: Partition) -> bool:
    """True iff some subset of the edges of ``t`` cuts out ``p``.

    Raises:
        TooLargeError: ``t`` has more edges than ``oracle_max_edges``.
    """
    _guard(len(t.edges), get_settings().oracle_max_edges, "edges")
    return any(forest_partition(t, h) == p for h in _subsets(t.edges))


def walk_up_lca(t: RootedTree, vertices: Iterable[int]) -> int:
    """Last common ancestor by walking parent pointers."""
    it = iter(vertices)
    try:
        current = next(it)
    except StopIteration:
        msg = "lca of an empty vertex set is undefined"
        raise EmptyArgumentError(msg) from None
    for v in it:
        ancestors = set()
        u = current
        while u != -1:
            ancestors.add(u)
            u = t.parent[u]
        while v not in ancestors:
            v = t.parent[v]
        current = v
    return current


def enumerate_partitions(labels: Collection[str]) -> Iterator[Partition]:
    """All set partitions of ``labels``, by restricted growth strings."""
    ground = ground_tuple(labels)

    def grow(blocks: list[list[str]], k: int) -> Iterator[list[list[str]]]:
        if k == len(ground):
            yield blocks
            return
        label = ground[k]
        for i in range(len(blocks)):
            yield from grow([*blocks[:i], [*blocks[i], label], *blocks[i + 1 :]], k + 1)
        yield from grow([*blocks, [label]], k + 1)

    for blocks in grow([], 0):
        yield Partition.trusted(blocks, ground)


def _set_partitions(items: tuple[str, ...]) -> list[list[LabelSet]]:
    if not items:
        return [[]]
    head, rest = items[0], items[1:]
    found = []
    for partial in _set_partitions(rest):
        found.append([frozenset((head,)), *partial])
        for i, block in enumerate(partial):
            found.append([*partial[:i], block | {head}, *partial[i + 1 :]])
    return found


@cache
def _cluster_families(cluster: LabelSet) -> tuple[frozenset[LabelSet], ...]:
    if len(cluster) == 1:
        return (frozenset((cluster,)),)
    splits = [blocks for blocks in _set_partitions(tuple(sorted(cluster))) if len(blocks) > 1]
    splits.sort(key=lambda blocks: (-len(blocks), sorted(sorted(b) for b in blocks)))
    families = []
    for blocks in splits:
        for parts in product(*(_cluster_families(block) for block in blocks)):
            families.append(frozenset((cluster,)).union(*parts))
    return tuple(families)


def enumerate_rooted_trees(x: Collection[str]) -> Iterator[RootedTree]:
    """All rooted phylogenetic trees on ``x`` up to isomorphism, the star first.

    Raises:
        TooLargeError: ``x`` has more labels than ``oracle_max_leaves``.
    """
    ground = ground_tuple(x)
    _guard(len(ground), get_settings().oracle_max_leaves, "leaves")
    for family in _cluster_families(frozenset(ground)):
        yield tree_of(validate_hierarchy(family, ground))


def brute_r_compatible(t: RootedTree, p: Partition) -> bool:
    """True iff some tree refining ``t`` is compatible with ``p``.

    Raises:
        TooLargeError: ``t`` has more leaves than ``oracle_max_leaves``.
    """
    return any(
        is_refinement(u, t) and brute_compatible(u, p) for u in enumerate_rooted_trees(t.ground)
    )


def brute_compat_tp(t: RootedTree, ps: Iterable[Partition]) -> bool:
    """True iff some refinement of ``t`` is compatible with every member of ``ps``.

    Raises:
        TooLargeError: ``t`` has more leaves than ``oracle_max_leaves``.
    """
    members = list(ps)
    return any(
        is_refinement(u, t) and all(brute_compatible(u, p) for p in members)
        for u in enumerate_rooted_trees(t.ground)
    )


def brute_exist_tp(
    ps: Iterable[Partition], ground: Collection[str] | None = None
) -> RootedTree | None:
    """The first tree on X, in enumeration order, compatible with every member.

    Raises:
        EmptySystemError: ``ps`` is empty and no ``ground`` is given.
        TooLargeError: X has more labels than ``oracle_exist_max_leaves``.
    """
    members = list(ps)
    if ground is None:
        if not members:
            msg = "an empty partition system does not determine a leaf set"
            raise EmptySystemError(msg)
        ground = members[0].ground
    labels = ground_tuple(ground)
    _guard(len(labels), get_settings().oracle_exist_max_leaves, "leaves")
    for u in enumerate_rooted_trees(labels):
        if all(brute_compatible(u, p) for p in members):
            return u
    return None


def brute_closure(clusters: Iterable[LabelSet], a: Collection[str]) -> LabelSet:
    """Intersection of all clusters containing ``a``."""
    members = frozenset(a)
    return frozenset.intersection(*(c for c in clusters if members <= c))


def brute_unresolved(t: RootedTree, p: Partition) -> set[tuple[int, BlockId]]:
    """Unresolved blocks with the vertex of their closure, straight from the definition."""
    clusters = hierarchy_of(t).clusters
    closures = [brute_closure(clusters, block) for block in p.blocks]
    vertex_of = {cluster: v for v, cluster in enumerate(t.clusters)}
    found = set()
    for a, a_h in enumerate(closures):
        if any(
            b != a and p.block_sets[b] & a_h and a_h <= b_h for b, b_h in enumerate(closures)
        ):
            found.add((vertex_of[a_h], a))
    return found


def brute_split_subsets(s: SplitSystem, p: Partition) -> list[frozenset[Split]]:
    """Every subset of ``s`` whose common refinement is ``p``.

    Raises:
        TooLargeError: ``s`` has more splits than ``oracle_max_edges``.
    """
    _guard(len(s), get_settings().oracle_max_edges, "splits")
    return [
        frozenset(chosen)
        for chosen in chain.from_iterable(combinations(s.splits, k) for k in range(len(s) + 1))
        if meet_of_splits(chosen, s.ground) == p
    ]


__all__ = [
    "brute_closure",
    "brute_compat_tp",
    "brute_compatible",
    "brute_cut_table",
    "brute_exist_tp",
    "brute_r_compatible",
    "brute_separating_sets",
    "brute_split_subsets",
    "brute_unresolved",
    "enumerate_partitions",
    "enumerate_rooted_trees",
    "walk_up_lca",
]
