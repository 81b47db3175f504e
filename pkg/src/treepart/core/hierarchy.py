"""Hierarchies (laminar cluster systems) and the closure operator."""

from __future__ import annotations

from collections.abc import Collection, Iterable
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from treepart.core.partition import LabelSet, Partition, ground_tuple
from treepart.errors import (
    EmptyArgumentError,
    EmptyClusterError,
    MissingGroundSetError,
    MissingSingletonError,
    OverlappingClustersError,
    UnknownLabelError,
)


if TYPE_CHECKING:
    from treepart.tree.rooted import RootedTree


@dataclass(frozen=True)
class Hierarchy:
    """A set of clusters over ``ground`` satisfying the hierarchy axioms.

    The clusters contain ``X`` and every singleton, no cluster is empty and no
    two clusters overlap. Instances come from :func:`validate_hierarchy` or
    from :func:`treepart.tree.hierarchy_of`.
    """

    clusters: frozenset[LabelSet]
    ground: tuple[str, ...]

    @classmethod
    def from_partition(cls, p: Partition) -> Hierarchy:
        """The hierarchy ``P + singletons + {X}``, which is always compatible with ``p``."""
        return validate_hierarchy(p.block_sets, p.ground, autocomplete=True)

    @cached_property
    def ground_set(self) -> LabelSet:
        return frozenset(self.ground)

    @cached_property
    def parent_map(self) -> dict[LabelSet, LabelSet | None]:
        """Map each cluster to its inclusion-minimal proper superset (``None`` for X)."""
        return _laminar_parents(self.clusters, self.ground)

    @cached_property
    def child_map(self) -> dict[LabelSet, tuple[LabelSet, ...]]:
        children: dict[LabelSet, list[LabelSet]] = {cluster: [] for cluster in self.clusters}
        for cluster, parent in self.parent_map.items():
            if parent is not None:
                children[parent].append(cluster)
        return {
            cluster: tuple(sorted(kids, key=min)) for cluster, kids in children.items()
        }

    @cached_property
    def vertex_clusters(self) -> tuple[LabelSet, ...]:
        """Clusters in preorder with children by smallest label.

        Index ``i`` is the cluster of vertex ``i`` of :attr:`tree`.
        """
        order: list[LabelSet] = []
        stack = [self.ground_set]
        while stack:
            cluster = stack.pop()
            order.append(cluster)
            stack.extend(reversed(self.child_map[cluster]))
        return tuple(order)

    @cached_property
    def tree(self) -> RootedTree:
        """The rooted tree of this hierarchy, built on first use."""
        from treepart.tree.convert import tree_of  # noqa: PLC0415

        return tree_of(self)

    def children_of(self, cluster: Collection[str]) -> tuple[LabelSet, ...]:
        """Maximal proper sub-clusters of ``cluster``, ordered by smallest label."""
        return self.child_map[frozenset(cluster)]

    def inner_clusters(self) -> list[LabelSet]:
        """Clusters that are neither X nor singletons, sorted by size then labels."""
        return sorted(
            (c for c in self.clusters if 1 < len(c) < len(self.ground)),
            key=lambda c: (len(c), sorted(c)),
        )

    def __contains__(self, cluster: object) -> bool:
        return isinstance(cluster, frozenset | set) and frozenset(cluster) in self.clusters

    def __len__(self) -> int:
        return len(self.clusters)


def _laminar_parents(
    clusters: Iterable[LabelSet], ground: tuple[str, ...]
) -> dict[LabelSet, LabelSet | None]:
    """Compute parents of a cluster family, raising on the first overlap found.

    Clusters are processed by decreasing size while each label remembers the
    smallest cluster seen so far that contains it. A cluster is nested in the
    family iff all of its labels remember the same container.
    """
    owner: dict[str, LabelSet | None] = dict.fromkeys(ground)
    parents: dict[LabelSet, LabelSet | None] = {}
    for cluster in sorted(clusters, key=lambda c: (-len(c), sorted(c))):
        containers = {owner[label] for label in cluster}
        if len(containers) > 1:
            rival = min((c for c in containers if c is not None), key=len)
            raise OverlappingClustersError(cluster, rival)
        parents[cluster] = containers.pop()
        for label in cluster:
            owner[label] = cluster
    return parents


def validate_hierarchy(
    clusters: Iterable[Collection[str]],
    ground: Iterable[str],
    *,
    autocomplete: bool = False,
) -> Hierarchy:
    """Check the hierarchy axioms and return a :class:`Hierarchy`.

    Args:
        clusters: Candidate cluster family.
        ground: The leaf set X.
        autocomplete: Add X and any missing singletons instead of rejecting them.

    Raises:
        EmptyClusterError: The family contains the empty set.
        UnknownLabelError: A cluster mentions a label outside X.
        MissingGroundSetError: X is absent and ``autocomplete`` is off.
        MissingSingletonError: A singleton is absent and ``autocomplete`` is off.
        OverlappingClustersError: Two clusters overlap.
    """
    labels = ground_tuple(ground)
    universe = frozenset(labels)
    family: set[LabelSet] = set()
    for cluster in clusters:
        members = frozenset(cluster)
        if not members:
            msg = "hierarchy contains the empty set"
            raise EmptyClusterError(msg)
        if unknown := members - universe:
            raise UnknownLabelError(min(unknown))
        family.add(members)
    if autocomplete:
        family.add(universe)
        family.update(frozenset((label,)) for label in labels)
    if universe not in family:
        msg = "hierarchy does not contain the ground set X"
        raise MissingGroundSetError(msg)
    for label in labels:
        if frozenset((label,)) not in family:
            raise MissingSingletonError(label)
    clusters_ = frozenset(family)
    hierarchy = Hierarchy(clusters_, labels)
    hierarchy.__dict__["parent_map"] = _laminar_parents(clusters_, labels)
    return hierarchy


def closure(h: Hierarchy, a: Collection[str]) -> LabelSet:
    """Return ``A_H``, the inclusion-minimal cluster of ``h`` containing ``a``.

    ``A_H`` is the cluster at the last common ancestor of ``a`` in the tree of ``h``.

    Raises:
        EmptyArgumentError: ``a`` is empty.
        UnknownLabelError: ``a`` is not a subset of the ground set.
    """
    members = frozenset(a)
    if not members:
        msg = "closure of the empty set is undefined"
        raise EmptyArgumentError(msg)
    if unknown := members - h.ground_set:
        raise UnknownLabelError(min(unknown))
    t = h.tree
    top = t.lca_index.of_vertices(t.leaf_of[label] for label in members)
    return h.vertex_clusters[top]


__all__ = ["Hierarchy", "closure", "validate_hierarchy"]
