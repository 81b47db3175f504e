"""Unrooted phylogenetic trees and the rooting/unrooting transforms."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from treepart.core.partition import LabelSet
from treepart.errors import (
    DuplicateLeafError,
    EmptyTreeError,
    ForeignEdgeError,
    MalformedTreeError,
    NotInnerVertexError,
    TooFewLeavesError,
    UnknownVertexError,
)
from treepart.tree.rooted import RootedTree


logger = logging.getLogger(__name__)

UnrootedEdge = tuple[int, int]
"""An unrooted edge ``{u, v}`` stored as ``(min, max)``."""

_MIN_UNROOTED_LEAVES = 3


def edge_key(u: int, v: int) -> UnrootedEdge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UnrootedTree:
    """An unrooted phylogenetic tree: leaves are labeled, all other vertices have degree >= 3."""

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str | None, ...]

    @classmethod
    def from_edges(
        cls, n: int, edges: Sequence[tuple[int, int]], labels: Sequence[str | None]
    ) -> UnrootedTree:
        """Validate an edge list over vertices ``0 .. n-1``.

        Raises:
            EmptyTreeError: No vertices.
            MalformedTreeError: Not a tree, a degree-2 vertex, an unlabeled leaf
                or a labeled inner vertex.
            DuplicateLeafError: Two leaves share a label.
            TooFewLeavesError: Fewer than three leaves.
        """
        if n == 0:
            msg = "tree has no vertices"
            raise EmptyTreeError(msg)
        if len(labels) != n or len(edges) != n - 1:
            msg = "an unrooted tree on n vertices needs n-1 edges and n labels"
            raise MalformedTreeError(msg)
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                msg = f"invalid edge ({u}, {v})"
                raise MalformedTreeError(msg)
            adjacency[u].append(v)
            adjacency[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            msg = "edge list is not connected"
            raise MalformedTreeError(msg)
        names: set[str] = set()
        for v in range(n):
            degree = len(adjacency[v])
            label = labels[v]
            if degree == 1:
                if not label:
                    msg = f"leaf {v} has no label"
                    raise MalformedTreeError(msg)
                if label in names:
                    raise DuplicateLeafError(label)
                names.add(label)
            elif degree == 2 or label is not None:  # noqa: PLR2004
                msg = f"vertex {v} is neither a labeled leaf nor of degree >= 3"
                raise MalformedTreeError(msg)
        if len(names) < _MIN_UNROOTED_LEAVES:
            msg = f"an unrooted phylogenetic tree needs at least 3 leaves, got {len(names)}"
            raise TooFewLeavesError(msg)
        return cls(tuple(tuple(sorted(a)) for a in adjacency), tuple(labels))

    def __len__(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edges(self) -> tuple[UnrootedEdge, ...]:
        return tuple(
            sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)
        )

    @cached_property
    def leaf_of(self) -> dict[str, int]:
        return {label: v for v, label in enumerate(self.labels) if label is not None}

    @cached_property
    def ground(self) -> tuple[str, ...]:
        return tuple(sorted(self.leaf_of))

    @cached_property
    def ground_set(self) -> LabelSet:
        return frozenset(self.leaf_of)

    @cached_property
    def inner_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, label in enumerate(self.labels) if label is None)

    def is_leaf(self, v: int) -> bool:
        return self.labels[v] is not None

    def check_edge(self, edge: tuple[int, int]) -> UnrootedEdge:
        """Normalize ``edge`` and make sure it belongs to this tree."""
        u, v = edge
        if not (0 <= u < len(self) and v in self.adjacency[u]):
            msg = f"({u}, {v}) is not an edge of the tree"
            raise ForeignEdgeError(msg)
        return edge_key(u, v)


def default_root(t_bar: UnrootedTree) -> int:
    """The inner vertex adjacent to the smallest leaf."""
    return t_bar.adjacency[t_bar.leaf_of[t_bar.ground[0]]][0]


def _orient(t_bar: UnrootedTree, start: int) -> list[int]:
    parents = [-1] * len(t_bar)
    stack = [start]
    visited = [False] * len(t_bar)
    visited[start] = True
    while stack:
        u = stack.pop()
        for w in t_bar.adjacency[u]:
            if not visited[w]:
                visited[w] = True
                parents[w] = u
                stack.append(w)
    return parents


def root_at(t_bar: UnrootedTree, v: int | None = None) -> RootedTree:
    """Root ``t_bar`` at inner vertex ``v`` keeping all vertex ids.

    Defaults to the inner vertex adjacent to the smallest leaf. The rooted edge
    above vertex ``u`` is the unrooted edge ``{parent(u), u}``.

    Raises:
        UnknownVertexError: ``v`` is not a vertex.
        NotInnerVertexError: ``v`` is a leaf.
    """
    if v is None:
        v = default_root(t_bar)
    if not 0 <= v < len(t_bar):
        msg = f"vertex {v} does not exist"
        raise UnknownVertexError(msg)
    if t_bar.is_leaf(v):
        msg = f"cannot root at leaf {t_bar.labels[v]!r}"
        raise NotInnerVertexError(msg)
    return RootedTree.from_parents(_orient(t_bar, v), t_bar.labels)


def root_on_edge(t_bar: UnrootedTree, u: int, v: int) -> RootedTree:
    """Root ``t_bar`` on a new vertex subdividing edge ``{u, v}``.

    The new root gets id ``len(t_bar)``; all other ids are kept.
    """
    u, v = t_bar.check_edge((u, v))
    root = len(t_bar)
    parents = _orient(t_bar, u)
    parents[v] = root
    parents[u] = root
    # vertices below v were oriented away from u already
    return RootedTree.from_parents([*parents, -1], [*t_bar.labels, None])


def unroot(t: RootedTree) -> UnrootedTree:
    """Forget the root, suppressing it when it has exactly two children.

    Raises:
        TooFewLeavesError: ``t`` has fewer than three leaves.
    """
    if len(t.leaves) < _MIN_UNROOTED_LEAVES:
        msg = f"unrooting needs at least 3 leaves, got {len(t.leaves)}"
        raise TooFewLeavesError(msg)
    kids = t.children[t.root]
    if len(kids) == 2:  # noqa: PLR2004
        keep = [v for v in range(len(t)) if v != t.root]
        new_id = {old: new for new, old in enumerate(keep)}
        edges = [
            (new_id[t.parent[v]], new_id[v])
            for v in keep
            if t.parent[v] not in (-1, t.root)
        ]
        edges.append((new_id[kids[0]], new_id[kids[1]]))
        logger.debug("suppressed degree-2 root %d", t.root)
        return UnrootedTree.from_edges(len(keep), edges, [t.labels[v] for v in keep])
    edges = [(t.parent[v], v) for v in t.edges]
    return UnrootedTree.from_edges(len(t), edges, t.labels)


__all__ = [
    "UnrootedEdge",
    "UnrootedTree",
    "default_root",
    "edge_key",
    "root_at",
    "root_on_edge",
    "unroot",
]
