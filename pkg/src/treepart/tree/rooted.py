"""Rooted phylogenetic trees stored as flat parent/child arrays."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from treepart.core.partition import LabelSet, ground_tuple
from treepart.errors import (
    DuplicateLeafError,
    EmptyTreeError,
    MalformedTreeError,
    UnaryInnerVertexError,
    UnknownLabelError,
)


if TYPE_CHECKING:
    from treepart.tree.lca import LcaIndex


EdgeRef = int
"""A rooted edge ``{parent(v), v}`` is referred to by its child vertex ``v``."""


@dataclass(frozen=True)
class RootedTree:
    """A rooted phylogenetic tree on the leaf set X.

    Vertices are ``0 .. n-1``. ``parent[root]`` is ``-1``. Leaves carry labels,
    inner vertices carry ``None`` in ``labels`` and an optional name in
    ``names``. Every inner vertex, the root included, has at least two
    children. Build instances through :meth:`from_parents`.
    """

    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    labels: tuple[str | None, ...]
    names: tuple[str | None, ...]
    root: int

    @classmethod
    def from_parents(
        cls,
        parents: Sequence[int],
        labels: Sequence[str | None],
        names: Sequence[str | None] | None = None,
    ) -> RootedTree:
        """Validate a parent array and build the tree.

        Raises:
            EmptyTreeError: No vertices.
            MalformedTreeError: Not exactly one root, a cycle, a bad index, an
                unlabeled leaf or a labeled inner vertex.
            UnaryInnerVertexError: Some vertex has exactly one child.
            DuplicateLeafError: Two leaves share a label.
            GroundSetTooSmallError: Fewer than two leaves.
        """
        n = len(parents)
        if n == 0:
            msg = "tree has no vertices"
            raise EmptyTreeError(msg)
        if len(labels) != n or (names is not None and len(names) != n):
            msg = "label arrays do not match the number of vertices"
            raise MalformedTreeError(msg)
        kids: list[list[int]] = [[] for _ in range(n)]
        roots = []
        for v, p in enumerate(parents):
            if p == -1:
                roots.append(v)
            elif not 0 <= p < n or p == v:
                msg = f"vertex {v} has invalid parent {p}"
                raise MalformedTreeError(msg)
            else:
                kids[p].append(v)
        if len(roots) != 1:
            msg = f"expected exactly one root, found {len(roots)}"
            raise MalformedTreeError(msg)
        root = roots[0]

        reached = 0
        stack = [root]
        while stack:
            v = stack.pop()
            reached += 1
            stack.extend(kids[v])
        if reached != n:
            msg = "parent array contains a cycle or a disconnected part"
            raise MalformedTreeError(msg)

        seen: set[str] = set()
        clean_names: list[str | None] = []
        for v in range(n):
            label = labels[v]
            if kids[v]:
                if len(kids[v]) == 1:
                    msg = f"inner vertex {v} has a single child"
                    raise UnaryInnerVertexError(msg)
                if label is not None:
                    msg = f"inner vertex {v} carries the taxon label {label!r}"
                    raise MalformedTreeError(msg)
                clean_names.append(names[v] if names is not None else None)
            else:
                if not label:
                    msg = f"leaf {v} has no label"
                    raise MalformedTreeError(msg)
                if label in seen:
                    raise DuplicateLeafError(label)
                seen.add(label)
                clean_names.append(None)
        ground_tuple(seen)
        return cls(
            parent=tuple(parents),
            children=tuple(tuple(k) for k in kids),
            labels=tuple(labels),
            names=tuple(clean_names),
            root=root,
        )

    @classmethod
    def star(cls, ground: Iterable[str]) -> RootedTree:
        """The tree with a single inner vertex, whose only cluster besides leaves is X."""
        labels = ground_tuple(ground)
        return cls.from_parents([-1, *[0] * len(labels)], [None, *labels])

    def __len__(self) -> int:
        return len(self.parent)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(len(self.parent)) if not self.children[v])

    @cached_property
    def leaf_of(self) -> dict[str, int]:
        """Map each label to its leaf vertex."""
        return {self.labels[v]: v for v in self.leaves}  # type: ignore[misc]

    @cached_property
    def ground(self) -> tuple[str, ...]:
        return tuple(sorted(self.leaf_of))

    @cached_property
    def ground_set(self) -> LabelSet:
        return frozenset(self.leaf_of)

    @cached_property
    def inner_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.preorder if self.children[v])

    @cached_property
    def edges(self) -> tuple[EdgeRef, ...]:
        """All edges as child vertices, in preorder."""
        return tuple(v for v in self.preorder if v != self.root)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return tuple(order)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        depth = [0] * len(self.parent)
        for v in self.preorder:
            if v != self.root:
                depth[v] = depth[self.parent[v]] + 1
        return tuple(depth)

    @cached_property
    def min_label(self) -> tuple[str, ...]:
        """Smallest leaf label below each vertex."""
        smallest: list[str] = [""] * len(self.parent)
        for v in reversed(self.preorder):
            label = self.labels[v]
            if label is None:
                label = min(smallest[c] for c in self.children[v])
            smallest[v] = label
        return tuple(smallest)

    @cached_property
    def clusters(self) -> tuple[LabelSet, ...]:
        """Leaf set below each vertex. Quadratic in the worst case."""
        below: list[LabelSet] = [frozenset()] * len(self.parent)
        for v in reversed(self.preorder):
            label = self.labels[v]
            if label is not None:
                below[v] = frozenset((label,))
            else:
                below[v] = frozenset().union(*(below[c] for c in self.children[v]))
        return tuple(below)

    @cached_property
    def lca_index(self) -> LcaIndex:
        """Last common ancestor index, built on first use."""
        from treepart.tree.lca import build_lca_index  # noqa: PLC0415

        return build_lca_index(self)

    @cached_property
    def is_binary(self) -> bool:
        return all(len(self.children[v]) == 2 for v in self.inner_vertices)  # noqa: PLR2004

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def leaf(self, label: str) -> int:
        """Return the leaf vertex carrying ``label``."""
        try:
            return self.leaf_of[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def leaves_below(self, v: int) -> LabelSet:
        """Leaf labels in the subtree of ``v`` without building every cluster."""
        found = []
        stack = [v]
        while stack:
            u = stack.pop()
            if self.children[u]:
                stack.extend(self.children[u])
            else:
                found.append(self.labels[u])
        return frozenset(label for label in found if label is not None)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff ``u`` lies on the path from ``v`` to the root (``v`` included)."""
        while v != -1:
            if v == u:
                return True
            v = self.parent[v]
        return False

    def canonical(self) -> RootedTree:
        """Renumber vertices in preorder, visiting children by smallest label."""
        smallest = self.min_label
        order: list[int] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(sorted(self.children[v], key=smallest.__getitem__, reverse=True))
        if order == list(range(len(order))):
            return self
        new_id = {old: new for new, old in enumerate(order)}
        parents = [-1 if self.parent[old] == -1 else new_id[self.parent[old]] for old in order]
        return RootedTree.from_parents(
            parents, [self.labels[old] for old in order], [self.names[old] for old in order]
        )


__all__ = ["EdgeRef", "RootedTree"]
