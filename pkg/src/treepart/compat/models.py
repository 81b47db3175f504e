"""Result types for compatibility checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from treepart.tree.rooted import EdgeRef, RootedTree


if TYPE_CHECKING:
    from collections.abc import Iterator

    from treepart.coloring import RefusalWitness
    from treepart.core.partition import BlockId, Partition


class VerdictStatus(Enum):
    """How well a tree fits a partition."""

    COMPATIBLE = "compatible"
    R_COMPATIBLE_ONLY = "r-compatible"
    INCOMPATIBLE = "incompatible"

    @property
    def exit_code(self) -> int:
        return {
            VerdictStatus.COMPATIBLE: 0,
            VerdictStatus.R_COMPATIBLE_ONLY: 1,
            VerdictStatus.INCOMPATIBLE: 2,
        }[self]


@dataclass(frozen=True, eq=False)
class SeparatingEdgeSet:
    """A set of edges of ``tree``, each named by its child vertex."""

    tree: RootedTree
    edges: frozenset[EdgeRef]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[EdgeRef]:
        return iter(sorted(self.edges))

    def __contains__(self, edge: object) -> bool:
        return edge in self.edges


@dataclass(frozen=True, eq=False)
class CompatVerdict:
    """Outcome of a compatibility check with the evidence behind it.

    A compatible verdict carries the canonical separating edges. An
    r-compatible one carries the vertices that need splitting and, from
    :func:`~treepart.compat.is_r_compatible`, the refined tree. An incompatible
    one carries the edge that lies inside two blocks, unless the tree is
    r-compatible but the caller only asked about compatibility.
    """

    status: VerdictStatus
    tree: RootedTree
    partition: Partition
    separating: SeparatingEdgeSet | None = None
    refined: RootedTree | None = None
    refusal: RefusalWitness | None = None
    unresolved: frozenset[tuple[int, BlockId]] = field(default_factory=frozenset)

    @property
    def is_compatible(self) -> bool:
        return self.status is VerdictStatus.COMPATIBLE

    @property
    def is_r_compatible(self) -> bool:
        return self.status is not VerdictStatus.INCOMPATIBLE

    def __bool__(self) -> bool:
        return self.is_compatible


__all__ = ["CompatVerdict", "SeparatingEdgeSet", "VerdictStatus"]
