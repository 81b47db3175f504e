"""Partition systems, Fitch maps, edge-colored trees and solver statistics."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from treepart.compat.models import CompatVerdict
from treepart.core.partition import Partition, ground_tuple
from treepart.errors import (
    AsymmetricFitchMapError,
    GroundSetMismatchError,
    UnknownColorError,
    UnknownLabelError,
)
from treepart.tree.rooted import EdgeRef, RootedTree


Color = int


@dataclass(frozen=True)
class PartitionSystem:
    """Partitions of one ground set, in input order."""

    members: tuple[Partition, ...]
    ground: tuple[str, ...]

    @classmethod
    def of(
        cls, partitions: Iterable[Partition], ground: Iterable[str] | None = None
    ) -> PartitionSystem:
        """Collect ``partitions``, checking that they share a ground set.

        Raises:
            GroundSetMismatchError: Two members, or a member and ``ground``, differ.
        """
        members = tuple(partitions)
        labels = ground_tuple(ground) if ground is not None else None
        for p in members:
            if labels is None:
                labels = p.ground
            elif p.ground != labels:
                msg = f"partition {p} is over a different ground set"
                raise GroundSetMismatchError(msg)
        return cls(members, labels or ())

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.members)

    def __getitem__(self, index: int) -> Partition:
        return self.members[index]


def _pair_slot(i: int, j: int, n: int) -> int:
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class FitchMap:
    """A symmetric map from pairs of distinct labels to sets of colors.

    Stored as an upper-triangular table of color bitsets over the sorted ground
    set; bit ``k`` stands for ``palette[k]``.
    """

    ground: tuple[str, ...]
    palette: tuple[Color, ...]
    table: tuple[int, ...]

    @classmethod
    def from_pairs(
        cls,
        pairs: Mapping[tuple[str, str], Iterable[Color]],
        ground: Iterable[str],
        palette: Iterable[Color],
    ) -> FitchMap:
        """Build the map; pairs not mentioned get the empty set.

        Raises:
            UnknownLabelError: A pair mentions a label outside ``ground``.
            UnknownColorError: A color is not in ``palette``.
            AsymmetricFitchMapError: ``(x, y)`` and ``(y, x)`` disagree, or ``x == y``.
        """
        labels = ground_tuple(ground)
        colors = tuple(sorted(set(palette)))
        index = {label: i for i, label in enumerate(labels)}
        bit = {color: 1 << k for k, color in enumerate(colors)}
        n = len(labels)
        table = [0] * (n * (n - 1) // 2)
        written = [False] * len(table)
        for (x, y), values in pairs.items():
            for label in (x, y):
                if label not in index:
                    raise UnknownLabelError(label)
            if x == y:
                msg = f"pair ({x}, {x}) is not in the domain of a Fitch map"
                raise AsymmetricFitchMapError(msg)
            mask = 0
            for color in values:
                if color not in bit:
                    msg = f"color {color} is not in the palette {list(colors)}"
                    raise UnknownColorError(msg)
                mask |= bit[color]
            i, j = sorted((index[x], index[y]))
            slot = _pair_slot(i, j, n)
            if written[slot] and table[slot] != mask:
                msg = f"colors of ({x}, {y}) and ({y}, {x}) differ"
                raise AsymmetricFitchMapError(msg)
            table[slot] = mask
            written[slot] = True
        return cls(labels, colors, tuple(table))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.ground)}

    def mask(self, x: str, y: str) -> int:
        for label in (x, y):
            if label not in self._index:
                raise UnknownLabelError(label)
        i, j = sorted((self._index[x], self._index[y]))
        if i == j:
            return 0
        return self.table[_pair_slot(i, j, len(self.ground))]

    def get(self, x: str, y: str) -> frozenset[Color]:
        """``eps(x, y)``; the empty set on the diagonal."""
        value = self.mask(x, y)
        return frozenset(c for k, c in enumerate(self.palette) if value >> k & 1)

    def graph(self, color: Color) -> set[tuple[str, str]]:
        """Pairs ``x < y`` whose color set contains ``color``.

        Raises:
            UnknownColorError: ``color`` is not in the palette.
        """
        if color not in self.palette:
            msg = f"color {color} is not in the palette {list(self.palette)}"
            raise UnknownColorError(msg)
        bit = 1 << self.palette.index(color)
        return {(x, y) for x, y, mask in self.masks() if mask & bit}

    def masks(self) -> Iterator[tuple[str, str, int]]:
        """Every pair ``x < y`` with its bitset, in label order."""
        labels = self.ground
        slot = 0
        for i, x in enumerate(labels):
            for y in labels[i + 1 :]:
                yield x, y, self.table[slot]
                slot += 1

    def is_empty(self) -> bool:
        return not any(self.table)


@dataclass(frozen=True, eq=False)
class EdgeColoredTree:
    """A rooted tree with an arbitrary set of colors on every edge."""

    tree: RootedTree
    colors: Mapping[EdgeRef, frozenset[Color]]
    palette: tuple[Color, ...]

    def of(self, edge: EdgeRef) -> frozenset[Color]:
        return self.colors.get(edge, frozenset())

    def colored_edges(self) -> list[EdgeRef]:
        return [e for e in self.tree.edges if self.of(e)]


@dataclass(frozen=True)
class ResolutionStats:
    """How far a tree is from binary.

    ``excess`` is ``2|X| - |E| - 2``, the sum over inner vertices ``v`` of
    ``h_v = children(v) - 2`` recorded in ``per_vertex`` for the non-binary ones.
    """

    resolution: Fraction
    excess: int
    per_vertex: Mapping[int, int] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class SystemVerdict:
    """Whether a tree fits every member of a system, with one verdict per member."""

    compatible: bool
    witnesses: tuple[CompatVerdict, ...]

    def __bool__(self) -> bool:
        return self.compatible


__all__ = [
    "Color",
    "EdgeColoredTree",
    "FitchMap",
    "PartitionSystem",
    "ResolutionStats",
    "SystemVerdict",
]
