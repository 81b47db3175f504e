"""Labels and partitions of a finite leaf set."""

from __future__ import annotations

from collections.abc import Collection, Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from treepart.errors import (
    BlockOverlapError,
    CoverageGapError,
    EmptyBlockError,
    GroundSetTooSmallError,
    UnknownLabelError,
)


Label = str
LabelSet = frozenset[str]
BlockId = int


def ground_tuple(ground: Iterable[str]) -> tuple[str, ...]:
    """Sort and deduplicate a ground set, enforcing ``|X| >= 2``."""
    labels = tuple(sorted(set(ground)))
    if len(labels) < 2:  # noqa: PLR2004
        msg = f"a ground set needs at least two labels, got {len(labels)}"
        raise GroundSetTooSmallError(msg)
    return labels


@dataclass(frozen=True)
class Partition:
    """A partition of the ground set into disjoint non-empty blocks.

    Blocks are sorted tuples of labels and appear ordered by their smallest
    label, so two equal partitions compare equal and hash alike. A block's
    position is its :data:`BlockId`. Build instances through
    :func:`validate_partition` unless the blocks are already known to be valid.
    """

    blocks: tuple[tuple[str, ...], ...]
    ground: tuple[str, ...]

    @classmethod
    def trusted(cls, blocks: Iterable[Iterable[str]], ground: tuple[str, ...]) -> Partition:
        """Canonicalize blocks that are known to satisfy the partition axioms."""
        ordered = sorted(tuple(sorted(block)) for block in blocks)
        return cls(tuple(ordered), ground)

    @classmethod
    def singletons(cls, ground: Iterable[str]) -> Partition:
        """The finest partition, one block per label."""
        labels = ground_tuple(ground)
        return cls(tuple((label,) for label in labels), labels)

    @classmethod
    def whole(cls, ground: Iterable[str]) -> Partition:
        """The coarsest partition ``{X}``."""
        labels = ground_tuple(ground)
        return cls((labels,), labels)

    @cached_property
    def block_index(self) -> dict[str, BlockId]:
        """Map each label to the id of its block."""
        return {label: i for i, block in enumerate(self.blocks) for label in block}

    @cached_property
    def block_sets(self) -> tuple[LabelSet, ...]:
        return tuple(frozenset(block) for block in self.blocks)

    @cached_property
    def ground_set(self) -> LabelSet:
        return frozenset(self.ground)

    def block_of(self, label: str) -> BlockId:
        """Return the id of the block containing ``label``."""
        try:
            return self.block_index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def is_singletons(self) -> bool:
        return len(self.blocks) == len(self.ground)

    def is_whole(self) -> bool:
        return len(self.blocks) == 1

    def format(self) -> str:
        """Render in the line format ``a|b,c|d,e``."""
        return "|".join(",".join(block) for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[LabelSet]:
        return iter(self.block_sets)

    def __str__(self) -> str:
        return self.format()


def validate_partition(blocks: Iterable[Collection[str]], ground: Iterable[str]) -> Partition:
    """Check the partition axioms over ``ground`` and return the canonical form.

    Checks run in a fixed order: empty blocks, labels outside the ground set,
    shared labels, and finally coverage.

    Raises:
        GroundSetTooSmallError: ``ground`` has fewer than two labels.
        EmptyBlockError: Some block is empty.
        UnknownLabelError: A block mentions a label outside ``ground``.
        BlockOverlapError: Two blocks share a label.
        CoverageGapError: Some label of ``ground`` is in no block.
    """
    labels = ground_tuple(ground)
    universe = frozenset(labels)
    family = [list(block) for block in blocks]
    for block in family:
        if not block:
            msg = "partition contains an empty block"
            raise EmptyBlockError(msg)
    for block in family:
        for label in block:
            if label not in universe:
                raise UnknownLabelError(label)
    seen: set[str] = set()
    for block in family:
        for label in block:
            if label in seen:
                raise BlockOverlapError(label)
            seen.add(label)
    if len(seen) != len(universe):
        raise CoverageGapError(universe - seen)
    return Partition.trusted(family, labels)


def overlaps(a: Collection[str], b: Collection[str]) -> bool:
    """True iff ``a`` and ``b`` intersect and neither contains the other."""
    first, second = frozenset(a), frozenset(b)
    return bool(first & second) and bool(first - second) and bool(second - first)


__all__ = [
    "BlockId",
    "Label",
    "LabelSet",
    "Partition",
    "ground_tuple",
    "overlaps",
    "validate_partition",
]
