"""Splits, split systems and Buneman compatibility."""

from __future__ import annotations

from collections.abc import Collection, Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from treepart.core.lattice import meet_all
from treepart.core.partition import LabelSet, Partition, ground_tuple
from treepart.errors import EmptyBlockError, GroundSetMismatchError, UnknownLabelError


@dataclass(frozen=True)
class Split:
    """A bipartition ``A|(X-A)``, stored as the side holding the smallest label."""

    side: LabelSet
    ground: tuple[str, ...]

    @classmethod
    def of(cls, side: Collection[str], ground: Iterable[str]) -> Split:
        """Build the split with one side ``side``.

        Raises:
            UnknownLabelError: ``side`` leaves the ground set.
            EmptyBlockError: One of the two sides is empty.
        """
        labels = ground_tuple(ground)
        members = frozenset(side)
        universe = frozenset(labels)
        if unknown := members - universe:
            raise UnknownLabelError(min(unknown))
        if not members or members == universe:
            msg = "both sides of a split must be non-empty"
            raise EmptyBlockError(msg)
        if labels[0] not in members:
            members = universe - members
        return cls(members, labels)

    @classmethod
    def parse(cls, text: str, ground: Iterable[str]) -> Split:
        """Parse ``a,b|c,d,e``; the right side must be the complement of the left."""
        left, _, right = text.partition("|")
        labels = ground_tuple(ground)
        first = {label.strip() for label in left.split(",") if label.strip()}
        second = {label.strip() for label in right.split(",") if label.strip()}
        if first & second or (first | second) != set(labels):
            msg = f"{text!r} is not a bipartition of the ground set"
            raise GroundSetMismatchError(msg)
        return cls.of(first, labels)

    @cached_property
    def other(self) -> LabelSet:
        return frozenset(self.ground) - self.side

    @property
    def sides(self) -> tuple[LabelSet, LabelSet]:
        return (self.side, self.other)

    @property
    def is_trivial(self) -> bool:
        """True for singleton splits ``{x}|X-{x}``."""
        return len(self.side) == 1 or len(self.other) == 1

    def cuts(self, block: Collection[str]) -> bool:
        """True iff ``block`` meets both sides."""
        members = frozenset(block)
        return bool(members & self.side) and bool(members & self.other)

    def compatible_with(self, other: Split) -> bool:
        """Buneman test: one of the four side intersections is empty."""
        return any(not (mine & theirs) for mine in self.sides for theirs in other.sides)

    def partition(self) -> Partition:
        return Partition.trusted(self.sides, self.ground)

    def restrict(self, y: Collection[str]) -> frozenset[str] | None:
        """The ``y``-side of ``(A & Y)|(Y - A)`` holding min(Y), or None if one side is empty."""
        keep = frozenset(y)
        first, second = self.side & keep, self.other & keep
        if not first or not second:
            return None
        return first if min(keep) in first else second

    def format(self) -> str:
        return f"{','.join(sorted(self.side))}|{','.join(sorted(self.other))}"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class SplitSystem:
    """A duplicate-free, canonically ordered set of splits over one ground set."""

    splits: tuple[Split, ...]
    ground: tuple[str, ...]

    @classmethod
    def of(cls, splits: Iterable[Split], ground: Iterable[str]) -> SplitSystem:
        labels = ground_tuple(ground)
        unique = set()
        for split in splits:
            if split.ground != labels:
                msg = f"split {split} is over a different ground set"
                raise GroundSetMismatchError(msg)
            unique.add(split)
        return cls(tuple(sorted(unique, key=str)), labels)

    @cached_property
    def incompatible_pair(self) -> tuple[Split, Split] | None:
        """The first pair of splits failing the Buneman test, if any."""
        for first, second in combinations(self.splits, 2):
            if not first.compatible_with(second):
                return (first, second)
        return None

    @property
    def is_tree_like(self) -> bool:
        return self.incompatible_pair is None

    def missing_singletons(self) -> list[str]:
        present = {next(iter(s.other)) for s in self.splits if len(s.other) == 1}
        present |= {next(iter(s.side)) for s in self.splits if len(s.side) == 1}
        return [label for label in self.ground if label not in present]

    def with_singletons(self) -> SplitSystem:
        """Add every trivial split ``{x}|X-{x}``."""
        trivial = (Split.of((label,), self.ground) for label in self.ground)
        return SplitSystem.of((*self.splits, *trivial), self.ground)

    def restrict(self, y: Collection[str]) -> set[frozenset[str]]:
        """Sides (holding min(Y)) of all non-trivially restricted splits."""
        restricted = (split.restrict(y) for split in self.splits)
        return {side for side in restricted if side is not None}

    def __iter__(self) -> Iterator[Split]:
        return iter(self.splits)

    def __len__(self) -> int:
        return len(self.splits)

    def __contains__(self, split: object) -> bool:
        return split in self.members

    @cached_property
    def members(self) -> frozenset[Split]:
        return frozenset(self.splits)


def pairwise_compatible(s: SplitSystem) -> bool:
    """True iff every pair of splits passes the four-intersection test."""
    return s.is_tree_like


def split_system_of_partition(p: Partition) -> SplitSystem:
    """``{A|(X-A) : A in P, A != X}`` together with all singleton splits."""
    block_splits = (Split.of(block, p.ground) for block in p.blocks if len(block) < len(p.ground))
    return SplitSystem.of(block_splits, p.ground).with_singletons()


def meet_of_splits(splits: Iterable[Split], ground: Iterable[str]) -> Partition:
    """Common refinement of the two-block partitions of ``splits``; ``{X}`` if none."""
    parts = [split.partition() for split in splits]
    return meet_all(parts) if parts else Partition.whole(ground)


__all__ = [
    "Split",
    "SplitSystem",
    "meet_of_splits",
    "pairwise_compatible",
    "split_system_of_partition",
]
