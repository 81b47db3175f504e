"""Exception hierarchy for treepart.

Every error carries a human readable ``reason``. Input errors additionally
carry an optional line number and character position so the CLI can point at
the offending spot in a file.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING


if TYPE_CHECKING:
    from treepart.coloring import RefusalWitness


def _fmt(labels: Iterable[str]) -> str:
    return "{" + ",".join(sorted(labels)) + "}"


class TreepartError(Exception):
    """Base class for all treepart errors."""

    def __init__(self, reason: str = "") -> None:
        self.reason = reason
        super().__init__(reason)


class InputError(TreepartError):
    """Malformed or inconsistent input. The CLI maps these to exit code 3."""

    def __init__(
        self, reason: str = "", *, line: int | None = None, position: int | None = None
    ) -> None:
        self.line = line
        self.position = position
        super().__init__(reason)

    def at_line(self, line: int) -> InputError:
        """Attach a 1-based line number and return self for re-raising."""
        self.line = line
        return self

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.position is not None:
            where.append(f"position {self.position}")
        prefix = ", ".join(where)
        return f"{prefix}: {self.reason}" if prefix else self.reason


class GroundSetTooSmallError(InputError):
    """The leaf set has fewer than two labels."""


class EmptyBlockError(InputError):
    """A partition block or split side is empty."""


class CoverageGapError(InputError):
    """The blocks of a partition do not cover the ground set."""

    def __init__(self, missing: Iterable[str]) -> None:
        self.missing = frozenset(missing)
        super().__init__(f"labels not covered by any block: {_fmt(self.missing)}")


class BlockOverlapError(InputError):
    """Two blocks of a partition share a label."""

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"label {label!r} occurs in more than one block")


class UnknownLabelError(InputError):
    """A label is not part of the ground set it is used with."""

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"unknown label {label!r}")


class GroundSetMismatchError(InputError):
    """Two objects that must share a ground set do not."""


class LeafSetMismatchError(GroundSetMismatchError):
    """A tree and a partition (or two trees) have different leaf sets."""


class EmptyClusterError(InputError):
    """A hierarchy contains the empty set."""


class MissingGroundSetError(InputError):
    """A hierarchy lacks the ground set X."""


class MissingSingletonError(InputError):
    """A hierarchy lacks a singleton cluster."""

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"singleton cluster {{{label}}} is missing")


class OverlappingClustersError(InputError):
    """Two clusters of a would-be hierarchy overlap."""

    def __init__(self, first: Iterable[str], second: Iterable[str]) -> None:
        self.first = frozenset(first)
        self.second = frozenset(second)
        super().__init__(f"clusters {_fmt(self.first)} and {_fmt(self.second)} overlap")


class EmptyArgumentError(InputError):
    """An operation that needs a non-empty label set got an empty one."""


class EmptySubsetError(EmptyArgumentError):
    """A restriction was requested onto the empty set."""


class NotInnerVertexError(InputError):
    """A leaf was given where an inner vertex is required."""


class TooFewLeavesError(InputError):
    """An operation needs at least three leaves."""


class MalformedTreeError(InputError):
    """Parent/child arrays do not describe a phylogenetic tree."""


class NewickSyntaxError(InputError):
    """A Newick string violates the grammar."""


class DuplicateLeafError(InputError):
    """Two leaves carry the same label."""

    def __init__(self, label: str, *, position: int | None = None) -> None:
        self.label = label
        super().__init__(f"duplicate leaf label {label!r}", position=position)


class UnaryInnerVertexError(MalformedTreeError):
    """An inner vertex has exactly one child."""


class EmptyTreeError(InputError):
    """No tree was given."""


class PartitionFormatError(InputError):
    """A partition, split or map line is not well formed."""


class UnknownVertexError(InputError):
    """An edge or vertex reference does not resolve in the tree."""


class UnknownColorError(InputError):
    """A color is not part of the declared palette."""


class ForeignEdgeError(InputError):
    """An edge does not belong to the tree it is used with."""


class EmptySystemError(InputError):
    """An operation needs at least one partition."""


class MissingSingletonSplitsError(InputError):
    """A split system lacks some trivial split {x}|X-{x}."""

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"split system lacks the singleton split of {label!r}")


class AsymmetricFitchMapError(InputError):
    """A Fitch map assigns different colors to (x, y) and (y, x)."""


class SettingsError(InputError):
    """Environment or file configuration could not be validated."""


class NotCompatibleError(TreepartError):
    """The tree and partition are not compatible."""


class NotRCompatibleError(TreepartError):
    """No refinement of the tree is compatible with the partition."""

    def __init__(self, witness: RefusalWitness) -> None:
        self.witness = witness
        super().__init__(
            f"edge above vertex {witness.edge} carries blocks {witness.first} and {witness.second}"
        )


class OverlapViolationError(TreepartError):
    """A cluster overlaps two distinct blocks of a partition."""

    def __init__(
        self, cluster: Iterable[str], first: Iterable[str], second: Iterable[str]
    ) -> None:
        self.cluster = frozenset(cluster)
        self.first = frozenset(first)
        self.second = frozenset(second)
        super().__init__(
            f"cluster {_fmt(self.cluster)} overlaps blocks {_fmt(self.first)} "
            f"and {_fmt(self.second)}"
        )


class NotTreeLikeError(TreepartError):
    """A split system contains two incompatible splits."""

    def __init__(self, first: str, second: str) -> None:
        self.first = first
        self.second = second
        super().__init__(f"splits {first} and {second} are incompatible")


class NotMonochromaticFitchError(TreepartError):
    """The graph of one color is not complete multipartite."""

    def __init__(self, color: int) -> None:
        self.color = color
        super().__init__(f"color {color} does not induce a complete multipartite graph")


class BudgetExceededError(TreepartError):
    """The number of candidate trees exceeds the enumeration budget."""

    def __init__(self, count: int, budget: int) -> None:
        self.count = count
        self.budget = budget
        super().__init__(f"{count} binary refinements exceed the budget of {budget}")


class TooLargeError(TreepartError):
    """An instance exceeds a brute-force size guard."""


class SelfCheckError(TreepartError):
    """A fast-path verdict disagrees with the brute-force reference."""


__all__ = [
    "AsymmetricFitchMapError",
    "BlockOverlapError",
    "BudgetExceededError",
    "CoverageGapError",
    "DuplicateLeafError",
    "EmptyArgumentError",
    "EmptyBlockError",
    "EmptyClusterError",
    "EmptySubsetError",
    "EmptySystemError",
    "EmptyTreeError",
    "ForeignEdgeError",
    "GroundSetMismatchError",
    "GroundSetTooSmallError",
    "InputError",
    "LeafSetMismatchError",
    "MalformedTreeError",
    "MissingGroundSetError",
    "MissingSingletonError",
    "MissingSingletonSplitsError",
    "NewickSyntaxError",
    "NotCompatibleError",
    "NotInnerVertexError",
    "NotMonochromaticFitchError",
    "NotRCompatibleError",
    "NotTreeLikeError",
    "OverlapViolationError",
    "OverlappingClustersError",
    "PartitionFormatError",
    "SelfCheckError",
    "SettingsError",
    "TooFewLeavesError",
    "TooLargeError",
    "TreepartError",
    "UnaryInnerVertexError",
    "UnknownColorError",
    "UnknownLabelError",
    "UnknownVertexError",
]
