"""Partition, partition-system and split-system text formats.

One item per line: blocks separated by ``|``, labels by ``,``, whitespace
ignored. Lines starting with ``#`` are comments. An optional header line
``ground: a,b,c`` fixes the ground set; otherwise it is the union of all
labels in the file.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from treepart.core.partition import Partition, ground_tuple, validate_partition
from treepart.errors import GroundSetMismatchError, InputError, PartitionFormatError
from treepart.splits.system import Split, SplitSystem


_GROUND_HEADER = "ground:"


@dataclass(frozen=True)
class PartitionDocument:
    """The partitions of a file in order, over one ground set."""

    ground: tuple[str, ...]
    partitions: tuple[Partition, ...]


def _split_labels(chunk: str, line: int | None) -> list[str]:
    chunk = chunk.strip()
    if not chunk:
        return []
    labels = [label.strip() for label in chunk.split(",")]
    if any(not label for label in labels):
        msg = f"empty label in {chunk!r}"
        raise PartitionFormatError(msg, line=line)
    return labels


def _blocks(text: str, line: int | None = None) -> list[list[str]]:
    if not text.strip():
        msg = "empty partition line"
        raise PartitionFormatError(msg, line=line)
    return [_split_labels(chunk, line) for chunk in text.split("|")]


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped


def _header_ground(
    lines: list[tuple[int, str]], ground: Iterable[str] | None
) -> tuple[tuple[str, ...] | None, list[tuple[int, str]]]:
    declared: tuple[str, ...] | None = None
    body = []
    for number, line in lines:
        if line.lower().startswith(_GROUND_HEADER):
            labels = _split_labels(line[len(_GROUND_HEADER) :], number)
            try:
                declared = ground_tuple(labels)
            except InputError as exc:
                raise exc.at_line(number) from None
        else:
            body.append((number, line))
    if ground is not None:
        given = ground_tuple(ground)
        if declared is not None and declared != given:
            msg = "the file's ground header does not match the expected leaf set"
            raise GroundSetMismatchError(msg)
        declared = given
    return declared, body


def parse_partition_line(text: str, ground: Iterable[str]) -> Partition:
    """Parse ``a | b,c | d,e`` into a canonical partition of ``ground``.

    Raises:
        PartitionFormatError: Empty line or empty label.
        InputError: Any :func:`validate_partition` error.
    """
    return validate_partition(_blocks(text), ground)


def parse_partition_document(text: str, ground: Iterable[str] | None = None) -> PartitionDocument:
    """Parse every non-comment line; errors carry their 1-based line number."""
    labels, body = _header_ground(list(_content_lines(text)), ground)
    parsed = [(number, _blocks(line, number)) for number, line in body]
    if labels is None:
        inferred = [label for _, blocks in parsed for block in blocks for label in block]
        labels = ground_tuple(inferred) if inferred else ()
    partitions = []
    for number, blocks in parsed:
        try:
            partitions.append(validate_partition(blocks, labels))
        except InputError as exc:
            raise exc.at_line(number) from None
    return PartitionDocument(ground=labels, partitions=tuple(partitions))


def parse_partition_system(text: str, ground: Iterable[str] | None = None) -> list[Partition]:
    """One partition per non-comment line, in file order."""
    return list(parse_partition_document(text, ground).partitions)


def parse_split_system(text: str, ground: Iterable[str] | None = None) -> SplitSystem:
    """Parse one split ``A|B`` per line into a split system."""
    labels, body = _header_ground(list(_content_lines(text)), ground)
    parsed = []
    for number, line in body:
        blocks = _blocks(line, number)
        if len(blocks) != 2:  # noqa: PLR2004
            msg = f"a split has exactly two sides, got {len(blocks)}"
            raise PartitionFormatError(msg, line=number)
        parsed.append((number, blocks))
    if labels is None:
        labels = ground_tuple(label for _, blocks in parsed for block in blocks for label in block)
    splits = []
    for number, blocks in parsed:
        try:
            p = validate_partition(blocks, labels)
            splits.append(Split.of(p.blocks[0], labels))
        except InputError as exc:
            raise exc.at_line(number) from None
    return SplitSystem.of(splits, labels)


__all__ = [
    "PartitionDocument",
    "parse_partition_document",
    "parse_partition_line",
    "parse_partition_system",
    "parse_split_system",
]
