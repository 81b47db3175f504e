"""Text format of symmetrized Fitch maps.

One pair per line, ``x,y: 1,2``. Optional headers ``ground: a,b,c`` and
``colors: 1,2,3`` fix the leaf set and the palette; without them both are
inferred from the pairs. Pairs that are not listed map to the empty set, and
listing ``(y, x)`` after ``(x, y)`` is fine as long as the colors agree.
"""

from __future__ import annotations

from collections.abc import Iterable

from treepart.core.partition import ground_tuple
from treepart.errors import (
    AsymmetricFitchMapError,
    GroundSetMismatchError,
    InputError,
    PartitionFormatError,
    UnknownColorError,
    UnknownLabelError,
)
from treepart.io.colors import parse_colors
from treepart.systems.models import Color, FitchMap


_GROUND_HEADER = "ground:"
_COLORS_HEADER = "colors:"


def _pair(key: str) -> tuple[str, str]:
    labels = [label.strip() for label in key.split(",")]
    if len(labels) != 2 or not all(labels):  # noqa: PLR2004
        msg = f"expected a pair 'x,y', got {key.strip()!r}"
        raise PartitionFormatError(msg)
    return labels[0], labels[1]


def parse_fitch_map(
    text: str,
    ground: Iterable[str] | None = None,
    colors: Iterable[Color] | None = None,
) -> FitchMap:
    """Parse a Fitch map file.

    Args:
        text: The file contents.
        ground: Leaf set to enforce; must match a ``ground:`` header if both exist.
        colors: Palette to enforce; overrides a ``colors:`` header.

    Raises:
        PartitionFormatError: A line is not ``key: values``.
        GroundSetMismatchError: ``ground`` disagrees with the header.
        UnknownLabelError: A pair mentions a label outside the leaf set.
        UnknownColorError: A color is outside the palette.
        AsymmetricFitchMapError: A diagonal pair, or (x, y) and (y, x) disagree.
    """
    declared_ground: tuple[str, ...] | None = None
    declared_colors: list[Color] | None = None
    entries: list[tuple[int, tuple[str, str], list[Color]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            msg = f"expected 'x,y: <colors>', got {line!r}"
            raise PartitionFormatError(msg, line=number)
        header = key.strip().lower() + ":"
        try:
            if header == _GROUND_HEADER:
                declared_ground = ground_tuple(
                    label.strip() for label in value.split(",") if label.strip()
                )
            elif header == _COLORS_HEADER:
                declared_colors = parse_colors(value)
            else:
                entries.append((number, _pair(key), parse_colors(value)))
        except InputError as exc:
            raise exc.at_line(number) from None

    if ground is not None:
        given = ground_tuple(ground)
        if declared_ground is not None and declared_ground != given:
            msg = "the file's ground header does not match the expected leaf set"
            raise GroundSetMismatchError(msg)
        declared_ground = given
    labels = declared_ground
    if labels is None:
        labels = ground_tuple(label for _, pair, _ in entries for label in pair)
    if colors is not None:
        palette = tuple(sorted(set(colors)))
    elif declared_colors is not None:
        palette = tuple(sorted(set(declared_colors)))
    else:
        palette = tuple(sorted({c for _, _, values in entries for c in values}))

    known = set(labels)
    pairs: dict[tuple[str, str], list[Color]] = {}
    seen: dict[tuple[str, str], frozenset[Color]] = {}
    for number, (x, y), values in entries:
        key = (min(x, y), max(x, y))
        try:
            if key in seen and seen[key] != frozenset(values):
                msg = f"colors of ({x}, {y}) and ({y}, {x}) differ"
                raise AsymmetricFitchMapError(msg)
            for label in (x, y):
                if label not in known:
                    raise UnknownLabelError(label)
            if x == y:
                msg = f"pair ({x}, {x}) is not in the domain of a Fitch map"
                raise AsymmetricFitchMapError(msg)
            if unknown := set(values) - set(palette):
                msg = f"color {min(unknown)} is not in the palette {list(palette)}"
                raise UnknownColorError(msg)
        except InputError as exc:
            raise exc.at_line(number) from None
        seen[key] = frozenset(values)
        pairs[key] = values
    return FitchMap.from_pairs(pairs, labels, palette)


def format_fitch_map(eps: FitchMap) -> str:
    """Render ``eps`` with both headers and one line per non-empty pair."""
    lines = [
        f"{_GROUND_HEADER} {','.join(eps.ground)}",
        f"{_COLORS_HEADER} {','.join(map(str, eps.palette))}",
    ]
    for x, y, mask in eps.masks():
        if mask:
            values = [str(c) for k, c in enumerate(eps.palette) if mask >> k & 1]
            lines.append(f"{x},{y}: {','.join(values)}")
    return "\n".join(lines) + "\n"


__all__ = ["format_fitch_map", "parse_fitch_map"]
