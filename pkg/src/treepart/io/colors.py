"""Edge-color annotations of rooted trees.

One edge per line, ``<vertex>: <color>,<color>``, where the vertex below the
edge is given as ``v<id>`` (canonical preorder id), a leaf label or an inner
vertex name from the Newick string. An optional header ``colors: 1,2,3``
declares the palette. Edges without a line get no colors.
"""

from __future__ import annotations

from collections.abc import Iterable

from treepart.errors import InputError, PartitionFormatError, UnknownColorError, UnknownVertexError
from treepart.systems.models import Color, EdgeColoredTree
from treepart.tree.rooted import EdgeRef, RootedTree


_COLORS_HEADER = "colors:"


def resolve_vertex(t: RootedTree, token: str) -> int:
    """Find the vertex named by ``token``.

    Raises:
        UnknownVertexError: No vertex matches.
    """
    token = token.strip()
    if token.startswith("v") and token[1:].isdigit():
        v = int(token[1:])
        if v < len(t):
            return v
    if token in t.leaf_of:
        return t.leaf_of[token]
    for v, name in enumerate(t.names):
        if name == token:
            return v
    msg = f"no vertex named {token!r}"
    raise UnknownVertexError(msg)


def parse_colors(text: str) -> list[Color]:
    """Parse ``1, 2, 3``; an empty string means no colors."""
    values = []
    for chunk in text.split(","):
        token = chunk.strip()
        if not token:
            continue
        if not token.isdigit():
            msg = f"color {token!r} is not a non-negative integer"
            raise PartitionFormatError(msg)
        values.append(int(token))
    return values


def _body(text: str) -> tuple[list[Color] | None, list[tuple[int, str, str]]]:
    declared = None
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            msg = f"expected '<key>: <colors>', got {line!r}"
            raise PartitionFormatError(msg, line=number)
        try:
            if line.lower().startswith(_COLORS_HEADER):
                declared = parse_colors(value)
            else:
                entries.append((number, key.strip(), value))
        except InputError as exc:
            raise exc.at_line(number) from None
    return declared, entries


def parse_edge_colors(
    text: str, t: RootedTree, colors: Iterable[Color] | None = None
) -> dict[EdgeRef, frozenset[Color]]:
    """Map every edge of ``t`` to its set of colors.

    Args:
        text: The annotation file.
        t: The tree the vertices refer to.
        colors: The palette. Defaults to the ``colors:`` header, and without
            one any color is accepted.

    Raises:
        UnknownVertexError: A vertex does not exist or is the root.
        UnknownColorError: A color is outside the palette.
        PartitionFormatError: A line is malformed or an edge is listed twice.
    """
    declared, entries = _body(text)
    palette = set(colors) if colors is not None else set(declared) if declared is not None else None
    result: dict[EdgeRef, frozenset[Color]] = dict.fromkeys(t.edges, frozenset())
    seen: set[EdgeRef] = set()
    for number, token, value in entries:
        try:
            v = resolve_vertex(t, token)
            if v == t.root:
                msg = f"{token!r} is the root, which has no edge above it"
                raise UnknownVertexError(msg)
            if v in seen:
                msg = f"edge above {token!r} is listed twice"
                raise PartitionFormatError(msg)
            values = parse_colors(value)
            if palette is not None and (unknown := set(values) - palette):
                msg = f"color {min(unknown)} is not in the palette {sorted(palette)}"
                raise UnknownColorError(msg)
        except InputError as exc:
            raise exc.at_line(number) from None
        seen.add(v)
        result[v] = frozenset(values)
    return result


def parse_edge_colored_tree(
    text: str, t: RootedTree, colors: Iterable[Color] | None = None
) -> EdgeColoredTree:
    """Like :func:`parse_edge_colors`, returning the tree with its palette.

    Without a given or declared palette it is the set of colors used.
    """
    declared, _ = _body(text)
    coloring = parse_edge_colors(text, t, colors)
    if colors is not None:
        palette = set(colors)
    elif declared is not None:
        palette = set(declared)
    else:
        palette = set().union(*coloring.values())
    return EdgeColoredTree(t, coloring, tuple(sorted(palette)))


def format_edge_colors(tc: EdgeColoredTree) -> str:
    """Render the colored edges of ``tc`` with a palette header."""
    lines = [f"{_COLORS_HEADER} {','.join(map(str, tc.palette))}"]
    lines.extend(
        f"v{edge}: {','.join(map(str, sorted(tc.of(edge))))}" for edge in tc.colored_edges()
    )
    return "\n".join(lines) + "\n"


__all__ = [
    "format_edge_colors",
    "parse_colors",
    "parse_edge_colored_tree",
    "parse_edge_colors",
    "resolve_vertex",
]
