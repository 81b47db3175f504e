"""Newick parsing and canonical serialization.

Grammar (topology only)::

    tree     := subtree [":" length] ";"
    subtree  := "(" subtree ("," subtree)* ")" [name] [":" length] | label [":" length]

Labels are unquoted runs of characters other than whitespace and ``()[],:;'"``,
or single/double quoted strings in which a doubled quote stands for itself.
``[...]`` comments are skipped. Branch lengths are checked to be numbers and
then dropped.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from treepart.errors import DuplicateLeafError, EmptyTreeError, NewickSyntaxError
from treepart.tree.rooted import RootedTree


logger = logging.getLogger(__name__)

_DELIMITERS = frozenset("()[],:;'\"")
_QUOTES = ("'", '"')


@dataclass(frozen=True)
class NewickDocument:
    """A parsed Newick string together with the names found on inner vertices."""

    text: str
    tree: RootedTree

    @property
    def inner_names(self) -> dict[str, int]:
        return {name: v for v, name in enumerate(self.tree.names) if name is not None}


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, reason: str, position: int | None = None) -> NewickSyntaxError:
        return NewickSyntaxError(reason, position=self.pos if position is None else position)

    def skip(self) -> None:
        text = self.text
        while self.pos < len(text):
            char = text[self.pos]
            if char.isspace():
                self.pos += 1
            elif char == "[":
                end = text.find("]", self.pos)
                if end < 0:
                    raise self.error("unterminated comment")
                self.pos = end + 1
            else:
                return

    def peek(self) -> str | None:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def label(self) -> str:
        text = self.text
        start = self.pos
        if text[start] in _QUOTES:
            quote = text[start]
            parts: list[str] = []
            cursor = start + 1
            while True:
                end = text.find(quote, cursor)
                if end < 0:
                    raise self.error("unterminated quoted label", start)
                parts.append(text[cursor:end])
                if text.startswith(quote, end + 1):
                    parts.append(quote)
                    cursor = end + 2
                    continue
                break
            self.pos = end + 1
            label = "".join(parts)
            if not label:
                raise self.error("empty quoted label", start)
            return label
        while self.pos < len(text) and not (
            text[self.pos] in _DELIMITERS or text[self.pos].isspace()
        ):
            self.pos += 1
        return text[start : self.pos]

    def length(self) -> None:
        self.pos += 1
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",);[" and not (
            self.text[self.pos].isspace()
        ):
            self.pos += 1
        token = self.text[start : self.pos]
        try:
            float(token)
        except ValueError:
            raise self.error(f"invalid branch length {token!r}", start) from None


def parse_newick_document(text: str) -> NewickDocument:
    """Parse ``text`` into a canonical :class:`RootedTree`.

    Raises:
        EmptyTreeError: ``text`` holds no tree.
        NewickSyntaxError: The grammar is violated; carries the character position.
        DuplicateLeafError: Two leaves share a label.
        UnaryInnerVertexError: A vertex has exactly one child.
    """
    scanner = _Scanner(text)
    if scanner.peek() is None:
        msg = "no Newick tree given"
        raise EmptyTreeError(msg)

    parents: list[int] = []
    labels: list[str | None] = []
    names: list[str | None] = []
    leaf_seen: set[str] = set()
    open_vertices: list[int] = []
    last: int | None = None  # vertex whose label/length may follow
    closed = False  # last vertex was closed by ")"
    has_length = False
    finished = False

    def new_vertex() -> int:
        parents.append(open_vertices[-1] if open_vertices else -1)
        labels.append(None)
        names.append(None)
        return len(parents) - 1

    while (char := scanner.peek()) is not None:
        if finished:
            raise scanner.error("unexpected text after ';'")
        position = scanner.pos
        if char == "(":
            if last is not None:
                raise scanner.error("missing ',' before '('")
            if not open_vertices and parents:
                raise scanner.error("more than one top-level subtree")
            open_vertices.append(new_vertex())
            scanner.pos += 1
        elif char == ",":
            if last is None:
                raise scanner.error("empty subtree before ','")
            if not open_vertices:
                raise scanner.error("',' outside parentheses")
            last, closed, has_length = None, False, False
            scanner.pos += 1
        elif char == ")":
            if last is None:
                raise scanner.error("empty subtree before ')'")
            if not open_vertices:
                raise scanner.error("unbalanced ')'")
            last, closed, has_length = open_vertices.pop(), True, False
            scanner.pos += 1
        elif char == ":":
            if last is None or has_length:
                raise scanner.error("misplaced branch length")
            scanner.length()
            has_length = True
        elif char == ";":
            if open_vertices:
                raise scanner.error("unbalanced '(' before ';'")
            if last is None:
                raise scanner.error("empty tree before ';'")
            finished = True
            scanner.pos += 1
        elif char == "]":
            raise scanner.error("unbalanced ']'")
        else:
            label = scanner.label()
            if last is None:
                if not open_vertices and parents:
                    raise scanner.error("more than one top-level subtree", position)
                if label in leaf_seen:
                    raise DuplicateLeafError(label, position=position)
                leaf_seen.add(label)
                last = new_vertex()
                labels[last] = label
                closed = False
            elif closed and not has_length and names[last] is None:
                names[last] = label
            else:
                raise scanner.error(f"unexpected label {label!r}", position)
    if not finished:
        raise scanner.error("missing terminating ';'")

    tree = RootedTree.from_parents(parents, labels, names).canonical()
    logger.debug("parsed Newick tree with %d leaves", len(tree.leaves))
    return NewickDocument(text=text, tree=tree)


def parse_newick(text: str) -> RootedTree:
    """Parse a Newick string; see :func:`parse_newick_document`."""
    return parse_newick_document(text).tree


def _quote(label: str) -> str:
    if label and not any(c in _DELIMITERS or c.isspace() for c in label):
        return label
    if "'" not in label:
        return f"'{label}'"
    if '"' not in label:
        return f'"{label}"'
    escaped = label.replace("'", "''")
    return f"'{escaped}'"


def serialize_newick(t: RootedTree) -> str:
    """Canonical Newick: children ordered by smallest descendant label, no lengths."""
    smallest = t.min_label
    rendered: dict[int, str] = {}
    for v in reversed(t.preorder):
        label = t.labels[v]
        if label is not None:
            rendered[v] = _quote(label)
            continue
        kids = sorted(t.children[v], key=smallest.__getitem__)
        name = t.names[v]
        inner = ",".join(rendered.pop(c) for c in kids)
        rendered[v] = f"({inner}){_quote(name) if name else ''}"
    return rendered[t.root] + ";"


__all__ = ["NewickDocument", "parse_newick", "parse_newick_document", "serialize_newick"]
