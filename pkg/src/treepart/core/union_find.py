"""Disjoint-set forest with union by rank and path halving."""

from __future__ import annotations


class UnionFind:
    """Disjoint-set structure over the integers ``0 .. n-1``.

    Initially every element is its own singleton set. ``find`` runs in amortized
    O(alpha(n)) and is iterative, so deep chains never hit the recursion limit.
    """

    __slots__ = ("parent", "rank")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, element: int) -> int:
        """Return the representative of the set containing ``element``."""
        parent = self.parent
        while parent[element] != element:
            parent[element] = parent[parent[element]]
            element = parent[element]
        return element

    def unite(self, first: int, second: int) -> bool:
        """Merge the sets of ``first`` and ``second``.

        Returns:
            False if both were already in the same set, True otherwise.
        """
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False
        if self.rank[rep_first] < self.rank[rep_second]:
            rep_first, rep_second = rep_second, rep_first
        self.parent[rep_second] = rep_first
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
        return True

    def groups(self, elements: list[int] | range | None = None) -> list[list[int]]:
        """Group ``elements`` (default: all) by representative, in first-seen order."""
        buckets: dict[int, list[int]] = {}
        for element in range(len(self.parent)) if elements is None else elements:
            buckets.setdefault(self.find(element), []).append(element)
        return list(buckets.values())


__all__ = ["UnionFind"]
