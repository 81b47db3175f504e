"""Last common ancestor queries via Euler tour and a blocked range-minimum table.

The tour is cut into blocks of :data:`BLOCK` positions. Each position keeps the
minimum-depth position from the start of its block (``prefix``) and to the
end of its block (``suffix``); a sparse table spans whole blocks only. Memory
is O(n) and a query costs O(1): a few array reads and a scan of at
most :data:`BLOCK` entries when both ends fall in the same block.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import chain

import numpy as np
from numpy.typing import NDArray

from treepart.errors import EmptyArgumentError
from treepart.tree.rooted import RootedTree


BLOCK = 32

Positions = NDArray[np.int32]


@dataclass(frozen=True, eq=False)
class LcaIndex:
    """Euler tour of a rooted tree with blocked range-minimum data over depths.

    ``table[k, b]`` is the tour position of minimum depth across blocks
    ``b .. b + 2**k - 1``.
    """

    tree: RootedTree
    tour: Positions
    depths: Positions
    first: Positions
    prefix: Positions
    suffix: Positions
    table: NDArray[np.int32]

    def _argmin(self, lo: int, hi: int) -> int:
        d = self.depths
        bl, br = lo // BLOCK, hi // BLOCK
        if bl == br:
            return lo + int(np.argmin(d[lo : hi + 1]))
        best = int(self.suffix[lo])
        right = int(self.prefix[hi])
        if d[right] < d[best]:
            best = right
        if br - bl > 1:
            a, b = bl + 1, br - 1
            level = (b - a + 1).bit_length() - 1
            for c in (int(self.table[level, a]), int(self.table[level, b - (1 << level) + 1])):
                if d[c] < d[best]:
                    best = c
        return best

    def _argmin_many(self, lo: Positions, hi: Positions) -> Positions:
        d = self.depths
        bl, br = lo // BLOCK, hi // BLOCK
        left, right = self.suffix[lo], self.prefix[hi]
        best = np.where(d[left] <= d[right], left, right)

        spans = br - bl > 1
        if spans.any():
            a, b = bl[spans] + 1, br[spans] - 1
            level = np.frexp((b - a + 1).astype(np.float64))[1] - 1
            c1 = self.table[level, a]
            c2 = self.table[level, b - (1 << level) + 1]
            inner = np.where(d[c1] <= d[c2], c1, c2)
            current = best[spans]
            best[spans] = np.where(d[inner] < d[current], inner, current)

        same = bl == br
        if same.any():
            start, stop = lo[same], hi[same]
            current = start.copy()
            for k in range(1, BLOCK):
                candidate = np.minimum(start + k, stop)
                current = np.where(d[candidate] < d[current], candidate, current)
            best[same] = current
        return best

    def pair(self, u: int, v: int) -> int:
        """Last common ancestor of vertices ``u`` and ``v``."""
        lo, hi = int(self.first[u]), int(self.first[v])
        if lo > hi:
            lo, hi = hi, lo
        return int(self.tour[self._argmin(lo, hi)])

    def of_vertices(self, vertices: Iterable[int]) -> int:
        """Last common ancestor of a non-empty vertex collection."""
        (top,) = self.of_groups([list(vertices)])
        return top

    def of_groups(self, groups: Sequence[Sequence[int]]) -> list[int]:
        """Last common ancestor of every group, answered in one batch.

        The ancestor of a group is that of its first and last vertex in tour order.

        Raises:
            EmptyArgumentError: Some group is empty.
        """
        if not groups:
            return []
        sizes = np.fromiter((len(g) for g in groups), dtype=np.int64, count=len(groups))
        if not sizes.all():
            msg = "lca of an empty vertex set is undefined"
            raise EmptyArgumentError(msg)
        flat = np.fromiter(chain.from_iterable(groups), dtype=np.int64, count=int(sizes.sum()))
        positions = self.first[flat]
        starts = np.zeros(len(groups), dtype=np.int64)
        np.cumsum(sizes[:-1], out=starts[1:])
        lo = np.minimum.reduceat(positions, starts)
        hi = np.maximum.reduceat(positions, starts)
        return self.tour[self._argmin_many(lo, hi)].tolist()


def _euler_tour(t: RootedTree) -> tuple[list[int], list[int]]:
    tour: list[int] = [t.root]
    first = [0] * len(t)
    children = t.children
    # each entry is (vertex, index of next child to visit)
    stack: list[tuple[int, int]] = [(t.root, 0)]
    while stack:
        v, i = stack[-1]
        kids = children[v]
        if i < len(kids):
            stack[-1] = (v, i + 1)
            child = kids[i]
            first[child] = len(tour)
            tour.append(child)
            stack.append((child, 0))
        else:
            stack.pop()
            if stack:
                tour.append(stack[-1][0])
    return tour, first


def _running_argmin(grid: NDArray[np.int32], columns: Iterable[int]) -> NDArray[np.int32]:
    """Per row, the column of the smallest value seen so far along ``columns``."""
    order = list(columns)
    rows = grid.shape[0]
    out = np.empty_like(grid)
    current = np.full(rows, order[0], dtype=np.int32)
    current_depth = grid[:, order[0]].copy()
    for k in order:
        better = grid[:, k] < current_depth
        current = np.where(better, np.int32(k), current)
        current_depth = np.minimum(current_depth, grid[:, k])
        out[:, k] = current
    return out


def build_lca_index(t: RootedTree) -> LcaIndex:
    """Preprocess ``t`` for constant-time last common ancestor queries in O(n) memory.

    Prefer :attr:`RootedTree.lca_index`, which builds the index once per tree.
    """
    tour_list, first = _euler_tour(t)
    tour = np.asarray(tour_list, dtype=np.int32)
    depths = np.asarray(t.depth, dtype=np.int32)[tour]
    m = len(tour)
    blocks = -(-m // BLOCK)
    padded = np.full(blocks * BLOCK, np.iinfo(np.int32).max, dtype=np.int32)
    padded[:m] = depths
    grid = padded.reshape(blocks, BLOCK)
    base = (np.arange(blocks, dtype=np.int32) * BLOCK)[:, None]
    prefix = (base + _running_argmin(grid, range(BLOCK))).ravel()[:m]
    suffix = (base + _running_argmin(grid, range(BLOCK - 1, -1, -1))).ravel()[:m]

    levels = max(1, blocks.bit_length())
    table = np.zeros((levels, blocks), dtype=np.int32)
    table[0] = prefix[np.minimum(np.arange(blocks) * BLOCK + BLOCK - 1, m - 1)]
    for k in range(1, levels):
        half = 1 << (k - 1)
        width = blocks - (1 << k) + 1
        if width <= 0:
            break
        left = table[k - 1, :width]
        right = table[k - 1, half : half + width]
        table[k, :width] = np.where(depths[left] <= depths[right], left, right)
    return LcaIndex(
        tree=t,
        tour=tour,
        depths=depths,
        first=np.asarray(first, dtype=np.int32),
        prefix=prefix,
        suffix=suffix,
        table=table,
    )


def lca(idx: LcaIndex, a: Iterable[str]) -> int:
    """Last common ancestor of the leaves labeled by ``a``.

    Raises:
        EmptyArgumentError: ``a`` is empty.
        UnknownLabelError: A label is not a leaf of the indexed tree.
    """
    leaves = [idx.tree.leaf(label) for label in a]
    if not leaves:
        msg = "lca of the empty set is undefined"
        raise EmptyArgumentError(msg)
    return idx.of_vertices(leaves)


__all__ = ["BLOCK", "LcaIndex", "build_lca_index", "lca"]
