"""
Rectangle counting over back-edges.

Each back-edge ``(x, y)`` of a tree is a point. ``count(x_lo, x_hi, y_lo, y_hi)``
counts the points inside the closed rectangle. With the descendant interval
property, "some back-edge stems from a subtree interval and lands on a segment
of an ancestor path" is one rectangle query.

The structure is a merge-sort tree: the lower endpoints, ordered by higher
endpoint, padded to a power of two and sorted block-wise at every level.
"""
from bisect import bisect_left, bisect_right

import numpy as np


class BackEdgeRangeIndex:
    def __init__(self, tree):
        edges = tree.back_edges()
        self.n_points = len(edges)
        dtype = np.int32 if tree.n < 2**31 - 1 else np.int64
        self.xs = [x for x, _ in edges]
        size = 1
        while size < max(self.n_points, 1):
            size *= 2
        padded = np.full(size, tree.n + 1, dtype=dtype)
        if edges:
            padded[:self.n_points] = np.asarray([y for _, y in edges], dtype=dtype)
        self.levels = [padded]
        k = 1
        while (1 << k) <= size:
            self.levels.append(np.sort(padded.reshape(-1, 1 << k), axis=1).ravel())
            k += 1

    def _block(self, k: int, j: int, lo: int, hi: int) -> int:
        start = j << k
        seg = self.levels[k][start:start + (1 << k)]
        return int(np.searchsorted(seg, hi, side="right") - np.searchsorted(seg, lo, side="left"))

    def count(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int, stop_at_first: bool = False) -> int:
        """Number of back-edges with ``x_lo <= x <= x_hi`` and ``y_lo <= y <= y_hi``."""
        if x_lo > x_hi or y_lo > y_hi:
            return 0
        left = bisect_left(self.xs, x_lo)
        right = bisect_right(self.xs, x_hi)
        total = 0
        k = 0
        while left < right:
            if left & 1:
                total += self._block(k, left, y_lo, y_hi)
                left += 1
            if right & 1:
                right -= 1
                total += self._block(k, right, y_lo, y_hi)
            if stop_at_first and total:
                return total
            left >>= 1
            right >>= 1
            k += 1
        return total

    def exists(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> bool:
        return self.count(x_lo, x_hi, y_lo, y_hi, stop_at_first=True) > 0

    def words(self) -> int:
        return len(self.xs) + sum(level.size for level in self.levels)
