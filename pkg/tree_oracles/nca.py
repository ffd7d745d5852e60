"""Nearest common ancestors through an Euler tour and a range-minimum index."""
from typing import List

import numpy as np

from graph_core import BOTTOM

from .rmq import RmqIndex


class NcaIndex:
    def __init__(self, tree):
        euler: List[int] = []
        first = [0] * (tree.n + 1)
        children = tree.children
        stack = [(1, 0)]
        while stack:
            v, i = stack.pop()
            if i == 0:
                first[v] = len(euler)
            euler.append(v)
            if i < len(children[v]):
                stack.append((v, i + 1))
                stack.append((children[v][i], 0))
        self.euler = np.asarray(euler, dtype=np.int64)
        self.first = first
        self._rmq = RmqIndex(tree.depth[self.euler], mode="min")

    def nca(self, u: int, v: int) -> int:
        """Deepest common ancestor of ``u`` and ``v``; BOTTOM if either is BOTTOM."""
        if u == BOTTOM or v == BOTTOM:
            return BOTTOM
        i, j = self.first[u], self.first[v]
        if i > j:
            i, j = j, i
        return int(self.euler[self._rmq.query(i, j)])

    def words(self) -> int:
        return len(self.euler) + len(self.first) + sum(np.size(r) for r in self._rmq.table)
