"""
DFS trees with vertices identified with their preorder number.

Every tree in this code base (the base tree and its permutations) is a
:class:`DfsTree`: vertex ``v`` is the ``v``-th visited vertex, the root is 1 and
``T(v) = {v, ..., v + nd[v] - 1}``.
"""
import logging
from bisect import bisect_left
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from utils.errors import DisconnectedGraphError

from .graph import BOTTOM

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class DfsTree:
    """
    A rooted DFS tree plus its back-edges.

    Attributes
    ----------
    n : int
        Number of vertices (numbered ``1..n``, root 1).
    parent, depth, nd : np.ndarray
        Per-vertex arrays of length ``n + 1``; ``parent[1] == BOTTOM``.
    label : np.ndarray
        ``label[v]`` is the graph vertex that received number ``v``.
    number : np.ndarray
        Inverse of ``label`` (graph vertex -> number), 0 for unknown ids.
    children : list of list of int
        Children lists in visiting order.
    back_high : list of list of int
        ``back_high[x]`` = lower endpoints of the back-edges stemming from ``x``, sorted.
    back_low : list of list of int
        ``back_low[y]`` = higher endpoints of the back-edges landing on ``y``, sorted.
    """

    n: int
    parent: np.ndarray
    depth: np.ndarray
    nd: np.ndarray
    label: np.ndarray
    number: np.ndarray
    children: List[List[int]]
    back_high: List[List[int]]
    back_low: List[List[int]]

    # --- CONSTRUCTION ---

    @classmethod
    def from_parents(cls, parent: Sequence[int], back_edges: Sequence[Tuple[int, int]],
                     label: Sequence[int]) -> "DfsTree":
        """Assemble a tree from a preorder-numbered parent array and back-edges."""
        n = len(parent) - 1
        children: List[List[int]] = [[] for _ in range(n + 1)]
        depth = [0] * (n + 1)
        for v in range(2, n + 1):
            p = parent[v]
            children[p].append(v)
            depth[v] = depth[p] + 1
        nd = [1] * (n + 1)
        nd[0] = 0
        for v in range(n, 1, -1):
            nd[parent[v]] += nd[v]

        back_high: List[List[int]] = [[] for _ in range(n + 1)]
        back_low: List[List[int]] = [[] for _ in range(n + 1)]
        for x, y in back_edges:
            back_high[x].append(y)
            back_low[y].append(x)
        for lst in back_high:
            lst.sort()
        for lst in back_low:
            lst.sort()

        label_arr = np.asarray(label, dtype=np.int64)
        number = np.zeros(int(label_arr.max(initial=0)) + 1, dtype=np.int64)
        number[label_arr[1:]] = np.arange(1, n + 1)
        return cls(
            n=n,
            parent=np.asarray(parent, dtype=np.int64),
            depth=np.asarray(depth, dtype=np.int64),
            nd=np.asarray(nd, dtype=np.int64),
            label=label_arr,
            number=number,
            children=children,
            back_high=back_high,
            back_low=back_low,
        )

    # --- QUERIES ---

    @property
    def root(self) -> int:
        return 1

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff ``a`` is an ancestor of ``b`` (every vertex is its own ancestor)."""
        return a != BOTTOM and b != BOTTOM and a <= b < a + int(self.nd[a])

    def is_proper_ancestor(self, a: int, b: int) -> bool:
        return a != b and self.is_ancestor(a, b)

    def last(self, v: int) -> int:
        """Largest vertex of ``T(v)``."""
        return v + int(self.nd[v]) - 1

    def back_edges(self) -> List[Tuple[int, int]]:
        """All back-edges ``(x, y)`` with ``x`` the higher endpoint, sorted by ``x``."""
        return [(x, y) for x in range(1, self.n + 1) for y in self.back_high[x]]

    @property
    def m_back(self) -> int:
        return sum(len(lst) for lst in self.back_high)

    def count_incoming(self, y: int, lo: int, hi: int) -> int:
        """Number of back-edges ``(x, y)`` with ``lo <= x <= hi``."""
        xs = self.back_low[y]
        return bisect_left(xs, hi + 1) - bisect_left(xs, lo)

    def path_to_root(self, v: int) -> List[int]:
        out = []
        while v != BOTTOM:
            out.append(v)
            v = int(self.parent[v])
        return out


def run_dfs(graph, start: int = 1) -> DfsTree:
    """
    Iterative DFS over ``graph.adjacency`` (lists indexed by vertex, index 0 unused).

    Neighbours are scanned in list order, so the tree is reproducible. A
    non-tree edge is recorded once, from its deeper endpoint.

    Raises
    ------
    DisconnectedGraphError
        Some vertex is not reachable from ``start``.
    """
    adj = graph.adjacency
    size = len(adj) - 1
    num = [0] * (size + 1)
    graph_parent = [0] * (size + 1)
    ptr = [0] * (size + 1)
    order = [BOTTOM, start]
    num[start] = 1
    back: List[Tuple[int, int]] = []
    stack = [start]
    while stack:
        v = stack[-1]
        nbrs = adj[v]
        if ptr[v] < len(nbrs):
            w = nbrs[ptr[v]]
            ptr[v] += 1
            if num[w] == 0:
                graph_parent[w] = v
                num[w] = len(order)
                order.append(w)
                stack.append(w)
            elif w != graph_parent[v] and num[w] < num[v]:
                back.append((num[v], num[w]))
        else:
            stack.pop()

    if len(order) - 1 != size:
        missing = next(v for v in range(1, size + 1) if num[v] == 0)
        raise DisconnectedGraphError(start, missing)

    parent = [BOTTOM] * (size + 1)
    for v in range(2, size + 1):
        parent[v] = num[graph_parent[order[v]]]
    tree = DfsTree.from_parents(parent, back, order)
    logger.debug("dfs from %d: %d vertices, %d back-edges", start, tree.n, len(back))
    return tree
