"""
Edge-splitting transform.

A DFS of the input graph fixes a tree ``T0`` rooted at ``s`` (the lowest vertex).
The transformed graph adds an artificial root above ``s``, splits every tree edge
with an auxiliary vertex and splits every back-edge with an auxiliary leaf that
becomes a child of the back-edge's higher endpoint. Splitting never changes
which real vertices are connected after deleting real vertices, and it makes
every DFS of the transformed graph satisfy:

* the root is artificial and no two real vertices are parent and child;
* every back-edge stems from an auxiliary leaf.

The adjacency lists are ordered so that a plain DFS from the artificial root
reproduces ``T0`` with the splitting vertices in place: tree-split children
first (in ``T0`` order), then back-split leaves, then the parent side, then the
leaves of back-edges that land on the vertex.
"""
import logging
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, List

import numpy as np

from .dfs import DfsTree, run_dfs
from .graph import BOTTOM, Graph

logger = logging.getLogger(__name__)


class VertexKind(IntEnum):
    REAL = 0
    AUX_ROOT = 1
    AUX_TREE_SPLIT = 2
    AUX_BACK_SPLIT = 3


@dataclass(eq=False)
class TransformedGraph:
    """
    The split image of a :class:`Graph`.

    Vertex ids: real vertex ``v`` keeps id ``v``; the artificial root is ``n + 1``;
    splitting vertices follow. ``origin[t]`` holds the original edge a splitting
    vertex replaces (``(child, parent)`` for tree edges, ``(x, y)`` for back-edges,
    ``x`` the deeper endpoint) and ``(v, 0)`` for a real vertex.
    """

    base: Graph
    n: int
    adjacency: List[List[int]]
    kind: np.ndarray
    origin: np.ndarray
    root: int
    start: int
    base_tree: DfsTree = field(repr=False)

    def is_real(self, v: int) -> bool:
        return 1 <= v <= self.base.n

    def real_to_transformed(self, v: int) -> int:
        return v

    def kind_counts(self) -> Dict[VertexKind, int]:
        counts = np.bincount(self.kind[1:], minlength=len(VertexKind))
        return {k: int(counts[k]) for k in VertexKind}

    @property
    def n_tree_splits(self) -> int:
        return self.kind_counts()[VertexKind.AUX_TREE_SPLIT]

    @property
    def n_back_splits(self) -> int:
        return self.kind_counts()[VertexKind.AUX_BACK_SPLIT]


def split_transform(graph: Graph, start: int = 1) -> TransformedGraph:
    """Split ``graph`` along a DFS tree rooted at ``start``; see the module docstring."""
    t0 = run_dfs(graph, start)
    label = t0.label.tolist()
    parent0 = t0.parent.tolist()
    n = graph.n
    root = n + 1

    # tree-split vertex of each non-root original vertex, numbered in T0 order
    tree_split = [BOTTOM] * (n + 1)
    next_id = root + 1
    origin: List[tuple] = [(0, 0)] * (root + 1)
    for v in range(1, n + 1):
        origin[v] = (v, 0)
    kinds: List[int] = [VertexKind.REAL] * (root + 1)
    kinds[0] = VertexKind.REAL
    kinds[root] = VertexKind.AUX_ROOT
    for pos in range(2, t0.n + 1):
        c = label[pos]
        tree_split[c] = next_id
        origin.append((c, label[parent0[pos]]))
        kinds.append(VertexKind.AUX_TREE_SPLIT)
        next_id += 1

    stem: List[List[int]] = [[] for _ in range(n + 1)]
    land: List[List[int]] = [[] for _ in range(n + 1)]
    for x_pos, y_pos in t0.back_edges():
        x, y = label[x_pos], label[y_pos]
        b = next_id
        next_id += 1
        origin.append((x, y))
        kinds.append(VertexKind.AUX_BACK_SPLIT)
        stem[x].append(b)
        land[y].append(b)

    size = next_id - 1
    adjacency: List[List[int]] = [[] for _ in range(size + 1)]
    for pos in range(1, t0.n + 1):
        v = label[pos]
        nbrs = [tree_split[label[c]] for c in t0.children[pos]]
        nbrs.extend(stem[v])
        nbrs.append(root if pos == 1 else tree_split[v])
        nbrs.extend(land[v])
        adjacency[v] = nbrs
    adjacency[root] = [label[1]]
    for v in range(1, n + 1):
        t = tree_split[v]
        if t != BOTTOM:
            adjacency[t] = [v, origin[t][1]]
    for b in range(size + 1):
        if b > root and kinds[b] == VertexKind.AUX_BACK_SPLIT:
            adjacency[b] = list(origin[b])

    tg = TransformedGraph(
        base=graph,
        n=size,
        adjacency=adjacency,
        kind=np.asarray(kinds, dtype=np.int8),
        origin=np.asarray(origin, dtype=np.int64),
        root=root,
        start=label[1],
        base_tree=t0,
    )
    logger.debug("split transform: n=%d m=%d -> %d vertices", n, graph.m, size)
    return tg
