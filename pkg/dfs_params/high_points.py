"""
Highest and second-highest lower endpoints of ``B_p(v)``, in linear time.

Back-edges are processed in decreasing order of their lower endpoint ``y``.
Starting from the higher endpoint ``x`` the edge is pushed upwards along the
tree path while the current vertex ``z`` still satisfies ``p(z) > y``: the first
such edge fixes ``high1(z)``, the first edge with a different lower endpoint
fixes ``high2(z)``. A vertex with both values settled is merged into its
parent's set, so later edges jump over it in one ``find``.
"""
import logging
from typing import Tuple

import numpy as np

from batch_solvers.disjoint_set import DisjointSet
from graph_core import BOTTOM, DfsTree

logger = logging.getLogger(__name__)


def compute_high_points(tree: DfsTree) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns
    -------
    (np.ndarray, np.ndarray)
        ``high1`` and ``high2`` per vertex, ``BOTTOM`` where undefined.
    """
    n = tree.n
    parent = tree.parent.tolist()
    high1 = [BOTTOM] * (n + 1)
    high2 = [BOTTOM] * (n + 1)
    dsu = DisjointSet(n + 1)

    for y in range(n, 0, -1):
        for x in tree.back_low[y]:
            z = dsu.representative(x)
            while z != BOTTOM and parent[z] > y:
                if high1[z] == BOTTOM:
                    high1[z] = y
                    z = dsu.representative(parent[z])
                elif high1[z] == y:
                    break
                else:
                    high2[z] = y
                    above = dsu.representative(parent[z])
                    dsu.unite(z, parent[z], above)
                    z = above

    logger.debug("high points: %d dsu operations for %d back-edges", dsu.operations, tree.m_back)
    return np.asarray(high1, dtype=np.int64), np.asarray(high2, dtype=np.int64)
