"""
Skipping points.

Given a forbidden vertex ``z_v`` per vertex (or BOTTOM), the leftmost skipping
point of ``v`` is the smallest ``x ∈ T(v)`` with a back-edge ``(x, y)``,
``y < p(v)`` and ``y != z_v``. Back-edges are processed by increasing ``x``
(decreasing for the rightmost variant); each edge climbs from ``x`` and settles
every unsettled vertex it qualifies for. A vertex meeting an edge that lands on
its forbidden vertex is marked once; a second such edge with the same lower
endpoint stops the climb, since the first one already went further up.
"""
import logging
from typing import List, Sequence

from graph_core import BOTTOM

from .disjoint_set import DisjointSet
from .subtree_extremes import Direction

logger = logging.getLogger(__name__)


def batch_skip_points(tree, z: Sequence[int], direction: Direction = Direction.LEFT) -> List[int]:
    """
    Parameters
    ----------
    tree : DfsTree
    z : sequence of int
        Forbidden lower endpoint per vertex (index 0 unused), BOTTOM for none.
    direction : Direction

    Returns
    -------
    list of int
        Skipping point per vertex, BOTTOM where none exists.
    """
    n = tree.n
    parent = tree.parent.tolist()
    z = [int(a) for a in z]
    edges = tree.back_edges()
    if Direction(direction) == Direction.RIGHT:
        edges.reverse()

    dsu = DisjointSet(n + 1)
    marked = [False] * (n + 1)
    answer = [BOTTOM] * (n + 1)
    for x, y in edges:
        w = dsu.representative(x)
        while w != BOTTOM and parent[w] > y:
            if z[w] != y:
                answer[w] = x
                above = dsu.representative(parent[w])
                dsu.unite(w, parent[w], above)
                w = above
            elif not marked[w]:
                marked[w] = True
                w = dsu.representative(parent[w])
            else:
                break
    logger.debug("skip points (%s): %d dsu operations", Direction(direction).value, dsu.operations)
    return answer
