"""
Leftmost / rightmost descendants providing a leaping back-edge.

For a query ``(v, d)`` with ``d ∈ T(v)`` the answer is the smallest (largest)
``x ∈ T(d)`` with a back-edge ``(x, y)``, ``y < p(v)``, i.e. with
``l1(x) < p(v)``. Queries are answered offline in decreasing order of ``p(v)``:
vertices whose ``l1`` reaches the threshold are deleted, and two disjoint-set
structures jump over runs of deleted vertices to the right and to the left.
"""
import logging
from enum import Enum
from typing import List, NamedTuple, Sequence

from graph_core import BOTTOM
from utils.errors import PreconditionError

from .disjoint_set import DisjointSet

logger = logging.getLogger(__name__)


class Direction(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class SubtreeExtremeQuery(NamedTuple):
    v: int
    d: int
    direction: Direction = Direction.LEFT


def batch_subtree_extremes(tree, l1: Sequence[int],
                           queries: Sequence[SubtreeExtremeQuery]) -> List[int]:
    """
    Answer every query; BOTTOM where no descendant qualifies.

    Parameters
    ----------
    tree : DfsTree
        The view the numbers refer to.
    l1 : sequence of int
        Lowest lower endpoint of the back-edges stemming from each vertex.
    queries : sequence of SubtreeExtremeQuery

    Raises
    ------
    PreconditionError
        Some ``d`` is not a descendant of its ``v``.
    """
    n = tree.n
    parent = tree.parent.tolist()
    nd = tree.nd.tolist()
    l1 = [int(a) for a in l1]
    for q in queries:
        if not tree.is_ancestor(q.v, q.d):
            raise PreconditionError(f"{q.d} is not a descendant of {q.v}")

    forward = DisjointSet(n + 2)   # representative: next alive vertex >= x (n + 1 sentinel)
    backward = DisjointSet(n + 2)  # representative: previous alive vertex <= x (0 sentinel)

    def kill(x):
        forward.unite(x, x + 1, forward.representative(x + 1))
        backward.unite(x, x - 1, backward.representative(x - 1))

    for x in range(1, n + 1):
        if l1[x] == BOTTOM:
            kill(x)
    alive = sorted((x for x in range(1, n + 1) if l1[x] != BOTTOM), key=lambda x: -l1[x])

    answers = [BOTTOM] * len(queries)
    order = sorted(range(len(queries)), key=lambda i: -parent[queries[i].v])
    ptr = 0
    for i in order:
        v, d, direction = queries[i]
        threshold = parent[v]
        while ptr < len(alive) and l1[alive[ptr]] >= threshold:
            kill(alive[ptr])
            ptr += 1
        last = d + nd[d] - 1
        if direction == Direction.LEFT:
            x = forward.representative(d)
            answers[i] = x if x <= last else BOTTOM
        else:
            x = backward.representative(last)
            answers[i] = x if x >= d else BOTTOM
    logger.debug("subtree extremes: %d queries, %d dsu operations",
                 len(queries), forward.operations + backward.operations)
    return answers
