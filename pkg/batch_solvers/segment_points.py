"""
Extreme points over nested segments.

A query ``(z, u, v)`` asks for the leftmost / rightmost ``x ∈ T(z)`` having a
back-edge ``(x, y)`` with ``y`` on the tree path ``T[u, v]`` (``v`` an ancestor of
``u``, ``u`` an ancestor of ``z``). A batch is *nested* when

1. any two segments are disjoint or one strictly contains the other, and
2. whenever ``S_i ⊂ S_j`` and ``z_i`` is not an ancestor of ``z_j``, no query
   containing ``S_j`` has a back-edge from its ``T(z)`` into ``S_i``.

For a nested batch the queries form a forest (parent = the smallest strictly
larger segment whose ``z`` lies below), and an edge ``(x, y)`` answers a
contiguous chain of queries starting at the smallest segment containing ``y``.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, NamedTuple, Sequence, Tuple

from graph_core import BOTTOM
from utils.errors import NestednessError

from .disjoint_set import DisjointSet

logger = logging.getLogger(__name__)

NO_QUERY = -1


class SegmentQuery(NamedTuple):
    z: int
    u: int
    v: int


@dataclass
class QueryForest:
    """
    ``parent[i]`` is the parent query of query ``i`` (``NO_QUERY`` for roots);
    ``vertex_query[y]`` is the smallest query whose segment contains ``y``.
    """

    parent: List[int]
    vertex_query: List[int]

    def roots(self) -> List[int]:
        return [i for i, p in enumerate(self.parent) if p == NO_QUERY]


def _segment(tree, q: SegmentQuery) -> List[int]:
    out = []
    w = q.u
    stop = int(tree.parent[q.v])
    while w != stop:
        out.append(w)
        w = int(tree.parent[w])
    return out


def build_query_forest(tree, queries: Sequence[SegmentQuery]) -> QueryForest:
    """
    Link every query to its parent query in ``O(n + N log N)``.

    Queries are visited by increasing segment size (ties: shallower ``z`` first).
    Walking up a segment, a vertex already claimed by a smaller query ``Q'`` means
    ``Q'`` is directly contained in the current query: it becomes a child if its
    ``z`` is an ancestor of ours and a root otherwise, and the walk jumps over it.
    """
    parent = tree.parent.tolist()
    depth = tree.depth.tolist()
    n_queries = len(queries)
    vertex_query = [NO_QUERY] * (tree.n + 1)
    latest = [NO_QUERY] * (tree.n + 1)
    query_parent = [NO_QUERY] * n_queries

    order = sorted(range(n_queries),
                   key=lambda i: (depth[queries[i].u] - depth[queries[i].v], depth[queries[i].z]))
    for i in order:
        z, u, v = queries[i]
        w = u
        while w != BOTTOM and depth[w] >= depth[v]:
            if vertex_query[w] == NO_QUERY:
                vertex_query[w] = i
                latest[w] = i
                w = parent[w]
            else:
                inner = latest[w]
                if tree.is_ancestor(queries[inner].z, z) and query_parent[inner] == NO_QUERY:
                    query_parent[inner] = i
                latest[w] = i
                w = parent[queries[inner].v]
    return QueryForest(parent=query_parent, vertex_query=vertex_query)


def validate_nested(tree, queries: Sequence[SegmentQuery]) -> None:
    """
    Check both nestedness conditions by brute force (``O(N^2 n)``).

    Raises
    ------
    NestednessError
        Naming the first offending pair of query indices.
    """
    segments = [set(_segment(tree, q)) for q in queries]
    for i, j in combinations(range(len(queries)), 2):
        a, b = segments[i], segments[j]
        if a == b and queries[i] != queries[j]:
            raise NestednessError(i, j, "equal segments")
        if a & b and not (a < b or b < a):
            raise NestednessError(i, j, "overlapping segments")
    for i, j in combinations(range(len(queries)), 2):
        for inner, outer in ((i, j), (j, i)):
            if not segments[inner] < segments[outer]:
                continue
            if tree.is_ancestor(queries[inner].z, queries[outer].z):
                continue
            for k, q in enumerate(queries):
                if not segments[outer] <= segments[k]:
                    continue
                lo, hi = q.z, tree.last(q.z)
                if any(tree.count_incoming(y, lo, hi) for y in segments[inner]):
                    raise NestednessError(inner, outer,
                                          f"query {k} reaches the inner segment from T({q.z})")


def _answer(tree, queries, forest: QueryForest, edges) -> List[int]:
    n_queries = len(queries)
    top = n_queries
    dsu = DisjointSet(n_queries + 1)
    answers = [BOTTOM] * n_queries
    for x, y in edges:
        first = forest.vertex_query[y]
        if first == NO_QUERY:
            continue
        q = dsu.representative(first)
        while q != top and tree.is_ancestor(queries[q].z, x):
            answers[q] = x
            above = forest.parent[q] if forest.parent[q] != NO_QUERY else top
            nxt = dsu.representative(above)
            dsu.unite(q, above, nxt)
            q = nxt
    return answers


def batch_segment_points(tree, queries: Sequence[SegmentQuery],
                         debug: bool = False) -> List[Tuple[int, int]]:
    """
    Leftmost and rightmost point for every query of a nested batch.

    Identical queries are answered once. With ``debug`` the batch is validated
    first (quadratic).

    Returns
    -------
    list of (int, int)
        ``(L, R)`` per query, ``(BOTTOM, BOTTOM)`` when no back-edge qualifies.
    """
    unique = list(dict.fromkeys(SegmentQuery(*q) for q in queries))
    if debug:
        validate_nested(tree, unique)
    forest = build_query_forest(tree, unique)
    edges = tree.back_edges()
    left = _answer(tree, unique, forest, edges)
    right = _answer(tree, unique, forest, reversed(edges))
    index = {q: i for i, q in enumerate(unique)}
    logger.debug("segment points: %d queries (%d distinct)", len(queries), len(unique))
    return [(left[index[SegmentQuery(*q)]], right[index[SegmentQuery(*q)]]) for q in queries]
