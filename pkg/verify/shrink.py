"""Greedy shrinking of a failing (graph, query) pair."""
import logging
from typing import Callable, List, Optional, Sequence, Tuple

from graph_core import Graph, load_graph
from utils.errors import GraphError

logger = logging.getLogger(__name__)

# (graph, failures, x, y) -> still failing?
Check = Callable[[Graph, Tuple[int, ...], Optional[int], Optional[int]], bool]


def _rebuild(edges: Sequence[Tuple[int, int]], keep: List[int]):
    """Graph induced on ``keep`` relabelled to ``1..len(keep)``, or None if disconnected."""
    index = {v: i + 1 for i, v in enumerate(keep)}
    kept = [(index[u], index[v]) for u, v in edges if u in index and v in index]
    try:
        return load_graph(kept, len(keep)), index
    except GraphError:
        return None, index


def shrink_counterexample(graph: Graph, failures: Sequence[int], x: Optional[int], y: Optional[int],
                          still_fails: Check, max_rounds: int = 50):
    """
    Delete vertices, then edges, one at a time while the graph stays connected
    and ``still_fails`` keeps returning True. Failed vertices and the query pair
    are never deleted.

    Returns
    -------
    (Graph, tuple, int or None, int or None)
    """
    failures = tuple(failures)
    for _ in range(max_rounds):
        progress = False
        pinned = set(failures) | {v for v in (x, y) if v is not None}
        for v in range(graph.n, 0, -1):
            if v in pinned or graph.n <= 2:
                continue
            keep = [u for u in range(1, graph.n + 1) if u != v]
            smaller, index = _rebuild(graph.edges, keep)
            if smaller is None:
                continue
            f2 = tuple(index[f] for f in failures)
            x2 = index[x] if x is not None else None
            y2 = index[y] if y is not None else None
            if still_fails(smaller, f2, x2, y2):
                graph, failures, x, y = smaller, f2, x2, y2
                progress = True
                break
        if progress:
            continue
        for i in range(len(graph.edges)):
            edges = graph.edges[:i] + graph.edges[i + 1:]
            try:
                smaller = load_graph(edges, graph.n)
            except GraphError:
                continue
            if still_fails(smaller, failures, x, y):
                graph = smaller
                progress = True
                break
        if not progress:
            break
    logger.info("shrunk counterexample to n=%d m=%d", graph.n, graph.m)
    return graph, failures, x, y
