"""
Input graphs: normalisation, connectivity check and the text file format.

File format: a header line ``n m`` followed by ``m`` edge lines ``u v`` (1-based).
DIMACS-like lines are accepted too: ``p edge n m`` as header, ``e u v`` as edge,
``c ...`` as comment. Blank lines and ``#`` comments are ignored.
"""
import logging
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from utils.errors import DisconnectedGraphError, GraphError, GraphFormatError

logger = logging.getLogger(__name__)

# "undefined" vertex; every vertex numbering used in this code base starts at 1
BOTTOM = 0

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices ``1..n``."""

    n: int
    edges: Tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> List[List[int]]:
        """Neighbour lists in input order; index 0 is unused."""
        adj: List[List[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def __getstate__(self):
        state = dict(self.__dict__)
        state.pop("adjacency", None)
        return state

    def without(self, removed: Iterable[int]) -> List[List[int]]:
        """Adjacency lists with the vertices of ``removed`` deleted."""
        gone = set(removed)
        return [
            [] if v in gone else [w for w in nbrs if w not in gone]
            for v, nbrs in enumerate(self.adjacency)
        ]


def _unreachable_pair(n: int, adj: Sequence[Sequence[int]]) -> Optional[Edge]:
    seen = [False] * (n + 1)
    seen[1] = True
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    for v in range(1, n + 1):
        if not seen[v]:
            return 1, v
    return None


def load_graph(edges: Iterable[Sequence[int]], n: Optional[int] = None) -> Graph:
    """
    Build a normalised :class:`Graph` from an edge list.

    Self-loops are dropped and parallel edges merged (both with a warning); the
    first occurrence of an edge fixes its position, so adjacency order, and with
    it the DFS tree, is reproducible.

    Parameters
    ----------
    edges : iterable of pairs
        Undirected edges with 1-based endpoints.
    n : int, optional
        Vertex count; defaults to the largest endpoint.

    Raises
    ------
    GraphError
        No vertices, or an endpoint outside ``1..n``.
    DisconnectedGraphError
        The graph is not connected.
    """
    raw = [tuple(int(x) for x in e) for e in edges]
    for e in raw:
        if len(e) != 2:
            raise GraphError(f"edge {e} does not have two endpoints")
    if n is None:
        n = max((max(e) for e in raw), default=0)
    if n < 1:
        raise GraphError("graph has no vertices")

    kept: List[Edge] = []
    seen = set()
    loops = duplicates = 0
    for u, v in raw:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        kept.append((u, v))
    if loops or duplicates:
        logger.warning("normalised input: dropped %d self-loops and %d duplicate edges",
                       loops, duplicates)

    graph = Graph(n=n, edges=tuple(kept))
    pair = _unreachable_pair(n, graph.adjacency)
    if pair is not None:
        raise DisconnectedGraphError(*pair)
    logger.debug("loaded graph n=%d m=%d", graph.n, graph.m)
    return graph


def parse_graph(lines: Iterable[str]) -> Graph:
    """Parse the text format described in the module docstring."""
    header = None
    edges: List[Edge] = []
    for line_no, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text or text.startswith("c ") or text == "c":
            continue
        parts = text.split()
        try:
            if parts[0] == "p":
                header = (int(parts[-2]), int(parts[-1]))
            elif parts[0] == "e":
                edges.append((int(parts[1]), int(parts[2])))
            elif header is None:
                header = (int(parts[0]), int(parts[1]))
            else:
                edges.append((int(parts[0]), int(parts[1])))
        except (IndexError, ValueError) as exc:
            raise GraphFormatError(f"cannot parse {line.strip()!r}", line_no) from exc
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m = header
    if m != len(edges):
        logger.warning("header announces %d edges, found %d", m, len(edges))
    return load_graph(edges, n=n)


def read_graph_file(path: str) -> Graph:
    if not os.path.exists(path):
        raise FileNotFoundError(f"File {path} not found.")
    with open(path, "r", encoding="utf-8") as f:
        return parse_graph(f)


def write_graph_file(graph: Graph, path: str) -> str:
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{graph.n} {graph.m}\n")
        for u, v in graph.edges:
            f.write(f"{u} {v}\n")
    return path
