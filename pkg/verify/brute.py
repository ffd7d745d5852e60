"""Ground truth by breadth-first search over ``G \\ F``."""
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence

from graph_core import Graph


def _labels(adj: Sequence[Sequence[int]], removed: set) -> List[int]:
    """Component label per vertex (0 for removed vertices and index 0)."""
    label = [0] * len(adj)
    current = 0
    for s in range(1, len(adj)):
        if s in removed or label[s]:
            continue
        current += 1
        label[s] = current
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not label[w] and w not in removed:
                    label[w] = current
                    queue.append(w)
    return label


def brute_connected(graph: Graph, failures: Iterable[int], x: int, y: int) -> bool:
    label = _labels(graph.adjacency, set(failures))
    return label[x] == label[y]


def brute_count(graph: Graph, failures: Iterable[int]) -> int:
    removed = set(failures)
    label = _labels(graph.adjacency, removed)
    return max(label, default=0)


@dataclass(eq=False)
class BruteOracle:
    """BFS answers with the same query surface as the real oracle."""

    graph: Graph
    _cache: dict = field(default_factory=dict, repr=False)

    def labels(self, failures: Iterable[int]) -> List[int]:
        key = tuple(sorted(failures))
        if key not in self._cache:
            if len(self._cache) > 64:
                self._cache.clear()
            self._cache[key] = _labels(self.graph.adjacency, set(key))
        return self._cache[key]

    def connected(self, failures: Iterable[int], x: int, y: int) -> bool:
        label = self.labels(failures)
        return label[x] == label[y]

    def count_components(self, failures: Iterable[int]) -> int:
        return max(self.labels(failures), default=0)

    def is_cut(self, failures: Iterable[int]) -> bool:
        return self.count_components(failures) > 1
