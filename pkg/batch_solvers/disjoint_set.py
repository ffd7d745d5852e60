"""Disjoint-set structure whose sets carry a representative payload."""
from typing import List


class DisjointSet:
    """
    Union-find over ``0..n-1`` with union by rank and path compression.

    Besides the canonical root, every set stores a ``representative`` chosen by
    the caller at each union; answers of :meth:`representative` only change
    after a call to :meth:`unite`. ``operations`` counts finds and unions so
    batch algorithms can assert their amortised work.
    """

    def __init__(self, n: int):
        self.parent: List[int] = list(range(n))
        self.rank: List[int] = [0] * n
        self.rep: List[int] = list(range(n))
        self.operations = 0

    def find(self, element: int) -> int:
        """Canonical root of the set containing ``element``. Complexity: O(α(n))."""
        self.operations += 1
        root = element
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[element] != root:
            parent[element], element = root, parent[element]
        return root

    def representative(self, element: int) -> int:
        return self.rep[self.find(element)]

    def unite(self, first: int, second: int, representative: int) -> int:
        """Merge the sets of ``first`` and ``second`` and set their representative."""
        self.operations += 1
        a = self.find(first)
        b = self.find(second)
        if a != b:
            if self.rank[a] < self.rank[b]:
                a, b = b, a
            self.parent[b] = a
            if self.rank[a] == self.rank[b]:
                self.rank[a] += 1
        self.rep[a] = representative
        return a
