"""Level-ancestor queries by binary lifting."""
import numpy as np

from graph_core import BOTTOM
from utils.errors import PreconditionError


class LevelAncestorIndex:
    """
    Jump tables ``up[k][v]`` = the ``2**k``-th ancestor of ``v`` (BOTTOM above the root).

    O(n log n) space, O(log n) per query.
    """

    def __init__(self, tree):
        self.tree = tree
        self.depth = tree.depth
        self.up = [tree.parent.copy()]
        max_depth = int(tree.depth.max(initial=0))
        k = 1
        while (1 << k) <= max_depth:
            prev = self.up[-1]
            self.up.append(prev[prev])
            k += 1

    def query(self, v: int, d: int) -> int:
        """Ancestor of ``v`` at depth ``d`` (``0 <= d <= depth(v)``)."""
        if v == BOTTOM or not 0 <= d <= int(self.depth[v]):
            raise PreconditionError(f"no ancestor of {v} at depth {d}")
        diff = int(self.depth[v]) - d
        k = 0
        while diff:
            if diff & 1:
                v = int(self.up[k][v])
            diff >>= 1
            k += 1
        return v

    def child_toward(self, v: int, u: int) -> int:
        """The child of ``v`` whose subtree contains ``u``; ``v`` must be a proper ancestor."""
        if not self.tree.is_proper_ancestor(v, u):
            raise PreconditionError(f"{v} is not a proper ancestor of {u}")
        return self.query(u, int(self.depth[v]) + 1)

    def words(self) -> int:
        return int(sum(np.size(row) for row in self.up))
