"""
Constant-time segment points along chains of equal maximum point.

Vertices sharing ``Mp`` form a chain ``x1 > x2 > ...`` of ancestors. For ``c``
above ``d`` on a chain, every back-edge from ``T(d)`` into ``T[p(p(d)), c]``
stems from ``T(Mp)``, and the path splits into the pieces
``T[p(p(x_k)), x_{k+1}]`` and the single vertices ``p(x_k)``. One precomputed
value per chain vertex and a range-minimum (maximum) index over the chains laid
out one after the other answer every query.
"""
import logging
from bisect import bisect_left, bisect_right
from typing import Dict, List, Tuple

from batch_solvers import SegmentQuery, batch_segment_points
from dfs_params import ParamView
from graph_core import BOTTOM
from tree_oracles import RmqIndex
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


class MpChainOracle:
    """
    Answers ``L/R(d, p(p(d)), c)`` for ``Mp(c) = Mp(d)`` and ``c < p(d)``, in the
    numbering of ``view``.
    """

    def __init__(self, view: ParamView, debug: bool = False):
        self.view = view
        tree = view.tree
        n = tree.n
        parent = tree.parent.tolist()
        mp = view.mp.tolist()
        next_mp = view.next_mp.tolist()

        chains: Dict[int, List[int]] = {}
        for v in range(n, 0, -1):
            if mp[v] != BOTTOM:
                chains.setdefault(mp[v], []).append(v)
        order = [v for chain in chains.values() for v in chain]
        self.position = {v: i for i, v in enumerate(order)}

        queries = [SegmentQuery(v, parent[parent[v]], next_mp[v]) for v in order
                   if next_mp[v] != BOTTOM and next_mp[v] < parent[v]]
        answers = batch_segment_points(tree, queries, debug=debug)
        self.piece: Dict[int, Tuple[int, int]] = {q.z: a for q, a in zip(queries, answers)}

        missing_min = n + 1
        left_values, right_values = [], []
        for v in order:
            near_left, near_right = self._parent_points(v, mp[v])
            piece_left, piece_right = self.piece.get(v, (BOTTOM, BOTTOM))
            left_values.append(min(near_left or missing_min, piece_left or missing_min))
            right_values.append(max(near_right, piece_right))
        self._missing = missing_min
        self.left_index = RmqIndex(left_values, mode="min")
        self.right_index = RmqIndex(right_values, mode="max")
        logger.debug("chain oracle (%s): %d chains, %d piece queries",
                     view.name.value, len(chains), len(queries))

    def _parent_points(self, v: int, top: int) -> Tuple[int, int]:
        """Smallest / largest ``x ∈ T(top)`` with a back-edge to ``p(v)``."""
        tree = self.view.tree
        xs = tree.back_low[int(tree.parent[v])]
        lo, hi = top, tree.last(top)
        i = bisect_left(xs, lo)
        j = bisect_right(xs, hi)
        if i >= j:
            return BOTTOM, BOTTOM
        return xs[i], xs[j - 1]

    def query(self, c: int, d: int) -> Tuple[int, int]:
        """
        Raises
        ------
        PreconditionError
            ``Mp(c) != Mp(d)``, ``Mp(d)`` undefined, or ``c >= p(d)``.
        """
        mp = self.view.mp
        if mp[d] == BOTTOM or mp[c] != mp[d]:
            raise PreconditionError(f"{c} and {d} do not share a maximum point")
        if not c < self.view.parent(d):
            raise PreconditionError(f"{c} is not above the parent of {d}")
        left, right = self.piece.get(d, (BOTTOM, BOTTOM))
        i, j = self.position[d] + 1, self.position[c] - 1
        if i <= j:
            inner_left = self.left_index.value(i, j)
            if inner_left != self._missing and (left == BOTTOM or inner_left < left):
                left = inner_left
            right = max(right, self.right_index.value(i, j))
        return left, right

    def words(self) -> int:
        rmq = sum(t.size for t in self.left_index.table) + sum(t.size for t in self.right_index.table)
        return rmq + 2 * len(self.position) + 2 * len(self.piece)
