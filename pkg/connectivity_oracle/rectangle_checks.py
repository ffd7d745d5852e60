"""
Exact tests on the back-edges, phrased as rectangle-emptiness queries.

A back-edge ``(x, y)`` joins two parts of ``G \\ F`` when ``x`` lies in a set of
subtree intervals and ``y`` lies on a segment of an ancestor path; in any DFS
numbering both are ranges of numbers. These checks recompute the connectivity
graph of the internal components independently of the case rules; the oracle
builds them only for ``cross_check`` and ``debug_checks`` runs.
"""
import logging
from bisect import bisect_left
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from dfs_params import ParamView
from graph_core import BOTTOM, View
from tree_oracles import BackEdgeRangeIndex

from .context import Component, Segment

logger = logging.getLogger(__name__)

Interval = Tuple[int, int]


def subtract(lo: int, hi: int, holes: Iterable[Interval]) -> List[Interval]:
    """``[lo, hi]`` minus disjoint ``holes``."""
    out = []
    for a, b in sorted(holes):
        if b < lo or a > hi:
            continue
        if lo <= a - 1:
            out.append((lo, a - 1))
        lo = max(lo, b + 1)
    if lo <= hi:
        out.append((lo, hi))
    return out


class RectangleChecks:
    """
    Rectangle queries on every view, plus the sorted ``low1`` / ``high1`` keys of
    the children of every vertex that may fail.
    """

    def __init__(self, views: Dict[View, ParamView], candidates: Sequence[int]):
        self.views = views
        self.index = {name: BackEdgeRangeIndex(pv.tree) for name, pv in views.items()}
        low, high = views[View.LOW_INC], views[View.HIGH_DEC]
        self.low_keys: Dict[int, List[int]] = {}
        self.high_keys: Dict[int, List[int]] = {}
        for f in candidates:
            lv = low.translate(f)
            self.low_keys[f] = [int(low.params.low1[k]) for k in low.tree.children[lv]
                                if low.params.low1[k] != BOTTOM]
            hv = high.translate(f)
            self.high_keys[f] = [-int(high.params.high1[k]) for k in high.tree.children[hv]
                                 if high.params.high1[k] != BOTTOM]

    def count(self, view: View, intervals: Iterable[Interval], y_lo: int, y_hi: int) -> int:
        index = self.index[view]
        return sum(index.count(lo, hi, y_lo, y_hi) for lo, hi in intervals)

    def exists(self, view: View, intervals: Iterable[Interval], y_lo: int, y_hi: int) -> bool:
        index = self.index[view]
        return any(index.exists(lo, hi, y_lo, y_hi) for lo, hi in intervals)

    def direct(self, component: Component, segment: Segment) -> bool:
        """Some back-edge from ``component`` lands on ``segment``."""
        base = self.views[View.BASE]
        return self.exists(View.BASE, component.intervals(base.tree), segment.top, segment.bottom)

    def _prefix_mediation(self, view: View, f: int, end: int, blocked: Iterable[int],
                          segment: Segment) -> bool:
        pv = self.views[view]
        kids = pv.tree.children[pv.translate(f)][:end]
        if not kids:
            return False
        holes = []
        for b in blocked:
            bv = pv.translate(b)
            holes.append((bv, pv.tree.last(bv)))
        intervals = subtract(kids[0], pv.tree.last(kids[-1]), holes)
        return self.exists(view, intervals, pv.translate(segment.top), pv.translate(segment.bottom))

    def low_mediation(self, f: int, below: int, blocked: Iterable[int], segment: Segment) -> bool:
        """
        A hanging child of ``f`` with a back-edge under ``below`` (an ancestor of
        ``f``) also reaches ``segment``. Scans the ``T_lowInc`` prefix of ``f``'s children.
        """
        low = self.views[View.LOW_INC]
        end = bisect_left(self.low_keys[f], low.translate(below))
        return self._prefix_mediation(View.LOW_INC, f, end, blocked, segment)

    def high_mediation(self, f: int, above: int, blocked: Iterable[int], segment: Segment) -> bool:
        """
        A hanging child of ``f`` with a back-edge landing strictly between ``above``
        and ``f`` also reaches ``segment``. Scans the ``T_highDec`` prefix.
        """
        high = self.views[View.HIGH_DEC]
        end = bisect_left(self.high_keys[f], -high.translate(above))
        return self._prefix_mediation(View.HIGH_DEC, f, end, blocked, segment)

    def links(self, resolver) -> Set[Tuple[int, int]]:
        """Every pair of internal components joined directly or through a hanging subtree."""
        edges: Set[Tuple[int, int]] = set()

        def add(a, b):
            if a != b:
                edges.add((min(a, b), max(a, b)))

        for r, comp in resolver.ctx.components.items():
            if r == 1:
                continue
            for seg in resolver.segments(resolver.base.parent(r)):
                if self.direct(comp, seg):
                    add(r, seg.owner)
        for f in resolver.failed:
            segs = resolver.segments(f)
            if len(segs) < 2:
                continue
            ancestors = resolver.failed_ancestors(f)
            blocked = resolver.blocked(f)
            for seg in segs[1:]:
                if self.low_mediation(f, ancestors[0], blocked, seg):
                    add(segs[0].owner, seg.owner)
            if len(segs) == 3 and self.high_mediation(f, ancestors[1], blocked, segs[1]):
                add(segs[1].owner, segs[2].owner)
        return edges

    def words(self) -> int:
        return sum(index.words() for index in self.index.values()) \
            + sum(len(k) for k in self.low_keys.values()) + sum(len(k) for k in self.high_keys.values())
