"""
Leftmost, rightmost and maximum points.

``Lp(v)`` / ``Rp(v)`` are the smallest / largest higher endpoints over ``B_p(v)``
in a given numbering, ``Mp(v) = nca(Lp(v), Rp(v))``. ``Mp`` does not depend on the
numbering, so it is stored once, in base vertices; so is ``nextMp(v)``, the
greatest vertex below ``v`` with the same ``Mp`` (vertices sharing an ``Mp`` form
an ancestor chain, ordered alike in every view).
"""
import logging
from dataclasses import dataclass
from typing import Dict

import numpy as np

from batch_solvers.subtree_extremes import Direction, SubtreeExtremeQuery, batch_subtree_extremes
from graph_core import BOTTOM, DfsForestViews, View
from tree_oracles import NcaIndex

from .scalar_params import ScalarParams

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class ExtremePoints:
    lp: Dict[View, np.ndarray]
    rp: Dict[View, np.ndarray]
    mp: np.ndarray
    next_mp: np.ndarray

    def words(self) -> int:
        return sum(a.size for a in self.lp.values()) + sum(a.size for a in self.rp.values()) \
            + self.mp.size + self.next_mp.size


def _in_view(values: np.ndarray, to_view: np.ndarray) -> np.ndarray:
    """Vertex-valued per-vertex array moved to view numbering on both sides."""
    out = np.zeros_like(values)
    out[to_view[1:]] = to_view[values[1:]]
    return out


def compute_extreme_points(views: DfsForestViews, params: ScalarParams) -> ExtremePoints:
    n = views.base.n
    lp: Dict[View, np.ndarray] = {}
    rp: Dict[View, np.ndarray] = {}
    for view in View:
        tree = views.tree(view)
        l1 = _in_view(params.l1, views.to_view[view])
        queries = [SubtreeExtremeQuery(v, v, Direction.LEFT) for v in range(1, n + 1)]
        queries += [SubtreeExtremeQuery(v, v, Direction.RIGHT) for v in range(1, n + 1)]
        answers = batch_subtree_extremes(tree, l1, queries)
        lp[view] = np.asarray([BOTTOM] + answers[:n], dtype=np.int64)
        rp[view] = np.asarray([BOTTOM] + answers[n:], dtype=np.int64)

    nca = NcaIndex(views.base)
    lp_base, rp_base = lp[View.BASE].tolist(), rp[View.BASE].tolist()
    mp = [BOTTOM] * (n + 1)
    next_mp = [BOTTOM] * (n + 1)
    latest: Dict[int, int] = {}
    for v in range(1, n + 1):
        mp[v] = nca.nca(lp_base[v], rp_base[v])
        if mp[v] != BOTTOM:
            next_mp[v] = latest.get(mp[v], BOTTOM)
            latest[mp[v]] = v
    logger.debug("extreme points: %d vertices with a defined Mp", sum(1 for z in mp if z))
    return ExtremePoints(lp=lp, rp=rp, mp=np.asarray(mp, dtype=np.int64),
                         next_mp=np.asarray(next_mp, dtype=np.int64))
