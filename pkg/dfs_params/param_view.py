"""
Everything known about one numbering of the DFS tree, in that numbering.

Case tables and the query engine work per view; a :class:`ParamView` bundles
the view's tree, its parameters and extreme points translated to view numbers,
and the level-ancestor / nca indexes built on it.
"""
import logging
from dataclasses import dataclass
from typing import Dict

import numpy as np

from graph_core import BOTTOM, DfsForestViews, DfsTree, View
from tree_oracles import LevelAncestorIndex, NcaIndex

from .extreme_points import ExtremePoints, _in_view
from .scalar_params import ScalarParams

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class ParamView:
    name: View
    tree: DfsTree
    params: ScalarParams
    to_view: np.ndarray
    to_base: np.ndarray
    lp: np.ndarray
    rp: np.ndarray
    mp: np.ndarray
    next_mp: np.ndarray
    la: LevelAncestorIndex
    nca: NcaIndex

    @property
    def n(self) -> int:
        return self.tree.n

    def parent(self, v: int) -> int:
        return int(self.tree.parent[v]) if v != BOTTOM else BOTTOM

    def translate(self, base_vertex: int) -> int:
        return int(self.to_view[base_vertex])

    def untranslate(self, v: int) -> int:
        return int(self.to_base[v])

    def child_toward(self, v: int, u: int) -> int:
        return self.la.child_toward(v, u)

    def words(self) -> int:
        return self.la.words() + self.nca.words() + 4 * (self.n + 1)


def build_param_views(views: DfsForestViews, params: ScalarParams,
                      extremes: ExtremePoints) -> Dict[View, ParamView]:
    out: Dict[View, ParamView] = {}
    for view in View:
        tree = views.tree(view)
        to_view = views.to_view[view]
        out[view] = ParamView(
            name=view,
            tree=tree,
            params=params.translated(to_view),
            to_view=to_view,
            to_base=views.to_base[view],
            lp=extremes.lp[view],
            rp=extremes.rp[view],
            mp=_in_view(extremes.mp, to_view),
            next_mp=_in_view(extremes.next_mp, to_view),
            la=LevelAncestorIndex(tree),
            nca=NcaIndex(tree),
        )
    logger.debug("built parameter views %s", ", ".join(v.value for v in out))
    return out
