"""
Permutations of a DFS tree.

``T_lowInc`` orders every children list by increasing ``low1`` (undefined last),
``T_highDec`` by decreasing ``high1`` (undefined last). Ties keep the base
order. A permutation is again a DFS tree of the same graph, so each view is a
full :class:`DfsTree` in its own numbering; ``to_view``/``to_base`` translate.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

import numpy as np

from .dfs import DfsTree
from .graph import BOTTOM

logger = logging.getLogger(__name__)


class View(str, Enum):
    BASE = "base"
    LOW_INC = "low_inc"
    HIGH_DEC = "high_dec"


def permute_tree(tree: DfsTree, key: np.ndarray) -> Tuple[DfsTree, np.ndarray, np.ndarray]:
    """
    Renumber ``tree`` after sorting every children list by ``key`` (stable).

    Returns
    -------
    (DfsTree, np.ndarray, np.ndarray)
        The permuted tree, ``to_view`` (base -> view) and ``to_base`` (view -> base);
        both translation arrays map ``BOTTOM`` to ``BOTTOM``.
    """
    n = tree.n
    parent = tree.parent
    vs = np.arange(2, n + 1)
    # vertices grouped by parent, then by key; lexsort is stable on base order
    ordered = vs[np.lexsort((key[2:], parent[2:]))]
    counts = np.bincount(parent[2:], minlength=n + 1)
    bounds = np.concatenate(([0], np.cumsum(counts)))
    ordered_list = ordered.tolist()
    bounds_list = bounds.tolist()

    to_view = [0] * (n + 1)
    counter = 0
    stack = [1]
    while stack:
        v = stack.pop()
        counter += 1
        to_view[v] = counter
        kids = ordered_list[bounds_list[v]:bounds_list[v + 1]]
        stack.extend(reversed(kids))

    to_view_arr = np.asarray(to_view, dtype=np.int64)
    to_base_arr = np.zeros(n + 1, dtype=np.int64)
    to_base_arr[to_view_arr[1:]] = np.arange(1, n + 1)

    view_parent = np.zeros(n + 1, dtype=np.int64)
    view_parent[to_view_arr[1:]] = to_view_arr[parent[1:]]
    back = [(to_view[x], to_view[y]) for x, y in tree.back_edges()]
    view_tree = DfsTree.from_parents(view_parent.tolist(), back, tree.label[to_base_arr].tolist())
    return view_tree, to_view_arr, to_base_arr


@dataclass(eq=False)
class DfsForestViews:
    """The base tree and its two permutations with translation arrays."""

    base: DfsTree
    low_inc: DfsTree
    high_dec: DfsTree
    to_view: Dict[View, np.ndarray]
    to_base: Dict[View, np.ndarray]

    def tree(self, view: View) -> DfsTree:
        return {View.BASE: self.base, View.LOW_INC: self.low_inc,
                View.HIGH_DEC: self.high_dec}[View(view)]

    def translate(self, view: View, v: int) -> int:
        """Base vertex -> number in ``view``."""
        return int(self.to_view[View(view)][v])

    def untranslate(self, view: View, v: int) -> int:
        """Number in ``view`` -> base vertex."""
        return int(self.to_base[View(view)][v])


def low_inc_key(low1: np.ndarray, n: int) -> np.ndarray:
    return np.where(low1 == BOTTOM, n + 1, low1)


def high_dec_key(high1: np.ndarray) -> np.ndarray:
    return np.where(high1 == BOTTOM, 1, -high1)


def build_views(tree: DfsTree, params) -> DfsForestViews:
    """
    Build ``T_lowInc`` and ``T_highDec`` from ``params.low1`` / ``params.high1``
    (base numbering).
    """
    identity = np.arange(tree.n + 1, dtype=np.int64)
    low_tree, low_to_view, low_to_base = permute_tree(tree, low_inc_key(params.low1, tree.n))
    high_tree, high_to_view, high_to_base = permute_tree(tree, high_dec_key(params.high1))
    logger.debug("built lowInc/highDec views over %d vertices", tree.n)
    return DfsForestViews(
        base=tree,
        low_inc=low_tree,
        high_dec=high_tree,
        to_view={View.BASE: identity, View.LOW_INC: low_to_view, View.HIGH_DEC: high_to_view},
        to_base={View.BASE: identity, View.LOW_INC: low_to_base, View.HIGH_DEC: high_to_base},
    )
