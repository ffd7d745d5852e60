"""
Per-vertex scalar parameters of a DFS tree.

``B_p(v)`` is the set of back-edges ``(x, y)`` with ``x ∈ T(v)`` and ``y < p(v)``.
All parameters below describe ``B_p(v)`` or the back-edges stemming from ``v``:

* ``l1``, ``l2``: lowest two distinct lower endpoints of edges stemming from ``v``;
* ``low1..low3``: lowest three distinct lower endpoints over ``B_p(v)``;
* ``high1``, ``high2``: highest two distinct lower endpoints over ``B_p(v)``;
* ``bp_count`` = ``|B_p(v)|``, ``sum_y`` = sum of the lower endpoints;
* ``num_low`` / ``num_high``: edges of ``B_p(v)`` landing on ``low1`` / ``high1``.
"""
import logging
from dataclasses import dataclass, fields
from typing import Dict, List, Tuple

import numpy as np

from graph_core import BOTTOM, DfsTree

from .high_points import compute_high_points

logger = logging.getLogger(__name__)

# fields holding vertices (renumbered by a view); the remaining ones are counts
VERTEX_FIELDS = ("l1", "l2", "low1", "low2", "low3", "high1", "high2")
COUNT_FIELDS = ("bp_count", "sum_y", "num_low", "num_high")


@dataclass(eq=False)
class ScalarParams:
    l1: np.ndarray
    l2: np.ndarray
    low1: np.ndarray
    low2: np.ndarray
    low3: np.ndarray
    high1: np.ndarray
    high2: np.ndarray
    bp_count: np.ndarray
    sum_y: np.ndarray
    num_low: np.ndarray
    num_high: np.ndarray

    @property
    def n(self) -> int:
        return len(self.low1) - 1

    def translated(self, to_view: np.ndarray) -> "ScalarParams":
        """
        The same parameters in another numbering of the same tree.

        ``to_view`` maps base vertices to view vertices (``BOTTOM`` to ``BOTTOM``).
        ``sum_y`` stays a sum of base numbers.
        """
        order = np.argsort(to_view[1:]) + 1
        out: Dict[str, np.ndarray] = {}
        for f in fields(self):
            values = getattr(self, f.name)
            permuted = np.concatenate(([0], values[order]))
            if f.name in VERTEX_FIELDS:
                permuted = to_view[permuted]
            out[f.name] = permuted
        return ScalarParams(**out)

    def lows(self, v: int) -> Tuple[int, int, int]:
        return int(self.low1[v]), int(self.low2[v]), int(self.low3[v])

    def as_dict(self, v: int) -> Dict[str, int]:
        return {f.name: int(getattr(self, f.name)[v]) for f in fields(self)}


def _lowest_distinct(values, k: int, below: int) -> List[int]:
    out: List[int] = []
    for y in sorted(set(values)):
        if y >= below or len(out) == k:
            break
        out.append(y)
    return out


def compute_scalar_params(tree: DfsTree) -> ScalarParams:
    """
    Compute every :class:`ScalarParams` field in ``O(n + m)`` (plus sorting small lists).

    ``bp_count`` and ``sum_y`` follow from ``E(v) = own(v) + Σ E(c) - in(v)``, where
    ``E(v)`` counts the back-edges leaving ``T(v)`` upwards; the edges from ``T(v)``
    to ``p(v)`` are then removed with a binary search.
    """
    n = tree.n
    parent = tree.parent.tolist()
    nd = tree.nd.tolist()
    back_high = tree.back_high
    back_low = tree.back_low

    l1 = [BOTTOM] * (n + 1)
    l2 = [BOTTOM] * (n + 1)
    lows: List[List[int]] = [[] for _ in range(n + 1)]
    leaving = [0] * (n + 1)
    leaving_sum = [0] * (n + 1)
    bp_count = [0] * (n + 1)
    sum_y = [0] * (n + 1)

    for v in range(n, 0, -1):
        own = back_high[v]
        distinct = _lowest_distinct(own, 3, v)
        if distinct:
            l1[v] = distinct[0]
        if len(distinct) > 1:
            l2[v] = distinct[1]

        leaving[v] += len(own) - len(back_low[v])
        leaving_sum[v] += sum(own) - v * len(back_low[v])
        p = parent[v]
        if p == BOTTOM:
            continue
        leaving[p] += leaving[v]
        leaving_sum[p] += leaving_sum[v]

        to_parent = tree.count_incoming(p, v, v + nd[v] - 1)
        bp_count[v] = leaving[v] - to_parent
        sum_y[v] = leaving_sum[v] - p * to_parent

        candidates = list(distinct)
        for c in tree.children[v]:
            candidates.extend(lows[c])
        lows[v] = _lowest_distinct(candidates, 3, p)

    low = np.zeros((3, n + 1), dtype=np.int64)
    for v in range(1, n + 1):
        for i, y in enumerate(lows[v]):
            low[i, v] = y

    high1, high2 = compute_high_points(tree)

    num_low = [0] * (n + 1)
    num_high = [0] * (n + 1)
    for v in range(2, n + 1):
        if low[0, v] != BOTTOM:
            last = v + nd[v] - 1
            num_low[v] = tree.count_incoming(int(low[0, v]), v, last)
            num_high[v] = tree.count_incoming(int(high1[v]), v, last)

    params = ScalarParams(
        l1=np.asarray(l1, dtype=np.int64),
        l2=np.asarray(l2, dtype=np.int64),
        low1=low[0].copy(),
        low2=low[1].copy(),
        low3=low[2].copy(),
        high1=high1,
        high2=high2,
        bp_count=np.asarray(bp_count, dtype=np.int64),
        sum_y=np.asarray(sum_y, dtype=np.int64),
        num_low=np.asarray(num_low, dtype=np.int64),
        num_high=np.asarray(num_high, dtype=np.int64),
    )
    logger.debug("scalar params for %d vertices, %d back-edges", n, tree.m_back)
    return params
