"""
Definitional recomputation of the per-vertex parameters and table entries.

Everything here materialises ``B_p(v)`` explicitly and applies the definitions
literally, in ``O(n * m)`` time; the fast builders are compared against it on
small graphs. All functions work in the numbering of the tree they are given.
"""
from typing import Dict, List, Optional, Tuple

import numpy as np

from dfs_params import ScalarParams
from graph_core import BOTTOM, DfsTree

BackEdge = Tuple[int, int]


def bp_edges(tree: DfsTree, v: int) -> List[BackEdge]:
    """``B_p(v)``: back-edges ``(x, y)`` with ``x`` in ``T(v)`` and ``y < p(v)``."""
    p = int(tree.parent[v])
    if p == BOTTOM:
        return []
    return [(x, y) for x, y in tree.back_edges() if v <= x <= tree.last(v) and y < p]


def _distinct(values, k, reverse=False) -> List[int]:
    out = sorted(set(values), reverse=reverse)[:k]
    return out + [BOTTOM] * (k - len(out))


def brute_scalar_params(tree: DfsTree) -> ScalarParams:
    n = tree.n
    rows: Dict[str, List[int]] = {name: [0] * (n + 1) for name in (
        "l1", "l2", "low1", "low2", "low3", "high1", "high2",
        "bp_count", "sum_y", "num_low", "num_high")}
    for v in range(1, n + 1):
        rows["l1"][v], rows["l2"][v] = _distinct(tree.back_high[v], 2)
        bp = bp_edges(tree, v)
        ys = [y for _, y in bp]
        rows["low1"][v], rows["low2"][v], rows["low3"][v] = _distinct(ys, 3)
        rows["high1"][v], rows["high2"][v] = _distinct(ys, 2, reverse=True)
        rows["bp_count"][v] = len(bp)
        rows["sum_y"][v] = sum(ys)
        rows["num_low"][v] = ys.count(rows["low1"][v]) if ys else 0
        rows["num_high"][v] = ys.count(rows["high1"][v]) if ys else 0
    return ScalarParams(**{k: np.asarray(v, dtype=np.int64) for k, v in rows.items()})


def brute_nca(tree: DfsTree, a: int, b: int) -> int:
    if a == BOTTOM or b == BOTTOM:
        return BOTTOM
    while not tree.is_ancestor(a, b):
        a = int(tree.parent[a])
    return a


def brute_extreme_points(tree: DfsTree) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(Lp, Rp, Mp)`` per vertex, in ``tree``'s numbering."""
    n = tree.n
    lp, rp, mp = [0] * (n + 1), [0] * (n + 1), [0] * (n + 1)
    for v in range(1, n + 1):
        xs = [x for x, _ in bp_edges(tree, v)]
        if xs:
            lp[v], rp[v] = min(xs), max(xs)
            mp[v] = brute_nca(tree, lp[v], rp[v])
    return tuple(np.asarray(a, dtype=np.int64) for a in (lp, rp, mp))


def brute_next_mp(mp: np.ndarray) -> np.ndarray:
    """Greatest ``u < v`` with ``Mp(u) = Mp(v)``, BOTTOM if none."""
    out = np.zeros_like(mp)
    for v in range(1, len(mp)):
        if mp[v] != BOTTOM:
            same = [u for u in range(1, v) if mp[u] == mp[v]]
            out[v] = same[-1] if same else BOTTOM
    return out


# --- BATCH PROBLEMS ---

def brute_subtree_extreme(tree: DfsTree, v: int, d: int, rightmost: bool = False) -> int:
    """Leftmost (rightmost) ``x`` in ``T(d)`` with an edge of ``B_p(v)``."""
    xs = [x for x, _ in bp_edges(tree, v) if d <= x <= tree.last(d)]
    if not xs:
        return BOTTOM
    return max(xs) if rightmost else min(xs)


def brute_skip_point(tree: DfsTree, v: int, z: int, rightmost: bool = False) -> int:
    """Extreme ``x`` in ``T(v)`` with an edge of ``B_p(v)`` whose lower endpoint is not ``z``."""
    xs = [x for x, y in bp_edges(tree, v) if y != z]
    if not xs:
        return BOTTOM
    return max(xs) if rightmost else min(xs)


def brute_segment_points(tree: DfsTree, z: int, u: int, v: int) -> Tuple[int, int]:
    """Extreme ``x`` in ``T(z)`` with a back-edge landing on the path from ``u`` up to ``v``."""
    path = set()
    w = u
    while w != BOTTOM:
        path.add(w)
        if w == v:
            break
        w = int(tree.parent[w])
    xs = [x for x, y in tree.back_edges() if z <= x <= tree.last(z) and y in path]
    if not xs:
        return BOTTOM, BOTTOM
    return min(xs), max(xs)


# --- CHILD SCANS ---

def brute_three_low(tree: DfsTree, params: ScalarParams, mp: np.ndarray, d: int,
                    excluded: Optional[int] = None) -> Tuple[int, int, int]:
    """Lowest, second-lowest ``low1`` and lowest ``low2`` over children of ``Mp(d)`` with ``high1 >= d``."""
    w = int(mp[d])
    kids = [k for k in tree.children[w]
            if params.high1[k] != BOTTOM and params.high1[k] >= d and k != excluded]
    first, second = _distinct([int(params.low1[k]) for k in kids], 2)
    third = min((int(params.low2[k]) for k in kids if params.low2[k] != BOTTOM), default=BOTTOM)
    return first, second, third


def brute_extreme_high(tree: DfsTree, params: ScalarParams, w: int, threshold: int) -> Tuple[int, int, int]:
    """Greatest, second-greatest ``high1`` and greatest ``high2`` over children of ``w`` with ``low1 < threshold``."""
    kids = [k for k in tree.children[w] if params.low1[k] != BOTTOM and params.low1[k] < threshold]
    first, second = _distinct([int(params.high1[k]) for k in kids], 2, reverse=True)
    third = max((int(params.high2[k]) for k in kids), default=BOTTOM)
    return first, second, third


def brute_lowest_child(tree: DfsTree, params: ScalarParams, w: int) -> int:
    """The child of ``w`` with a strictly lowest defined ``low1``, BOTTOM if there is none or a tie."""
    kids = [k for k in tree.children[w] if params.low1[k] != BOTTOM]
    if not kids:
        return BOTTOM
    best = min(int(params.low1[k]) for k in kids)
    winners = [k for k in kids if params.low1[k] == best]
    return winners[0] if len(winners) == 1 else BOTTOM


def brute_items74(tree: DfsTree, params: ScalarParams, mp: np.ndarray, d: int) -> Tuple[int, int, int, int]:
    w = int(mp[d])
    pd = int(tree.parent[d])
    c1 = brute_lowest_child(tree, params, w)
    kids = [k for k in tree.children[w] if params.high1[k] != BOTTOM]
    low_kids = [k for k in kids if params.high1[k] < d]
    item1a = sum(int(params.bp_count[k]) for k in low_kids)
    item1b = sum(int(params.sum_y[k]) for k in low_kids)
    high_kids = [k for k in kids if params.high1[k] >= d and k != c1 and params.low1[k] != BOTTOM]
    lowest = min((int(params.low1[k]) for k in high_kids), default=BOTTOM)
    item3 = 0
    if lowest != BOTTOM and lowest < pd:
        item3 = sum(int(params.num_low[k]) for k in high_kids if params.low1[k] == lowest)
    item2 = 0
    for x, y in tree.back_edges():
        if y == pd and any(k <= x <= tree.last(k) for k in low_kids):
            item2 += 1
    return item1a, item1b, item2, item3


def brute_survivors(tree: DfsTree, c: int) -> Tuple[int, int, int]:
    return tuple(_distinct([y for _, y in bp_edges(tree, c)], 3))


# --- SEGMENT FAMILIES ---

def _child_toward(tree: DfsTree, v: int, x: int) -> int:
    while int(tree.parent[x]) != v:
        x = int(tree.parent[x])
    return x


def brute_lemma53_query(tree: DfsTree, params: ScalarParams, extreme: np.ndarray, mp: np.ndarray,
                        d: int) -> Optional[Tuple[int, int, int]]:
    """
    ``(d, p(p(d)), c_d)`` when ``v_d = l1(extreme(d))`` is a proper ancestor of
    ``p(p(d))`` and ``Mp(c_d)`` lies in ``T(d)``; None otherwise.
    """
    x = int(extreme[d])
    if x == BOTTOM:
        return None
    vd = int(params.l1[x])
    ppd = int(tree.parent[int(tree.parent[d])]) if tree.parent[d] != BOTTOM else BOTTOM
    if ppd == BOTTOM or vd == BOTTOM or vd == ppd or not tree.is_ancestor(vd, ppd):
        return None
    cd = _child_toward(tree, vd, d)
    if not tree.is_ancestor(d, int(mp[cd])):
        return None
    return d, ppd, cd


def brute_lemma54_query(tree: DfsTree, params: ScalarParams, mp: np.ndarray,
                        d: int) -> Optional[Tuple[int, int, int]]:
    """
    ``(d, p(p(d)), c_d)`` when ``Mp(d)`` has a strictly lowest child ``c1`` and a
    second child whose ``low1`` is a proper ancestor of ``p(p(d))``, and
    ``Mp(c_d)`` lies in ``T(c1)``; None otherwise.
    """
    w = int(mp[d])
    if w == BOTTOM or len(tree.children[w]) < 2:
        return None
    c1 = brute_lowest_child(tree, params, w)
    if c1 == BOTTOM:
        return None
    vd = int(params.low1[tree.children[w][1]])
    ppd = int(tree.parent[int(tree.parent[d])]) if tree.parent[d] != BOTTOM else BOTTOM
    if ppd == BOTTOM or vd == BOTTOM or vd == ppd or not tree.is_ancestor(vd, ppd):
        return None
    cd = _child_toward(tree, vd, d)
    if not tree.is_ancestor(c1, int(mp[cd])):
        return None
    return d, ppd, cd


def brute_lemma55_anchor(tree: DfsTree, params: ScalarParams, mp: np.ndarray, c: int) -> int:
    """The only child of ``Mp(c) != c`` with ``high1 >= c`` and ``low1 < p(c)``, BOTTOM otherwise."""
    w = int(mp[c])
    if w == BOTTOM or w == c:
        return BOTTOM
    pc = int(tree.parent[c])
    found = [k for k in tree.children[w]
             if params.low1[k] != BOTTOM and params.low1[k] < pc and params.high1[k] >= c]
    return found[0] if len(found) == 1 else BOTTOM


def brute_low_children(tree: DfsTree, params: ScalarParams, mp: np.ndarray, c: int) -> Optional[Tuple[int, int]]:
    """The first two children of ``Mp(c)`` when the second has ``low1 < p(c)``."""
    w = int(mp[c])
    if w == BOTTOM or len(tree.children[w]) < 2:
        return None
    first, second = tree.children[w][:2]
    if params.low1[second] == BOTTOM or params.low1[second] >= tree.parent[c]:
        return None
    return int(first), int(second)


def brute_items76(tree: DfsTree, params: ScalarParams, d: int,
                  second: int) -> Optional[Tuple[int, int, int, int, int, int]]:
    """
    ``(L, R, w, item1a, item1b, item2)`` for ``L/R(d, second)``, ``w`` their nca
    and the children of ``w`` with ``high1 <= p(d)``; None when ``L`` is undefined.
    """
    left = brute_subtree_extreme(tree, d, second)
    if left == BOTTOM:
        return None
    right = brute_subtree_extreme(tree, d, second, rightmost=True)
    w = brute_nca(tree, left, right)
    pd = int(tree.parent[d])
    kids = [k for k in tree.children[w] if params.high1[k] != BOTTOM and params.high1[k] <= pd]
    item1a = sum(int(params.bp_count[k]) for k in kids)
    item1b = sum(int(params.sum_y[k]) for k in kids)
    item2 = sum(1 for x, y in tree.back_edges()
                if y == pd and any(k <= x <= tree.last(k) for k in kids))
    return left, right, w, item1a, item1b, item2
