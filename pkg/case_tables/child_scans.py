"""
Scans over the children lists of the maximum points.

In ``T_highDec`` the children of a vertex with ``high1 >= d`` form a prefix of
its children list, in ``T_lowInc`` so do the children with ``low1 < p(c)``.
Processing ``d`` (or ``c``) in the order in which these prefixes only grow lets
every family below visit each child once.

Values are computed in view numbering and returned in base vertices.
"""
import logging
from bisect import bisect_right
from typing import Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from batch_solvers import Direction, SubtreeExtremeQuery, batch_subtree_extremes
from dfs_params import ParamView
from graph_core import BOTTOM

logger = logging.getLogger(__name__)


class LowTriple(NamedTuple):
    first: int
    second: int
    third: int
    first_child: int
    second_child: int


class HighTriple(NamedTuple):
    first: int
    second: int
    third: int


class A2Entry(NamedTuple):
    left: int
    right: int
    w: int
    params: HighTriple


class Items74(NamedTuple):
    item1a: int
    item1b: int
    item2: int
    item3: int


class Items76(NamedTuple):
    second_child: int
    left: int
    right: int
    w: int
    item1a: int
    item1b: int
    item2: int


def unique_lowest_child(low: ParamView, w: int) -> int:
    """The child of ``w`` with a strictly lowest ``low1`` (lowInc numbering), or BOTTOM."""
    kids = low.tree.children[w]
    low1 = low.params.low1
    if not kids or low1[kids[0]] == BOTTOM:
        return BOTTOM
    if len(kids) > 1 and low1[kids[1]] == low1[kids[0]]:
        return BOTTOM
    return kids[0]


class _LowState:
    __slots__ = ("first", "second", "third", "first_child", "second_child")

    def __init__(self):
        self.first = self.second = self.third = BOTTOM
        self.first_child = self.second_child = BOTTOM

    def add(self, child: int, l1: int, l2: int) -> None:
        if self.first == BOTTOM or l1 < self.first:
            if self.first != BOTTOM:
                self.second, self.second_child = self.first, self.first_child
            self.first, self.first_child = l1, child
        elif l1 != self.first and (self.second == BOTTOM or l1 < self.second):
            self.second, self.second_child = l1, child
        if l2 != BOTTOM and (self.third == BOTTOM or l2 < self.third):
            self.third = l2

    def entry(self, pv: ParamView) -> LowTriple:
        u = pv.untranslate
        return LowTriple(u(self.first), u(self.second), u(self.third),
                         u(self.first_child), u(self.second_child))


def three_low_params(high: ParamView, low: ParamView):
    """
    For every ``d`` with ``Mp(d) = w``: over the children of ``w`` whose ``high1``
    lies in ``T[p(w), d]``, the lowest ``low1``, the second-lowest distinct ``low1``
    and the lowest ``low2``, with the (first, in ``T_highDec`` order) children
    attaining the first two. The primed variant leaves out the unique child of
    ``w`` with the lowest ``low1`` and exists only where that child does.
    """
    tree = high.tree
    children = tree.children
    high1 = high.params.high1.tolist()
    low1 = high.params.low1.tolist()
    low2 = high.params.low2.tolist()
    mp = high.mp.tolist()

    plain: Dict[int, LowTriple] = {}
    primed: Dict[int, LowTriple] = {}
    pointer: Dict[int, int] = {}
    states: Dict[int, _LowState] = {}
    primed_states: Dict[int, _LowState] = {}
    excluded: Dict[int, int] = {}
    for d in range(tree.n, 0, -1):
        w = mp[d]
        if w == BOTTOM:
            continue
        if w not in states:
            states[w] = _LowState()
            pointer[w] = 0
            c1 = unique_lowest_child(low, low.translate(high.untranslate(w)))
            excluded[w] = high.translate(low.untranslate(c1))
            if excluded[w] != BOTTOM:
                primed_states[w] = _LowState()
        kids = children[w]
        i = pointer[w]
        while i < len(kids) and high1[kids[i]] != BOTTOM and high1[kids[i]] >= d:
            k = kids[i]
            states[w].add(k, low1[k], low2[k])
            if w in primed_states and k != excluded[w]:
                primed_states[w].add(k, low1[k], low2[k])
            i += 1
        pointer[w] = i
        base_d = high.untranslate(d)
        plain[base_d] = states[w].entry(high)
        if w in primed_states:
            primed[base_d] = primed_states[w].entry(high)
    return plain, primed


class _HighState:
    __slots__ = ("first", "second", "third")

    def __init__(self):
        self.first = self.second = self.third = BOTTOM

    def add(self, h1: int, h2: int) -> None:
        if h1 > self.first:
            if self.first != BOTTOM:
                self.second = self.first
            self.first = h1
        elif h1 != self.first and h1 > self.second:
            self.second = h1
        self.third = max(self.third, h2)

    def entry(self, pv: ParamView) -> HighTriple:
        u = pv.untranslate
        return HighTriple(u(self.first), u(self.second), u(self.third))


def _high_triple(pv: ParamView, kids: Sequence[int]) -> HighTriple:
    state = _HighState()
    for k in kids:
        state.add(int(pv.params.high1[k]), int(pv.params.high2[k]))
    return state.entry(pv)


def _low_prefix(low: ParamView, w: int, threshold: int, start: int = 0) -> int:
    """End of the prefix of ``w``'s lowInc children with ``low1 < threshold``."""
    kids = low.tree.children[w]
    low1 = low.params.low1
    i = start
    while i < len(kids) and low1[kids[i]] != BOTTOM and low1[kids[i]] < threshold:
        i += 1
    return i


def extreme_high_params_mw(low: ParamView) -> Dict[int, HighTriple]:
    """
    For every ``c`` with ``Mp(c) = w``: over the children of ``w`` with
    ``low1 < p(c)``, the greatest ``high1``, the second-greatest distinct ``high1``
    and the greatest ``high2``.
    """
    tree = low.tree
    parent = tree.parent.tolist()
    mp = low.mp.tolist()
    high1 = low.params.high1.tolist()
    high2 = low.params.high2.tolist()
    out: Dict[int, HighTriple] = {}
    pointer: Dict[int, int] = {}
    states: Dict[int, _HighState] = {}
    for c in range(1, tree.n + 1):
        w = mp[c]
        if w == BOTTOM:
            continue
        state = states.setdefault(w, _HighState())
        start = pointer.get(w, 0)
        end = _low_prefix(low, w, parent[c], start)
        for k in tree.children[w][start:end]:
            state.add(high1[k], high2[k])
        pointer[w] = end
        out[low.untranslate(c)] = state.entry(low)
    return out


def lemma55_family(low: ParamView) -> Dict[int, int]:
    """
    ``c -> d̂_c`` (base vertices) for every ``c`` whose ``Mp(c) = w`` is a proper
    descendant and ``w`` has exactly one child ``d̂`` with ``high1(d̂) >= c`` and
    ``low1(d̂) < p(c)``.
    """
    tree = low.tree
    parent = tree.parent.tolist()
    mp = low.mp.tolist()
    high1 = low.params.high1
    low1 = low.params.low1
    out: Dict[int, int] = {}
    for c in range(1, tree.n + 1):
        w = mp[c]
        if w == BOTTOM or w == c:
            continue
        found: List[int] = []
        for k in tree.children[w]:
            if low1[k] == BOTTOM or low1[k] >= parent[c]:
                break
            if high1[k] >= c:
                found.append(k)
                if len(found) > 1:
                    break
        if len(found) == 1:
            out[low.untranslate(c)] = low.untranslate(found[0])
    return out


def extreme_high_params_a2(low: ParamView, family: Dict[int, int]) -> Dict[int, A2Entry]:
    """
    For every ``c`` with a ``d̂_c``: ``w_c = nca(L(c, d̂_c), R(c, d̂_c))`` on
    ``T_lowInc`` and the three greatest high points over the children of ``w_c``
    with ``low1 < p(c)``.
    """
    keys = list(family)
    queries = []
    for c in keys:
        v, d = low.translate(c), low.translate(family[c])
        queries.append(SubtreeExtremeQuery(v, d, Direction.LEFT))
        queries.append(SubtreeExtremeQuery(v, d, Direction.RIGHT))
    answers = batch_subtree_extremes(low.tree, low.params.l1, queries)
    out: Dict[int, A2Entry] = {}
    for i, c in enumerate(keys):
        left, right = answers[2 * i], answers[2 * i + 1]
        w = low.nca.nca(left, right)
        if w == BOTTOM:
            continue
        v = low.translate(c)
        end = _low_prefix(low, w, low.parent(v))
        out[c] = A2Entry(low.untranslate(left), low.untranslate(right), low.untranslate(w),
                         _high_triple(low, low.tree.children[w][:end]))
    return out


class _HighPrefix:
    """Prefix sums of ``bp_count`` and ``sum_y`` over the ``T_highDec`` children of ``w``."""

    def __init__(self, high: ParamView, w: int):
        kids = high.tree.children[w]
        p = high.params
        self.kids = kids
        self.neg_high = [-int(p.high1[k]) for k in kids if p.high1[k] != BOTTOM]
        self.defined = len(self.neg_high)
        self.bp = np.concatenate(([0], np.cumsum([int(p.bp_count[k]) for k in kids])))
        self.sum_y = np.concatenate(([0], np.cumsum([int(p.sum_y[k]) for k in kids])))

    def split(self, d: int) -> int:
        """Number of children with ``high1 >= d``."""
        return bisect_right(self.neg_high, -d)


class _LowestRun:
    """Lowest ``low1`` seen so far and the ``num_low`` total of the children attaining it."""

    __slots__ = ("lowest", "count")

    def __init__(self):
        self.lowest = BOTTOM
        self.count = 0

    def add(self, l1: int, num_low: int) -> None:
        if l1 == BOTTOM:
            return
        if self.lowest == BOTTOM or l1 < self.lowest:
            self.lowest, self.count = l1, num_low
        elif l1 == self.lowest:
            self.count += num_low


def items74(high: ParamView, low: ParamView) -> Dict[int, Items74]:
    """
    Counting items for every ``d`` with ``Mp(d) = w``, over the children of ``w``:

    * item1a / item1b: sums of ``bp_count`` / ``sum_y`` over children with ``high1 <= p(d)``;
    * item2: back-edges ``(x, p(d))`` with ``x`` below one of those children;
    * item3: over the children with ``high1 > p(d)`` other than ``w``'s unique
      lowest-``low1`` child, the ``num_low`` total of the ones attaining the lowest
      ``low1``, when that ``low1`` is below ``p(d)`` (0 otherwise).
    """
    tree = high.tree
    parent = tree.parent.tolist()
    mp = high.mp.tolist()
    high1 = high.params.high1.tolist()
    low1 = high.params.low1.tolist()
    num_low = high.params.num_low.tolist()
    prefixes: Dict[int, _HighPrefix] = {}
    excluded: Dict[int, int] = {}
    runs: Dict[int, _LowestRun] = {}
    pointer: Dict[int, int] = {}
    item3: Dict[int, int] = {}
    # decreasing d: the children with high1 >= d only grow
    for d in range(tree.n, 0, -1):
        w = mp[d]
        if w == BOTTOM:
            continue
        if w not in runs:
            runs[w] = _LowestRun()
            pointer[w] = 0
            c1 = unique_lowest_child(low, low.translate(high.untranslate(w)))
            excluded[w] = high.translate(low.untranslate(c1))
        kids = tree.children[w]
        i = pointer[w]
        while i < len(kids) and high1[kids[i]] != BOTTOM and high1[kids[i]] >= d:
            if kids[i] != excluded[w]:
                runs[w].add(low1[kids[i]], num_low[kids[i]])
            i += 1
        pointer[w] = i
        run = runs[w]
        item3[d] = run.count if run.lowest != BOTTOM and run.lowest < parent[d] else 0

    out: Dict[int, Items74] = {}
    for d in range(1, tree.n + 1):
        w = mp[d]
        if w == BOTTOM:
            continue
        if w not in prefixes:
            prefixes[w] = _HighPrefix(high, w)
        pre = prefixes[w]
        k = pre.split(d)
        item1a = int(pre.bp[pre.defined] - pre.bp[k])
        item1b = int(pre.sum_y[pre.defined] - pre.sum_y[k])
        item2 = 0
        if k < pre.defined:
            item2 = tree.count_incoming(parent[d], pre.kids[k], tree.last(pre.kids[pre.defined - 1]))
        out[high.untranslate(d)] = Items74(item1a, item1b, item2, item3[d])
    return out


def items76(high: ParamView, low: ParamView) -> Dict[int, Items76]:
    """
    For every ``d`` whose ``Mp(d)`` has a second ``T_lowInc`` child ``c''`` with
    ``L(d, c'')`` defined: ``L/R(d, c'')`` on ``T_highDec``, ``w`` = their nca, and
    over the children of ``w`` with ``high1 <= p(d)`` the sums of ``bp_count`` and
    ``sum_y`` plus the number of back-edges from their subtrees to ``p(d)``.
    """
    candidates = []
    for d in range(1, low.n + 1):
        w0 = int(low.mp[d])
        if w0 == BOTTOM or len(low.tree.children[w0]) < 2:
            continue
        second = low.tree.children[w0][1]
        candidates.append((low.untranslate(d), low.untranslate(second)))
    queries = []
    for d, second in candidates:
        v, c2 = high.translate(d), high.translate(second)
        queries.append(SubtreeExtremeQuery(v, c2, Direction.LEFT))
        queries.append(SubtreeExtremeQuery(v, c2, Direction.RIGHT))
    answers = batch_subtree_extremes(high.tree, high.params.l1, queries)

    tree = high.tree
    prefixes: Dict[int, _HighPrefix] = {}
    out: Dict[int, Items76] = {}
    for i, (d, second) in enumerate(candidates):
        left, right = answers[2 * i], answers[2 * i + 1]
        if left == BOTTOM:
            continue
        w = high.nca.nca(left, right)
        if w not in prefixes:
            prefixes[w] = _HighPrefix(high, w)
        pre = prefixes[w]
        dv = high.translate(d)
        pd = high.parent(dv)
        k = pre.split(dv)
        item1a = int(pre.bp[pre.defined] - pre.bp[k])
        item1b = int(pre.sum_y[pre.defined] - pre.sum_y[k])
        item2 = 0
        if k < pre.defined:
            item2 = tree.count_incoming(pd, pre.kids[k], tree.last(pre.kids[pre.defined - 1]))
        u = high.untranslate
        out[d] = Items76(second, u(left), u(right), u(w), item1a, item1b, item2)
    return out


def sorted_children(base: ParamView, counted: Optional[np.ndarray] = None):
    """
    Children of every vertex sorted by their ``(low1, low2, low3)`` lists, BOTTOM
    ranking after every vertex. Children with ``counted[c] == False`` are left out.

    Returns
    -------
    (list of list of int, list of list of int)
        Sorted children and their integer sort keys, per vertex (base numbering).
    """
    n = base.n
    p = base.params
    keys = [survivor_key(lows, n) for lows in zip(p.low1.tolist(), p.low2.tolist(), p.low3.tolist())]
    children: List[List[int]] = []
    sort_keys: List[List[int]] = []
    for v in range(n + 1):
        kids = [c for c in base.tree.children[v] if counted is None or counted[c]]
        kids.sort(key=keys.__getitem__)
        children.append(kids)
        sort_keys.append([keys[c] for c in kids])
    return children, sort_keys


def survivor_key(entries: Sequence[int], n: int) -> int:
    """Sort key of a survivor list as used by :func:`sorted_children`."""
    radix = n + 2
    padded = [e if e != BOTTOM else n + 1 for e in entries] + [n + 1] * (3 - len(entries))
    return (padded[0] * radix + padded[1]) * radix + padded[2]
