"""
Families of vertices whose segment / skipping / subtree points are precomputed.

Each family is defined once (in the view named in its docstring) and its queries
are answered in batch on every view that needs them; entries are keyed and
valued by base vertices.
"""
import logging
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

from batch_solvers import (
    Direction,
    SegmentQuery,
    SubtreeExtremeQuery,
    batch_segment_points,
    batch_skip_points,
    batch_subtree_extremes,
)
from dfs_params import ParamView
from graph_core import BOTTOM, View

from .child_scans import unique_lowest_child

logger = logging.getLogger(__name__)

Points = Tuple[int, int]


class SegmentEntry(NamedTuple):
    """``anchor`` is the upper end of the segment (``c_d``) or ``d̂_c``."""

    anchor: int
    high_dec: Points
    low_inc: Points


class LowChildrenEntry(NamedTuple):
    first: int
    second: int
    first_points: Points
    second_points: Points


def _to_base(pv: ParamView, points: Points) -> Points:
    return pv.untranslate(points[0]), pv.untranslate(points[1])


def skip_tables(high: ParamView) -> Tuple[np.ndarray, np.ndarray]:
    """
    On ``T_highDec``: the leftmost point of ``v`` skipping ``l1(Lp(v))`` and the
    rightmost point skipping ``l1(Rp(v))``, as base-indexed arrays of base vertices.
    """
    n = high.n
    l1 = high.params.l1
    lp, rp = high.lp, high.rp
    z_left = [int(l1[lp[v]]) if lp[v] != BOTTOM else BOTTOM for v in range(n + 1)]
    z_right = [int(l1[rp[v]]) if rp[v] != BOTTOM else BOTTOM for v in range(n + 1)]
    left = batch_skip_points(high.tree, z_left, Direction.LEFT)
    right = batch_skip_points(high.tree, z_right, Direction.RIGHT)
    out_left = np.zeros(n + 1, dtype=np.int64)
    out_right = np.zeros(n + 1, dtype=np.int64)
    for v in range(1, n + 1):
        b = high.untranslate(v)
        out_left[b] = high.untranslate(left[v])
        out_right[b] = high.untranslate(right[v])
    return out_left, out_right


def first_two_low_children(high: ParamView, low: ParamView) -> Dict[int, LowChildrenEntry]:
    """
    For every ``c`` whose ``Mp(c)`` has two ``T_lowInc`` children ``d, d'`` with
    ``low1 < p(c)`` first in line: both children plus ``L/R(c, d)`` and
    ``L/R(c, d')`` on ``T_highDec``.
    """
    found: List[Tuple[int, int, int]] = []
    for c in range(1, low.n + 1):
        w = int(low.mp[c])
        if w == BOTTOM:
            continue
        kids = low.tree.children[w]
        pc = low.parent(c)
        if len(kids) < 2 or low.params.low1[kids[1]] == BOTTOM or low.params.low1[kids[1]] >= pc:
            continue
        found.append((low.untranslate(c), low.untranslate(kids[0]), low.untranslate(kids[1])))

    queries = []
    for c, d1, d2 in found:
        v = high.translate(c)
        for d in (d1, d2):
            queries.append(SubtreeExtremeQuery(v, high.translate(d), Direction.LEFT))
            queries.append(SubtreeExtremeQuery(v, high.translate(d), Direction.RIGHT))
    answers = [high.untranslate(a) for a in batch_subtree_extremes(high.tree, high.params.l1, queries)]
    out: Dict[int, LowChildrenEntry] = {}
    for i, (c, d1, d2) in enumerate(found):
        a = answers[4 * i:4 * i + 4]
        out[c] = LowChildrenEntry(d1, d2, (a[0], a[1]), (a[2], a[3]))
    return out


def _answer_everywhere(views: Dict[View, ParamView], family: Dict[int, Tuple[int, int, int]],
                       debug: bool) -> Dict[int, SegmentEntry]:
    """
    Answer base-numbered ``(z, u, v)`` queries keyed by a base vertex on
    ``T_highDec`` and ``T_lowInc``; the key's anchor is the query's ``v``.
    """
    keys = list(family)
    results = {}
    for name in (View.HIGH_DEC, View.LOW_INC):
        pv = views[name]
        queries = [SegmentQuery(*(pv.translate(x) for x in family[k])) for k in keys]
        answers = batch_segment_points(pv.tree, queries, debug=debug)
        results[name] = [_to_base(pv, a) for a in answers]
    return {
        k: SegmentEntry(family[k][2], results[View.HIGH_DEC][i], results[View.LOW_INC][i])
        for i, k in enumerate(keys)
    }


def lemma53_family(high: ParamView, use_right: bool = False) -> Dict[int, Tuple[int, int, int]]:
    """
    On the view of ``high`` (``T_highDec`` unless stated otherwise): every ``d``
    with ``v_d = l1(Lp(d))`` (``l1(Rp(d))`` with ``use_right``) a proper ancestor
    of ``p(p(d))`` and ``Mp(c_d) ∈ T(d)``, where ``c_d`` is the child of ``v_d``
    toward ``d``. Maps ``d`` to ``(d, p(p(d)), c_d)``.
    """
    tree = high.tree
    extreme = high.rp if use_right else high.lp
    out: Dict[int, Tuple[int, int, int]] = {}
    for d in range(1, tree.n + 1):
        x = int(extreme[d])
        if x == BOTTOM:
            continue
        vd = int(high.params.l1[x])
        pd = high.parent(d)
        ppd = high.parent(pd)
        if ppd == BOTTOM or not tree.is_proper_ancestor(vd, ppd):
            continue
        cd = high.child_toward(vd, d)
        if not tree.is_ancestor(d, int(high.mp[cd])):
            continue
        u = high.untranslate
        out[u(d)] = (u(d), u(ppd), u(cd))
    return out


def lemma54_family(low: ParamView) -> Dict[int, Tuple[int, int, int]]:
    """
    On ``T_lowInc``: every ``d`` whose ``Mp(d)`` has a unique lowest child ``c1``
    and a second child ``c2`` with ``v_d = low1(c2)`` a proper ancestor of
    ``p(p(d))``, such that ``Mp(c_d) ∈ T(c1)``. Maps ``d`` to ``(d, p(p(d)), c_d)``.
    """
    tree = low.tree
    out: Dict[int, Tuple[int, int, int]] = {}
    for d in range(1, tree.n + 1):
        w = int(low.mp[d])
        if w == BOTTOM:
            continue
        c1 = unique_lowest_child(low, w)
        kids = tree.children[w]
        if c1 == BOTTOM or len(kids) < 2:
            continue
        vd = int(low.params.low1[kids[1]])
        ppd = low.parent(low.parent(d))
        if vd == BOTTOM or ppd == BOTTOM or not tree.is_proper_ancestor(vd, ppd):
            continue
        cd = low.child_toward(vd, d)
        if not tree.is_ancestor(c1, int(low.mp[cd])):
            continue
        u = low.untranslate
        out[u(d)] = (u(d), u(ppd), u(cd))
    return out


def segment_tables(views: Dict[View, ParamView], lemma55: Dict[int, int], debug: bool = False):
    """
    Segment points of the four families.

    Returns
    -------
    dict
        ``lemma53_lp``, ``lemma53_rp``, ``lemma53_low_rp`` (the ``Rp`` family
        defined on ``T_lowInc``), ``lemma54``: ``d -> SegmentEntry`` with anchor
        ``c_d``; ``lemma55``: ``c -> SegmentEntry`` with anchor ``d̂_c`` (points
        of ``(d̂_c, p(Mp(c)), c)``).
    """
    high, low = views[View.HIGH_DEC], views[View.LOW_INC]
    out = {
        "lemma53_lp": _answer_everywhere(views, lemma53_family(high), debug),
        "lemma53_rp": _answer_everywhere(views, lemma53_family(high, use_right=True), debug),
        "lemma53_low_rp": _answer_everywhere(views, lemma53_family(low, use_right=True), debug),
        "lemma54": _answer_everywhere(views, lemma54_family(low), debug),
    }
    base = views[View.BASE]
    family55 = {c: (d_hat, base.parent(int(base.mp[c])), c) for c, d_hat in lemma55.items()}
    entries = _answer_everywhere(views, family55, debug)
    out["lemma55"] = {c: e._replace(anchor=lemma55[c]) for c, e in entries.items()}
    logger.debug("segment families: %s", {k: len(v) for k, v in out.items()})
    return out
