"""
Structural invariant checker for a preprocessed oracle.
Useful for debugging a wrong answer before reaching for the differential suite.
"""
import logging
from typing import Dict, List, Tuple

import numpy as np

from graph_core import BOTTOM, DfsTree, VertexKind, View

logger = logging.getLogger(__name__)

Violation = Tuple


def _tree_violations(name: str, tree: DfsTree) -> List[Violation]:
    out = []
    for v in range(1, tree.n + 1):
        expected = v + 1
        for c in tree.children[v]:
            if c != expected:
                out.append(("TREE", name, v, c, "==", expected))
                break
            expected = c + int(tree.nd[c])
        if expected != v + int(tree.nd[v]):
            out.append(("TREE", name, v, int(tree.nd[v]), "==", expected - v))
    for x, y in tree.back_edges():
        if not tree.is_proper_ancestor(y, x):
            out.append(("BACK", name, (x, y), y, "anc", x))
    return out


def _transform_violations(oracle) -> List[Violation]:
    tree, kinds = oracle.tree, oracle.kinds
    out = []
    if kinds[1] == VertexKind.REAL:
        out.append(("SPLIT", "root", 1, int(kinds[1]), "!=", int(VertexKind.REAL)))
    for v in range(2, tree.n + 1):
        p = int(tree.parent[v])
        if kinds[v] == VertexKind.REAL and kinds[p] == VertexKind.REAL:
            out.append(("SPLIT", "real_parent", v, p, "!=", "real"))
    for x, y in tree.back_edges():
        if kinds[x] != VertexKind.AUX_BACK_SPLIT or tree.nd[x] != 1:
            out.append(("SPLIT", "back_leaf", (x, y), int(kinds[x]), "==", int(VertexKind.AUX_BACK_SPLIT)))
    return out


def _view_violations(oracle) -> List[Violation]:
    base = oracle.tree
    out = []
    for view, pv in oracle.param_views.items():
        to_view = pv.to_view
        for v in range(2, base.n + 1):
            if to_view[base.parent[v]] != pv.tree.parent[to_view[v]]:
                out.append(("VIEW", view.value, v, int(pv.tree.parent[to_view[v]]), "==",
                            int(to_view[base.parent[v]])))
        p = pv.params
        for field_name in ("bp_count", "sum_y", "num_low", "num_high"):
            moved = getattr(p, field_name)[to_view[1:]]
            if not np.array_equal(moved, getattr(oracle.params, field_name)[1:]):
                out.append(("VIEW", view.value, field_name, "translated", "==", "base"))
    return out


def _param_violations(oracle) -> List[Violation]:
    p = oracle.params
    out = []
    for v in range(1, p.n + 1):
        low1, low2, low3 = p.lows(v)
        high1, high2 = int(p.high1[v]), int(p.high2[v])
        bp = int(p.bp_count[v])
        if low2 != BOTTOM and not low1 < low2:
            out.append(("PARAM", "low_order", v, low1, "<", low2))
        if low3 != BOTTOM and not low2 < low3:
            out.append(("PARAM", "low_order", v, low2, "<", low3))
        if high2 != BOTTOM and not high1 > high2:
            out.append(("PARAM", "high_order", v, high1, ">", high2))
        if (bp == 0) != (low1 == BOTTOM) or (bp == 0) != (high1 == BOTTOM):
            out.append(("PARAM", "empty", v, bp, "<->", (low1, high1)))
        if bp:
            if low1 > high1:
                out.append(("PARAM", "low_high", v, low1, "<=", high1))
            if p.num_low[v] < 1 or p.num_high[v] < 1:
                out.append(("PARAM", "num", v, (int(p.num_low[v]), int(p.num_high[v])), ">=", 1))
            if p.sum_y[v] < bp * low1:
                out.append(("PARAM", "sum_y", v, int(p.sum_y[v]), ">=", bp * low1))
    return out


def _extreme_violations(oracle) -> List[Violation]:
    tree = oracle.tree
    ext = oracle.extremes
    mp, next_mp = ext.mp, ext.next_mp
    lp, rp = ext.lp[View.BASE], ext.rp[View.BASE]
    out = []
    for v in range(1, tree.n + 1):
        if mp[v] == BOTTOM:
            continue
        if lp[v] > rp[v]:
            out.append(("MP", "lp_rp", v, int(lp[v]), "<=", int(rp[v])))
        if not tree.is_ancestor(v, int(mp[v])):
            out.append(("MP", "inside", v, int(mp[v]), "in", v))
        if next_mp[v] != BOTTOM and not tree.is_proper_ancestor(int(next_mp[v]), v):
            out.append(("MP", "chain", v, int(next_mp[v]), "anc", v))
        c = int(tree.parent[v])
        # Mp of an ancestor landing in T(v) lies below Mp(v)
        if c != BOTTOM and mp[c] != BOTTOM and tree.is_ancestor(v, int(mp[c])):
            if not tree.is_ancestor(int(mp[v]), int(mp[c])):
                out.append(("MP", "nested", (c, v), int(mp[v]), "anc", int(mp[c])))
    for w in range(1, tree.n + 1):
        chained = [c for c in tree.children[w] if next_mp[c] != BOTTOM]
        if len(chained) > 1:
            out.append(("MP", "siblings", w, chained, "<=", 1))
    return out


def _lowest_l1_violations(oracle) -> List[Violation]:
    low = oracle.param_views[View.LOW_INC]
    tree = low.tree
    l1 = low.params.l1
    inf = tree.n + 1
    best = np.where(l1 == BOTTOM, inf, l1).astype(np.int64)
    for v in range(tree.n, 1, -1):
        p = int(tree.parent[v])
        best[p] = min(best[p], best[v])
    out = []
    for v in range(1, tree.n + 1):
        if low.params.bp_count[v] and l1[low.lp[v]] != best[v]:
            out.append(("LOWEST", "l1_of_lp", low.untranslate(v), int(l1[low.lp[v]]), "==", int(best[v])))
    return out


def find_violations(oracle, max_lines: int = 50) -> List[Violation]:
    """
    Check the structural invariants of every preprocessed structure.

    Returns
    -------
    List[Tuple]
        One tuple per violation: (kind, name, index, value, relation, expected).
    """
    violations: List[Violation] = []
    for view, pv in oracle.param_views.items():
        violations += _tree_violations(view.value, pv.tree)
    violations += _transform_violations(oracle)
    violations += _view_violations(oracle)
    violations += _param_violations(oracle)
    violations += _extreme_violations(oracle)
    violations += _lowest_l1_violations(oracle)

    if not violations:
        logger.debug("no structural violations")
    else:
        logger.error("%d structural violations (showing up to %d)", len(violations), max_lines)
        for kind, name, idx, value, rel, expected in violations[:max_lines]:
            logger.error(" %-6s %-12s %-12s : %s %s %s", kind, name, idx, value, rel, expected)
    return violations


def summarize(violations: List[Violation]) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for kind, *_ in violations:
        counts[kind] = counts.get(kind, 0) + 1
    return counts
