"""
Number of connected components of ``G \\ F``.

Internal components are counted through their groups in ``R``; hanging subtrees
are counted when no back-edge leaves them towards a surviving vertex. The
children of a failed vertex are sorted by their survivor lists, so the isolated
ones form at most one run of equal keys per subset of failed ancestors.
"""
import logging
from bisect import bisect_left, bisect_right
from itertools import combinations
from typing import List

from case_tables import survivor_key
from graph_core import BOTTOM, VertexKind

from .context import FailureContext

logger = logging.getLogger(__name__)


def count_internal(ctx: FailureContext, keep_fake: bool = False) -> int:
    total = 0
    for members in ctx.groups().values():
        if keep_fake or any(not ctx.components[r].fake for r in members):
            total += 1
    return total


def count_isolated(oracle, ctx: FailureContext) -> int:
    """Hanging subtrees with a real vertex and no surviving back-edge."""
    tree = oracle.tree
    tables = oracle.tables
    n = tree.n
    total = 0
    for f in ctx.failed:
        ancestors = [a for a in ctx.failed if tree.is_proper_ancestor(a, f)]
        blocked = {oracle.base_view.child_toward(f, g) for g in ctx.failed if tree.is_proper_ancestor(f, g)}
        keys = tables.sorted_keys[f]
        for size in range(len(ancestors) + 1):
            for subset in combinations(ancestors, size):
                key = survivor_key(list(subset), n)
                lo, hi = bisect_left(keys, key), bisect_right(keys, key)
                total += hi - lo
                for b in blocked:
                    if survivor_key(list(oracle.params.lows(b)), n) == key:
                        total -= 1
    return total


def count_components(oracle, ctx: FailureContext) -> int:
    internal = count_internal(ctx)
    isolated = count_isolated(oracle, ctx)
    logger.debug("F=%s: %d internal groups, %d isolated hanging subtrees",
                 ctx.original, internal, isolated)
    return internal + isolated


def isolated_roots(oracle, ctx: FailureContext) -> List[int]:
    """Roots of the isolated hanging subtrees, by direct survivor inspection."""
    tree = oracle.tree
    failed = set(ctx.failed)
    out = []
    for f in ctx.failed:
        for c in tree.children[f]:
            if oracle.kind_of(c) != VertexKind.AUX_TREE_SPLIT:
                continue
            if any(tree.is_ancestor(c, g) for g in ctx.failed):
                continue
            if all(s == BOTTOM or s in failed for s in oracle.tables.survivors_of(c)):
                out.append(c)
    return out
