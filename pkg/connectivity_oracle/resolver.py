"""
Turning a failure set into internal components and their connectivity graph.

The components of ``T \\ F`` whose root is an ancestor of a failed vertex are
*internal*; the others hang below a failed vertex. Two internal components are
adjacent in ``R`` when a back-edge joins them directly or a hanging subtree has
back-edges to both. For a failed ``f`` the path above it splits, at the failed
ancestors of ``f``, into segments, each owned by one internal component.

The edges of ``R`` come from :class:`~connectivity_oracle.case_rules.CaseAnalysis`.
With ``cross_check`` the rectangle checks rebuild ``R`` independently and a
different partition is logged and kept on the context.
"""
import logging
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from batch_solvers import DisjointSet
from graph_core import View

from .case_rules import CaseAnalysis
from .context import Component, FailureContext, Segment

logger = logging.getLogger(__name__)


class Resolver:
    """One resolution; owns the per-query scratch state."""

    analysis_class = CaseAnalysis

    def __init__(self, oracle, failed: Tuple[int, ...], original: Tuple[int, ...]):
        self.oracle = oracle
        self.tree = oracle.tree
        self.base = oracle.param_views[View.BASE]
        self.failed = failed
        self.ctx = FailureContext(failed=failed, original=original, configuration="", components={})

    # --- STRUCTURE ---

    def failed_ancestors(self, f: int) -> List[int]:
        return [a for a in self.failed if self.tree.is_proper_ancestor(a, f)]

    def failed_below(self, f: int) -> List[int]:
        return [g for g in self.failed if self.tree.is_proper_ancestor(f, g)]

    def child_toward(self, v: int, u: int) -> int:
        return self.base.child_toward(v, u)

    def blocked(self, f: int) -> List[int]:
        return sorted({self.child_toward(f, g) for g in self.failed_below(f)})

    def segments(self, f: int) -> List[Segment]:
        """Segments of the path above ``f``, from the root down."""
        out = []
        top, owner = 1, 1
        for a in self.failed_ancestors(f) + [f]:
            out.append(Segment(top, self.base.parent(a), owner))
            if a != f:
                top = self.child_toward(a, f)
                owner = top
        return out

    def build_components(self) -> None:
        roots = {1}
        for f in self.failed:
            roots.update(self.blocked(f))
        for r in sorted(roots):
            inside = [g for g in self.failed if self.tree.is_ancestor(r, g)]
            top = tuple(g for g in inside
                        if not any(h != g and self.tree.is_ancestor(h, g) for h in inside))
            comp = Component(root=r, excluded=top)
            comp.fake = self.oracle.real_count(comp.intervals(self.tree)) == 0
            self.ctx.components[r] = comp

    # --- CLASSIFICATION ---

    def related(self, a: int, b: int) -> bool:
        return self.tree.is_ancestor(a, b) or self.tree.is_ancestor(b, a)

    def classify(self) -> str:
        f = self.failed
        if len(f) == 1:
            return "single"
        if len(f) == 2:
            return "pair/related" if self.related(*f) else "pair/unrelated"
        pairs = [(a, b) for a, b in combinations(f, 2) if self.related(a, b)]
        if not pairs:
            return "triple/unrelated"
        if len(pairs) == 1:
            return "triple/pair_plus_one"
        u, v, w = f
        if len(pairs) == 3:
            return "triple/chain"
        if self.child_toward(u, v) == self.child_toward(u, w):
            return "triple/fork/same_child"
        return "triple/fork/different_children"

    # --- CONNECTIVITY GRAPH ---

    def partition(self, edges: Iterable[Tuple[int, int]]) -> Dict[int, int]:
        """Each internal root mapped to the smallest root of its group."""
        roots = sorted(self.ctx.components)
        index = {r: i for i, r in enumerate(roots)}
        dsu = DisjointSet(len(roots))
        for a, b in edges:
            ra, rb = dsu.representative(index[a]), dsu.representative(index[b])
            dsu.unite(index[a], index[b], min(ra, rb))
        return {r: roots[dsu.representative(index[r])] for r in roots}

    def compare_with_rectangles(self) -> None:
        checks = self.oracle.rectangle_checks
        expected = self.partition(checks.links(self))
        if expected != self.ctx.group:
            message = (f"rules grouped {self.ctx.group} via {sorted(self.ctx.edges)}, "
                       f"rectangle checks grouped {expected}")
            self.ctx.disagreements.append(message)
            logger.error("case rules disagree for F=%s [%s]: %s",
                         self.ctx.original, ", ".join(self.ctx.labels), message)

    def run(self) -> FailureContext:
        self.build_components()
        configuration = self.classify()
        self.ctx.configuration = configuration
        analysis = self.analysis_class(self.oracle, self.failed)
        analysis.run(configuration)
        self.ctx.labels = [configuration] + analysis.labels
        self.ctx.edges = analysis.edges()
        self.ctx.group = self.partition(self.ctx.edges)
        if self.oracle.config.cross_check:
            self.compare_with_rectangles()
        return self.ctx


def resolve_failures(oracle, failed: Sequence[int], original: Sequence[int]) -> FailureContext:
    """Resolve base-numbered ``failed`` (sorted) into a :class:`FailureContext`."""
    return oracle.resolver_class(oracle, tuple(failed), tuple(original)).run()
