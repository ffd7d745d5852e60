"""
Named single-branch faults.

Each fault is a subclass of the oracle (or of the case analysis it runs) that
disables or inverts one decision; :func:`verify.differential.mutation_sweep`
checks that the differential corpus notices every one of them.
"""
from typing import Dict, NamedTuple, Optional

from connectivity_oracle import ConnectivityOracle
from connectivity_oracle.case_rules import DIRECT, TO_AB, CaseAnalysis
from connectivity_oracle.context import IsolatedHanging
from connectivity_oracle.counting import count_internal, count_isolated
from connectivity_oracle.resolver import Resolver
from graph_core import BOTTOM, VertexKind
from utils.errors import ConfigError


class Fault(NamedTuple):
    description: str
    oracle_class: type


def _with_analysis(analysis: type) -> type:
    resolver = type(f"{analysis.__name__}Resolver", (Resolver,), {"analysis_class": analysis})
    return type(f"{analysis.__name__}Oracle", (ConnectivityOracle,), {"resolver_class": resolver})


class PairRuleNegated(CaseAnalysis):
    def pair_rule(self, u, v, c):
        return None if super().pair_rule(u, v, c) else DIRECT


class DropDirectEdges(CaseAnalysis):
    def link(self, a, b, kind):
        if kind != DIRECT:
            super().link(a, b, kind)


class DropMediation(CaseAnalysis):
    def link(self, a, b, kind):
        if kind == DIRECT:
            super().link(a, b, kind)


class MpInBNegated(CaseAnalysis):
    def mp_c_in_b(self, loc_d):
        self.attach_c(loc_d, TO_AB)


class CountingNegated(CaseAnalysis):
    def counting_under_w(self):
        return not super().counting_under_w()

    def counting_in_c(self, items):
        return not super().counting_in_c(items)


class LowestLow2Ignored(CaseAnalysis):
    def low_triple_hits(self, entry, target):
        return self.in_target(entry.first, target) or self.in_target(entry.second, target)


class IgnoreSurvivors(ConnectivityOracle):
    def locate(self, ctx, x):
        f = ctx.nearest_failed_ancestor(self.tree, x)
        if f != BOTTOM:
            c = self.base_view.child_toward(f, x)
            if c not in ctx.group:
                return IsolatedHanging(c)
        return super().locate(ctx, x)


class KeepFakeComponents(ConnectivityOracle):
    def count_resolved(self, ctx):
        return count_internal(ctx, keep_fake=True) + count_isolated(self, ctx)


class CountBackSplitLeaves(ConnectivityOracle):
    def count_resolved(self, ctx):
        total = super().count_resolved(ctx)
        for f in ctx.failed:
            for c in self.tree.children[f]:
                low1 = int(self.params.low1[c])
                if self.kind_of(c) == VertexKind.AUX_BACK_SPLIT and (low1 == BOTTOM or low1 in ctx.failed):
                    total += 1
        return total


class SkipIsolatedCount(ConnectivityOracle):
    def count_resolved(self, ctx):
        return count_internal(ctx)


FAULTS: Dict[str, Fault] = {
    "pair_rule_negated": Fault("invert the verdict of the related-pair rule",
                               _with_analysis(PairRuleNegated)),
    "drop_direct_edges": Fault("ignore back-edges joining two internal components",
                               _with_analysis(DropDirectEdges)),
    "drop_mediation": Fault("ignore hanging subtrees joining two internal components",
                            _with_analysis(DropMediation)),
    "mp_c_in_B_negated": Fault("deny the back-edge implied by a maximum point inside B",
                               _with_analysis(MpInBNegated)),
    "counting_negated": Fault("invert both sum-versus-count comparisons",
                              _with_analysis(CountingNegated)),
    "drop_lowest_low2": Fault("ignore the lowest low2 of the three-low tables",
                              _with_analysis(LowestLow2Ignored)),
    "ignore_survivors": Fault("treat every hanging subtree as isolated when locating", IgnoreSurvivors),
    "keep_fake_components": Fault("count internal components without real vertices", KeepFakeComponents),
    "count_back_split_leaves": Fault("count isolated back-edge splitting leaves as components",
                                     CountBackSplitLeaves),
    "skip_isolated_count": Fault("never count isolated hanging subtrees", SkipIsolatedCount),
}


def oracle_class(fault: Optional[str]) -> type:
    """The oracle class carrying ``fault``, or the plain oracle for None."""
    if fault is None:
        return ConnectivityOracle
    if fault not in FAULTS:
        raise ConfigError(f"unknown mutation {fault!r}; expected one of {sorted(FAULTS)}")
    return FAULTS[fault].oracle_class


def faulty(graph, fault: str, config=None) -> ConnectivityOracle:
    """Preprocess ``graph`` into an oracle carrying ``fault``."""
    return oracle_class(fault).preprocess(graph, config=config)

