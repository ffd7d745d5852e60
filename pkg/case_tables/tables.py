"""
All per-vertex tables consumed by the failure-case analysis.

Every dict is keyed by base vertices and stores base vertices; array tables are
indexed by base vertices. Points computed "on" a view are extreme in that view's
numbering but returned as base vertices.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from dfs_params import ExtremePoints, ParamView, ScalarParams, build_param_views
from graph_core import DfsForestViews, View

from .chain_oracle import MpChainOracle
from .child_scans import (
    A2Entry,
    HighTriple,
    Items74,
    Items76,
    LowTriple,
    extreme_high_params_a2,
    extreme_high_params_mw,
    items74,
    items76,
    lemma55_family,
    sorted_children,
    three_low_params,
)
from .lemma_families import LowChildrenEntry, SegmentEntry, first_two_low_children, segment_tables, skip_tables

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class CaseTables:
    skip_l1_of_lp: np.ndarray
    skip_r1_of_rp: np.ndarray
    first_two_low_children: Dict[int, LowChildrenEntry]
    lemma53_lp: Dict[int, SegmentEntry]
    lemma53_rp: Dict[int, SegmentEntry]
    lemma53_low_rp: Dict[int, SegmentEntry]
    lemma54: Dict[int, SegmentEntry]
    lemma55: Dict[int, SegmentEntry]
    chain_oracles: Dict[View, MpChainOracle]
    three_low: Dict[int, LowTriple]
    three_low_primed: Dict[int, LowTriple]
    extreme_high_mw: Dict[int, HighTriple]
    extreme_high_a2: Dict[int, A2Entry]
    items74: Dict[int, Items74]
    items76: Dict[int, Items76]
    survivors: np.ndarray
    sorted_children: List[List[int]] = field(repr=False)
    sorted_keys: List[List[int]] = field(repr=False)
    views: Dict[View, ParamView] = field(repr=False, default_factory=dict)

    def lemma56_query(self, view: View, c: int, d: int) -> Tuple[int, int]:
        """
        ``L/R(d, p(p(d)), c)`` on ``view`` for base vertices with ``Mp(c) = Mp(d)``
        and ``c < p(d)``.

        Raises
        ------
        PreconditionError
        """
        pv = self.views[View(view)]
        left, right = self.chain_oracles[View(view)].query(pv.translate(c), pv.translate(d))
        return pv.untranslate(left), pv.untranslate(right)

    def survivors_of(self, c: int) -> Tuple[int, int, int]:
        row = self.survivors[c]
        return int(row[0]), int(row[1]), int(row[2])

    def words(self) -> int:
        """Stored words, counting every scalar of every entry."""
        total = self.skip_l1_of_lp.size + self.skip_r1_of_rp.size + self.survivors.size
        for family in (self.first_two_low_children, self.lemma53_lp, self.lemma53_rp,
                       self.lemma53_low_rp, self.lemma54,
                       self.lemma55, self.three_low, self.three_low_primed, self.extreme_high_mw,
                       self.extreme_high_a2, self.items74, self.items76):
            total += sum(1 + len(_flatten(entry)) for entry in family.values())
        total += sum(len(kids) for kids in self.sorted_children) * 2
        total += sum(oracle.words() for oracle in self.chain_oracles.values())
        return total


def _flatten(entry) -> List[int]:
    out: List[int] = []
    for value in entry:
        if isinstance(value, tuple):
            out.extend(_flatten(value))
        else:
            out.append(value)
    return out


def build_case_tables(views: DfsForestViews, params: ScalarParams, extremes: ExtremePoints,
                      counted: Optional[np.ndarray] = None, debug: bool = False,
                      param_views: Optional[Dict[View, ParamView]] = None) -> CaseTables:
    """
    Build every table.

    Parameters
    ----------
    counted : np.ndarray of bool, optional
        Children eligible for :attr:`CaseTables.sorted_children` (real-rooted ones).
    debug : bool
        Validate the nestedness of every segment batch.
    param_views : dict, optional
        Already-built :class:`ParamView` objects to reuse.
    """
    start = time.perf_counter()
    pvs = param_views or build_param_views(views, params, extremes)
    high, low, base = pvs[View.HIGH_DEC], pvs[View.LOW_INC], pvs[View.BASE]

    skip_left, skip_right = skip_tables(high)
    family55 = lemma55_family(low)
    segments = segment_tables(pvs, family55, debug=debug)
    plain, primed = three_low_params(high, low)
    children, keys = sorted_children(base, counted)
    tables = CaseTables(
        skip_l1_of_lp=skip_left,
        skip_r1_of_rp=skip_right,
        first_two_low_children=first_two_low_children(high, low),
        lemma53_lp=segments["lemma53_lp"],
        lemma53_rp=segments["lemma53_rp"],
        lemma53_low_rp=segments["lemma53_low_rp"],
        lemma54=segments["lemma54"],
        lemma55=segments["lemma55"],
        chain_oracles={name: MpChainOracle(pv, debug=debug) for name, pv in pvs.items()},
        three_low=plain,
        three_low_primed=primed,
        extreme_high_mw=extreme_high_params_mw(low),
        extreme_high_a2=extreme_high_params_a2(low, family55),
        items74=items74(high, low),
        items76=items76(high, low),
        survivors=np.stack([params.low1, params.low2, params.low3], axis=1),
        sorted_children=children,
        sorted_keys=keys,
        views=pvs,
    )
    logger.debug("case tables built in %.3fs (%d words)", time.perf_counter() - start, tables.words())
    return tables


def lemma56_query(tables: CaseTables, view: View, c: int, d: int) -> Tuple[int, int]:
    return tables.lemma56_query(view, c, d)
