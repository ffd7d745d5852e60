"""
The query engine.

``ConnectivityOracle.preprocess`` builds every structure once; each query then
validates its failure set, resolves it into a :class:`FailureContext` and reads
the answer from it. The oracle is never mutated by a query.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import ClassVar, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from case_tables import CaseTables, build_case_tables
from dfs_params import (
    ExtremePoints,
    ParamView,
    ScalarParams,
    build_param_views,
    compute_extreme_points,
    compute_scalar_params,
)
from graph_core import (
    BOTTOM,
    DfsForestViews,
    DfsTree,
    Graph,
    TransformedGraph,
    VertexKind,
    View,
    build_views,
    run_dfs,
    split_transform,
)
from utils.config import OracleConfig
from utils.errors import FailureSetError, VertexError

from .context import ComponentRef, FailureContext, InternalGroup, IsolatedHanging
from .counting import count_components
from .instrumentation import CaseCounter
from .rectangle_checks import RectangleChecks
from .resolver import Resolver, resolve_failures

logger = logging.getLogger(__name__)

MAX_FAILURES = 3


@dataclass(eq=False)
class ConnectivityOracle:
    """
    Connectivity of a graph after the removal of up to three vertices.

    Query arguments are vertices of the input graph; internally everything is
    numbered by the base DFS tree of the split graph.
    """

    graph: Graph
    transformed: TransformedGraph
    tree: DfsTree
    views: DfsForestViews
    params: ScalarParams
    extremes: ExtremePoints
    param_views: Dict[View, ParamView]
    tables: CaseTables
    rectangle_checks: Optional[RectangleChecks]
    real_prefix: np.ndarray
    kinds: np.ndarray
    config: OracleConfig = field(default_factory=OracleConfig)
    counter: Optional[CaseCounter] = None
    timings: Dict[str, float] = field(default_factory=dict)

    resolver_class: ClassVar[type] = Resolver

    # --- CONSTRUCTION ---

    @classmethod
    def preprocess(cls, graph: Graph, config: Optional[OracleConfig] = None,
                   counter: Optional[CaseCounter] = None) -> "ConnectivityOracle":
        """
        Build the oracle.

        Raises
        ------
        DisconnectedGraphError
            ``graph`` is not connected.
        """
        config = config or OracleConfig()
        timings: Dict[str, float] = {}

        def stage(name, start):
            timings[name] = time.perf_counter() - start
            logger.debug("%-10s %.3fs", name, timings[name])
            return time.perf_counter()

        t = time.perf_counter()
        transformed = split_transform(graph)
        tree = run_dfs(transformed, start=transformed.root)
        t = stage("transform", t)
        params = compute_scalar_params(tree)
        views = build_views(tree, params)
        extremes = compute_extreme_points(views, params)
        param_views = build_param_views(views, params, extremes)
        t = stage("params", t)

        kinds = transformed.kind[tree.label]
        counted = kinds == VertexKind.AUX_TREE_SPLIT
        tables = build_case_tables(views, params, extremes, counted=counted,
                                   debug=config.debug_checks, param_views=param_views)
        t = stage("tables", t)
        real_prefix = np.concatenate([[0], np.cumsum(kinds[1:] == VertexKind.REAL)])
        rectangle_checks = None
        if config.cross_check or config.debug_checks:
            real = tree.number[1:graph.n + 1]
            rectangle_checks = RectangleChecks(param_views, candidates=[int(v) for v in real])
            stage("rectangles", t)

        oracle = cls(graph=graph, transformed=transformed, tree=tree, views=views, params=params,
                     extremes=extremes, param_views=param_views, tables=tables,
                     rectangle_checks=rectangle_checks, real_prefix=real_prefix, kinds=kinds, config=config,
                     counter=counter, timings=timings)
        logger.info("oracle ready: n=%d m=%d, split graph %d vertices, %d table words",
                    graph.n, graph.m, tree.n, oracle.table_words())
        if config.debug_checks:
            from verify.invariants import find_violations

            find_violations(oracle)
        return oracle

    def __getstate__(self):
        state = self.__dict__.copy()
        state["counter"] = None
        return state

    # --- NUMBERING ---

    @property
    def base_view(self) -> ParamView:
        return self.param_views[View.BASE]

    def base_number(self, v: int) -> int:
        return int(self.tree.number[v])

    def original_vertex(self, x: int) -> int:
        return int(self.tree.label[x])

    def kind_of(self, x: int) -> VertexKind:
        return VertexKind(int(self.kinds[x]))

    def real_count(self, intervals: Iterable[Tuple[int, int]]) -> int:
        return sum(int(self.real_prefix[hi] - self.real_prefix[lo - 1]) for lo, hi in intervals)

    # --- VALIDATION ---

    def _failure_set(self, failures: Iterable[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        original = tuple(int(v) for v in failures)
        if not 1 <= len(original) <= MAX_FAILURES:
            raise FailureSetError(f"expected 1 to {MAX_FAILURES} failed vertices, got {len(original)}")
        if len(set(original)) != len(original):
            raise FailureSetError(f"repeated vertex in failure set {original}")
        for v in original:
            if not 1 <= v <= self.graph.n:
                raise FailureSetError(f"failed vertex {v} is not a vertex of the graph")
        failed = tuple(sorted(self.base_number(v) for v in original))
        return failed, original

    def _query_vertex(self, v: int, original: Sequence[int]) -> int:
        if not 1 <= v <= self.graph.n:
            raise VertexError(f"vertex {v} is not a vertex of the graph")
        if v in original:
            raise VertexError(f"vertex {v} is in the failure set")
        return self.base_number(v)

    # --- QUERIES ---

    def resolve(self, failures: Iterable[int]) -> FailureContext:
        """
        Internal components of ``T \\ F`` and their connectivity graph.

        Raises
        ------
        FailureSetError
        """
        failed, original = self._failure_set(failures)
        ctx = resolve_failures(self, failed, original)
        if self.counter is not None:
            self.counter.record(ctx.labels)
        return ctx

    def locate(self, ctx: FailureContext, x: int) -> ComponentRef:
        """Component of base-numbered vertex ``x`` (not failed)."""
        f = ctx.nearest_failed_ancestor(self.tree, x)
        if f == BOTTOM:
            return InternalGroup(ctx.group[1])
        c = self.base_view.child_toward(f, x)
        if c in ctx.group:
            return InternalGroup(ctx.group[c])
        for y in self.tables.survivors_of(c):
            if y != BOTTOM and y not in ctx.failed:
                return self.locate(ctx, y)
        return IsolatedHanging(c)

    def connected(self, failures: Iterable[int], x: int, y: int) -> bool:
        """Whether ``x`` and ``y`` are connected once ``failures`` are removed."""
        failures = list(failures)
        ctx = self.resolve(failures)
        bx = self._query_vertex(x, ctx.original)
        by = self._query_vertex(y, ctx.original)
        return self.locate(ctx, bx) == self.locate(ctx, by)

    def connected_many(self, failures: Iterable[int], pairs: Iterable[Tuple[int, int]]) -> List[bool]:
        """Several pairs under one failure set; resolves ``failures`` once."""
        ctx = self.resolve(failures)
        out = []
        for x, y in pairs:
            bx = self._query_vertex(x, ctx.original)
            by = self._query_vertex(y, ctx.original)
            out.append(self.locate(ctx, bx) == self.locate(ctx, by))
        return out

    def count_components(self, failures: Iterable[int]) -> int:
        """Number of connected components of the graph minus ``failures``."""
        return self.count_resolved(self.resolve(failures))

    def count_resolved(self, ctx: FailureContext) -> int:
        return count_components(self, ctx)

    def is_cut(self, failures: Iterable[int]) -> bool:
        return self.count_components(failures) > 1

    # --- SIZE ---

    def table_words(self) -> int:
        """Words stored by every per-vertex structure, excluding the input graph."""
        total = self.params.n * 11 + self.extremes.words() + self.tables.words()
        total += sum(pv.words() for pv in self.param_views.values())
        return total


def preprocess(graph: Graph, config: Optional[OracleConfig] = None,
               counter: Optional[CaseCounter] = None) -> ConnectivityOracle:
    return ConnectivityOracle.preprocess(graph, config=config, counter=counter)
