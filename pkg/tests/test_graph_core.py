import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from graph_core import (
    BOTTOM,
    Graph,
    VertexKind,
    View,
    build_views,
    load_graph,
    parse_graph,
    read_graph_file,
    run_dfs,
    split_transform,
    write_graph_file,
)
from dfs_params import compute_scalar_params
from utils.errors import DisconnectedGraphError, GraphError, GraphFormatError
from verify import brute_connected

from .conftest import make_tree
from .strategies import connected_graphs


# --- LOADING ---

def test_load_triangle():
    g = load_graph([(1, 2), (2, 3), (3, 1)])
    assert (g.n, g.m) == (3, 3)


def test_load_normalises_loops_and_duplicates(caplog):
    g = load_graph([(1, 2), (1, 2), (2, 2), (2, 3)])
    assert (g.n, g.m) == (3, 2)
    assert "duplicate" in caplog.text


def test_load_disconnected_names_pair():
    with pytest.raises(DisconnectedGraphError) as info:
        load_graph([(1, 2), (3, 4)])
    assert 1 in info.value.pair
    assert "disconnected" in str(info.value)


def test_load_empty():
    with pytest.raises(GraphError):
        load_graph([])


def test_parse_plain_and_dimacs():
    g = parse_graph(["3 2", "1 2", "# comment", "2 3"])
    h = parse_graph(["c triangle", "p edge 3 3", "e 1 2", "e 2 3", "e 3 1"])
    assert g.m == 2 and h.m == 3


def test_parse_error_carries_line_number():
    with pytest.raises(GraphFormatError) as info:
        parse_graph(["3 2", "1 x"])
    assert info.value.line_no == 2


def test_write_then_read(tmp_path):
    g = load_graph([(1, 2), (2, 3), (3, 1), (3, 4)])
    path = write_graph_file(g, str(tmp_path / "g.txt"))
    assert read_graph_file(path).edges == g.edges


def test_read_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_graph_file(str(tmp_path / "missing.txt"))


# --- DFS ---

def test_dfs_path():
    tree = run_dfs(load_graph([(1, 2), (2, 3)]))
    assert tree.parent[2] == 1 and tree.parent[3] == 2
    assert tree.nd[1] == 3


def test_dfs_cycle_back_edge():
    tree = run_dfs(load_graph([(1, 2), (2, 3), (3, 4), (4, 1)]))
    assert tree.back_edges() == [(4, 1)]
    assert [int(p) for p in tree.parent[2:]] == [1, 2, 3]


@given(connected_graphs(max_n=15))
@settings(max_examples=60, deadline=None)
def test_interval_property(graph):
    tree = run_dfs(graph)
    for v in range(1, tree.n + 1):
        for u in range(1, tree.n + 1):
            walk = u
            while walk != BOTTOM and walk != v:
                walk = int(tree.parent[walk])
            assert (walk == v) == tree.is_ancestor(v, u)
    for x, y in tree.back_edges():
        assert tree.is_proper_ancestor(y, x)


# --- SPLIT TRANSFORM ---

def test_triangle_split_counts():
    g = load_graph([(1, 2), (2, 3), (3, 1)])
    tg = split_transform(g)
    counts = tg.kind_counts()
    assert tg.n == g.n + g.m + 1 == 7
    assert counts[VertexKind.AUX_ROOT] == 1
    assert counts[VertexKind.AUX_TREE_SPLIT] == 2
    assert counts[VertexKind.AUX_BACK_SPLIT] == 1


def test_single_edge_split():
    tg = split_transform(load_graph([(1, 2)]))
    assert tg.n == 4
    assert tg.n_tree_splits == 1 and tg.n_back_splits == 0


@given(connected_graphs(max_n=12))
@settings(max_examples=40, deadline=None)
def test_transformed_tree_assumptions(graph):
    tg = split_transform(graph)
    tree = run_dfs(tg, start=tg.root)
    assert tree.n == graph.n + graph.m + 1
    kinds = tg.kind[tree.label]
    assert kinds[1] == VertexKind.AUX_ROOT
    for v in range(2, tree.n + 1):
        assert not (kinds[v] == VertexKind.REAL and kinds[tree.parent[v]] == VertexKind.REAL)
    for x, _ in tree.back_edges():
        assert kinds[x] == VertexKind.AUX_BACK_SPLIT and tree.nd[x] == 1


@given(connected_graphs(min_n=4, max_n=9))
@settings(max_examples=25, deadline=None)
def test_transform_keeps_connectivity(graph):
    tg = split_transform(graph)
    split = Graph(tg.n, tuple((u, v) for u in range(1, tg.n + 1) for v in tg.adjacency[u] if u < v))
    for k in (1, 2, 3):
        for failures in itertools.islice(itertools.combinations(range(1, graph.n + 1), k), 30):
            alive = [v for v in range(1, graph.n + 1) if v not in failures]
            for x, y in itertools.combinations(alive, 2):
                assert brute_connected(graph, failures, x, y) == brute_connected(split, failures, x, y)


# --- VIEWS ---

def test_view_orders(tree_a):
    params = compute_scalar_params(tree_a)
    views = build_views(tree_a, params)
    low = views.low_inc
    assert [views.untranslate(View.LOW_INC, c) for c in low.children[views.translate(View.LOW_INC, 3)]] == [4, 5]


def test_view_sort_semantics():
    # children 5, 6, 7 of vertex 4 with low1 = 3, BOTTOM, 1 and high1 = 3, BOTTOM, 1
    tree = make_tree([0, 0, 1, 2, 3, 4, 4, 4], [(5, 3), (7, 1)])
    params = compute_scalar_params(tree)
    views = build_views(tree, params)
    low = [views.untranslate(View.LOW_INC, c) for c in views.low_inc.children[views.translate(View.LOW_INC, 4)]]
    high = [views.untranslate(View.HIGH_DEC, c) for c in views.high_dec.children[views.translate(View.HIGH_DEC, 4)]]
    assert low == [7, 5, 6]
    assert high == [5, 7, 6]


@given(connected_graphs(max_n=12))
@settings(max_examples=40, deadline=None)
def test_views_share_ancestry(graph):
    tg = split_transform(graph)
    tree = run_dfs(tg, start=tg.root)
    params = compute_scalar_params(tree)
    views = build_views(tree, params)
    for view in (View.LOW_INC, View.HIGH_DEC):
        vt = views.tree(view)
        to_view = views.to_view[view]
        assert np.array_equal(to_view[tree.parent[2:]], vt.parent[to_view[2:]])
        if view == View.LOW_INC:
            for v in range(1, vt.n + 1):
                values = [int(params.low1[views.to_base[view][c]]) or vt.n + 1 for c in vt.children[v]]
                assert values == sorted(values)
