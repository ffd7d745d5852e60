"""Hypothesis strategies for small connected graphs and failure sets."""
from hypothesis import strategies as st

from graph_core import load_graph


@st.composite
def connected_graphs(draw, min_n=2, max_n=12, max_extra=None):
    """Random spanning tree (each vertex hangs below an earlier one) plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = [(v, draw(st.integers(1, v - 1))) for v in range(2, n + 1)]
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    limit = len(pairs) if max_extra is None else max_extra
    extra = draw(st.lists(st.sampled_from(pairs), max_size=limit, unique=True)) if pairs else []
    order = draw(st.permutations(edges + extra))
    return load_graph(order, n)


@st.composite
def graphs_with_failures(draw, min_n=4, max_n=12):
    graph = draw(connected_graphs(min_n=min_n, max_n=max_n))
    k = draw(st.integers(1, min(3, graph.n - 2)))
    failures = draw(st.lists(st.integers(1, graph.n), min_size=k, max_size=k, unique=True))
    alive = [v for v in range(1, graph.n + 1) if v not in failures]
    x = draw(st.sampled_from(alive))
    y = draw(st.sampled_from(alive))
    return graph, tuple(failures), x, y
