import pytest

from case_tables import build_case_tables
from connectivity_oracle import CaseCounter, ConnectivityOracle
from dfs_params import build_param_views, compute_extreme_points, compute_scalar_params
from graph_core import DfsTree, build_views, load_graph
from utils.config import OracleConfig
from verify import path_with_chords


def make_tree(parent, back_edges):
    """Preorder-numbered tree; ``parent[0]`` and ``parent[1]`` are 0."""
    return DfsTree.from_parents(parent, back_edges, list(range(len(parent))))


class Built:
    """Every preprocessing product of a bare tree (no split transform)."""

    def __init__(self, tree):
        self.tree = tree
        self.params = compute_scalar_params(tree)
        self.views = build_views(tree, self.params)
        self.extremes = compute_extreme_points(self.views, self.params)
        self.param_views = build_param_views(self.views, self.params, self.extremes)
        self.tables = build_case_tables(self.views, self.params, self.extremes, debug=True,
                                        param_views=self.param_views)


@pytest.fixture
def tree_a():
    """Tree edges (1,2),(2,3),(3,4),(3,5); back-edges (4,1),(5,1),(5,2)."""
    return make_tree([0, 0, 1, 2, 3, 3], [(4, 1), (5, 1), (5, 2)])


@pytest.fixture
def tree_b():
    """Chain 1-2-3-4, children 5 and 6 of 4; back-edges (5,1),(6,1)."""
    return make_tree([0, 0, 1, 2, 3, 4, 4], [(5, 1), (6, 1)])


@pytest.fixture
def tree_c():
    """As ``tree_b`` plus the back-edge (5,3)."""
    return make_tree([0, 0, 1, 2, 3, 4, 4], [(5, 3), (5, 1), (6, 1)])


@pytest.fixture
def built():
    return Built


@pytest.fixture
def c6():
    return path_with_chords(6, [(6, 1)])


@pytest.fixture
def c7():
    return path_with_chords(7, [(7, 1)])


@pytest.fixture
def c7_chord():
    return path_with_chords(7, [(7, 1), (5, 1)])


@pytest.fixture
def k4():
    return load_graph([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def path5():
    return path_with_chords(5)


@pytest.fixture
def oracle_for():
    """Factory: ``oracle_for(graph, **config)`` with cross-checking on by default."""
    def factory(graph, counter=None, **options):
        options.setdefault("cross_check", True)
        return ConnectivityOracle.preprocess(graph, config=OracleConfig(**options),
                                             counter=counter or CaseCounter())
    return factory
