"""
Graph representation, edge-splitting transform, DFS construction and
children-list permutations.
"""
from .graph import BOTTOM, Graph, load_graph, parse_graph, read_graph_file, write_graph_file
from .transform import TransformedGraph, VertexKind, split_transform
from .dfs import DfsTree, run_dfs
from .views import DfsForestViews, View, build_views, permute_tree

__all__ = [
    'BOTTOM',
    'Graph',
    'load_graph',
    'parse_graph',
    'read_graph_file',
    'write_graph_file',
    'TransformedGraph',
    'VertexKind',
    'split_transform',
    'DfsTree',
    'run_dfs',
    'DfsForestViews',
    'View',
    'build_views',
    'permute_tree',
]
