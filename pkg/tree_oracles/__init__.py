"""
Level-ancestor, nearest-common-ancestor, range-minimum and back-edge
rectangle structures.
"""
from .rmq import RmqIndex
from .level_ancestor import LevelAncestorIndex
from .nca import NcaIndex
from .range_index import BackEdgeRangeIndex

__all__ = ['RmqIndex', 'LevelAncestorIndex', 'NcaIndex', 'BackEdgeRangeIndex']
