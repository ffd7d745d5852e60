"""
Per-query state: the components of ``T \\ F`` and their connectivity graph.

All vertices here are numbers of the base DFS tree of the transformed graph.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple, Union

from graph_core import DfsTree


@dataclass(frozen=True)
class InternalGroup:
    """A connected group of internal components, identified by its smallest root."""

    group: int


@dataclass(frozen=True)
class IsolatedHanging:
    """A hanging subtree with no surviving back-edge, identified by its root."""

    root: int


ComponentRef = Union[InternalGroup, IsolatedHanging]


@dataclass
class Component:
    """
    An internal component: ``T(root)`` minus the subtrees of ``excluded`` (the
    failed vertices of ``T(root)`` with no failed proper ancestor inside it).
    """

    root: int
    excluded: Tuple[int, ...]
    fake: bool = False

    def intervals(self, tree: DfsTree) -> List[Tuple[int, int]]:
        out = []
        lo = self.root
        for f in sorted(self.excluded):
            if lo <= f - 1:
                out.append((lo, f - 1))
            lo = tree.last(f) + 1
        if lo <= tree.last(self.root):
            out.append((lo, tree.last(self.root)))
        return out


@dataclass
class Segment:
    """Ancestors ``y`` of a failed vertex with ``top <= y <= bottom``, owned by ``owner``."""

    top: int
    bottom: int
    owner: int


@dataclass
class FailureContext:
    failed: Tuple[int, ...]
    original: Tuple[int, ...]
    configuration: str
    components: Dict[int, Component]
    edges: Set[Tuple[int, int]] = field(default_factory=set)
    group: Dict[int, int] = field(default_factory=dict)
    labels: List[str] = field(default_factory=list)
    disagreements: List[str] = field(default_factory=list)

    def nearest_failed_ancestor(self, tree: DfsTree, x: int) -> int:
        best = 0
        for f in self.failed:
            if f != x and tree.is_ancestor(f, x) and f > best:
                best = f
        return best

    def groups(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for root, g in self.group.items():
            out.setdefault(g, []).append(root)
        return out
