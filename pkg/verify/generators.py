"""
Seeded graph families for the differential corpus.

Every generator takes a ``numpy.random.Generator`` (or nothing, when the
family is deterministic) and returns a connected :class:`Graph`; a corpus
rebuilt from the same seed is identical.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Sequence, Tuple

import numpy as np

from graph_core import Graph, load_graph
from utils.errors import ConfigError

logger = logging.getLogger(__name__)


class Gadget(NamedTuple):
    """
    Path ``1..path`` plus the tree edges ``extra`` (parent, child), both listed
    before the ``chords`` so a DFS from 1 keeps that tree, and the failure chain
    ``(u, v, w)`` it is built for with the labels its resolution must carry.
    """

    path: int
    extra: Tuple[Tuple[int, int], ...]
    chords: Tuple[Tuple[int, int], ...]
    failures: Tuple[int, int, int]
    labels: Tuple[str, ...]


def _on_path(chords, labels, extra=()) -> Gadget:
    # u = 3, v = 5, w = 7; B holds 4, C holds 6, 8 hangs below w and 9 is an extra child
    return Gadget(8, tuple(extra), tuple(chords), (3, 5, 7), tuple(labels))


def _long(chords, labels, extra=()) -> Gadget:
    # u = 3, v = 6, w = 8; B holds 4 and 5, C holds 7
    return Gadget(9, tuple(extra), tuple(chords), (3, 6, 8), tuple(labels))


COVERAGE_GADGETS: Dict[str, Gadget] = {
    "bottom": _on_path([], ["chain/mp_c=bottom/mp_d=bottom"]),
    "bottom/below_w": _on_path([(8, 4)], ["chain/mp_c=bottom/mp_d=below_w"]),
    "bottom/w": _on_path([(7, 4), (7, 3)], ["chain/mp_c=bottom/mp_d=w"]),
    "bottom/in_C": _on_path([(6, 4)], ["chain/mp_c=bottom/mp_d=in_C"]),
    "in_B/below_w": _on_path([(4, 1), (8, 4)], ["chain/mp_c=in_B/mp_d=below_w"]),
    "in_B/w": _on_path([(4, 1), (7, 4), (7, 3)], ["chain/mp_c=in_B/mp_d=w"]),
    "in_B/in_C": _on_path([(4, 1), (6, 4)], ["chain/mp_c=in_B/mp_d=in_C"]),
    "hanging_v/below_w": _on_path([(9, 1), (8, 4)], ["chain/mp_c=hanging_v/mp_d=below_w"], extra=[(5, 9)]),
    "hanging_v/in_C": _on_path([(9, 1), (9, 4), (6, 4)], ["chain/mp_c=hanging_v/mp_d=in_C"], extra=[(5, 9)]),
    "v/other_child": _on_path([(9, 1), (9, 4), (5, 1)], ["chain/mp_c=v", "chain/v/other_child"],
                              extra=[(5, 9)]),
    "v/no_edges": _on_path([(5, 1), (5, 2)], ["chain/v/no_edges"]),
    "v/b_only": _on_path([(5, 1), (5, 2), (6, 4)], ["chain/v/b_only"]),
    "v/through_d": _on_path([(5, 1), (6, 1), (6, 4)],
                            ["chain/v/through_d", "chain/v/through_d/c_reaches_b"]),
    "v/through_d/misses": _on_path([(5, 1), (6, 1), (8, 4)],
                                   ["chain/v/through_d", "chain/v/through_d/c_misses_b"]),
    "v/u_only": _on_path([(5, 1), (5, 2), (6, 3)], ["chain/v/u_only"]),
    "v/a_only": _on_path([(5, 1), (5, 2), (6, 1)], ["chain/v/a_only"]),
    "below_w/below_w": _on_path([(8, 1)], ["chain/mp_c=below_w/mp_d=below_w"]),
    "below_w/w": _on_path([(8, 1), (9, 4)], ["chain/mp_c=below_w/mp_d=w"], extra=[(7, 9)]),
    "below_w/w/counting": _on_path([(8, 1), (8, 6), (8, 4), (9, 4)],
                                   ["chain/mp_c=below_w/mp_d=w", "counting/under_w_child"], extra=[(7, 9)]),
    "below_w/in_C": _on_path([(8, 1), (6, 4)], ["chain/mp_c=below_w/mp_d=in_C"]),
    "w/w": _on_path([(7, 1), (7, 2)], ["chain/mp_c=w/mp_d=w"]),
    "w/first_high_in_C": _on_path([(8, 1), (9, 1), (9, 6)],
                                  ["chain/mp_c=w/mp_d=w", "chain/w/first_high_in_C"], extra=[(7, 9)]),
    "w/in_C": _on_path([(7, 1), (7, 2), (6, 4)], ["chain/mp_c=w/mp_d=in_C"]),
    "in_C/same_mp": _on_path([(6, 1)], ["chain/mp_c=in_C/mp_d=in_C", "chain/in_C/same_mp"]),
    "in_C/low_r_is_u": _on_path([(6, 1), (8, 3)], ["chain/in_C/low_r_is_u"]),
    "in_C/low_r_in_C": _on_path([(6, 1), (6, 4)], ["chain/in_C/low_r_in_C"]),
    "in_C/second_low_is_u": _on_path([(6, 1), (8, 3), (8, 4)], ["chain/in_C/second_low_is_u"]),
    "in_C/second_child_in_C": _long([(10, 1), (11, 4), (9, 5)], ["chain/in_C/second_child_in_C"],
                                    extra=[(7, 10), (7, 11)]),
    "in_C/second_child_above_w": _long([(10, 1), (10, 4), (9, 5)],
                                       ["chain/in_C/second_child_above_w", "counting/in_C"], extra=[(7, 10)]),
    "in_C/above_w/no_edge": _long([(10, 1), (9, 4)],
                                  ["chain/in_C/second_child_above_w", "counting/in_C"], extra=[(7, 10)]),
}


def _relabel(n: int, edges: Sequence[Tuple[int, int]], rng: np.random.Generator) -> List[Tuple[int, int]]:
    perm = np.concatenate(([0], rng.permutation(n) + 1))
    return [(int(perm[u]), int(perm[v])) for u, v in edges]


def _random_tree(n: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    return [(v, int(rng.integers(1, v))) for v in range(2, n + 1)]


def random_connected(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Random spanning tree plus random extra edges up to ``m`` (capped by ``n choose 2``)."""
    m = min(m, n * (n - 1) // 2)
    edges = _random_tree(n, rng)
    present = {frozenset(e) for e in edges}
    while len(edges) < m:
        u, v = (int(a) for a in rng.integers(1, n + 1, size=2))
        if u != v and frozenset((u, v)) not in present:
            present.add(frozenset((u, v)))
            edges.append((u, v))
    return load_graph(_relabel(n, edges, rng), n)


def path_with_chords(n: int, chords: Sequence[Tuple[int, int]] = ()) -> Graph:
    """Path ``1..n`` listed first, so a DFS from 1 follows it."""
    return load_graph([(i, i + 1) for i in range(1, n)] + list(chords), n)


def cycle_with_chords(n: int, k: int, rng: np.random.Generator) -> Graph:
    chords = []
    for _ in range(k):
        u, v = sorted(int(a) for a in rng.choice(np.arange(1, n + 1), size=2, replace=False))
        if v - u > 1 and (u, v) != (1, n):
            chords.append((v, u))
    return path_with_chords(n, [(n, 1)] + chords)


def theta(lengths: Sequence[int]) -> Graph:
    """Two hubs joined by internally disjoint paths with the given numbers of inner vertices."""
    edges = []
    nxt = 3
    for length in lengths:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 2))
    return load_graph(edges, nxt - 1)


def book(pages: int, page_length: int) -> Graph:
    """Cycles of ``page_length + 2`` vertices sharing the spine edge ``(1, 2)``."""
    edges = [(1, 2)]
    nxt = 3
    for _ in range(pages):
        prev = 2
        for _ in range(page_length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return load_graph(edges, nxt - 1)


def tree_plus_matching(n: int, rng: np.random.Generator) -> Graph:
    """Random tree plus a random matching on its leaves."""
    edges = _random_tree(n, rng)
    degree = np.zeros(n + 1, dtype=np.int64)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    rng.shuffle(leaves)
    present = {frozenset(e) for e in edges}
    for a, b in zip(leaves[::2], leaves[1::2]):
        if frozenset((a, b)) not in present:
            edges.append((int(a), int(b)))
    return load_graph(_relabel(n, edges, rng), n)


def clique(n: int) -> Graph:
    return load_graph([(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)], n)


def nested_cuts(depth: int, block: int, rng: np.random.Generator) -> Graph:
    """
    A chain of cycles, consecutive ones sharing one vertex, with one sparse chord
    reaching back over each shared vertex; removing shared vertices cuts the
    chain at nested places.
    """
    edges = []
    start = 1
    nxt = 2
    for _ in range(depth):
        ring = [start] + list(range(nxt, nxt + block - 1))
        nxt += block - 1
        edges.extend(zip(ring, ring[1:] + ring[:1]))
        if start > 1 and rng.random() < 0.7:
            edges.append((int(rng.choice(ring[1:])), int(rng.integers(1, start))))
        start = ring[-1]
    return load_graph(edges, nxt - 1)


def coverage_gadget(name: str) -> Tuple[Graph, Tuple[int, int, int]]:
    gadget = COVERAGE_GADGETS[name]
    n = max([gadget.path] + [max(e) for e in gadget.extra + gadget.chords])
    edges = [(i, i + 1) for i in range(1, gadget.path)] + list(gadget.extra) + list(gadget.chords)
    return load_graph(edges, n), gadget.failures


def gen_adversarial(seed: int) -> Graph:
    """One graph of a nested-cut-heavy family, picked and shaped by ``seed``."""
    rng = np.random.default_rng(seed)
    family = seed % 6
    if family == 0:
        n = int(rng.integers(8, 21))
        return cycle_with_chords(n, int(rng.integers(1, 4)), rng)
    if family == 1:
        return theta([int(k) for k in rng.integers(1, 4, size=int(rng.integers(2, 5)))])
    if family == 2:
        return book(int(rng.integers(2, 4)), int(rng.integers(1, 4)))
    if family == 3:
        return tree_plus_matching(int(rng.integers(6, 16)), rng)
    if family == 4:
        return nested_cuts(int(rng.integers(2, 5)), int(rng.integers(3, 5)), rng)
    n = int(rng.integers(6, 15))
    chords = []
    for _ in range(int(rng.integers(1, 4))):
        x = int(rng.integers(3, n + 1))
        chords.append((x, int(rng.integers(1, x - 1))))
    return path_with_chords(n, chords)


@dataclass(frozen=True)
class CorpusEntry:
    tag: str
    seed: int
    graph: Graph = field(repr=False)


@dataclass(frozen=True)
class Corpus:
    name: str
    seed: int
    entries: Tuple[CorpusEntry, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _small_random(rng, count, n_range=(4, 17)):
    out = []
    for i in range(count):
        n = int(rng.integers(*n_range))
        m = int(rng.integers(n - 1, min(3 * n, n * (n - 1) // 2) + 1))
        out.append(CorpusEntry("random_connected", i, random_connected(n, m, rng)))
    return out


def build_corpus(name: str = "default", seed: int = 0) -> Corpus:
    """
    Named corpora: ``smoke`` (a handful of tiny graphs), ``default`` (small graphs,
    exhaustive checking), ``large`` (graphs up to 2000 vertices, sampled) and
    ``coverage`` (the adversarial families plus the chain gadgets).
    """
    rng = np.random.default_rng(seed)
    entries: List[CorpusEntry] = []
    if name == "smoke":
        entries += _small_random(rng, 6, (4, 9))
        entries += [CorpusEntry("gadget", i, coverage_gadget(loc)[0]) for i, loc in enumerate(COVERAGE_GADGETS)]
    elif name == "default":
        entries += _small_random(rng, 150)
        entries += [CorpusEntry("adversarial", seed + s, gen_adversarial(seed + s)) for s in range(50)]
        entries += [CorpusEntry("clique", k, clique(k)) for k in range(2, 7)]
        entries += [CorpusEntry("gadget", i, coverage_gadget(loc)[0]) for i, loc in enumerate(COVERAGE_GADGETS)]
    elif name == "large":
        for i in range(50):
            n = int(rng.integers(100, 2001))
            entries.append(CorpusEntry("random_connected", i, random_connected(n, int(rng.integers(n, 3 * n)), rng)))
    elif name == "coverage":
        entries += [CorpusEntry("gadget", i, coverage_gadget(loc)[0]) for i, loc in enumerate(COVERAGE_GADGETS)]
        entries += [CorpusEntry("adversarial", seed + s, gen_adversarial(seed + s)) for s in range(120)]
    else:
        raise ConfigError(f"unknown corpus {name!r}")
    logger.info("corpus %s (seed %d): %d graphs", name, seed, len(entries))
    return Corpus(name=name, seed=seed, entries=tuple(entries))
