"""Constructors for the graph families used throughout the package."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, is_connected

#: Upper limit on generated vertex counts (the hedgehog family grows fast).
VERTEX_CAP = 50_000


def path_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_binary_tree(levels: int) -> Graph:
    """Heap-numbered complete binary tree: children of ``i`` are ``2i+1`` and ``2i+2``."""
    if levels < 1:
        raise ValueError("levels must be at least 1")
    n = 2**levels - 1
    return Graph.from_edges(n, ((i, (i - 1) // 2) for i in range(1, n)))


@dataclass(frozen=True)
class GridLayout:
    m: int

    def id(self, x: int, y: int) -> int:
        if not (0 <= x < self.m and 0 <= y < self.m):
            raise ValueError(f"({x}, {y}) is outside the {self.m}x{self.m} grid")
        return y * self.m + x

    def coord(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.m * self.m:
            raise ValueError(f"vertex {v} is outside the {self.m}x{self.m} grid")
        return v % self.m, v // self.m


def grid_graph(m: int) -> tuple[Graph, GridLayout]:
    """The ``m x m`` grid, row-major: vertex ``(x, y)`` has id ``y*m + x``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    layout = GridLayout(m)
    edges = []
    for y in range(m):
        for x in range(m):
            v = layout.id(x, y)
            if x + 1 < m:
                edges.append((v, v + 1))
            if y + 1 < m:
                edges.append((v, v + m))
    labels = [{"x": x, "y": y} for y in range(m) for x in range(m)]
    return Graph.from_edges(m * m, edges, labels), layout


@dataclass(frozen=True)
class HedgehogLayout:
    """Vertex bookkeeping for one level of the hedgehog construction.

    ``offset`` is where this (sub)hedgehog starts in the global numbering.
    """

    k: int
    offset: int
    size: int
    clique: tuple[int, ...]
    copies: tuple["HedgehogLayout", ...]

    @property
    def port(self) -> int:
        # H_0's only vertex, otherwise the first clique vertex
        return self.offset

    @property
    def vertices(self) -> range:
        return range(self.offset, self.offset + self.size)


def hedgehog_size(k: int) -> int:
    size = 1
    for level in range(1, k + 1):
        size = (2 ** (level + 1) - 1) * (1 + size)
    return size


def _hedgehog_layout(k: int, offset: int, edges: list) -> HedgehogLayout:
    if k == 0:
        return HedgehogLayout(0, offset, 1, (offset,), ())
    q = 2 ** (k + 1) - 1
    clique = tuple(range(offset, offset + q))
    for i in range(q):
        for j in range(i + 1, q):
            edges.append((clique[i], clique[j]))
    copies = []
    nxt = offset + q
    for i in range(q):
        sub = _hedgehog_layout(k - 1, nxt, edges)
        edges.append((clique[i], sub.port))
        copies.append(sub)
        nxt += sub.size
    return HedgehogLayout(k, offset, nxt - offset, clique, tuple(copies))


def hedgehog(k: int, vertex_cap: int = VERTEX_CAP) -> tuple[Graph, HedgehogLayout]:
    """Level-``k`` hedgehog: a clique on ``2^(k+1)-1`` vertices, each with a
    pendant copy of the level ``k-1`` hedgehog attached at its port."""
    if k < 0:
        raise ValueError("k must be non-negative")
    n = hedgehog_size(k)
    if n > vertex_cap:
        raise MemoryError(f"hedgehog({k}) has {n} vertices, above the cap of {vertex_cap}")
    edges: list = []
    layout = _hedgehog_layout(k, 0, edges)
    labels: list = [None] * n

    def tag(lay: HedgehogLayout, depth: int) -> None:
        for i, v in enumerate(lay.clique):
            labels[v] = {"role": "clique", "level": lay.k, "index": i + 1, "depth": depth}
        for sub in lay.copies:
            tag(sub, depth + 1)

    tag(layout, 0)
    return Graph.from_edges(n, edges, labels), layout


def gnp_random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Uniform G(n, p) graph drawn from ``rng``."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def all_labeled_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """Every graph on vertex set ``0..n-1``, in order of edge bitmask."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        G = Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if (bits >> i) & 1))
        if connected and not (n == 0 or is_connected(G)):
            continue
        yield G
