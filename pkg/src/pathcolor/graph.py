"""Immutable simple undirected graphs and the small toolkit the solvers share.

Vertices are always ``0..n-1``. Vertex sets are exchanged as ``frozenset``
objects at the public surface; internally everything runs on integer
bitmasks (bit ``v`` set means vertex ``v`` is present), which keeps
component searches and memo keys cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence

Edge = tuple[int, int]
PathWitness = tuple[int, ...]


class BudgetExceeded(Exception):
    """Raised when an exhaustive search runs past its allotted number of steps."""

    def __init__(self, budget: int, message: str = "") -> None:
        self.budget = budget
        super().__init__(message or f"search budget of {budget} exhausted")


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``labels`` is opaque metadata (grid coordinates, construction roles) and
    does not take part in equality.
    """

    n: int
    edges: frozenset[Edge]
    labels: Optional[tuple[Mapping[str, object], ...]] = field(default=None, compare=False)
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    nbr_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        clean = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            clean.add(_norm_edge(u, v))
            adj[u].add(v)
            adj[v].add(u)
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")
        object.__setattr__(self, "edges", frozenset(clean))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(
            self, "nbr_masks", tuple(sum(1 << w for w in a) for a in adj)
        )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Optional[Sequence[Mapping[str, object]]] = None,
    ) -> "Graph":
        edge_set = set()
        for u, v in edges:
            e = _norm_edge(int(u), int(v))
            if e in edge_set:
                raise ValueError(f"parallel edge {e}")
            edge_set.add(e)
        return cls(n, frozenset(edge_set), None if labels is None else tuple(labels))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.nbr_masks[u] >> v) & 1 == 1

    def label(self, v: int) -> Mapping[str, object]:
        return {} if self.labels is None else self.labels[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


# -- bitmask helpers ---------------------------------------------------------


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _within_mask(G: Graph, within: Optional[Iterable[int]]) -> int:
    if within is None:
        return G.full_mask
    if isinstance(within, int):
        raise TypeError("pass a collection of vertices, not a bitmask")
    mask = to_mask(within)
    if mask >> G.n:
        raise ValueError("vertex subset exceeds the host graph")
    return mask


def component_mask(G: Graph, start: int, within: int) -> int:
    """Bitmask of the component of ``G[within]`` that contains ``start``."""
    nbr = G.nbr_masks
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= nbr[v]
        grow &= within & ~seen
        seen |= grow
        frontier = grow
    return seen


def component_masks(G: Graph, within: int) -> list[int]:
    """Components of ``G[within]`` as bitmasks, ordered by smallest vertex."""
    out = []
    rest = within
    while rest:
        low = (rest & -rest).bit_length() - 1
        comp = component_mask(G, low, within)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_mask(G: Graph, within: int) -> bool:
    if not within:
        return False
    low = (within & -within).bit_length() - 1
    return component_mask(G, low, within) == within


# -- public graph operations -------------------------------------------------


def connected_components(G: Graph, within: Optional[Iterable[int]] = None) -> list[frozenset[int]]:
    return [from_mask(c) for c in component_masks(G, _within_mask(G, within))]


def is_connected(G: Graph, within: Optional[Iterable[int]] = None) -> bool:
    return is_connected_mask(G, _within_mask(G, within))


def is_separator(G: Graph, S: Iterable[int]) -> bool:
    """True iff removing ``S`` from the connected graph ``G`` disconnects or empties it."""
    if not is_connected(G):
        raise ValueError("separators are only defined for connected graphs")
    rest = G.full_mask & ~_within_mask(G, S)
    return rest == 0 or len(component_masks(G, rest)) > 1


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise KeyError(f"vertex {v} not in graph on {G.n} vertices")


def _check_edge(G: Graph, e: Sequence[int]) -> Edge:
    u, v = e
    _check_vertex(G, u)
    _check_vertex(G, v)
    if not G.has_edge(u, v):
        raise KeyError(f"{tuple(e)} is not an edge")
    return _norm_edge(u, v)


def induced_subgraph(G: Graph, within: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph renumbered in increasing vertex order, plus the old->new map."""
    keep = sorted(set(within))
    for v in keep:
        _check_vertex(G, v)
    mapping = {v: i for i, v in enumerate(keep)}
    edges = [(mapping[u], mapping[v]) for u, v in G.edges if u in mapping and v in mapping]
    labels = None if G.labels is None else [G.labels[v] for v in keep]
    return Graph.from_edges(len(keep), edges, labels), mapping


def delete_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    _check_vertex(G, v)
    return induced_subgraph(G, (w for w in G.vertices if w != v))


def delete_edge(G: Graph, e: Sequence[int]) -> Graph:
    edge = _check_edge(G, e)
    return Graph(G.n, G.edges - {edge}, G.labels)


def contract_edge(G: Graph, e: Sequence[int], coloring=None):
    """Merge the endpoints of ``e``.

    The merged vertex takes the smaller endpoint's id; higher ids shift down
    by one. With a coloring, the merged vertex receives the larger of the two
    colors. Returns ``(graph, coloring_or_None, old_to_new)``.
    """
    a, b = _check_edge(G, e)
    mapping = {}
    for v in G.vertices:
        if v == b:
            mapping[v] = a
        elif v > b:
            mapping[v] = v - 1
        else:
            mapping[v] = v
    edges = set()
    for u, v in G.edges:
        nu, nv = mapping[u], mapping[v]
        if nu != nv:
            edges.add(_norm_edge(nu, nv))
    labels = None
    if G.labels is not None:
        labels = [G.labels[v] for v in G.vertices if v != b]
    H = Graph.from_edges(G.n - 1, edges, labels)
    new_coloring = None
    if coloring is not None:
        from .coloring import Coloring

        colors = list(Coloring.of(coloring).colors)
        merged = max(colors[a], colors[b])
        del colors[b]
        colors[a] = merged
        new_coloring = Coloring(tuple(colors))
    return H, new_coloring, mapping


def canonical_path(path: Sequence[int]) -> PathWitness:
    """Orient a path so that its first endpoint has the smaller id."""
    p = tuple(path)
    if len(p) >= 2 and p[0] > p[-1]:
        return p[::-1]
    return p


def is_simple_path(G: Graph, path: Sequence[int], within: Optional[int] = None) -> bool:
    if not path:
        return False
    if len(set(path)) != len(path):
        return False
    for v in path:
        if not 0 <= v < G.n:
            return False
        if within is not None and not (within >> v) & 1:
            return False
    return all(G.has_edge(u, v) for u, v in zip(path, path[1:]))


def enumerate_simple_paths(
    G: Graph, within: Optional[Iterable[int]] = None, budget: int = 10**6
) -> Iterator[PathWitness]:
    """Yield every simple path of ``G[within]`` once, in canonical orientation.

    Single vertices count as paths. Paths come out in depth-first order from
    each start vertex in increasing id. If more than ``budget`` paths exist,
    :class:`BudgetExceeded` is raised after the first ``budget`` are yielded.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    mask = _within_mask(G, within)
    adj = G.adjacency
    emitted = 0

    for s in iter_bits(mask):
        path = [s]
        # explicit stack of neighbor iterators keeps deep paths off the C stack
        stack = [iter(adj[s])]
        visited = 1 << s
        if emitted == budget:
            raise BudgetExceeded(budget)
        emitted += 1
        yield (s,)
        while stack:
            for w in stack[-1]:
                if (mask >> w) & 1 and not (visited >> w) & 1:
                    path.append(w)
                    visited |= 1 << w
                    stack.append(iter(adj[w]))
                    if s < w:
                        if emitted == budget:
                            raise BudgetExceeded(budget)
                        emitted += 1
                        yield tuple(path)
                    break
            else:
                stack.pop()
                visited &= ~(1 << path.pop())


def always_connected_ordering(G: Graph, within: Optional[Iterable[int]] = None) -> tuple[int, ...]:
    """Order the vertices so that every prefix induces a connected subgraph.

    Starts at the smallest id and always extends by the smallest vertex
    adjacent to the prefix.
    """
    mask = _within_mask(G, within)
    if not is_connected_mask(G, mask):
        raise ValueError("always-connected orderings need a nonempty connected vertex set")
    start = (mask & -mask).bit_length() - 1
    order = [start]
    taken = 1 << start
    frontier = G.nbr_masks[start] & mask
    while taken != mask:
        nxt = (frontier & -frontier).bit_length() - 1
        order.append(nxt)
        taken |= 1 << nxt
        frontier = (frontier | G.nbr_masks[nxt]) & mask & ~taken
    return tuple(order)
