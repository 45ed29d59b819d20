"""Colorings, their verifiers, and the explicit constructions.

Colors are positive integers. For conflict-free purposes they are only
labels; for unique-maximum purposes their order matters. ``k`` is always
the largest color actually used.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .generators import HedgehogLayout
from .graph import (
    BudgetExceeded,
    Graph,
    PathWitness,
    canonical_path,
    component_masks,
    iter_bits,
)

UM = "um"
CF = "cf"
PROPER = "proper"


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        cs = tuple(int(c) for c in self.colors)
        if any(c < 1 for c in cs):
            raise ValueError("colors must be positive integers")
        object.__setattr__(self, "colors", cs)

    @classmethod
    def of(cls, value: Union["Coloring", Sequence[int]]) -> "Coloring":
        return value if isinstance(value, Coloring) else cls(tuple(value))

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    @property
    def n(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def restrict(self, vertices: Sequence[int]) -> "Coloring":
        return Coloring(tuple(self.colors[v] for v in vertices))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification.

    ``valid`` is ``None`` when a budget ran out before a decision was
    reached. ``examined`` counts search nodes (paths or components).
    """

    kind: str
    valid: Optional[bool]
    witness: Optional[PathWitness] = None
    examined: int = 0
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def inconclusive(self) -> bool:
        return self.valid is None

    def __bool__(self) -> bool:
        raise TypeError("use .valid; a Verdict may be inconclusive")


def _total(G: Graph, C) -> Coloring:
    C = Coloring.of(C)
    if len(C) != G.n:
        raise ValueError(f"coloring has {len(C)} entries for a graph on {G.n} vertices")
    return C


def violates(kind: str, colors: Sequence[int]) -> bool:
    """Literal check of one path's color sequence against a coloring rule."""
    counts = Counter(colors)
    if kind == UM:
        return counts[max(colors)] != 1
    if kind == CF:
        return all(c >= 2 for c in counts.values())
    if kind == PROPER:
        return any(a == b for a, b in zip(colors, colors[1:]))
    raise ValueError(f"unknown coloring kind {kind!r}")


def verify_proper(G: Graph, C) -> Verdict:
    C = _total(G, C)
    for u, v in sorted(G.edges):
        if C[u] == C[v]:
            return Verdict(PROPER, False, (u, v), examined=len(G.edges))
    return Verdict(PROPER, True, examined=len(G.edges))


def _bfs_path(G: Graph, src: int, dst: int, within: int) -> PathWitness:
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in G.adjacency[u]:
            if (within >> w) & 1 and w not in prev:
                prev[w] = u
                queue.append(w)
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return canonical_path(path[::-1])


def verify_unique_maximum(G: Graph, C) -> Verdict:
    """Polynomial check: in every component the top color must be unique;
    peel that vertex off and repeat on what remains."""
    C = _total(G, C)
    stack = component_masks(G, G.full_mask)
    examined = 0
    while stack:
        comp = stack.pop()
        examined += 1
        top = max(C[v] for v in iter_bits(comp))
        holders = [v for v in iter_bits(comp) if C[v] == top]
        if len(holders) > 1:
            witness = _bfs_path(G, holders[0], holders[1], comp)
            return Verdict(UM, False, witness, examined)
        rest = comp & ~(1 << holders[0])
        stack.extend(component_masks(G, rest))
    return Verdict(UM, True, examined=examined)


def find_cf_violation(
    G: Graph,
    colors: Sequence[int],
    within: int,
    starts: Optional[Sequence[int]] = None,
    budget: int = 10**7,
) -> tuple[Optional[list[int]], int]:
    """Search ``G[within]`` for a path on which no color occurs exactly once.

    Only paths beginning at one of ``starts`` (default: every vertex of
    ``within``) are explored. A partial path is extended only while each
    color seen exactly once on it still has a vertex of that color reachable
    from the tail through unvisited vertices; no extension can repair a path
    failing that test, so the pruning is exact.

    Returns ``(path_or_None, nodes_examined)``. Raises
    :class:`BudgetExceeded` once more than ``budget`` nodes were examined.
    """
    adj = G.adjacency
    nbr = G.nbr_masks
    color_mask: dict[int, int] = {}
    for v in iter_bits(within):
        color_mask[colors[v]] = color_mask.get(colors[v], 0) | (1 << v)

    def reach(tail: int, visited: int) -> int:
        free = within & ~visited
        seen = 0
        frontier = nbr[tail] & free
        while frontier:
            seen |= frontier
            grow = 0
            for v in iter_bits(frontier):
                grow |= nbr[v]
            frontier = grow & free & ~seen
        return seen

    examined = 0
    if starts is None:
        starts = list(iter_bits(within))
    for s in starts:
        examined += 1
        if examined > budget:
            raise BudgetExceeded(budget)
        visited = 1 << s
        if not color_mask[colors[s]] & reach(s, visited):
            continue
        count = {colors[s]: 1}
        once = {colors[s]}
        path = [s]
        stack = [iter(adj[s])]
        while stack:
            advanced = False
            for w in stack[-1]:
                if not (within >> w) & 1 or (visited >> w) & 1:
                    continue
                cw = colors[w]
                c = count.get(cw, 0) + 1
                count[cw] = c
                if c == 1:
                    once.add(cw)
                elif c == 2:
                    once.discard(cw)
                visited |= 1 << w
                path.append(w)
                examined += 1
                if examined > budget:
                    raise BudgetExceeded(budget)
                if not once:
                    return path, examined
                r = reach(w, visited)
                if all(color_mask[c1] & r for c1 in once):
                    stack.append(iter(adj[w]))
                    advanced = True
                    break
                path.pop()
                visited &= ~(1 << w)
                c -= 1
                count[cw] = c
                if c == 1:
                    once.add(cw)
                elif c == 0:
                    once.discard(cw)
            if not advanced:
                stack.pop()
                if len(path) > 1:
                    u = path.pop()
                    visited &= ~(1 << u)
                    cu = colors[u]
                    c = count[cu] - 1
                    count[cu] = c
                    if c == 1:
                        once.add(cu)
                    elif c == 0:
                        once.discard(cu)
    return None, examined


def verify_conflict_free(G: Graph, C, budget: int = 10**7) -> Verdict:
    """Decide conflict-freeness by exhaustive (pruned) path search.

    Running out of ``budget`` search nodes yields an inconclusive verdict.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    C = _total(G, C)
    try:
        path, examined = find_cf_violation(G, C.colors, G.full_mask, budget=budget)
    except BudgetExceeded:
        return Verdict(CF, None, examined=budget, notes={"budget": budget})
    if path is None:
        return Verdict(CF, True, examined=examined)
    return Verdict(CF, False, canonical_path(path), examined)


def brute_force_verify(G: Graph, C, kind: str, budget: int = 10**6) -> Verdict:
    """Check a coloring rule on every directed simple path, without shortcuts.

    Deliberately naive; it serves as the reference the faster verifiers are
    tested against.
    """
    C = _total(G, C)
    if kind not in (UM, CF, PROPER):
        raise ValueError(f"unknown coloring kind {kind!r}")
    examined = 0

    def walk(path: list[int], on_path: set[int]):
        nonlocal examined
        examined += 1
        if examined > budget:
            raise BudgetExceeded(budget)
        if violates(kind, [C[v] for v in path]):
            return tuple(path)
        for w in G.adjacency[path[-1]]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                found = walk(path, on_path)
                path.pop()
                on_path.discard(w)
                if found:
                    return found
        return None

    try:
        for s in range(G.n):
            found = walk([s], {s})
            if found:
                return Verdict(kind, False, canonical_path(found), examined)
    except BudgetExceeded:
        return Verdict(kind, None, examined=examined, notes={"budget": budget})
    return Verdict(kind, True, examined=examined)


# -- explicit constructions --------------------------------------------------


def um_coloring_path(n: int) -> Coloring:
    """Ruler coloring of ``P_n``: vertex ``i`` gets one plus the 2-adic
    valuation of ``i+1``. Uses ``floor(log2 n) + 1`` colors."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Coloring(tuple(((i + 1) & -(i + 1)).bit_length() for i in range(n)))


def _fill_cf(lay: HedgehogLayout, out: list[int]) -> None:
    # colors are written relative to this sub-hedgehog: 1..2^(k+1)-1
    if lay.k == 0:
        out[lay.offset] = 1
        return
    q = 2 ** (lay.k + 1) - 1
    for i, v in enumerate(lay.clique, start=1):
        out[v] = i
    for i, sub in enumerate(lay.copies, start=1):
        _fill_cf(sub, out)
        for v in sub.vertices:
            out[v] = (out[v] + i - 1) % q + 1


def cf_coloring_hedgehog(layout: HedgehogLayout) -> Coloring:
    """Conflict-free coloring of the hedgehog with ``2^(k+1)-1`` colors.

    Clique vertex ``i`` gets color ``i``; copy ``i`` reuses the recursive
    coloring shifted up by ``i`` and wrapped cyclically into ``1..2^(k+1)-1``.
    """
    out = [0] * (layout.offset + layout.size)
    _fill_cf(layout, out)
    return Coloring(tuple(out[v] for v in layout.vertices))


def _fill_um(lay: HedgehogLayout, out: list[int]) -> int:
    if lay.k == 0:
        out[lay.offset] = 1
        return 1
    used = 0
    for sub in lay.copies:
        used = _fill_um(sub, out)
    for i, v in enumerate(lay.clique, start=1):
        out[v] = used + i
    return used + len(lay.clique)


def um_coloring_hedgehog(layout: HedgehogLayout) -> Coloring:
    """Unique-maximum coloring: every copy colored identically with the low
    colors, the clique takes the next ``2^(k+1)-1`` colors on top."""
    out = [0] * (layout.offset + layout.size)
    _fill_um(layout, out)
    return Coloring(tuple(out[v] for v in layout.vertices))
