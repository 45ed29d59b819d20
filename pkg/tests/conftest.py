"""Independent reference computations shared by the test modules.

Nothing here calls into the search code it is used to check.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from pathcolor.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def all_directed_paths(G: Graph):
    """Every simple path as a vertex tuple, both orientations, via permutations."""
    out = []
    for r in range(1, G.n + 1):
        for perm in itertools.permutations(range(G.n), r):
            if all(G.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                out.append(perm)
    return out


def undirected_paths(G: Graph) -> set:
    return {p if len(p) < 2 or p[0] < p[-1] else p[::-1] for p in all_directed_paths(G)}


def _components(adj: dict, verts: frozenset) -> list[frozenset]:
    comps, left = [], set(verts)
    while left:
        start = min(left)
        comp, todo = {start}, [start]
        while todo:
            u = todo.pop()
            for w in adj[u]:
                if w in left and w not in comp:
                    comp.add(w)
                    todo.append(w)
        left -= comp
        comps.append(frozenset(comp))
    return comps


def naive_vcs(G: Graph) -> int:
    """Component-game value by plain minimax over explicit game positions."""
    adj = {v: set(G.adjacency[v]) for v in G.vertices}

    @lru_cache(maxsize=None)
    def game(verts: frozenset) -> int:
        if not verts:
            return 0
        best = 0
        for S in _components(adj, verts):
            best = max(best, 1 + min(game(S - {v}) for v in S))
        return best

    return game(frozenset(G.vertices))


def naive_vp(G: Graph) -> int:
    """Path-game value by plain minimax; moves enumerated from the permutation oracle."""
    paths = all_directed_paths(G)

    @lru_cache(maxsize=None)
    def game(verts: frozenset) -> int:
        if not verts:
            return 0
        moves = {frozenset(p) for p in paths if set(p) <= verts}
        return max(1 + min(game(S - {v}) for v in S) for S in moves)

    return game(frozenset(G.vertices))


def canonical_form(G: Graph) -> tuple:
    """Lexicographically smallest sorted edge list over all relabelings."""
    best = None
    for perm in itertools.permutations(range(G.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in G.edges))
        if best is None or key < best:
            best = key
    return (G.n, best)


@pytest.fixture
def acceptance():
    """Collects one summary line per acceptance criterion."""

    def record(criterion: str, ok: bool, detail: str) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
