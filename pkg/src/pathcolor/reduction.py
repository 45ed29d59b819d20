"""Hamiltonian-path to conflict-free-checking reduction.

From a graph ``G`` on ``n`` vertices build ``G*``: an upper and a lower copy
of ``G`` plus, for each ``i``, a connecting path from upper ``i`` to lower
``i`` through ``n-1`` fresh vertices ``v[i,j]`` (``j != i``). Every color of
the accompanying coloring is used exactly twice, and the coloring is
conflict-free exactly when ``G`` has no Hamiltonian path.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .coloring import Coloring, Verdict, verify_conflict_free, violates, CF
from .graph import Graph, PathWitness, is_simple_path
from .solvers import ResourceLimitError

HAM_CAP = 12


@dataclass(frozen=True)
class ReductionArtifact:
    source: Graph
    gstar: Graph
    coloring: Coloring
    upper: tuple[int, ...]
    lower: tuple[int, ...]
    connector: dict[tuple[int, int], int]

    def connecting_path(self, i: int) -> tuple[int, ...]:
        """Vertices of the ``i``-th connecting path (1-based), upper end first."""
        n = self.source.n
        inner = tuple(self.connector[(i, j)] for j in range(1, n + 1) if j != i)
        return (self.upper[i - 1],) + inner + (self.lower[i - 1],)

    def roles(self) -> dict[str, object]:
        return {
            "upper": list(self.upper),
            "lower": list(self.lower),
            "connector": {f"{i},{j}": v for (i, j), v in sorted(self.connector.items())},
        }


def connector_color(n: int, i: int, j: int) -> int:
    """Shared color of ``v[i,j]`` and ``v[j,i]`` (1-based, ``i != j``)."""
    hi, lo = max(i, j), min(i, j)
    return n + comb(hi - 1, 2) + lo


def build_reduction(G: Graph) -> ReductionArtifact:
    n = G.n
    if n < 2:
        raise ValueError("the reduction needs at least two vertices")
    upper = tuple(range(n))
    lower = tuple(range(n, 2 * n))
    edges = []
    for u, v in G.edges:
        edges.append((upper[u], upper[v]))
        edges.append((lower[u], lower[v]))
    connector: dict[tuple[int, int], int] = {}
    colors = [0] * (2 * n + n * (n - 1))
    labels: list[dict] = [None] * len(colors)  # type: ignore[list-item]
    for i in range(1, n + 1):
        colors[upper[i - 1]] = colors[lower[i - 1]] = i
        labels[upper[i - 1]] = {"role": "upper", "i": i}
        labels[lower[i - 1]] = {"role": "lower", "i": i}
    nxt = 2 * n
    for i in range(1, n + 1):
        prev = upper[i - 1]
        for j in range(1, n + 1):
            if j == i:
                continue
            connector[(i, j)] = nxt
            colors[nxt] = connector_color(n, i, j)
            labels[nxt] = {"role": "connector", "i": i, "j": j}
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, lower[i - 1]))
    gstar = Graph.from_edges(len(colors), edges, labels)
    return ReductionArtifact(G, gstar, Coloring(tuple(colors)), upper, lower, connector)


def hamiltonian_path_exists(G: Graph, cap: int = HAM_CAP) -> Optional[PathWitness]:
    """A Hamiltonian path of ``G`` if one exists (subset dynamic program)."""
    n = G.n
    if n > cap:
        raise ResourceLimitError(f"graph has {n} vertices, Hamiltonian path cap is {cap}")
    if n == 0:
        return None
    nbr = G.nbr_masks
    full = (1 << n) - 1
    # ends[s]: vertices at which some path covering exactly s can end
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for s in range(1, full + 1):
        e = ends[s]
        if not e:
            continue
        v = 0
        while e:
            if e & 1:
                ext = nbr[v] & ~s
                w = 0
                while ext:
                    if ext & 1:
                        ends[s | (1 << w)] |= 1 << w
                    ext >>= 1
                    w += 1
            e >>= 1
            v += 1
    if not ends[full]:
        return None
    # walk back from the smallest feasible end
    path = [(ends[full] & -ends[full]).bit_length() - 1]
    s = full
    while s & (s - 1):
        cur = path[-1]
        rest = s & ~(1 << cur)
        cand = ends[rest] & nbr[cur]
        prev = (cand & -cand).bit_length() - 1
        path.append(prev)
        s = rest
    path.reverse()
    if path[0] > path[-1]:
        path.reverse()
    return tuple(path)


def zigzag_path(art: ReductionArtifact, order: PathWitness) -> tuple[int, ...]:
    """Walk of ``G*`` covering everything, built from a Hamiltonian path of ``G``.

    Starts at the upper copy of ``order[0]``, runs down its connecting path,
    steps to the lower copy of ``order[1]``, runs up, and so on, alternating.
    """
    walk: list[int] = []
    for step, v in enumerate(order):
        conn = art.connecting_path(v + 1)
        walk.extend(conn if step % 2 == 0 else conn[::-1])
    return tuple(walk)


@dataclass
class EquivalenceReport:
    hamiltonian_path: Optional[PathWitness]
    verdict: Verdict
    zigzag: Optional[tuple[int, ...]] = None
    zigzag_ok: Optional[bool] = None

    @property
    def inconclusive(self) -> bool:
        return self.verdict.inconclusive

    @property
    def agree(self) -> Optional[bool]:
        """True if the two sides match, None if the coloring check ran out of budget."""
        if self.verdict.inconclusive:
            return None
        has_ham = self.hamiltonian_path is not None
        return has_ham == (not self.verdict.valid) and self.zigzag_ok is not False


def check_reduction_equivalence(G: Graph, budget: int = 10**6) -> EquivalenceReport:
    """Compute both sides independently and compare them."""
    ham = hamiltonian_path_exists(G)
    art = build_reduction(G)
    verdict = verify_conflict_free(art.gstar, art.coloring, budget=budget)
    report = EquivalenceReport(ham, verdict)
    if ham is not None:
        walk = zigzag_path(art, ham)
        report.zigzag = walk
        report.zigzag_ok = (
            is_simple_path(art.gstar, walk)
            and len(walk) == art.gstar.n
            and violates(CF, [art.coloring[v] for v in walk])
        )
    return report
