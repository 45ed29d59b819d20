"""Exact chromatic numbers for small graphs, plus closed forms and bound tables."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .coloring import Coloring, find_cf_violation, verify_conflict_free
from .graph import (
    BudgetExceeded,
    Graph,
    component_masks,
    iter_bits,
    popcount,
)

CHI_CAP = 20
UM_CAP = 24
CF_CAP = 16


class ResourceLimitError(RuntimeError):
    """The instance is larger than the solver is configured to handle."""


class Inconclusive(RuntimeError):
    """A budget ran out; the optimum is only known to lie in ``[lower, upper]``."""

    def __init__(self, lower: int, upper: int, certificate: Optional[Coloring] = None, nodes: int = 0):
        self.lower = lower
        self.upper = upper
        self.certificate = certificate
        self.nodes = nodes
        super().__init__(f"budget exhausted; optimum lies in [{lower}, {upper}]")


def _check_cap(G: Graph, cap: int) -> None:
    if G.n > cap:
        raise ResourceLimitError(f"graph has {G.n} vertices, solver cap is {cap}")


def clique_number(G: Graph) -> int:
    nbr = G.nbr_masks
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & nbr[v])

    expand(0, G.full_mask)
    return best


# -- ordinary chromatic number ----------------------------------------------


def chi_exact(G: Graph, cap: int = CHI_CAP) -> tuple[int, Coloring]:
    """Minimum proper coloring by branch and bound.

    Colors are introduced in first-occurrence order, so a vertex may only
    open the next unused color; this removes color-permutation symmetry.
    """
    _check_cap(G, cap)
    n = G.n
    if n == 0:
        return 0, Coloring(())
    order = sorted(G.vertices, key=lambda v: -G.degree(v))
    assign = [0] * n
    best_k = n + 1
    best: list[int] = list(range(1, n + 1))
    lower = clique_number(G)

    def rec(i: int, used: int) -> bool:
        nonlocal best_k, best
        if used >= best_k:
            return False
        if i == n:
            best_k, best = used, assign.copy()
            return best_k == lower
        v = order[i]
        taken = {assign[w] for w in G.adjacency[v]}
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if c in taken:
                continue
            assign[v] = c
            if rec(i + 1, max(used, c)):
                return True
        assign[v] = 0
        return False

    rec(0, 0)
    return best_k, Coloring(tuple(best))


# -- unique-maximum chromatic number via the component game ------------------


class RankingSolver:
    """Memoized value of the connected component game on ``G``.

    ``value(U)`` for a connected vertex set ``U`` is one plus the minimum,
    over the vertex removed, of the largest value among the components left
    behind. Memo keys are bitmasks of the original graph, so components found
    from different parents share entries.
    """

    def __init__(self, G: Graph, cap: int = UM_CAP):
        _check_cap(G, cap)
        self.G = G
        self.memo: dict[int, tuple[int, int]] = {}
        self.nodes = 0

    def value(self, mask: int) -> int:
        """Game value of ``G[mask]`` (the largest over its components)."""
        best = 0
        for comp in component_masks(self.G, mask):
            best = max(best, self._connected(comp)[0])
        return best

    def _connected(self, comp: int) -> tuple[int, int]:
        hit = self.memo.get(comp)
        if hit is not None:
            return hit
        self.nodes += 1
        if comp & (comp - 1) == 0:
            res = (1, comp.bit_length() - 1)
            self.memo[comp] = res
            return res
        best, best_v = popcount(comp) + 1, -1
        for v in iter_bits(comp):
            worst = 0
            for sub in component_masks(self.G, comp & ~(1 << v)):
                worst = max(worst, self._connected(sub)[0])
                if worst + 1 >= best:
                    break
            if worst + 1 < best:
                best, best_v = worst + 1, v
                if worst == 0:
                    break
        res = (best, best_v)
        self.memo[comp] = res
        return res

    def best_removal(self, comp: int) -> int:
        """Vertex whose removal realizes the value of connected ``comp``."""
        return self._connected(comp)[1]

    def coloring(self) -> Coloring:
        """Optimal unique-maximum coloring read off the game tree."""
        colors = [0] * self.G.n
        stack = component_masks(self.G, self.G.full_mask)
        while stack:
            comp = stack.pop()
            val, v = self._connected(comp)
            colors[v] = val
            stack.extend(component_masks(self.G, comp & ~(1 << v)))
        return Coloring(tuple(colors))


def chi_um_exact(G: Graph, cap: int = UM_CAP) -> tuple[int, Coloring]:
    solver = RankingSolver(G, cap)
    k = solver.value(G.full_mask)
    return k, solver.coloring()


# -- conflict-free chromatic number ----------------------------------------


@dataclass
class CFSearchStats:
    complete_checks: int = 0
    nodes: int = 0


def _search_order(G: Graph) -> list[int]:
    order: list[int] = []
    for comp in component_masks(G, G.full_mask):
        start = min(iter_bits(comp), key=lambda v: (-G.degree(v), v))
        seen = {start}
        queue = [start]
        for u in queue:
            for w in G.adjacency[u]:
                if (comp >> w) & 1 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        order.extend(queue)
    return order


def _cf_with_k(G: Graph, k: int, stats: CFSearchStats, budget: int, path_budget: int):
    """Find a conflict-free coloring with at most ``k`` colors, or None.

    Returns ``(coloring_or_None, undecided)`` where ``undecided`` is True if
    some candidate could not be checked within ``path_budget``.
    """
    order = _search_order(G)
    n = G.n
    colors = [0] * n
    undecided = False

    def rec(i: int, prefix: int, used: int):
        nonlocal undecided
        if i == n:
            stats.complete_checks += 1
            if stats.complete_checks > budget:
                raise BudgetExceeded(budget)
            verdict = verify_conflict_free(G, colors, budget=path_budget)
            stats.nodes += verdict.examined
            if verdict.valid is None:
                undecided = True
                return None
            return Coloring(tuple(colors)) if verdict.valid else None
        v = order[i]
        mask = prefix | (1 << v)
        for c in range(1, min(used + 1, k) + 1):
            if any(colors[w] == c for w in G.adjacency[v]):
                continue
            colors[v] = c
            stats.nodes += 1
            # any violating path inside the colored prefix dooms every completion
            try:
                bad, examined = find_cf_violation(G, colors, mask, starts=(v,), budget=path_budget)
                stats.nodes += examined
            except BudgetExceeded:
                bad = None
            if bad is None:
                found = rec(i + 1, mask, max(used, c))
                if found is not None:
                    return found
        colors[v] = 0
        return None

    return rec(0, 0, 0), undecided


def chi_cf_exact(
    G: Graph, budget: int = 10**6, path_budget: int = 10**6, cap: int = CF_CAP
) -> tuple[int, Coloring]:
    """Conflict-free chromatic number by iterative deepening on ``k``.

    Starts from the clique number (a clique forces pairwise distinct colors)
    and stops no later than the unique-maximum optimum, whose coloring is
    conflict-free. ``budget`` caps the number of complete colorings checked;
    when it or ``path_budget`` binds, :class:`Inconclusive` is raised with
    the bracketing bounds reached.
    """
    _check_cap(G, cap)
    if G.n == 0:
        return 0, Coloring(())
    upper, cert = chi_um_exact(G)
    lower = max(1, clique_number(G))
    stats = CFSearchStats()
    for k in range(lower, upper):
        try:
            found, undecided = _cf_with_k(G, k, stats, budget, path_budget)
        except BudgetExceeded:
            raise Inconclusive(k, upper, cert, stats.nodes) from None
        if found is not None:
            return found.k, found
        if undecided:
            raise Inconclusive(k, upper, cert, stats.nodes)
    return upper, cert


def chi_by_definition(G: Graph, kind: str, cap: int = 7) -> int:
    """Smallest ``k`` admitting a coloring that passes the literal path check.

    Tries every assignment of colors ``1..k`` for increasing ``k`` and checks
    each candidate against every simple path. Exponential in everything;
    only meant as a reference for tiny graphs.
    """
    from .coloring import CF, UM, brute_force_verify

    _check_cap(G, cap)
    if kind not in (UM, CF):
        raise ValueError(f"unknown coloring kind {kind!r}")
    n = G.n
    if n == 0:
        return 0
    edges = sorted(G.edges)
    for k in range(1, n + 1):
        for colors in itertools.product(range(1, k + 1), repeat=n):
            if any(colors[u] == colors[v] for u, v in edges):
                continue
            if brute_force_verify(G, colors, kind).valid:
                return k
    return n


@dataclass
class ChromaticReport:
    chi: Optional[int] = None
    chi_cf: Optional[int] = None
    chi_um: Optional[int] = None
    certificates: dict[str, Coloring] = field(default_factory=dict)
    method: dict[str, str] = field(default_factory=dict)

    def consistent(self) -> bool:
        if None in (self.chi, self.chi_cf, self.chi_um):
            return True
        return self.chi <= self.chi_cf <= self.chi_um <= 2**self.chi_cf - 1


def chromatic_report(G: Graph, budget: int = 10**6) -> ChromaticReport:
    rep = ChromaticReport()
    rep.chi, rep.certificates["chi"] = chi_exact(G)
    rep.method["chi"] = "branch and bound"
    rep.chi_um, rep.certificates["um"] = chi_um_exact(G)
    rep.method["um"] = "component game minimax"
    try:
        rep.chi_cf, rep.certificates["cf"] = chi_cf_exact(G, budget=budget)
        rep.method["cf"] = "iterative deepening"
    except Inconclusive as exc:
        rep.method["cf"] = f"inconclusive in [{exc.lower}, {exc.upper}]"
    return rep


# -- closed forms and bound tables -----------------------------------------


def closed_forms(family: str, param: int):
    """Known exact values (or an interval) for the standard families.

    ``path_um`` and ``path_cf`` take the path length, the hedgehog forms
    take the level ``k``.
    """
    if family in ("path_um", "path_cf"):
        if param < 1:
            raise ValueError("path length must be at least 1")
        return param.bit_length()  # floor(log2 n) + 1
    if family == "hedgehog_cf":
        return 2 ** (param + 1) - 1
    if family == "hedgehog_um_interval":
        return (2 ** (param + 2) - 2 * param - 3, 2 ** (param + 2) - param - 3)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class GridBound:
    name: str
    quantity: str
    direction: str
    value: Optional[float]
    formula: str
    note: str = ""


def log_corrected_lower_bound(m: float) -> float:
    return 5 * m / 3 - math.log(m) / math.log(2.5)


def grid_bounds(m: int) -> dict[str, GridBound]:
    """Evaluate the published bounds on the grid chromatic numbers at ``m``."""
    if m < 2:
        raise ValueError("grid bounds are stated for m >= 2")
    half = m // 2
    out = [
        GridBound("um_lower_3m_2", "chi_um(G_m)", ">=", float(Fraction(3, 2) * m), "3m/2"),
        GridBound("um_upper_2519", "chi_um(G_m)", "<=", float(Fraction("2.519") * m), "2.519m"),
        GridBound(
            "um_lower_5m_3_log52",
            "chi_um(G_m)",
            ">=",
            log_corrected_lower_bound(m),
            "5m/3 - log_{5/2} m",
        ),
        GridBound(
            "um_lower_5m_3_sharp",
            "chi_um(G_m)",
            ">=",
            None,
            "5m/3 - <unresolved log term>",
            "exact logarithmic term left open; not evaluated",
        ),
        GridBound(
            "cf_lower_5m_6",
            "chi_cf(G_m)",
            ">=",
            5 * m / 6 - 10 * math.log2(m),
            "5m/6 - 10 log2 m",
        ),
        GridBound(
            "cf_lower_half_grid",
            "chi_cf(G_m)",
            ">=",
            log_corrected_lower_bound(half) if half >= 2 else float(half),
            "chi_um(G_{floor(m/2)}) >= 5/3 floor(m/2) - log_{5/2} floor(m/2)",
            "chains chi_cf(G_m) >= chi_um(G_{m/2}) with the 5m/3 lower bound",
        ),
    ]
    return {b.name: b for b in out}
