"""The connected component game and the path game.

Each round the maximizer picks a vertex set ``S`` of the surviving graph
(a connected component, or the vertex set of a path), the minimizer picks a
vertex ``v`` in it, and the game continues on ``S`` minus ``v``. The score is
the number of rounds played.

Strategies are plain callables. A maximizer receives the current
:class:`GameState` and returns its move; in the path game a move may be a
vertex sequence (checked edge by edge) or a set (checked for a spanning
path). A minimizer receives the state and the chosen set and returns a vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Collection, Iterable, Optional, Sequence, Union

from .generators import GridLayout, grid_graph
from .graph import (
    BudgetExceeded,
    Graph,
    always_connected_ordering,
    component_mask,
    component_masks,
    from_mask,
    is_connected_mask,
    is_simple_path,
    iter_bits,
    popcount,
    to_mask,
)
from .solvers import UM_CAP, Inconclusive, RankingSolver, _check_cap

COMPONENT = "component"
PATH = "path"

VP_CAP = 16


class IllegalMove(ValueError):
    def __init__(self, round_no: int, rule: str):
        self.round_no = round_no
        self.rule = rule
        super().__init__(f"round {round_no}: {rule}")


@dataclass(frozen=True)
class Round:
    chosen: frozenset[int]
    vertex: int
    path: Optional[tuple[int, ...]] = None


@dataclass
class GameTranscript:
    kind: str
    rounds: list[Round] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.rounds)

    def to_log(self) -> str:
        lines = []
        for i, r in enumerate(self.rounds, start=1):
            ids = ",".join(str(v) for v in sorted(r.chosen))
            lines.append(f"{i}|{ids}|{r.vertex}")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_log(cls, text: str, kind: str = COMPONENT) -> "GameTranscript":
        rounds = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            idx, ids, v = line.split("|")
            if int(idx) != len(rounds) + 1:
                raise ValueError(f"line {lineno}: round {idx} out of sequence")
            chosen = frozenset(int(x) for x in ids.split(",") if x)
            rounds.append(Round(chosen, int(v)))
        return cls(kind, rounds)


@dataclass(frozen=True)
class GameState:
    graph: Graph
    kind: str
    transcript: GameTranscript
    surviving: frozenset[int]

    @property
    def round(self) -> int:
        return self.transcript.length + 1

    @property
    def mask(self) -> int:
        return to_mask(self.surviving)


Move = Union[Sequence[int], Collection[int]]
Maximizer = Callable[[GameState], Move]
Minimizer = Callable[[GameState, frozenset], int]


# -- legality ----------------------------------------------------------------


def spanning_path(G: Graph, mask: int) -> Optional[tuple[int, ...]]:
    """A path of ``G`` whose vertex set is exactly ``mask``, if one exists.

    Dynamic program over subsets of ``mask``; intended for the small sets
    that show up as game moves.
    """
    verts = list(iter_bits(mask))
    if not verts:
        return None
    if len(verts) > 20:
        raise BudgetExceeded(20, "set too large for spanning-path search")
    idx = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    local_nbr = [to_mask(idx[w] for w in G.adjacency[v] if w in idx) for v in verts]
    # reach[s] = bitmask of end vertices of paths covering exactly s
    reach = [0] * (1 << k)
    parent: dict[tuple[int, int], int] = {}
    for i in range(k):
        reach[1 << i] = 1 << i
    for s in range(1, 1 << k):
        ends = reach[s]
        if not ends:
            continue
        for e in iter_bits(ends):
            ext = local_nbr[e] & ~s
            for w in iter_bits(ext):
                t = s | (1 << w)
                if not (reach[t] >> w) & 1:
                    reach[t] |= 1 << w
                    parent[(t, w)] = e
    full = (1 << k) - 1
    if not reach[full]:
        return None
    end = (reach[full] & -reach[full]).bit_length() - 1
    seq = [end]
    s = full
    while s & (s - 1):
        prev = parent[(s, seq[-1])]
        s &= ~(1 << seq[-1])
        seq.append(prev)
    out = tuple(verts[i] for i in reversed(seq))
    return out if out[0] <= out[-1] else out[::-1]


def _check_move(state: GameState, move: Move) -> tuple[frozenset, Optional[tuple[int, ...]]]:
    G, i, U = state.graph, state.round, state.mask
    if isinstance(move, (list, tuple)):
        seq: Optional[tuple[int, ...]] = tuple(move)
        chosen = frozenset(seq)
        if len(chosen) != len(seq):
            raise IllegalMove(i, "the chosen path repeats a vertex")
    else:
        seq = None
        chosen = frozenset(move)
    if not chosen:
        raise IllegalMove(i, "the maximizer must choose a nonempty set")
    S = to_mask(chosen)
    if S & ~U:
        raise IllegalMove(i, "the chosen set contains vertices outside the surviving graph")
    if state.kind == COMPONENT:
        low = (S & -S).bit_length() - 1
        if component_mask(G, low, U) != S:
            raise IllegalMove(i, "the chosen set is not a connected component")
        return chosen, None
    if seq is not None:
        if not is_simple_path(G, seq, U):
            raise IllegalMove(i, "the chosen sequence is not a path of the surviving graph")
        return chosen, seq
    found = spanning_path(G, S)
    if found is None:
        raise IllegalMove(i, "the chosen set is not the vertex set of a path")
    return chosen, found


def play_game(
    G: Graph,
    kind: str,
    maximizer: Maximizer,
    minimizer: Minimizer,
    max_rounds: Optional[int] = None,
) -> GameTranscript:
    """Run one match, validating every move."""
    if kind not in (COMPONENT, PATH):
        raise ValueError(f"unknown game kind {kind!r}")
    transcript = GameTranscript(kind)
    surviving = frozenset(G.vertices)
    while surviving:
        state = GameState(G, kind, transcript, surviving)
        chosen, path = _check_move(state, maximizer(state))
        v = minimizer(state, chosen)
        if v not in chosen:
            raise IllegalMove(state.round, f"vertex {v} is not in the chosen set")
        transcript.rounds.append(Round(chosen, v, path))
        surviving = chosen - {v}
        if max_rounds is not None and transcript.length >= max_rounds:
            break
    return transcript


def worst_case_length(
    G: Graph, kind: str, maximizer: Maximizer, node_budget: int = 10**6
) -> tuple[int, GameTranscript]:
    """Shortest game the maximizer can be held to, trying every minimizer reply.

    The maximizer is treated as a deterministic function of the state.
    Returns the minimum length and one transcript attaining it.
    """
    nodes = 0

    def rec(transcript: GameTranscript, surviving: frozenset) -> tuple[int, list[Round]]:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(node_budget)
        if not surviving:
            return 0, []
        state = GameState(G, kind, transcript, surviving)
        chosen, path = _check_move(state, maximizer(state))
        best: Optional[tuple[int, list[Round]]] = None
        for v in sorted(chosen):
            r = Round(chosen, v, path)
            sub = GameTranscript(kind, transcript.rounds + [r])
            length, tail = rec(sub, chosen - {v})
            if best is None or length + 1 < best[0]:
                best = (length + 1, [r] + tail)
        assert best is not None
        return best

    length, rounds = rec(GameTranscript(kind), frozenset(G.vertices))
    return length, GameTranscript(kind, rounds)


# -- optimal values ----------------------------------------------------------


def vcs_value(G: Graph, cap: int = UM_CAP) -> int:
    """Optimal length of the connected component game."""
    if G.n == 0:
        return 0
    return RankingSolver(G, cap).value(G.full_mask)


class PathGameSolver:
    """Memoized minimax value of the path game.

    Moves are distinct path vertex sets; two paths over the same vertices
    are interchangeable for the game. The value of a set never exceeds its
    component-game value, which serves as an early cut-off.
    """

    def __init__(self, G: Graph, budget: int = 10**7, cap: int = VP_CAP):
        _check_cap(G, cap)
        self.G = G
        self.budget = budget
        self.steps = 0
        self.memo: dict[int, int] = {}
        self.path_sets: dict[int, list[int]] = {}
        self.ranking = RankingSolver(G, max(cap, G.n))

    def _tick(self, amount: int = 1) -> None:
        self.steps += amount
        if self.steps > self.budget:
            raise BudgetExceeded(self.budget)

    def moves(self, comp: int) -> list[int]:
        """Distinct vertex sets of paths in ``G[comp]``, largest first."""
        hit = self.path_sets.get(comp)
        if hit is not None:
            return hit
        adj = self.G.adjacency
        found = set()
        for s in iter_bits(comp):
            stack = [(s, 1 << s)]
            while stack:
                v, seen = stack.pop()
                self._tick()
                found.add(seen)
                for w in adj[v]:
                    if (comp >> w) & 1 and not (seen >> w) & 1:
                        stack.append((w, seen | (1 << w)))
        out = sorted(found, key=lambda m: (-popcount(m), m))
        self.path_sets[comp] = out
        return out

    def value(self, mask: int) -> int:
        best = 0
        for comp in component_masks(self.G, mask):
            best = max(best, self._connected(comp))
        return best

    def reply(self, S: int) -> int:
        """Minimizer's best vertex in a chosen set ``S``."""
        best_v, best = -1, None
        for v in iter_bits(S):
            val = self.value(S & ~(1 << v))
            if best is None or val < best:
                best_v, best = v, val
        return best_v

    def choice(self, mask: int) -> int:
        """Maximizer's best path vertex set inside ``mask``."""
        best_S, best = 0, -1
        for comp in component_masks(self.G, mask):
            for S in self.moves(comp):
                val = 1 + self.value(S & ~(1 << self.reply(S)))
                if val > best:
                    best_S, best = S, val
        return best_S

    def _connected(self, comp: int) -> int:
        hit = self.memo.get(comp)
        if hit is not None:
            return hit
        if comp & (comp - 1) == 0:
            self.memo[comp] = 1
            return 1
        ceiling = self.ranking.value(comp)
        best = 0
        for S in self.moves(comp):
            self._tick()
            worst = None
            for v in iter_bits(S):
                val = self.value(S & ~(1 << v))
                if worst is None or val < worst:
                    worst = val
                if worst + 1 <= best:
                    break
            if worst + 1 > best:
                best = worst + 1
                if best >= ceiling:
                    break
        self.memo[comp] = best
        return best


def vp_value(G: Graph, budget: int = 10**7, cap: int = VP_CAP) -> int:
    """Optimal length of the path game.

    Raises :class:`Inconclusive` with the bracketing bounds when ``budget``
    search steps are not enough: the lower bound comes from the longest
    path found (a path on ``n`` vertices is worth ``floor(log2 n) + 1``), the
    upper bound from the component game value.
    """
    if G.n == 0:
        return 0
    solver = PathGameSolver(G, budget, cap)
    try:
        return solver.value(G.full_mask)
    except BudgetExceeded:
        longest = max((popcount(m) for ms in solver.path_sets.values() for m in ms), default=1)
        raise Inconclusive(longest.bit_length(), solver.ranking.value(G.full_mask), nodes=solver.steps) from None


# -- stock strategies ------------------------------------------------------


def optimal_component_maximizer(G: Graph) -> Maximizer:
    solver = RankingSolver(G, max(UM_CAP, G.n))

    def choose(state: GameState) -> frozenset:
        comps = component_masks(G, state.mask)
        best = max(comps, key=lambda c: (solver.value(c), -c))
        return from_mask(best)

    return choose


def optimal_component_minimizer(G: Graph) -> Minimizer:
    solver = RankingSolver(G, max(UM_CAP, G.n))

    def choose(state: GameState, chosen: frozenset) -> int:
        return solver.best_removal(to_mask(chosen))

    return choose


def optimal_path_maximizer(G: Graph, budget: int = 10**7) -> Maximizer:
    solver = PathGameSolver(G, budget, max(VP_CAP, G.n))

    def choose(state: GameState) -> tuple[int, ...]:
        S = solver.choice(state.mask)
        return spanning_path(G, S)

    return choose


def optimal_path_minimizer(G: Graph, budget: int = 10**7) -> Minimizer:
    solver = PathGameSolver(G, budget, max(VP_CAP, G.n))

    def choose(state: GameState, chosen: frozenset) -> int:
        return solver.reply(to_mask(chosen))

    return choose


def _longest_path(G: Graph, mask: int, budget: int = 10**5) -> tuple[int, ...]:
    best: list[int] = []
    steps = 0
    for s in iter_bits(mask):
        stack = [[s]]
        while stack and steps < budget:
            path = stack.pop()
            steps += 1
            if len(path) > len(best):
                best = path
            for w in G.adjacency[path[-1]]:
                if (mask >> w) & 1 and w not in path:
                    stack.append(path + [w])
    return tuple(best)


def longest_path_maximizer(G: Graph) -> Maximizer:
    """Always plays a longest path (found exhaustively, smallest start first)."""

    def choose(state: GameState) -> tuple[int, ...]:
        return _longest_path(G, state.mask)

    return choose


def largest_component_maximizer(G: Graph) -> Maximizer:
    def choose(state: GameState) -> frozenset:
        comps = component_masks(G, state.mask)
        return from_mask(max(comps, key=lambda c: (popcount(c), -c)))

    return choose


def first_vertex_minimizer(G: Graph) -> Minimizer:
    return lambda state, chosen: min(chosen)


def random_maximizer(G: Graph, kind: str, seed: int = 0) -> Maximizer:
    rng = random.Random(seed)

    def choose(state: GameState):
        comps = component_masks(G, state.mask)
        comp = rng.choice(comps)
        if kind == COMPONENT:
            return from_mask(comp)
        # random self-avoiding walk from a random start
        v = rng.choice(list(iter_bits(comp)))
        path = [v]
        while True:
            options = [w for w in G.adjacency[path[-1]] if (comp >> w) & 1 and w not in path]
            if not options:
                return tuple(path)
            path.append(rng.choice(options))

    return choose


def random_minimizer(G: Graph, seed: int = 0) -> Minimizer:
    rng = random.Random(seed)
    return lambda state, chosen: rng.choice(sorted(chosen))


# -- quadruples and the grid translation -----------------------------------

UP, DOWN, LEFT, RIGHT = "up", "down", "left", "right"
DIRECTIONS = (UP, DOWN, LEFT, RIGHT)
_STEP = {UP: (0, 1), DOWN: (0, -1), LEFT: (-1, 0), RIGHT: (1, 0)}
OPPOSITE = {UP: DOWN, DOWN: UP, LEFT: RIGHT, RIGHT: LEFT}


@dataclass(frozen=True)
class QuadrupleMap:
    """Blocks ``Q[x,y]`` of four vertices tiling the even-sided grid ``G_m``.

    Coordinates are ``(x, y)`` with ``y`` growing upward; small-grid vertex
    ``(x, y)`` lifts to the 2x2 block with lower-left corner ``(2x, 2y)``.
    """

    m: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.m % 2:
            raise ValueError("quadruples need an even side length m >= 2")

    @property
    def half(self) -> int:
        return self.m // 2

    def tau(self, x: int, y: int) -> frozenset[tuple[int, int]]:
        if not (0 <= x < self.half and 0 <= y < self.half):
            raise ValueError(f"({x}, {y}) is not a vertex of the {self.half}x{self.half} grid")
        return frozenset({(2 * x, 2 * y), (2 * x + 1, 2 * y), (2 * x, 2 * y + 1), (2 * x + 1, 2 * y + 1)})

    def tau_set(self, S: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
        out: set = set()
        for x, y in S:
            out |= self.tau(x, y)
        return frozenset(out)

    def tau_inv(self, x: int, y: int) -> tuple[int, int]:
        return x // 2, y // 2

    def edge(self, x: int, y: int, d: str) -> frozenset[tuple[int, int]]:
        """The side of ``Q[x,y]`` facing direction ``d``, as a grid edge."""
        a, b = 2 * x, 2 * y
        return {
            UP: frozenset({(a, b + 1), (a + 1, b + 1)}),
            DOWN: frozenset({(a, b), (a + 1, b)}),
            LEFT: frozenset({(a, b), (a, b + 1)}),
            RIGHT: frozenset({(a + 1, b), (a + 1, b + 1)}),
        }[d]

    def neighbor(self, x: int, y: int, d: str) -> Optional[tuple[int, int]]:
        dx, dy = _STEP[d]
        nx, ny = x + dx, y + dy
        if 0 <= nx < self.half and 0 <= ny < self.half:
            return nx, ny
        return None


def open_directions(S: Collection[tuple[int, int]], v: tuple[int, int]) -> list[str]:
    """Directions in which ``v`` has no neighbor inside ``S``."""
    x, y = v
    return [d for d in DIRECTIONS if (x + _STEP[d][0], y + _STEP[d][1]) not in S]


def _detour(qm: QuadrupleMap, base: tuple[int, int], d: str) -> list[tuple[int, int]]:
    """Five-edge path replacing the ``d``-side of ``base``'s block.

    It starts and ends at the two endpoints of that side and runs through all
    four vertices of the neighboring block in direction ``d``.
    """
    x, y = base
    a, b = 2 * x, 2 * y
    if d == RIGHT:
        return [(a + 1, b), (a + 2, b), (a + 3, b), (a + 3, b + 1), (a + 2, b + 1), (a + 1, b + 1)]
    if d == LEFT:
        return [(a, b + 1), (a - 1, b + 1), (a - 2, b + 1), (a - 2, b), (a - 1, b), (a, b)]
    if d == UP:
        return [(a + 1, b + 1), (a + 1, b + 2), (a + 1, b + 3), (a, b + 3), (a, b + 2), (a, b + 1)]
    return [(a, b), (a, b - 1), (a, b - 2), (a + 1, b - 2), (a + 1, b - 1), (a + 1, b)]


def path_spanning_cycle(
    S: Collection[tuple[int, int]], qm: QuadrupleMap
) -> tuple[tuple[int, int], ...]:
    """Cycle in ``G_m`` through exactly the lifted vertex set of ``S``.

    ``S`` must be a connected vertex set of the half-size grid. The cycle is
    grown one block at a time along an always-connected ordering of ``S``:
    the side of an already covered block facing the new block is swapped
    for a five-edge detour through the new block. Every side of a block that
    faces outside ``S`` stays on the cycle.

    Returned as a vertex sequence; consecutive entries (and last, first) are
    adjacent.
    """
    S = frozenset(S)
    if not S:
        raise ValueError("S must be nonempty")
    half = qm.half
    small, layout = grid_graph(half)
    ids = [layout.id(x, y) for x, y in S]
    if not is_connected_mask(small, to_mask(ids)):
        raise ValueError("S must induce a connected subgraph of the half-size grid")
    order = [layout.coord(v) for v in always_connected_ordering(small, ids)]

    first = order[0]
    x, y = first
    a, b = 2 * x, 2 * y
    ring = [(a, b), (a + 1, b), (a + 1, b + 1), (a, b + 1)]
    nxt: dict = {}
    for p, q in zip(ring, ring[1:] + ring[:1]):
        nxt.setdefault(p, set()).add(q)
        nxt.setdefault(q, set()).add(p)

    placed = {first}
    for v in order[1:]:
        anchor = None
        for d in DIRECTIONS:
            u = qm.neighbor(v[0], v[1], d)
            if u in placed:
                anchor = (u, OPPOSITE[d])
                break
        assert anchor is not None
        base, d = anchor
        side = sorted(qm.edge(base[0], base[1], d))
        p, q = side
        if q not in nxt.get(p, ()):
            raise AssertionError("facing side missing from cycle")
        nxt[p].discard(q)
        nxt[q].discard(p)
        detour = _detour(qm, base, d)
        for s, t in zip(detour, detour[1:]):
            nxt.setdefault(s, set()).add(t)
            nxt.setdefault(t, set()).add(s)
        placed.add(v)

    start = min(nxt)
    cycle = [start]
    prev = None
    cur = start
    while True:
        options = sorted(w for w in nxt[cur] if w != prev)
        step = options[0]
        if step == start:
            break
        cycle.append(step)
        prev, cur = cur, step
    return tuple(cycle)


class TranslatedMaximizer:
    """Path-game maximizer on ``G_m`` driven by a component-game strategy on
    the half-size grid.

    Each round the simulated game supplies a connected set; its lifted block
    set is played as a path (a spanning cycle with one edge dropped). The
    minimizer's vertex is projected back and fed to the simulation. For odd
    ``m`` the simulation uses the ``(m-1) x (m-1)`` corner. Once the
    simulated game is over, any remaining rounds play a longest path.
    """

    def __init__(self, m: int, inner: Optional[Callable[[Graph], Maximizer]] = None):
        if m < 2:
            raise ValueError("m must be at least 2")
        self.m = m
        self.even = m - (m % 2)
        self.qm = QuadrupleMap(self.even)
        self.G, self.layout = grid_graph(m)
        self.small, self.small_layout = grid_graph(self.qm.half)
        factory = inner or optimal_component_maximizer
        self.inner = factory(self.small)

    def _lift(self, small_ids: Iterable[int]) -> list[tuple[int, int]]:
        return [self.small_layout.coord(v) for v in small_ids]

    def _simulated(self, transcript: GameTranscript) -> tuple[int, int]:
        """Replay the simulated game; returns (surviving small mask, rounds used)."""
        hat = self.small.full_mask
        used = 0
        for r in transcript.rounds:
            if not hat:
                break
            coords = {self.layout.coord(v) for v in r.chosen}
            S_hat = to_mask(self.small_layout.id(*self.qm.tau_inv(x, y)) for x, y in coords)
            v_hat = self.small_layout.id(*self.qm.tau_inv(*self.layout.coord(r.vertex)))
            hat = S_hat & ~(1 << v_hat)
            used += 1
        return hat, used

    def __call__(self, state: GameState) -> tuple[int, ...]:
        hat, _ = self._simulated(state.transcript)
        if hat:
            inner_state = GameState(
                self.small, COMPONENT, GameTranscript(COMPONENT), from_mask(hat)
            )
            S_hat = self.inner(inner_state)
            coords = self._lift(S_hat)
            cycle = path_spanning_cycle(coords, self.qm)
            return tuple(self.layout.id(x, y) for x, y in cycle)
        return _longest_path(self.G, state.mask)


def translated_maximizer(m: int) -> TranslatedMaximizer:
    return TranslatedMaximizer(m)
