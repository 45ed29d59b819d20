"""Acceptance criteria, one test each, at the stated tolerances.

Every test records a single PASS/FAIL line through the ``acceptance``
fixture; the lines are repeated in the terminal summary.
"""

import math
import random
import time
from fractions import Fraction

from pathcolor.coloring import (
    CF,
    UM,
    brute_force_verify,
    cf_coloring_hedgehog,
    um_coloring_hedgehog,
    verify_conflict_free,
    verify_unique_maximum,
)
from pathcolor.games import PATH, QuadrupleMap, open_directions, path_spanning_cycle, translated_maximizer, vcs_value, vp_value, worst_case_length
from pathcolor.generators import all_labeled_graphs, complete_binary_tree, gnp_random_graph, grid_graph, hedgehog, path_graph
from pathcolor.graph import Graph, contract_edge, delete_edge, delete_vertex
from pathcolor.reduction import build_reduction, check_reduction_equivalence
from pathcolor.solvers import CFSearchStats, RankingSolver, _cf_with_k, chi_by_definition, chi_cf_exact, chi_exact, chi_um_exact, grid_bounds

SEED = 20240601


def _random_graph(rng, lo=1, hi=7):
    n = rng.randint(lo, hi)
    return gnp_random_graph(n, rng.choice([0.3, 0.5, 0.7]), rng)


def test_criterion_01_paths(acceptance):
    start = time.perf_counter()
    bad = []
    for n in range(1, 17):
        k, cert = chi_um_exact(path_graph(n))
        if k != math.floor(math.log2(n)) + 1 or not verify_unique_maximum(path_graph(n), cert).valid:
            bad.append(("um", n, k))
    for n in range(1, 13):
        k, cert = chi_cf_exact(path_graph(n))
        if k != math.floor(math.log2(n)) + 1 or verify_conflict_free(path_graph(n), cert).valid is not True:
            bad.append(("cf", n, k))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    acceptance("1 paths", ok, f"mismatches={bad} runtime={elapsed:.2f}s (< 60s)")
    assert ok


def test_criterion_02_hedgehog_cf(acceptance):
    start = time.perf_counter()
    mandatory = []
    for k in (0, 1):
        G, lay = hedgehog(k)
        C = cf_coloring_hedgehog(lay)
        mandatory.append(verify_conflict_free(G, C).valid is True and C.k == 2 ** (k + 1) - 1)
    elapsed = time.perf_counter() - start
    G2, lay2 = hedgehog(2)
    C2 = cf_coloring_hedgehog(lay2)
    v2 = verify_conflict_free(G2, C2, budget=10**7)
    stretch_ok = v2.valid is not False and C2.k == 7
    ok = all(mandatory) and elapsed < 10 and stretch_ok
    status = "inconclusive" if v2.inconclusive else ("valid" if v2.valid else "INVALID")
    acceptance(
        "2 hedgehog CF",
        ok,
        f"k=0,1 valid={mandatory} in {elapsed:.2f}s (< 10s); k=2 {status} with {C2.k} colors, {v2.examined} nodes",
    )
    assert ok


def test_criterion_03_hedgehog_um(acceptance):
    details, ok = [], True
    for k in (0, 1, 2):
        G, lay = hedgehog(k)
        C = um_coloring_hedgehog(lay)
        bound = 2 ** (k + 2) - k - 3
        good = verify_unique_maximum(G, C).valid and C.k <= bound
        ok &= good
        details.append(f"k={k}: {C.k}<={bound}")
    H1, _ = hedgehog(1)
    um1, _ = chi_um_exact(H1)
    cf1, _ = chi_cf_exact(H1)
    ok &= 3 <= um1 <= 4 and cf1 == 3
    acceptance("3 hedgehog UM", ok, f"{', '.join(details)}; chi_um(H1)={um1} in [3,4]; chi_cf(H1)={cf1}")
    assert ok


def test_criterion_04_games_duality(acceptance):
    start = time.perf_counter()
    total = mismatches = 0
    for n in range(1, 6):
        for G in all_labeled_graphs(n, connected=True):
            total += 1
            if vcs_value(G) != chi_by_definition(G, UM):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 300
    acceptance("4 vcs = chi_um", ok, f"{total} connected graphs, {mismatches} mismatches, {elapsed:.1f}s (< 300s)")
    assert ok


def test_criterion_05_path_game_bound(acceptance):
    total = violations = 0
    for n in range(1, 6):
        for G in all_labeled_graphs(n, connected=True):
            total += 1
            if vp_value(G) > chi_cf_exact(G)[0]:
                violations += 1
    B4 = complete_binary_tree(4)
    vp_b4 = vp_value(B4)
    cf_b4, cert = chi_cf_exact(B4)
    # the lower bound half of chi_cf(B4) = 4: no conflict-free 3-coloring
    stats = CFSearchStats()
    found3, undecided = _cf_with_k(B4, 3, stats, 10**6, 10**6)
    refuted = found3 is None and not undecided and stats.nodes <= 3**15
    ok = violations == 0 and vp_b4 == 3 and cf_b4 == 4 and refuted
    acceptance(
        "5 vp <= chi_cf",
        ok,
        f"{total} graphs, {violations} violations; vp(B4)={vp_b4}, chi_cf(B4)={cf_b4}, 3-coloring refuted in {stats.nodes} nodes (<= 3^15)",
    )
    assert ok


def test_criterion_06_reduction(acceptance):
    counts = {"agree": 0, "disagree": 0, "inconclusive": 0}

    def tally(G):
        rep = check_reduction_equivalence(G)
        counts["inconclusive" if rep.agree is None else ("agree" if rep.agree else "disagree")] += 1

    small = 0
    for n in range(2, 5):
        for G in all_labeled_graphs(n):
            tally(G)
            small += 1
    rng = random.Random(SEED)
    for _ in range(200):
        tally(gnp_random_graph(5, 0.5, rng))
    star = build_reduction(Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)]))
    conn = sorted({star.coloring[v] for v in star.connector.values()})
    ok = counts["disagree"] == 0 and counts["inconclusive"] == 0 and conn == list(range(5, 11))
    acceptance("6 reduction", ok, f"{small} small + 200 random graphs: {counts}; n=4 connector colors {conn}")
    assert ok


def test_criterion_07_grid_translation(acceptance):
    G1, _ = grid_graph(1)
    G2, _ = grid_graph(2)
    G3, _ = grid_graph(3)
    G4, _ = grid_graph(4)
    vcs1, vcs2 = vcs_value(G1), vcs_value(G2)
    naive2 = chi_by_definition(G2, UM)
    worst4, _ = worst_case_length(G4, PATH, translated_maximizer(4))
    worst3, _ = worst_case_length(G3, PATH, translated_maximizer(3))
    vp2 = vp_value(G2)
    ok = vcs2 == naive2 == 3 and worst4 >= 3 and vp2 >= vcs1 == 1 and worst3 >= vcs1
    acceptance(
        "7 grid translation",
        ok,
        f"vcs(G2)={vcs2} (oracle {naive2}); translated on G4 worst case {worst4} >= 3; "
        f"vp(G2)={vp2} >= vcs(G1)={vcs1}; odd m=3 worst case {worst3} >= 1",
    )
    assert ok


def _random_minor(G, C, rng, steps):
    """Apply random deletions and contractions, carrying the induced coloring."""
    colors = C
    for _ in range(steps):
        ops = ["vertex"] if G.n > 1 else []
        if G.edges:
            ops += ["edge", "contract"]
        if not ops:
            break
        op = rng.choice(ops)
        if op == "vertex":
            v = rng.randrange(G.n)
            G, _ = delete_vertex(G, v)
            colors = tuple(c for u, c in enumerate(colors) if u != v)
        elif op == "edge":
            G = delete_edge(G, rng.choice(sorted(G.edges)))
        else:
            G, Cm, _ = contract_edge(G, rng.choice(sorted(G.edges)), colors)
            colors = Cm.colors
    return G, colors


def test_criterion_08_properties(acceptance):
    rng = random.Random(SEED)
    results = {}

    # monotonicity under subgraphs
    cases = bad = 0
    for _ in range(500):
        G = _random_graph(rng, 2, 7)
        H = G
        for _ in range(rng.randint(1, 3)):
            if H.edges and rng.random() < 0.5:
                H = delete_edge(H, rng.choice(sorted(H.edges)))
            elif H.n > 1:
                H, _ = delete_vertex(H, rng.randrange(H.n))
        cases += 1
        if chi_um_exact(H)[0] > chi_um_exact(G)[0] or chi_cf_exact(H)[0] > chi_cf_exact(G)[0]:
            bad += 1
    results["subgraph monotonicity"] = (cases, bad)

    # chain of chromatic numbers
    cases = bad = 0
    for _ in range(500):
        G = _random_graph(rng)
        chi, cf, um = chi_exact(G)[0], chi_cf_exact(G)[0], chi_um_exact(G)[0]
        cases += 1
        if not (chi <= cf <= um <= 2**cf - 1):
            bad += 1
    results["chi <= chi_cf <= chi_um <= 2^chi_cf - 1"] = (cases, bad)

    # vertex deletion drops chi_um by at most one, every connected graph n <= 6
    cases = bad = 0
    for n in range(1, 7):
        for G in all_labeled_graphs(n, connected=True):
            solver = RankingSolver(G)
            full = G.full_mask
            k = solver.value(full)
            for v in range(n):
                cases += 1
                if solver.value(full & ~(1 << v)) < k - 1:
                    bad += 1
    results["chi_um(G-v) >= chi_um(G)-1 (n<=6, exhaustive)"] = (cases, bad)

    # induced minor colorings stay unique-maximum
    cases = bad = 0
    for _ in range(500):
        G = _random_graph(rng, 2, 7)
        _, C = chi_um_exact(G)
        H, colors = _random_minor(G, C.colors, rng, rng.randint(1, 4))
        cases += 1
        fast = verify_unique_maximum(H, colors).valid
        slow = brute_force_verify(H, colors, UM).valid
        if not (fast and slow):
            bad += 1
    results["induced minor colorings are UM"] = (cases, bad)

    # spanning cycle of lifted connected sets
    cases = bad = 0
    for _ in range(500):
        m = rng.choice([2, 4, 6, 8, 10, 12])
        qm = QuadrupleMap(m)
        small, lay = grid_graph(m // 2)
        S = {rng.randrange(small.n)}
        target = rng.randint(1, small.n)
        while len(S) < target:
            S.add(rng.choice(sorted({w for v in S for w in small.adjacency[v]} - S)))
        S = {lay.coord(v) for v in S}
        cycle = path_spanning_cycle(S, qm)
        edges = {frozenset(e) for e in zip(cycle, cycle[1:] + cycle[:1])}
        good = len(cycle) == len(set(cycle)) and set(cycle) == qm.tau_set(S)
        good &= all(abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1 for a, b in zip(cycle, cycle[1:] + cycle[:1]))
        good &= all(qm.edge(x, y, d) in edges for x, y in S for d in open_directions(S, (x, y)))
        cases += 1
        bad += not good
    results["path_spanning_cycle coverage + open sides (m<=12)"] = (cases, bad)

    ok = all(b == 0 for _, b in results.values()) and all(c >= 500 for c, _ in results.values())
    detail = "; ".join(f"{name}: {c} cases, {b} failures" for name, (c, b) in results.items())
    acceptance("8 property suites", ok, detail)
    assert ok


def test_criterion_09_verifier_oracle(acceptance):
    rng = random.Random(SEED)
    pairs = um_bad = cf_bad = 0
    for _ in range(1000):
        G = _random_graph(rng, 1, 7)
        k = rng.randint(1, G.n)
        colors = [rng.randint(1, k) for _ in range(G.n)]
        pairs += 1
        if verify_unique_maximum(G, colors).valid != brute_force_verify(G, colors, UM).valid:
            um_bad += 1
        if verify_conflict_free(G, colors).valid != brute_force_verify(G, colors, CF).valid:
            cf_bad += 1
    ok = um_bad == 0 and cf_bad == 0
    acceptance("9 verifier oracle", ok, f"{pairs} pairs (n<=7): UM disagreements {um_bad}, CF disagreements {cf_bad}")
    assert ok


def test_criterion_10_bounds(acceptance):
    b = grid_bounds(10)
    three_halves = b["um_lower_3m_2"].value
    upper = b["um_upper_2519"].value
    log_bound = b["um_lower_5m_3_log52"].value
    reference = float(Fraction(5, 3) * 10) - math.log10(10) / math.log10(2.5)
    ok = three_halves == 15 and upper == 25.19 and round(log_bound, 6) == round(reference, 6)
    acceptance("10 grid bounds", ok, f"3m/2={three_halves}, 2.519m={upper}, 5m/3-log_{{5/2}}m={log_bound:.6f} vs reference {reference:.6f}")
    assert ok
