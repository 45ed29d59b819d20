from collections import Counter

import pytest

from pathcolor.coloring import CF, brute_force_verify, verify_conflict_free, violates
from pathcolor.generators import all_labeled_graphs, complete_graph, cycle_graph, path_graph, star_graph
from pathcolor.graph import Graph, induced_subgraph, is_simple_path
from pathcolor.reduction import (
    build_reduction,
    check_reduction_equivalence,
    connector_color,
    hamiltonian_path_exists,
    zigzag_path,
)
from pathcolor.solvers import ResourceLimitError

from conftest import all_directed_paths


def test_k2_instance():
    art = build_reduction(complete_graph(2))
    assert art.gstar.n == 6
    assert Counter(art.coloring.colors) == {1: 2, 2: 2, 3: 2}
    assert art.connecting_path(1) == (0, 4, 2)
    assert art.connecting_path(2) == (1, 5, 3)


def test_p3_instance():
    art = build_reduction(path_graph(3))
    assert art.gstar.n == 12
    assert art.coloring.k == 6
    assert all(c == 2 for c in Counter(art.coloring.colors).values())


def test_four_vertex_instance_colors():
    star = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    art = build_reduction(star)
    assert art.gstar.n == 20
    assert sorted({art.coloring[v] for v in art.connector.values()}) == list(range(5, 11))
    assert art.coloring[art.connector[(2, 1)]] == art.coloring[art.connector[(1, 2)]] == 5
    assert art.coloring[art.connector[(4, 3)]] == 10
    assert [art.coloring[v] for v in art.upper] == [1, 2, 3, 4]


@pytest.mark.parametrize("n", range(2, 7))
def test_structure_invariants(n):
    G = cycle_graph(n) if n >= 3 else complete_graph(2)
    art = build_reduction(G)
    assert art.gstar.n == 2 * n + n * (n - 1)
    counts = Counter(art.coloring.colors)
    assert len(counts) == n + n * (n - 1) // 2
    assert set(counts.values()) == {2}
    for i in range(1, n + 1):
        P = art.connecting_path(i)
        assert is_simple_path(art.gstar, P)
        # induced: no chords
        sub, _ = induced_subgraph(art.gstar, P)
        assert len(sub.edges) == len(P) - 1
    # no edges across the two copies
    for u, v in art.gstar.edges:
        assert not (u < n <= v < 2 * n)


def test_connector_color_formula():
    assert connector_color(4, 2, 1) == 5
    assert connector_color(4, 1, 2) == 5
    assert connector_color(4, 4, 3) == 10


def test_rejects_small_graphs():
    with pytest.raises(ValueError):
        build_reduction(Graph.from_edges(1, []))


def test_hamiltonian_path_examples():
    assert hamiltonian_path_exists(path_graph(4)) == (0, 1, 2, 3)
    assert hamiltonian_path_exists(star_graph(3)) is None
    assert hamiltonian_path_exists(cycle_graph(5)) is not None
    with pytest.raises(ResourceLimitError):
        hamiltonian_path_exists(path_graph(13))


def test_hamiltonian_path_against_permutations():
    for G in all_labeled_graphs(4):
        brute = any(len(p) == G.n for p in all_directed_paths(G))
        ham = hamiltonian_path_exists(G)
        assert (ham is not None) == brute
        if ham is not None:
            assert is_simple_path(G, ham) and len(ham) == G.n


def test_k2_zigzag():
    art = build_reduction(complete_graph(2))
    walk = zigzag_path(art, (0, 1))
    assert [art.coloring[v] for v in walk] == [1, 3, 1, 2, 3, 2]
    assert is_simple_path(art.gstar, walk)
    assert violates(CF, [art.coloring[v] for v in walk])


def test_two_isolated_vertices():
    G = Graph.from_edges(2, [])
    rep = check_reduction_equivalence(G)
    assert rep.hamiltonian_path is None and rep.verdict.valid is True and rep.agree
    art = build_reduction(G)
    assert brute_force_verify(art.gstar, art.coloring, CF).valid is True


def test_equivalence_connected_four_vertex_graphs():
    for G in all_labeled_graphs(4, connected=True):
        rep = check_reduction_equivalence(G)
        assert rep.agree is True
        if rep.hamiltonian_path is not None:
            assert rep.zigzag_ok


def test_inconclusive_never_agrees():
    rep = check_reduction_equivalence(path_graph(4), budget=3)
    assert rep.inconclusive and rep.agree is None


def test_verifier_on_gstar_matches_brute_force():
    for G in [path_graph(3), star_graph(2), Graph.from_edges(3, [(0, 1)])]:
        art = build_reduction(G)
        assert verify_conflict_free(art.gstar, art.coloring).valid == brute_force_verify(art.gstar, art.coloring, CF).valid
