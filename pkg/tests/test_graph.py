import itertools
import random

import pytest

from pathcolor.generators import (
    all_labeled_graphs,
    complete_graph,
    gnp_random_graph,
    grid_graph,
    path_graph,
    star_graph,
)
from pathcolor.graph import (
    BudgetExceeded,
    Graph,
    always_connected_ordering,
    connected_components,
    contract_edge,
    delete_edge,
    delete_vertex,
    enumerate_simple_paths,
    induced_subgraph,
    is_connected,
    is_separator,
)

from conftest import undirected_paths


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_adjacency_is_symmetric_and_sorted():
    G = gnp_random_graph(9, 0.4, random.Random(3))
    for v in G.vertices:
        assert list(G.adjacency[v]) == sorted(G.adjacency[v])
        for w in G.adjacency[v]:
            assert v in G.adjacency[w]


@pytest.mark.parametrize(
    "G, within, expected",
    [
        (path_graph(3), {0, 1, 2}, [{0, 1, 2}]),
        (path_graph(3), {0, 2}, [{0}, {2}]),
        (grid_graph(2)[0], None, [{0, 1, 2, 3}]),
        (path_graph(3), set(), []),
    ],
)
def test_connected_components(G, within, expected):
    assert connected_components(G, within) == [frozenset(s) for s in expected]


def test_is_separator_examples():
    assert is_separator(path_graph(3), {1})
    assert not is_separator(path_graph(3), {0})
    assert is_separator(complete_graph(4), {0, 1, 2, 3})


def test_is_separator_requires_connected_graph():
    with pytest.raises(ValueError):
        is_separator(Graph.from_edges(2, []), {0})


def test_contract_edge_transports_coloring():
    H, C, mapping = contract_edge(path_graph(3), (0, 1), (1, 2, 1))
    assert H == path_graph(2)
    assert C.colors == (2, 1)
    assert mapping == {0: 0, 1: 0, 2: 1}


def test_contract_edge_examples():
    H, C, _ = contract_edge(complete_graph(3), (1, 2))
    assert H == complete_graph(2) and C is None
    pendant = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    H, _, _ = contract_edge(pendant, (2, 3))
    assert H == complete_graph(3)


def test_contract_rejects_non_edge():
    with pytest.raises(KeyError):
        contract_edge(path_graph(3), (0, 2))


def test_deletions():
    H, mapping = delete_vertex(path_graph(3), 1)
    assert H.n == 2 and not H.edges and mapping == {0: 0, 2: 1}
    assert delete_edge(complete_graph(3), (0, 2)) == path_graph(3)
    H, _ = delete_vertex(Graph.from_edges(1, []), 0)
    assert H.n == 0
    with pytest.raises(KeyError):
        delete_vertex(path_graph(2), 5)
    with pytest.raises(KeyError):
        delete_edge(path_graph(3), (0, 2))


def test_enumerate_p2():
    assert list(enumerate_simple_paths(path_graph(2))) == [(0,), (0, 1), (1,)]


def test_enumerate_k3_matches_permutation_count():
    got = list(enumerate_simple_paths(complete_graph(3)))
    assert len(got) == 9
    assert set(got) == undirected_paths(complete_graph(3))


def test_enumerate_budget_overflow_is_distinct():
    gen = enumerate_simple_paths(path_graph(3), budget=2)
    assert next(gen) == (0,)
    assert next(gen) == (0, 1)
    with pytest.raises(BudgetExceeded):
        next(gen)
    # exactly the budget: normal exhaustion
    assert len(list(enumerate_simple_paths(path_graph(2), budget=3))) == 3


@pytest.mark.parametrize("seed", range(15))
def test_enumerate_matches_permutation_oracle(seed):
    rng = random.Random(seed)
    G = gnp_random_graph(rng.randint(1, 6), 0.5, rng)
    got = list(enumerate_simple_paths(G))
    assert len(got) == len(set(got))
    assert set(got) == undirected_paths(G)


def test_enumerate_within_subset():
    G, _ = grid_graph(3)
    got = set(enumerate_simple_paths(G, within={0, 1, 2}))
    sub, _ = induced_subgraph(G, {0, 1, 2})
    assert got == undirected_paths(sub)


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_path_count(n):
    # a random tree on n vertices has n + C(n,2) paths
    rng = random.Random(n)
    edges = [(v, rng.randrange(v)) for v in range(1, n)]
    G = Graph.from_edges(n, edges)
    assert len(list(enumerate_simple_paths(G))) == n + n * (n - 1) // 2


def test_always_connected_ordering_examples():
    assert always_connected_ordering(path_graph(3)) == (0, 1, 2)
    assert always_connected_ordering(star_graph(3)) == (0, 1, 2, 3)
    assert always_connected_ordering(path_graph(5), {3}) == (3,)
    with pytest.raises(ValueError):
        always_connected_ordering(path_graph(3), {0, 2})
    with pytest.raises(ValueError):
        always_connected_ordering(path_graph(3), set())


def test_always_connected_ordering_prefixes_connected():
    for G in itertools.islice(all_labeled_graphs(5, connected=True), 0, None, 7):
        order = always_connected_ordering(G)
        assert sorted(order) == list(G.vertices)
        for k in range(1, len(order) + 1):
            assert is_connected(G, order[:k])
