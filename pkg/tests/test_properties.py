"""Randomized properties, checked against brute-force references."""

from hypothesis import given, settings, strategies as st

from pathcolor.coloring import CF, UM, brute_force_verify, verify_conflict_free, verify_proper, verify_unique_maximum
from pathcolor.games import vcs_value, vp_value
from pathcolor.graph import Graph, contract_edge, enumerate_simple_paths, induced_subgraph, is_connected
from pathcolor.io import parse_graph, serialize_graph
from pathcolor.solvers import chi_cf_exact, chi_um_exact

from conftest import naive_vcs, undirected_paths

SETTINGS = settings(max_examples=150, deadline=None, derandomize=True)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def colored_graphs(draw, max_n=7, max_color=4):
    G = draw(graphs(max_n))
    colors = draw(st.lists(st.integers(1, max_color), min_size=G.n, max_size=G.n))
    return G, tuple(colors)


@SETTINGS
@given(colored_graphs())
def test_um_implies_cf_implies_proper(gc):
    G, colors = gc
    um = verify_unique_maximum(G, colors).valid
    cf = verify_conflict_free(G, colors).valid
    proper = verify_proper(G, colors).valid
    assert not um or cf
    assert not cf or proper


@SETTINGS
@given(colored_graphs())
def test_verifiers_match_brute_force(gc):
    G, colors = gc
    assert verify_unique_maximum(G, colors).valid == brute_force_verify(G, colors, UM).valid
    assert verify_conflict_free(G, colors).valid == brute_force_verify(G, colors, CF).valid


@SETTINGS
@given(colored_graphs(), st.data())
def test_restriction_keeps_validity(gc, data):
    G, colors = gc
    keep = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1))
    H, mapping = induced_subgraph(G, keep)
    sub = [0] * H.n
    for old, new in mapping.items():
        sub[new] = colors[old]
    for verify in (verify_unique_maximum, verify_conflict_free):
        if verify(G, colors).valid:
            assert verify(H, sub).valid


@SETTINGS
@given(graphs(), st.data())
def test_contraction_keeps_um(G, data):
    if not G.edges:
        return
    _, C = chi_um_exact(G)
    e = data.draw(st.sampled_from(sorted(G.edges)))
    H, D, _ = contract_edge(G, e, C.colors)
    assert brute_force_verify(H, D.colors, UM).valid
    assert chi_um_exact(H)[0] <= chi_um_exact(G)[0]


@SETTINGS
@given(graphs(max_n=6))
def test_path_enumeration_matches_permutations(G):
    assert set(enumerate_simple_paths(G)) == undirected_paths(G)


@SETTINGS
@given(graphs(max_n=7))
def test_games_bracket_chromatic_numbers(G):
    um = chi_um_exact(G)[0]
    assert vcs_value(G) == um == naive_vcs(G)
    if is_connected(G):
        assert vp_value(G) <= chi_cf_exact(G)[0] <= um


@SETTINGS
@given(graphs(max_n=9))
def test_graph_file_roundtrip(G):
    text = serialize_graph(G)
    assert parse_graph(text) == G
    assert serialize_graph(parse_graph(text)) == text
