"""Unique-maximum and conflict-free colorings with respect to paths."""

from .coloring import (
    Coloring,
    Verdict,
    brute_force_verify,
    cf_coloring_hedgehog,
    um_coloring_hedgehog,
    um_coloring_path,
    verify_conflict_free,
    verify_proper,
    verify_unique_maximum,
)
from .games import (
    GameTranscript,
    QuadrupleMap,
    path_spanning_cycle,
    play_game,
    translated_maximizer,
    vcs_value,
    vp_value,
    worst_case_length,
)
from .generators import complete_binary_tree, complete_graph, grid_graph, hedgehog, path_graph
from .graph import (
    BudgetExceeded,
    Graph,
    always_connected_ordering,
    connected_components,
    contract_edge,
    delete_edge,
    delete_vertex,
    enumerate_simple_paths,
    is_separator,
)
from .reduction import build_reduction, check_reduction_equivalence, hamiltonian_path_exists
from .solvers import (
    Inconclusive,
    ResourceLimitError,
    chi_cf_exact,
    chi_exact,
    chi_um_exact,
    closed_forms,
    grid_bounds,
)

__version__ = "0.1.0"
