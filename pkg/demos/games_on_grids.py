"""
Games on grids
==============

The component game has the same value as the unique-maximum chromatic
number. The path game only bounds the conflict-free one from below.
"""

from pathcolor import games, generators, solvers

B4 = generators.complete_binary_tree(4)
print("B4: vcs =", games.vcs_value(B4), " vp =", games.vp_value(B4), " chi_cf =", solvers.chi_cf_exact(B4)[0])

# one match on P7, both sides optimal
P7 = generators.path_graph(7)
t = games.play_game(P7, games.PATH, games.optimal_path_maximizer(P7), games.optimal_path_minimizer(P7))
print(t.to_log(), end="")
print("rounds:", t.length)

# a connected set of the 2x2 grid lifts to a cycle through its 2x2 blocks in G_4
qm = games.QuadrupleMap(4)
cycle = games.path_spanning_cycle({(0, 0), (1, 0), (1, 1)}, qm)
print("lifted cycle:", cycle)

# the translated maximizer plays G_4 by simulating the component game on G_2
G4, _ = generators.grid_graph(4)
worst, transcript = games.worst_case_length(G4, games.PATH, games.translated_maximizer(4))
print("translated maximizer, worst case over every minimizer:", worst)

for m in (2, 10, 100):
    b = solvers.grid_bounds(m)
    print(m, {k: (None if g.value is None else round(g.value, 3)) for k, g in b.items()})
