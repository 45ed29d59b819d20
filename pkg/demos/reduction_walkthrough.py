"""
Hamiltonian paths and conflict-free colorings
=============================================

Two copies of G, joined by color-paired connecting paths. The fixed coloring
of G* fails to be conflict-free exactly when G has a Hamiltonian path.
"""

from pathcolor.graph import Graph
from pathcolor.reduction import build_reduction, check_reduction_equivalence

star = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
art = build_reduction(star)
print("G* vertices:", art.gstar.n)
for i in range(1, 5):
    P = art.connecting_path(i)
    print(f"P_{i}:", [art.coloring[v] for v in P])

rep = check_reduction_equivalence(star)
print("star: hamiltonian path", rep.hamiltonian_path, " conflict-free", rep.verdict.valid)

path4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
rep = check_reduction_equivalence(path4)
print("P4: hamiltonian path", rep.hamiltonian_path, " conflict-free", rep.verdict.valid)
# the zig-zag walk visits every vertex of G* and no color on it is unique
print("zig-zag colors:", [build_reduction(path4).coloring[v] for v in rep.zigzag])
