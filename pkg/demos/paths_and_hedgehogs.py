"""
Paths and hedgehogs
===================

Unique-maximum colorings of a path need floor(log2 n) + 1 colors, and so do
conflict-free ones. Hedgehogs pull the two numbers apart.
"""

from pathcolor import generators, solvers
from pathcolor.coloring import cf_coloring_hedgehog, um_coloring_hedgehog, um_coloring_path, verify_conflict_free

# the ruler coloring of P_15: color 4 in the middle, 3 at the quarter points, ...
print("P15 ruler coloring:", um_coloring_path(15).colors)

for n in (1, 2, 3, 4, 7, 8, 12):
    um, _ = solvers.chi_um_exact(generators.path_graph(n))
    cf, _ = solvers.chi_cf_exact(generators.path_graph(n))
    print(f"n={n:2d}  chi_um={um}  chi_cf={cf}")

# H_1 is a triangle with a pendant vertex on each corner
H1, lay1 = generators.hedgehog(1)
print("H1 cf coloring:", cf_coloring_hedgehog(lay1).colors)
print("H1 um coloring:", um_coloring_hedgehog(lay1).colors)
print("H1 exact:", solvers.chromatic_report(H1))

# H_2 has 49 vertices; the shifted coloring still uses only 7 colors
H2, lay2 = generators.hedgehog(2)
C = cf_coloring_hedgehog(lay2)
v = verify_conflict_free(H2, C, budget=10**7)
print(f"H2: {C.k} colors, conflict-free={v.valid} after {v.examined} search nodes")
print(f"H2: unique-maximum coloring with {um_coloring_hedgehog(lay2).k} colors")
