"""Cycle decompositions of the doubled complete graph 2K_n.

Prints a small decomposition, a table of which (n, c) work up to n = 10,
and the three excluded pairs with their directed-search certificates.
"""

from hypercycles.errors import Infeasible
from hypercycles.graph_cycles import EXCEPTIONS, decompose_2kn, exhaustive_cycle_cover, pair_coverage

cycles = decompose_2kn(7, 3)
print(f"2K_7 into {len(cycles)} triangles:")
print("  " + " ".join("".join(map(str, cy)) for cy in cycles))
cov = pair_coverage(cycles)
print(f"  each of the {len(cov)} pairs covered {set(cov.values())} times")

print("\nn\\c " + " ".join(f"{c:>2}" for c in range(3, 11)))
for n in range(3, 11):
    row = []
    for c in range(3, 11):
        if c > n or n * (n - 1) % c:
            row.append(" .")
            continue
        try:
            decompose_2kn(n, c)
            row.append(" y")
        except Infeasible:
            row.append(" x")
    print(f"{n:>3} " + " ".join(row))

print("\nexcluded pairs; searching directed covers of the complete digraph:")
for n, c in sorted(EXCEPTIONS):
    d = exhaustive_cycle_cover(n, c, directed=True)
    u = exhaustive_cycle_cover(n, c, directed=False)
    print(f"  ({n},{c}): directed cover {'found' if d else 'none'}, "
          f"undirected cover {'found' if u else 'none'}")
