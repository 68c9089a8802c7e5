"""Split K_5^3 into two Hamiltonian Berge cycles and look at each step.

Run: python demos/k53_walkthrough.py
"""

from hypercycles import complete_uniform, classify
from hypercycles.baranyai import SplitSpec, almost_regular_partition
from hypercycles.decompose import LengthSpec, decompose_almost_regular
from hypercycles.hypergraph import Hypergraph, degree_profile
from hypercycles.verify import verify_decomposition


def show(edges):
    return " ".join("".join(map(str, e.vertices)) for e in edges)


K = complete_uniform(5, 3)
print(f"K_5^3 has {len(K)} edges, every vertex has degree {degree_profile(K).degrees[0]}")

# Step 1: an almost-regular split into two parts of five edges.
parts = almost_regular_partition(SplitSpec(5, 3, 1, (5, 5)))
for i, F in enumerate(parts):
    print(f"part {i}: {show(F.edges)}  degrees {degree_profile(F).degrees}")

# Step 2: each part is turned into a Berge cycle through a long bipartite cycle.
spec = LengthSpec((5, 5))
d = decompose_almost_regular(5, 3, 1, spec)
for p in d.parts:
    link = " ".join(f"{v}-[{''.join(map(str, e.vertices))}]" for v, e in zip(p.vertices, p.edges))
    print(f"cycle: {link}-{p.vertices[0]}")

# Step 3: check it with the independent verifier, and with the classifier.
rep = verify_decomposition(K, d, spec, ["hamiltonian", "regular"])
print("verifier:", "pass" if rep.overall_pass else rep.to_dict())
for p in d.parts:
    cl = classify(Hypergraph(5, p.edges), 3)
    print(f"classifier on a cycle: hamiltonian={cl.hamiltonian} 3-factor={cl.connected_hfactor}")
