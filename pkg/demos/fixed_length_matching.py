"""Equal-length decompositions through the lifting matching.

Case B at (23, 4, 11), then a deliberately bad leave at (7, 3, 6) whose
matching fails, with the Hall certificate that proves it.
"""

import time

from hypercycles.decompose import LengthSpec, case_conditions, case_of, decompose_fixed_length
from hypercycles.errors import MatchingDeficient
from hypercycles.hypergraph import HEdge
from hypercycles.verify import verify_decomposition

t = time.perf_counter()
d = decompose_fixed_length(23, 4, 11)
rep = verify_decomposition(d.target, d, LengthSpec((11,) * len(d.parts)))
print(f"(23,4,11) case {case_of(23, 4, 11)}: {len(d.parts)} cycles, "
      f"matching {d.stats['matching_size']}, verified={rep.overall_pass}, "
      f"{time.perf_counter() - t:.1f}s")
print("  first cycle built from", d.parts[0].provenance)

print("\n(7,3,6) is outside every case:")
for k, v in case_conditions(7, 3, 6).items():
    print(f"  {k}: misses {', '.join(v)}")

leave = [HEdge((1, 2, x)) for x in range(3, 8)]
print("\nwith the leave", " ".join("".join(map(str, e.vertices)) for e in leave))
try:
    decompose_fixed_length(7, 3, 6, leave, best_effort=True)
except MatchingDeficient as exc:
    c = exc.certificate
    print(f"  no perfect matching: |S| = {len(c.S)} edges see only "
          f"{c.neighborhood_size} pair slots")
    print(f"  N(S) spans {len(c.neighborhood)} distinct pairs")

d = decompose_fixed_length(7, 3, 6, best_effort=True)
print(f"\nwith the default leave best-effort succeeds: {len(d.parts)} cycles, verified="
      f"{verify_decomposition(d.target, d, LengthSpec((6,) * len(d.parts))).overall_pass}")
