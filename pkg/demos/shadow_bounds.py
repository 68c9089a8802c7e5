"""Compare brute-force shadow sizes of random families with the lower bounds."""

import random
from itertools import combinations

from hypercycles.shadows import (SetFamily, kk_bound_i, kk_bound_iii, kk_bound_plus,
                                 lower_shadow, pq_decompose, solve_s, upper_shadow)

rng = random.Random(1)

n, h = 9, 4
pool = list(combinations(range(1, n + 1), h))
print(f"lower pair shadow of random {h}-sets on [{n}]")
print(" size  shadow  bound")
for size in (1, 5, 20, 60, 126):
    T = SetFamily(n, h, frozenset(rng.sample(pool, size)))
    s = solve_s(size, h, n)
    print(f"{size:5} {len(lower_shadow(T, h - 2)):7} {float(kk_bound_i(s)):7.2f}")

n = 85
pool = list(combinations(range(1, n + 1), 2))
print(f"\nvertex-upper shadow of random graphs on [{n}] (pairs to triples)")
print(" size  shadow  general  refined")
for size in (10, 100, 400, 700):
    T = SetFamily(n, 2, frozenset(rng.sample(pool, size)))
    p, q = pq_decompose(size, n)
    refined = kk_bound_plus(p, q, n) if p <= 8 else None
    print(f"{size:5} {len(upper_shadow(T, 1)):7} {kk_bound_iii(p, q, n):8} "
          f"{'-' if refined is None else float(refined):>8}")
