"""Shadows of uniform set families and Kruskal-Katona type lower bounds.

Bounds are evaluated exactly (ints or Fractions).  Only ``solve_s`` works in
floating point; callers comparing against a bound built from it should allow
a small slack.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

SOLVE_TOL = 1e-12


@dataclass(frozen=True)
class SetFamily:
    n: int
    h: int
    members: frozenset

    def __post_init__(self):
        ms = frozenset(tuple(sorted(s)) for s in self.members)
        for s in ms:
            if len(s) != self.h or len(set(s)) != self.h:
                raise ValueError(f"member {s} is not an {self.h}-set")
            if s and (s[0] < 1 or s[-1] > self.n):
                raise ValueError(f"member {s} leaves [1, {self.n}]")
        object.__setattr__(self, "members", ms)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))


def lower_shadow(S: SetFamily, i: int) -> SetFamily:
    """All (h-i)-subsets of members of S."""
    if not 1 <= i <= S.h:
        raise ValueError(f"need 1 <= i <= h={S.h}, got {i}")
    out = {t for s in S.members for t in combinations(s, S.h - i)}
    return SetFamily(S.n, S.h - i, frozenset(out))


def upper_shadow(S: SetFamily, i: int) -> SetFamily:
    """All (h+i)-subsets of [n] containing some member of S."""
    if i < 1 or S.h + i > S.n:
        raise ValueError(f"need 1 <= i and h+i <= n, got h={S.h}, i={i}, n={S.n}")
    out = set()
    for s in S.members:
        rest = [v for v in range(1, S.n + 1) if v not in s]
        for extra in combinations(rest, i):
            out.add(tuple(sorted(s + extra)))
    return SetFamily(S.n, S.h + i, frozenset(out))


def gen_binomial(s, h: int):
    """s(s-1)...(s-h+1)/h! for real (or Fraction) s."""
    if h < 0:
        raise ValueError("h must be non-negative")
    num = 1
    for j in range(h):
        num *= s - j
    fact = 1
    for j in range(2, h + 1):
        fact *= j
    if isinstance(num, (int, Fraction)):
        return Fraction(num) / fact
    return num / fact


def solve_s(size: int, h: int, n: int) -> float:
    """Real t in [h, n] with gen_binomial(t, h) == size, by bisection."""
    if not 1 <= size <= comb(n, h):
        raise ValueError(f"size must be in [1, C({n},{h})], got {size}")
    lo, hi = float(h), float(n)
    if gen_binomial(lo, h) > size or gen_binomial(hi, h) < size:
        raise ValueError("no root in [h, n]")
    while hi - lo > SOLVE_TOL:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if gen_binomial(mid, h) < size:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def kk_bound_i(t):
    """Lower bound C(t, 2) on the pair shadow of a family with |T| = C(t, h)."""
    return gen_binomial(t, 2)


def kk_bound_ii(t: int, n: int) -> int:
    """Lower bound on the 4-set upper shadow of t <= n-1 pairs."""
    if not 0 <= t <= n - 1:
        raise ValueError(f"need 0 <= t <= n-1, got t={t}, n={n}")
    m = n - t - 1
    return t * comb(m, 2) + comb(t, 2) * m


def _check_pq(p: int, q: int, n: int):
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    if not p < n:
        raise ValueError(f"need p < n, got p={p}, n={n}")
    if not q < n - (p + 1):
        raise ValueError(f"need q < n-(p+1) = {n - p - 1}, got q={q}")


def kk_bound_iii(p: int, q: int, n: int) -> int:
    """Lower bound p*C(n-p,2) + q(n-p-2) - C(q,2) on the triple upper shadow."""
    _check_pq(p, q, n)
    return p * comb(n - p, 2) + q * (n - p - 2) - comb(q, 2)


def kk_bound_iii_sum(p: int, q: int, n: int) -> int:
    """The stronger form: C(n-1,2) + ... + C(n-p,2) + q(n-p-2) - C(q,2)."""
    _check_pq(p, q, n)
    return sum(comb(n - j, 2) for j in range(1, p + 1)) + q * (n - p - 2) - comb(q, 2)


def kk_bound_plus(p: int, q: int, n: int) -> Fraction:
    """p*C(n-p,2) + 2qn/5, valid for n >= 85 and p <= 8."""
    _check_pq(p, q, n)
    if n < 85:
        raise ValueError(f"need n >= 85, got {n}")
    if p > 8:
        raise ValueError(f"need p <= 8, got {p}")
    return p * comb(n - p, 2) + Fraction(2 * q * n, 5)


def pq_decompose(size: int, n: int) -> tuple[int, int]:
    """Write size = p*n - C(p+1,2) + q with p maximal and 0 <= q < n-(p+1)."""
    if size < 0:
        raise ValueError("size must be non-negative")
    p = 0
    while p + 1 < n and (p + 1) * n - comb(p + 2, 2) <= size:
        p += 1
    q = size - (p * n - comb(p + 1, 2))
    if not q < n - (p + 1):
        raise ValueError(f"size {size} has no (p, q) representation for n={n}")
    return p, q
