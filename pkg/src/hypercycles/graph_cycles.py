"""Cycle decompositions of 2K_n and the multigraph H = H1 + H2.

``decompose_2kn`` first tries cyclic development: vertices are taken as the
group Z_m (m = n, or m = n - 1 plus a fixed point), and base cycles whose
edge differences cover every difference class the right number of times are
developed by rotation.  Cycles that are themselves cosets of a subgroup
(short orbits) are allowed as extra blocks.  An exact-cover backtracking
search over the pair-coverage counters is the fallback.

The exceptional parameters (4,4), (6,3), (6,6) are those of the directed
cycle decomposition theorem for the complete digraph.  Undirected 2K_4 and
2K_6 do split into 4-cycles and triangles respectively, so the exhaustive
certificate of infeasibility is run on the directed problem (each ordered
pair used once), see :func:`exhaustive_cycle_cover`.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb, gcd

from .errors import BudgetExhausted, ConstructionError, Infeasible

EXCEPTIONS = frozenset({(4, 4), (6, 3), (6, 6)})
DEFAULT_BUDGET = 10**7


def pair_coverage(cycles) -> Counter:
    """Number of times each unordered pair occurs as a cycle edge."""
    cov: Counter = Counter()
    for cyc in cycles:
        t = len(cyc)
        for i in range(t):
            a, b = cyc[i], cyc[(i + 1) % t]
            cov[(a, b) if a < b else (b, a)] += 1
    return cov


def is_2kn_decomposition(n: int, c: int, cycles) -> bool:
    """True iff ``cycles`` are simple c-cycles covering each pair of [n] twice."""
    for cyc in cycles:
        if len(cyc) != c or len(set(cyc)) != c or not all(1 <= v <= n for v in cyc):
            return False
    cov = pair_coverage(cycles)
    return len(cov) == comb(n, 2) and all(k == 2 for k in cov.values())


def _class(d: int, m: int) -> int:
    d %= m
    return min(d, m - d)


def _zigzag(n: int) -> list[tuple[int, ...]]:
    """Hamiltonian decomposition of 2K_n for odd n: infinity plus the sequencing
    0, 1, -1, 2, -2, ... of Z_{n-1}, developed by rotation."""
    m = n - 1
    path = [0]
    for k in range(1, m // 2 + 1):
        path.append(k)
        if len(path) < m:
            path.append(-k % m)
    assert sorted(path) == list(range(m))
    out = []
    for t in range(m):
        out.append(tuple([n] + [(v + t) % m + 1 for v in path]))
    return out


def _plans(n: int, c: int):
    total = n * (n - 1) // c
    for m, inf in ((n, False), (n - 1, True)):
        if m < 3:
            continue
        need = {d: (1 if 2 * d == m else 2) for d in range(1, m // 2 + 1)}
        short_ok = [d for d in need if 2 * d != m and m // gcd(d, m) == c]
        for s in range(0, 2 * len(short_ok) + 1):
            rest = total - s * (m // c)
            if rest < 0 or rest % m:
                continue
            b = rest // m
            if inf and b < 1:
                continue
            if b == 0 and s == 0:
                continue
            yield m, inf, b, s, need, short_ok


def _search_bases(m, inf, b, c, need, rng, budget):
    """Find ``b`` base cycles realising the difference multiset ``need``.

    Returns a list of cycles over Z_m (with -1 for the fixed point) or None
    when the budget runs out.
    """
    need = dict(need)
    inf_left = 2 if inf else 0
    cycles: list[list[int]] = []
    nodes = 0
    cls = [_class(d, m) for d in range(m)]

    def close_ok(cyc):
        first, last = cyc[0], cyc[-1]
        if first == -1:
            return inf_left > 0
        return need.get(cls[(first - last) % m], 0) > 0

    def grow(cyc, used):
        nonlocal nodes, inf_left
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted
        if len(cyc) == c:
            if not close_ok(cyc):
                return False
            first, last = cyc[0], cyc[-1]
            if first == -1:
                inf_left -= 1
            else:
                need[cls[(first - last) % m]] -= 1
            cycles.append(list(cyc))
            if next_cycle():
                return True
            cycles.pop()
            if first == -1:
                inf_left += 1
            else:
                need[cls[(first - last) % m]] += 1
            return False
        x = cyc[-1]
        cand = [y for y in range(m) if y not in used and need.get(cls[(y - x) % m], 0) > 0]
        rng.shuffle(cand)
        cand.sort(key=lambda y: -need[cls[(y - x) % m]])
        for y in cand:
            d = cls[(y - x) % m]
            need[d] -= 1
            cyc.append(y)
            used.add(y)
            if grow(cyc, used):
                return True
            used.discard(y)
            cyc.pop()
            need[d] += 1
        return False

    def next_cycle():
        nonlocal inf_left
        if len(cycles) == b:
            return inf_left == 0 and all(v == 0 for v in need.values())
        if inf_left:
            inf_left -= 1
            ok = grow([-1, 0], {0})
            inf_left += 1
            return ok
        return grow([0], {0})

    try:
        return [list(cy) for cy in cycles] if next_cycle() else None
    except BudgetExhausted:
        return None


def _develop(n, m, bases, shorts):
    out = []
    for base in bases:
        for t in range(m):
            out.append(tuple(n if v == -1 else (v + t) % m + 1 for v in base))
    for d in shorts:
        c = m // gcd(d, m)
        for t in range(m // c):
            out.append(tuple((t + k * d) % m + 1 for k in range(c)))
    return out


def _cyclic_development(n, c, seed, budget):
    rng_root = random.Random(seed)
    tasks = []
    for m, inf, b, s, need, short_ok in _plans(n, c):
        choices = [ch for ch in combinations_with_replacement(short_ok, s)
                   if all(ch.count(d) <= need[d] for d in set(ch))]
        rng_root.shuffle(choices)
        for shorts in choices[:8]:
            left = dict(need)
            for d in shorts:
                left[d] -= 1
            tasks.append((m, inf, b, shorts, left))
    # round-robin over plans with doubling budgets, so a dead plan cannot starve a live one
    per, spent, attempt = min(500, budget), 0, 0
    while tasks and spent < budget:
        for m, inf, b, shorts, left in tasks:
            rng = random.Random(f"{seed}:{m}:{shorts}:{attempt}")
            bases = _search_bases(m, inf, b, c, left, rng, per)
            spent += per
            if bases is not None:
                cycles = _develop(n, m, bases, shorts)
                if is_2kn_decomposition(n, c, cycles):
                    return cycles
        attempt += 1
        if attempt % 4 == 0:
            per *= 2
    return None


def exhaustive_cycle_cover(n: int, c: int, *, directed: bool = False, seed: int | None = None,
                           symmetry_break: bool = True, budget: int = DEFAULT_BUDGET):
    """Exact-cover backtracking for a c-cycle decomposition of 2K_n.

    With ``directed`` the two copies of each pair must be traversed in
    opposite directions, i.e. the cycles decompose the complete digraph.
    Branching is always on the first pair (arc) with remaining capacity, so
    the search is complete: None means no decomposition exists.
    ``symmetry_break`` fixes the first cycle to (1, ..., c), which loses no
    generality because all c-cycles of K_n are equivalent under relabelling.
    ``seed`` shuffles candidate order (None keeps natural order).
    Raises :class:`BudgetExhausted` when the node budget runs out.
    """
    if c < 3 or c > n:
        raise ValueError("exact cover search needs 3 <= c <= n")
    if (n * (n - 1)) % c:
        return None
    cap = [[0 if u == v else (1 if directed else 2) for v in range(n + 1)] for u in range(n + 1)]
    for v in range(n + 1):
        cap[0][v] = cap[v][0] = 0
    rng = random.Random(seed) if seed is not None else None
    cycles: list[tuple[int, ...]] = []
    nodes = 0
    total = n * (n - 1) // c

    def use(a, b, k):
        cap[a][b] -= k
        if not directed:
            cap[b][a] -= k

    def first_open():
        for u in range(1, n + 1):
            row = cap[u]
            for v in range(1, n + 1):
                if row[v] > 0 and (directed or v > u):
                    return u, v
        return None

    def cover():
        if len(cycles) == total:
            return True
        uv = first_open()
        if uv is None:
            return False
        u, v = uv
        use(u, v, 1)
        path = [u, v]
        on = {u, v}
        ok = extend(path, on)
        use(u, v, -1)
        return ok

    def extend(path, on):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"exact cover search exceeded {budget} nodes")
        last = path[-1]
        if len(path) == c:
            u = path[0]
            if cap[last][u] <= 0:
                return False
            use(last, u, 1)
            cycles.append(tuple(path))
            if cover():
                return True
            cycles.pop()
            use(last, u, -1)
            return False
        row = cap[last]
        cand = [w for w in range(1, n + 1) if row[w] > 0 and w not in on]
        if rng is not None:
            rng.shuffle(cand)
        for w in cand:
            use(last, w, 1)
            path.append(w)
            on.add(w)
            if extend(path, on):
                return True
            on.discard(w)
            path.pop()
            use(last, w, -1)
        return False

    if symmetry_break:
        first = tuple(range(1, c + 1))
        for i in range(c):
            use(first[i], first[(i + 1) % c], 1)
        cycles.append(first)
    if cover():
        return list(cycles)
    return None


def decompose_2kn(n: int, c: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Decompose 2K_n on vertices 1..n into n(n-1)/c cycles of length c.

    Each cycle is a vertex tuple with the closing edge implied.  Raises
    :class:`Infeasible` for non-dividing c or the excluded parameters and
    :class:`ConstructionError` if every strategy fails within ``budget``.
    """
    if not 2 <= c <= n:
        raise ValueError(f"need 2 <= c <= n, got c={c}, n={n}")
    if (n * (n - 1)) % c:
        raise Infeasible(f"infeasible by theorem: {c} does not divide n(n-1) = {n * (n - 1)}")
    if (n, c) in EXCEPTIONS:
        raise Infeasible(f"infeasible by theorem: (n, c) = ({n}, {c}) is an excluded case")
    if c == 2:
        return [(u, v) for u, v in combinations(range(1, n + 1), 2)]
    if c == n and n % 2 == 1:
        out = _zigzag(n)
    else:
        out = _cyclic_development(n, c, seed, budget)
    if out is None:
        rng = random.Random(seed)
        per = 20000
        spent = 0
        while spent < budget and out is None:
            try:
                out = exhaustive_cycle_cover(n, c, seed=rng.randrange(2**32),
                                             symmetry_break=True, budget=per)
                if out is None:
                    break
            except BudgetExhausted:
                pass
            spent += per
            per = min(per * 2, budget - spent) if budget > spent else per
    if out is None or not is_2kn_decomposition(n, c, out):
        raise ConstructionError(f"no decomposition of 2K_{n} into {c}-cycles found")
    return out


@dataclass(frozen=True)
class AlphaBeta:
    alpha: int
    beta: int
    ell: int


def alpha_beta(n: int, h: int, c: int, leave_size: int) -> AlphaBeta:
    """How many doubled copies of K_n (alpha pairs) and extra c-cycles (beta)
    make up the 2-subset multigraph matching K_n^h minus a leave."""
    nn = n * (n - 1)
    if nn % c:
        raise ValueError(f"c={c} does not divide n(n-1)={nn}")
    total = comb(n, h) - leave_size
    if total < 0 or total % c:
        raise ValueError(f"c={c} does not divide C(n,h) - |L| = {total}")
    alpha = total // nn
    beta = (total - alpha * nn) // c
    ell = comb(n, h) - c * (comb(n, h) // c)
    assert beta * c <= nn - c
    return AlphaBeta(alpha, beta, ell)


@dataclass(frozen=True)
class MEdge:
    u: int
    v: int
    label: str

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("loop edge")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)

    def to_dict(self) -> dict:
        return {"v": [self.u, self.v], "label": self.label}


@dataclass(frozen=True)
class GraphCycle:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]       # indices into Multigraph.edges; edge i joins vertices i, i+1
    label: str


@dataclass
class Multigraph:
    n: int
    edges: list[MEdge]
    cycles: list[GraphCycle] = field(default_factory=list)

    def pair_multiplicity(self) -> Counter:
        return Counter(e.pair for e in self.edges)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [e.to_dict() for e in self.edges],
                "cycles": [{"vertices": list(cy.vertices), "edges": list(cy.edges),
                            "label": cy.label} for cy in self.cycles]}


def build_H(n: int, h: int, c: int, leave_size: int = 0, seed: int = 0,
            budget: int = DEFAULT_BUDGET) -> Multigraph:
    """H1 (beta cycles of one 2K_n decomposition) plus H2 (2*alpha copies of
    K_n), together with a c-cycle decomposition of the whole multigraph."""
    ab = alpha_beta(n, h, c, leave_size)
    base = decompose_2kn(n, c, seed, budget) if ab.alpha or ab.beta else []
    edges: list[MEdge] = []
    cycles: list[GraphCycle] = []

    for idx in range(ab.beta):
        cyc = base[idx]
        label = f"H1:{idx}"
        ids = []
        for i in range(c):
            ids.append(len(edges))
            edges.append(MEdge(cyc[i], cyc[(i + 1) % c], label))
        cycles.append(GraphCycle(tuple(cyc), tuple(ids), label))

    pairs = list(combinations(range(1, n + 1), 2))
    for i in range(ab.alpha):
        a, b = f"B{2 * i + 1}", f"B{2 * i + 2}"
        slots: dict[tuple[int, int], list[int]] = {}
        for p in pairs:
            slots[p] = [len(edges), len(edges) + 1]
            edges.append(MEdge(p[0], p[1], a))
            edges.append(MEdge(p[0], p[1], b))
        for t, cyc in enumerate(base):
            ids = []
            for k in range(c):
                x, y = cyc[k], cyc[(k + 1) % c]
                ids.append(slots[(x, y) if x < y else (y, x)].pop(0))
            cycles.append(GraphCycle(tuple(cyc), tuple(ids), f"{a}+{b}:{t}"))

    if len(edges) != comb(n, h) - leave_size:
        raise ConstructionError("|E(H)| does not match |E(K_n^h \\ L)|")
    return Multigraph(n, edges, cycles)
