"""Almost-regular partitions of lambda-fold complete uniform hypergraphs.

The construction follows the inductive flow argument behind Baranyai-type
theorems.  Vertices are added one at a time.  Each part holds a multiset of
partial edges (subsets of the vertices seen so far), and an integral flow
decides how many partial edges of each part absorb the new vertex.  With
``D`` the number of vertex slots part i still has to fill and ``r``
unprocessed vertices, the part's share is bounded by floor(D/r) and
ceil(D/r).  A fractional flow meeting these bounds always exists, so the
integral one does, and the bounds keep every final degree within
{floor(c h / n), ceil(c h / n)}.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConstructionError
from .hypergraph import HEdge, Hypergraph


@dataclass(frozen=True)
class SplitSpec:
    n: int
    h: int
    lam: int
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))


@dataclass(frozen=True)
class DegreeTarget:
    floor_deg: int
    ceil_deg: int
    epsilon: Fraction


def degree_target(n: int, h: int, c: int) -> DegreeTarget:
    """Floor and ceiling of ``c*h/n`` and the fractional part, exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    q, r = divmod(c * h, n)
    return DegreeTarget(q, q + (r > 0), Fraction(r, n))


class _Flow:
    """Edmonds-Karp max flow on a small graph; capacities may be raised later."""

    def __init__(self, size: int):
        self.graph: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> int:
        k = len(self.to)
        self.to += [v, u]
        self.cap += [c, 0]
        self.graph[u].append(k)
        self.graph[v].append(k + 1)
        return k

    def flow_on(self, k: int) -> int:
        return self.cap[k + 1]

    def augment(self, s: int, t: int) -> int:
        total = 0
        to, cap, graph = self.to, self.cap, self.graph
        while True:
            back = [-1] * len(graph)
            back[s] = -2
            queue = deque([s])
            while queue and back[t] == -1:
                u = queue.popleft()
                for k in graph[u]:
                    v = to[k]
                    if cap[k] > 0 and back[v] == -1:
                        back[v] = k
                        queue.append(v)
            if back[t] == -1:
                return total
            push = None
            v = t
            while v != s:
                k = back[v]
                push = cap[k] if push is None else min(push, cap[k])
                v = to[k ^ 1]
            v = t
            while v != s:
                k = back[v]
                cap[k] -= push
                cap[k ^ 1] += push
                v = to[k ^ 1]
            total += push


def _colex(s: tuple[int, ...]):
    return (len(s), s[::-1])


def almost_regular_partition(spec: SplitSpec) -> list[Hypergraph]:
    """Split lambda*K_n^h into parts of the given sizes, each almost regular.

    Part i has exactly ``spec.sizes[i]`` edges and every vertex degree in it
    lies in ``{floor(c_i h/n), ceil(c_i h/n)}``.  Every part keeps the full
    vertex set.
    """
    n, h, lam = spec.n, spec.h, spec.lam
    sizes = spec.sizes
    if not 2 <= h <= n:
        raise ValueError(f"need 2 <= h <= n, got h={h}, n={n}")
    if lam < 1:
        raise ValueError("lambda must be at least 1")
    if any(c < 0 for c in sizes):
        raise ValueError("part sizes must be non-negative")
    total = lam * comb(n, h)
    if sum(sizes) != total:
        raise ValueError(f"part sizes sum to {sum(sizes)}, expected lambda*C(n,h) = {total}")

    k = len(sizes)
    parts: list[Counter] = [Counter({(): c}) if c else Counter() for c in sizes]
    filled = [0] * k      # vertex slots already used by part i

    for j in range(1, n + 1):
        remaining = n - j + 1
        classes: dict[tuple, int] = {}
        for P in parts:
            for A, mult in P.items():
                classes[A] = classes.get(A, 0) + mult
        order = sorted(classes, key=_colex)
        for A in order:
            expected = lam * comb(n - j + 1, h - len(A))
            if classes[A] != expected:
                raise ConstructionError(
                    f"partial edge {A} has multiplicity {classes[A]}, expected {expected}")
        cidx = {A: t for t, A in enumerate(order)}
        src, sink = k + len(order), k + len(order) + 1
        net = _Flow(k + len(order) + 2)
        lo, hi = [], []
        for i in range(k):
            slots = sizes[i] * h - filled[i]
            lo.append(slots // remaining)
            hi.append(-(-slots // remaining))
        src_arcs = [net.add(src, i, lo[i]) for i in range(k)]
        part_arcs = []
        for i, P in enumerate(parts):
            for A in sorted(P, key=_colex):
                if len(A) < h:
                    part_arcs.append((i, A, net.add(i, k + cidx[A], P[A])))
        need = 0
        for A in order:
            r = lam * comb(n - j, h - len(A) - 1) if len(A) < h else 0
            need += r
            if r:
                net.add(k + cidx[A], sink, r)
        got = net.augment(src, sink)
        if got != sum(lo):
            raise ConstructionError(f"vertex {j}: lower-bound flow {got} < {sum(lo)}")
        for i, a in enumerate(src_arcs):
            net.cap[a] += hi[i] - lo[i]
        got += net.augment(src, sink)
        if got != need:
            raise ConstructionError(
                f"vertex {j}: flow {got} cannot absorb {need} edge incidences; "
                "the capacity derivation is wrong")
        for i, A, arc in part_arcs:
            x = net.flow_on(arc)
            if x:
                P = parts[i]
                P[A] -= x
                if not P[A]:
                    del P[A]
                P[A + (j,)] += x
                filled[i] += x

    copies: Counter = Counter()
    out = []
    for P in parts:
        edges = []
        for A in sorted(P, key=_colex):
            if len(A) != h:
                raise ConstructionError(f"partial edge {A} left incomplete")
            for _ in range(P[A]):
                edges.append(HEdge(A, copies[A]))
                copies[A] += 1
        edges.sort(key=lambda e: (e.vertices[::-1], e.copy))
        out.append(Hypergraph(n, edges, lam))
    return out
