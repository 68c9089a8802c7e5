"""Bipartite graphs: maximum matching, Hall certificates and long cycles.

Y nodes may carry a capacity.  A Y node of capacity k stands for k
interchangeable copies with identical neighbourhoods, which is how the lifting
graphs of the fixed-length pipeline stay small.  With all capacities equal to
one this is the ordinary simple bipartite graph.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import BudgetExhausted

INF = float("inf")
DEFAULT_BUDGET = 10**7


class BipartiteGraph:
    """Bipartite graph ``B[X, Y]`` with opaque node keys.

    Adjacency is kept as flat lists of Y indices per X index, in the order
    given, which fixes the tie-breaking of every algorithm below.
    """

    def __init__(self, X: Sequence[Hashable], Y: Sequence[Hashable],
                 adjacency: Mapping[Hashable, Iterable[Hashable]],
                 capacity: Mapping[Hashable, int] | None = None):
        self.X = list(X)
        self.Y = list(Y)
        self.x_index = {x: i for i, x in enumerate(self.X)}
        self.y_index = {y: j for j, y in enumerate(self.Y)}
        if len(self.x_index) != len(self.X) or len(self.y_index) != len(self.Y):
            raise ValueError("duplicate node keys")
        adj: list[list[int]] = [[] for _ in self.X]
        for x, ys in adjacency.items():
            if x not in self.x_index:
                raise ValueError(f"adjacency key {x!r} is not in X")
            row = adj[self.x_index[x]]
            seen = set()
            for y in ys:
                j = self.y_index.get(y)
                if j is None:
                    raise ValueError(f"{y!r} is not in Y")
                if j in seen:
                    raise ValueError(f"parallel edge {x!r}-{y!r}")
                seen.add(j)
                row.append(j)
        self.adj = adj
        if capacity is None:
            self.cap = [1] * len(self.Y)
        else:
            self.cap = [int(capacity.get(y, 1)) for y in self.Y]
            if any(c < 0 for c in self.cap):
                raise ValueError("negative capacity")

    @classmethod
    def from_index_lists(cls, X, Y, adj: list[list[int]], cap: list[int] | None = None):
        """Build directly from index adjacency; no validation beyond shapes."""
        B = cls.__new__(cls)
        B.X, B.Y = list(X), list(Y)
        B.x_index = {x: i for i, x in enumerate(B.X)}
        B.y_index = {y: j for j, y in enumerate(B.Y)}
        B.adj = adj
        B.cap = list(cap) if cap is not None else [1] * len(B.Y)
        return B

    def __repr__(self):
        return (f"BipartiteGraph(|X|={len(self.X)}, |Y|={len(self.Y)}, "
                f"edges={self.edge_count()})")

    @property
    def simple(self) -> bool:
        return all(c == 1 for c in self.cap)

    def edge_count(self) -> int:
        return sum(len(r) for r in self.adj)

    def y_size(self) -> int:
        """|Y| counted with capacities."""
        return sum(self.cap)

    def neighbours(self, x) -> list:
        return [self.Y[j] for j in self.adj[self.x_index[x]]]

    def y_adjacency(self) -> list[list[int]]:
        yadj: list[list[int]] = [[] for _ in self.Y]
        for i, row in enumerate(self.adj):
            for j in row:
                yadj[j].append(i)
        return yadj

    def degree_x(self, i: int) -> int:
        return len(self.adj[i])


@dataclass
class Matching:
    """Partial map X key -> Y key.  A Y key appears at most ``capacity`` times."""

    pairs: dict

    def __len__(self):
        return len(self.pairs)

    def is_valid(self, B: BipartiteGraph) -> bool:
        load = [0] * len(B.Y)
        for x, y in self.pairs.items():
            i, j = B.x_index.get(x), B.y_index.get(y)
            if i is None or j is None or j not in B.adj[i]:
                return False
            load[j] += 1
        return all(load[j] <= B.cap[j] for j in range(len(B.Y)))

    def saturates_x(self, B: BipartiteGraph) -> bool:
        return len(self.pairs) == len(B.X)

    def is_perfect(self, B: BipartiteGraph) -> bool:
        return len(self.pairs) == len(B.X) == B.y_size()


@dataclass
class HallCertificate:
    """A set S of X nodes with fewer neighbours than members."""

    S: list
    neighborhood: list
    neighborhood_size: int    # counted with capacities
    capacities: list = field(default_factory=list)   # parallel to neighborhood

    @property
    def deficiency(self) -> int:
        return len(self.S) - self.neighborhood_size

    def is_valid(self, B: BipartiteGraph) -> bool:
        idx = [B.x_index[x] for x in self.S]
        nb = {j for i in idx for j in B.adj[i]}
        if nb != {B.y_index[y] for y in self.neighborhood}:
            return False
        return sum(B.cap[j] for j in nb) == self.neighborhood_size < len(self.S)


class _MatchState:
    def __init__(self, B: BipartiteGraph):
        self.adj = B.adj
        self.cap = B.cap
        self.mate = [-1] * len(B.X)
        self.users: list[list[int]] = [[] for _ in B.Y]

    def load_from(self, B: BipartiteGraph, M: Matching):
        for x, y in M.pairs.items():
            i, j = B.x_index[x], B.y_index[y]
            self.mate[i] = j
            self.users[j].append(i)

    def greedy(self):
        adj, cap, users, mate = self.adj, self.cap, self.users, self.mate
        for i, row in enumerate(adj):
            if mate[i] != -1:
                continue
            for j in row:
                if len(users[j]) < cap[j]:
                    mate[i] = j
                    users[j].append(i)
                    break

    def _bfs(self, dist) -> bool:
        adj, cap, users, mate = self.adj, self.cap, self.users, self.mate
        queue = deque()
        for i in range(len(adj)):
            if mate[i] == -1:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = INF
        seen_y = bytearray(len(cap))
        found = False
        while queue:
            i = queue.popleft()
            d = dist[i] + 1
            for j in adj[i]:
                if seen_y[j]:
                    continue
                seen_y[j] = 1
                if len(users[j]) < cap[j]:
                    found = True
                elif not found:
                    for i2 in users[j]:
                        if dist[i2] == INF:
                            dist[i2] = d
                            queue.append(i2)
        return found

    def _candidates(self, i, dist):
        cap, users = self.cap, self.users
        nd = dist[i] + 1
        for j in self.adj[i]:
            if len(users[j]) < cap[j]:
                yield j, -1
            else:
                for i2 in users[j]:
                    if dist[i2] == nd:
                        yield j, i2

    def _augment_from(self, root, dist) -> bool:
        stack = [(root, self._candidates(root, dist))]
        path_y: list[int] = []
        while stack:
            i, gen = stack[-1]
            nxt = next(gen, None)
            if nxt is None:
                dist[i] = INF
                stack.pop()
                if path_y:
                    path_y.pop()
                continue
            j, i2 = nxt
            if i2 == -1:
                ys = path_y + [j]
                for (xi, _), yj in zip(stack, ys):
                    old = self.mate[xi]
                    if old != -1:
                        self.users[old].remove(xi)
                    self.mate[xi] = yj
                    self.users[yj].append(xi)
                return True
            path_y.append(j)
            stack.append((i2, self._candidates(i2, dist)))
        return False

    def run(self):
        dist = [INF] * len(self.adj)
        while self._bfs(dist):
            progressed = False
            for i in range(len(self.adj)):
                if self.mate[i] == -1 and dist[i] == 0:
                    if self._augment_from(i, dist):
                        progressed = True
            if not progressed:
                break

    def alternating_reach(self, roots):
        """X and Y indices reachable from ``roots`` by alternating paths, and
        whether an unsaturated Y node was reached."""
        adj, cap, users = self.adj, self.cap, self.users
        seen_x = set(roots)
        seen_y = set()
        queue = deque(roots)
        open_y = False
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                if j in seen_y:
                    continue
                seen_y.add(j)
                if len(users[j]) < cap[j]:
                    open_y = True
                for i2 in users[j]:
                    if i2 not in seen_x:
                        seen_x.add(i2)
                        queue.append(i2)
        return seen_x, seen_y, open_y


def max_matching(B: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching by Hopcroft-Karp phases after a greedy start."""
    st = _MatchState(B)
    st.greedy()
    st.run()
    return Matching({B.X[i]: B.Y[j] for i, j in enumerate(st.mate) if j != -1})


def hall_certificate(B: BipartiteGraph, M: Matching) -> HallCertificate | None:
    """Deficiency witness for a maximum matching that leaves X unsaturated.

    Returns None when M saturates X.  Raises ValueError if M is not maximum.
    """
    if not M.is_valid(B):
        raise ValueError("not a matching of this graph")
    st = _MatchState(B)
    st.load_from(B, M)
    free = [i for i, j in enumerate(st.mate) if j == -1]
    if not free:
        return None
    _, _, open_y = st.alternating_reach(free)
    if open_y:
        raise ValueError("matching is not maximum: an augmenting path exists")
    sx, sy, _ = st.alternating_reach([free[0]])
    xs = sorted(sx)
    ys = sorted(sy)
    return HallCertificate([B.X[i] for i in xs], [B.Y[j] for j in ys],
                           sum(B.cap[j] for j in ys), [B.cap[j] for j in ys])


def check_jackson(B: BipartiteGraph, h: int) -> bool:
    """``2 <= |X| <= h <= |Y| <= 2h - 2`` and every X node has degree >= h."""
    p, q = len(B.X), len(B.Y)
    if not (B.simple and h >= 2 and 2 <= p <= h <= q <= 2 * h - 2):
        return False
    return all(len(r) >= h for r in B.adj)


def check_chiba(B: BipartiteGraph) -> bool:
    """``|X| >= |Y| >= 2`` and d(x) + d(y) >= (|X|+|Y|)/2 + 1 on non-adjacent pairs."""
    p, q = len(B.X), len(B.Y)
    if not (B.simple and p >= q >= 2):
        return False
    ydeg = [0] * q
    for r in B.adj:
        for j in r:
            ydeg[j] += 1
    need = p + q + 2     # doubled threshold
    for i, r in enumerate(B.adj):
        dx = len(r)
        rs = set(r)
        for j in range(q):
            if j not in rs and 2 * (dx + ydeg[j]) < need:
                return False
    return True


def _unified(B: BipartiteGraph):
    p = len(B.X)
    nbr = [set() for _ in range(p + len(B.Y))]
    for i, r in enumerate(B.adj):
        for j in r:
            nbr[i].add(p + j)
            nbr[p + j].add(i)
    return p, [sorted(s) for s in nbr], nbr


def _rotation_extension(order, nbrset, target, rng, steps):
    """Posa-style rotation-extension; returns node list of a target-cycle or None."""
    start = rng.choice(order)
    path = [start]
    pos = {start: 0}
    for _ in range(steps):
        end = path[-1]
        i = len(path) - target
        if i >= 0 and path[i] in nbrset[end]:
            return path[i:]
        nb = list(nbrset[end])
        rng.shuffle(nb)
        fresh = [w for w in nb if w not in pos]
        if fresh:
            w = min(fresh, key=lambda u: sum(1 for z in nbrset[u] if z not in pos))
            pos[w] = len(path)
            path.append(w)
            continue
        inner = [pos[w] for w in nb if pos[w] < len(path) - 2]
        if not inner or rng.random() < 0.1:
            path.reverse()
            pos = {v: t for t, v in enumerate(path)}
            continue
        k = rng.choice(inner)
        path[k + 1:] = path[k + 1:][::-1]
        for t in range(k + 1, len(path)):
            pos[path[t]] = t
    return None


def _exhaustive_cycle(p, nbr_sorted, nbr, sizes, target, budget):
    """Exhaustive search over simple cycles of ``target`` nodes."""
    k = target // 2
    small_is_x = sizes[0] <= sizes[1]
    S = list(range(p)) if small_is_x else list(range(p, p + sizes[1]))
    full = k == len(S)
    in_S = (lambda v: v < p) if small_is_x else (lambda v: v >= p)
    nodes = 0
    path: list[int] = []
    on = set()

    def rec(s):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"cycle search exceeded {budget} nodes")
        end = path[-1]
        if len(path) == target:
            return s in nbr[end]
        for w in nbr_sorted[end]:
            if w in on or (in_S(w) and w < s):
                continue
            on.add(w)
            path.append(w)
            if rec(s):
                return True
            path.pop()
            on.discard(w)
        return False

    starts = S[:1] if full else S
    for s in starts:
        path[:] = [s]
        on.clear()
        on.add(s)
        if rec(s):
            return list(path)
    return None


def find_cycle_of_length(B: BipartiteGraph, target: int, seed: int = 0,
                         budget: int = DEFAULT_BUDGET, restarts: int = 8) -> list | None:
    """A simple cycle on exactly ``target`` nodes, alternating X and Y.

    The returned key list starts with an X node.  Seeded rotation-extension
    restarts run first; the exhaustive fallback then either finds a cycle,
    proves there is none (returns None) or raises :class:`BudgetExhausted`.
    """
    p, q = len(B.X), len(B.Y)
    if target % 2 or target < 4 or target > 2 * min(p, q):
        raise ValueError(f"target must be even with 4 <= target <= {2 * min(p, q)}")
    p, nbr_sorted, nbr = _unified(B)
    order = list(range(p)) if p <= q else list(range(p, p + q))
    found = None
    for r in range(restarts):
        rng = random.Random(seed * 1_000_003 + r)
        found = _rotation_extension(order, nbr, target, rng, 40 * (p + q))
        if found:
            break
    if found is None:
        found = _exhaustive_cycle(p, nbr_sorted, nbr, (p, q), target, budget)
    if found is None:
        return None
    if found[0] >= p:
        found = found[1:] + found[:1]
    return [B.X[v] if v < p else B.Y[v - p] for v in found]
