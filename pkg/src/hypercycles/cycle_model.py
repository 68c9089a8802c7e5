"""Exact classification of a hypergraph against the five cycle notions.

A hypergraph may be a Berge cycle (an alternating vertex/edge sequence using
every edge once), a circle (edges are intervals of a cyclic vertex order and
consecutive intervals meet), an l-intersecting circle, a connected 2-factor
or a connected h-factor.  All searches here are exhaustive with witnesses, so
they are meant for desk-scale inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExhausted, TooLarge
from .hypergraph import HEdge, Hypergraph, colex_key, degree_profile

DEFAULT_BUDGET = 10**7
DEFAULT_CIRCLE_CAP = 12


@dataclass(frozen=True)
class BergeCycle:
    """Witness ``v1, e1, v2, e2, ..., vt, et`` with ``{vi, vi+1} <= ei``."""

    vertices: tuple[int, ...]
    edges: tuple[HEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @property
    def length(self) -> int:
        return len(self.edges)

    def problems(self) -> list[str]:
        """Violations of the definition; empty when the witness is valid."""
        t = len(self.edges)
        out = []
        if t < 2:
            out.append("fewer than two edges")
        if len(self.vertices) != t:
            out.append(f"{len(self.vertices)} vertices for {t} edges")
            return out
        if len(set(self.vertices)) != t:
            out.append("repeated vertex")
        if len(set(self.edges)) != t:
            out.append("repeated edge")
        for i, e in enumerate(self.edges):
            a, b = self.vertices[i], self.vertices[(i + 1) % t]
            if a not in e or b not in e:
                out.append(f"edge {e} misses {{{a},{b}}}")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def spans(self, n: int) -> bool:
        covered = set()
        for e in self.edges:
            covered.update(e.vertices)
        return len(covered) == n

    def to_dict(self) -> dict:
        return {"length": self.length, "vertices": list(self.vertices),
                "edges": [e.to_dict() for e in self.edges]}

    @classmethod
    def from_dict(cls, d: dict) -> "BergeCycle":
        return cls(tuple(d["vertices"]), tuple(HEdge.from_dict(e) for e in d["edges"]))


@dataclass(frozen=True)
class CircleWitness:
    ordering: tuple[int, ...]
    edges: tuple[HEdge, ...]                  # edges in natural (interval start) order
    intervals: tuple[tuple[int, int], ...]    # (start position, size) per edge above
    intersection_sizes: tuple[int, ...]       # |e_i & e_{i+1}|, cyclically
    ties: bool = False                        # some edges occupy the same interval

    @property
    def ell(self) -> int | None:
        sizes = set(self.intersection_sizes)
        return sizes.pop() if len(sizes) == 1 else None

    def to_dict(self) -> dict:
        return {"ordering": list(self.ordering),
                "edges": [e.to_dict() for e in self.edges],
                "intervals": [list(iv) for iv in self.intervals],
                "intersection_sizes": list(self.intersection_sizes),
                "ties": self.ties}


@dataclass
class Classification:
    berge_cycle: BergeCycle | None
    circle: CircleWitness | None
    ell_intersecting: int | None
    connected_2factor: bool
    connected_hfactor: bool
    hamiltonian: bool
    spanning: bool
    circle_checked: bool = True
    ell_circle: CircleWitness | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "berge_cycle": self.berge_cycle.to_dict() if self.berge_cycle else None,
            "circle": self.circle.to_dict() if self.circle else None,
            "circle_checked": self.circle_checked,
            "ell_intersecting": self.ell_intersecting,
            "ell_circle": self.ell_circle.to_dict() if self.ell_circle else None,
            "connected_2factor": self.connected_2factor,
            "connected_hfactor": self.connected_hfactor,
            "hamiltonian": self.hamiltonian,
            "spanning": self.spanning,
        }


def find_berge_cycle(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> BergeCycle | None:
    """Search for a Berge cycle whose edge set is all of E(H).

    Edges are tried in colex order and connector vertices in increasing id,
    so the witness is reproducible.  Raises :class:`BudgetExhausted` when more
    than ``budget`` search nodes would be needed.
    """
    edges = H.sorted_edges()
    m = len(edges)
    if m < 2:
        return None
    covered = {v for e in edges for v in e.vertices}
    if len(covered) < m:
        return None

    incident: dict[int, list[int]] = {v: [] for v in covered}
    for j, e in enumerate(edges):
        for v in e.vertices:
            incident[v].append(j)
    unused_at = {v: len(js) for v, js in incident.items()}
    used_edge = [False] * m
    used_vertex = set()
    seq_v: list[int] = []
    seq_e: list[int] = []
    nodes = 0

    def take_edge(j):
        used_edge[j] = True
        for v in edges[j].vertices:
            unused_at[v] -= 1

    def drop_edge(j):
        used_edge[j] = False
        for v in edges[j].vertices:
            unused_at[v] += 1

    def extend(v):
        # seq_v ends with v, which still needs its outgoing edge
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"Berge cycle search exceeded {budget} nodes")
        first = seq_v[0]
        last_edge = len(seq_e) == m - 1
        for j in incident[v]:
            if used_edge[j]:
                continue
            e = edges[j]
            if last_edge:
                if first in e:
                    seq_e.append(j)
                    return True
                continue
            take_edge(j)
            seq_e.append(j)
            # some unused edge must remain to close back to the first vertex
            if unused_at[first] > 0:
                for w in e.vertices:
                    if w in used_vertex:
                        continue
                    used_vertex.add(w)
                    seq_v.append(w)
                    if extend(w):
                        return True
                    seq_v.pop()
                    used_vertex.discard(w)
            seq_e.pop()
            drop_edge(j)
        return False

    e0 = edges[0]
    take_edge(0)
    seq_e.append(0)
    for v1 in e0.vertices:
        for v2 in e0.vertices:
            if v2 == v1:
                continue
            seq_v[:] = [v1, v2]
            used_vertex.clear()
            used_vertex.update((v1, v2))
            if unused_at[v1] == 0:
                continue
            if extend(v2):
                return BergeCycle(tuple(seq_v), tuple(edges[j] for j in seq_e))
    return None


def _interval_start(members: set[int], ordering: tuple[int, ...]) -> int:
    N = len(ordering)
    if len(members) == N:
        return 0
    for p, v in enumerate(ordering):
        if v in members and ordering[p - 1] not in members:
            return p
    raise AssertionError("edge is not an interval")


def _witness(H: Hypergraph, ordering: tuple[int, ...]) -> CircleWitness | None:
    pos = {v: p for p, v in enumerate(ordering)}
    placed = []
    for e in H.edges:
        start = _interval_start(set(e.vertices), ordering)
        placed.append((start, colex_key(e), e))
    placed.sort(key=lambda t: (t[0], t[1]))
    es = [t[2] for t in placed]
    m = len(es)
    sizes = []
    if m >= 2:
        for i in range(m):
            a, b = es[i], es[(i + 1) % m]
            k = len(set(a.vertices) & set(b.vertices))
            if k == 0:
                return None
            sizes.append(k)
    spots = [(t[0], len(t[2])) for t in placed]
    ties = len(set(spots)) < len(spots)
    del pos
    return CircleWitness(ordering, tuple(es), tuple(spots), tuple(sizes), ties)


def _interval_orderings(H: Hypergraph, budget: int):
    """Yield every cyclic ordering (up to rotation and reflection) under which
    all edges are intervals."""
    n = H.n
    vsets = [frozenset(e.vertices) for e in H.edges]
    sizes = [len(s) for s in vsets]
    m = len(vsets)
    trans = [0] * m
    count = [0] * m
    order = [1]
    used = {1}
    for j in range(m):
        if 1 in vsets[j]:
            count[j] = 1
    nodes = 0

    def rec():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"circle search exceeded {budget} nodes")
        if len(order) == n:
            if n >= 3 and order[1] > order[-1]:
                return
            last, first = order[-1], order[0]
            for j in range(m):
                t = trans[j] + ((last in vsets[j]) != (first in vsets[j]))
                if t > 2:
                    return
            yield tuple(order)
            return
        u = order[-1]
        for w in range(2, n + 1):
            if w in used:
                continue
            changed = []
            ok = True
            for j in range(m):
                s = vsets[j]
                iw = w in s
                if (u in s) != iw:
                    trans[j] += 1
                    changed.append(j)
                if iw:
                    count[j] += 1
                t = trans[j]
                if t > 2 or (t == 2 and count[j] < sizes[j] and 1 not in s):
                    ok = False
            if ok:
                order.append(w)
                used.add(w)
                yield from rec()
                order.pop()
                used.discard(w)
            for j in changed:
                trans[j] -= 1
            for j in range(m):
                if w in vsets[j]:
                    count[j] -= 1

    yield from rec()


def _check_cap(H: Hypergraph, cap: int):
    if H.n > cap:
        raise TooLarge(f"|V|={H.n} is too large for exact circle search (cap {cap})")


def find_circle(H: Hypergraph, require_ell: int | None = None, *,
                cap: int = DEFAULT_CIRCLE_CAP,
                budget: int = DEFAULT_BUDGET) -> CircleWitness | None:
    """Exhaustively search for a circle structure on H.

    With ``require_ell`` set, every pair of consecutive edges must meet in
    exactly that many vertices.
    """
    _check_cap(H, cap)
    if not H.edges:
        return None
    for ordering in _interval_orderings(H, budget):
        w = _witness(H, ordering)
        if w is None:
            continue
        if require_ell is None or (w.intersection_sizes and w.ell == require_ell):
            return w
    return None


def _scan_circles(H: Hypergraph, cap: int, budget: int):
    _check_cap(H, cap)
    first = ell_w = None
    if not H.edges:
        return None, None
    for ordering in _interval_orderings(H, budget):
        w = _witness(H, ordering)
        if w is None:
            continue
        if first is None:
            first = w
        if w.intersection_sizes and w.ell is not None:
            ell_w = w
            break
    return first, ell_w


def is_connected(H: Hypergraph) -> bool:
    """Connectivity of the vertex-edge incidence graph over all of [n]."""
    if H.n == 1:
        return True
    parent = list(range(H.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        r = find(e.vertices[0])
        for v in e.vertices[1:]:
            parent[find(v)] = r
    root = find(1)
    return all(find(v) == root for v in range(2, H.n + 1))


def classify(H: Hypergraph, h: int | None = None, *,
             circle_cap: int = DEFAULT_CIRCLE_CAP,
             budget: int = DEFAULT_BUDGET) -> Classification:
    """Evaluate all five cycle notions on H.

    ``h`` is the regularity used for the connected h-factor check and
    defaults to the corank.  When |V| exceeds ``circle_cap`` the circle
    checks are skipped and ``circle_checked`` is False.
    """
    if h is None:
        h = H.corank
    berge = find_berge_cycle(H, budget)
    try:
        circle, ell_w = _scan_circles(H, circle_cap, budget)
        checked = True
    except TooLarge:
        circle = ell_w = None
        checked = False
    degrees = degree_profile(H)
    connected = is_connected(H)
    ell = ell_w.ell if ell_w is not None else None
    return Classification(
        berge_cycle=berge,
        circle=circle,
        ell_intersecting=ell,
        connected_2factor=connected and degrees.regular and degrees.min_degree == 2,
        connected_hfactor=connected and degrees.regular and degrees.min_degree == h,
        hamiltonian=berge is not None and berge.length == H.n,
        spanning=berge is not None and berge.spans(H.n),
        circle_checked=checked,
        ell_circle=ell_w,
    )
