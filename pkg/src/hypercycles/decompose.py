"""Partitions of complete uniform hypergraphs into Berge cycles.

Three pipelines:

* ``decompose_corank``: for hypergraphs whose corank is at least the longest
  cycle and at least ceil(n/2)+1, chunk the edges in colex order and find in
  each chunk's edge/vertex incidence graph a cycle through every edge.
* ``decompose_almost_regular``: split lambda*K_n^h into almost regular parts,
  then find a spanning cycle through each part's vertex/edge incidence graph.
* ``decompose_fixed_length``: all cycles of one length c.  Build a multigraph
  H on the same vertices that is already decomposed into c-cycles, match every
  hyperedge to a distinct pair of H it contains, and replace each pair of each
  graph cycle by its matched hyperedge.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .baranyai import SplitSpec, almost_regular_partition, degree_target
from .bipartite import BipartiteGraph, Matching, find_cycle_of_length, hall_certificate, max_matching
from .cycle_model import BergeCycle
from .errors import BudgetExhausted, ConstructionError, MatchingDeficient, Unsupported
from .graph_cycles import DEFAULT_BUDGET, Multigraph, build_H
from .hypergraph import HEdge, Hypergraph, colex_subsets, complete_uniform, remove_edges


@dataclass(frozen=True)
class LengthSpec:
    lengths: tuple[int, ...]
    require_spanning: bool = False
    allow_singletons: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths)))

    @classmethod
    def parse(cls, text: str, **flags) -> "LengthSpec":
        try:
            lengths = [int(tok) for tok in text.split(",") if tok.strip()]
        except ValueError:
            raise ValueError(f"bad length list {text!r}") from None
        return cls(tuple(lengths), **flags)

    def problems(self, n: int, size: int) -> list[str]:
        out = []
        if not self.lengths:
            out.append("empty length list")
            return out
        low = 1 if self.allow_singletons else 2
        if self.lengths[0] < low:
            out.append(f"length {self.lengths[0]} below {low}")
        if self.lengths[-1] > n:
            out.append(f"length {self.lengths[-1]} exceeds n={n}")
        if sum(self.lengths) != size:
            out.append(f"lengths sum to {sum(self.lengths)}, but there are {size} edges")
        return out

    def check(self, n: int, size: int) -> None:
        probs = self.problems(n, size)
        if probs:
            raise ValueError("; ".join(probs))


@dataclass(frozen=True)
class Part:
    """One block of a decomposition: a Berge cycle, or a lone edge."""

    edges: tuple[HEdge, ...]
    vertices: tuple[int, ...] | None
    provenance: str

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_cycle(self) -> bool:
        return self.vertices is not None

    def as_cycle(self) -> BergeCycle:
        if self.vertices is None:
            raise ValueError("singleton part is not a cycle")
        return BergeCycle(self.vertices, self.edges)

    def to_dict(self) -> dict:
        return {"length": self.length,
                "vertices": None if self.vertices is None else list(self.vertices),
                "edges": [e.to_dict() for e in self.edges],
                "provenance": self.provenance}

    @classmethod
    def from_dict(cls, d: dict) -> "Part":
        vs = d.get("vertices")
        edges = tuple(HEdge.from_dict(e) for e in d["edges"])
        if "length" in d and d["length"] != len(edges):
            raise ValueError(f"part claims length {d['length']} but lists {len(edges)} edges")
        return cls(edges, None if vs is None else tuple(vs), d.get("provenance", ""))

    @classmethod
    def from_cycle(cls, cyc: BergeCycle, provenance: str) -> "Part":
        return cls(cyc.edges, cyc.vertices, provenance)


@dataclass
class Decomposition:
    target: Hypergraph
    parts: list[Part] = field(default_factory=list)
    # run statistics (matching sizes etc.); not serialized, not compared
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def lengths(self) -> list[int]:
        return [p.length for p in self.parts]

    def to_dict(self) -> dict:
        return {"target": self.target.to_dict(), "parts": [p.to_dict() for p in self.parts]}

    @classmethod
    def from_dict(cls, d: dict, target: Hypergraph | None = None) -> "Decomposition":
        """Parse; a non-inline ``target`` entry must be resolved by the caller."""
        if target is None:
            t = d.get("target")
            if not isinstance(t, dict):
                raise ValueError("decomposition target is not inline; pass it explicitly")
            target = Hypergraph.from_dict(t)
        return cls(target, [Part.from_dict(p) for p in d["parts"]])


# --- conditions ---------------------------------------------------------------

def check_thm5_condition(n: int, h: int, c: int) -> bool:
    """h + floor(c h / n) >= (c + n)/2 + 1, in integers."""
    if not 2 <= c <= n:
        raise ValueError(f"need 2 <= c <= n, got c={c}, n={n}")
    return 2 * (h + (c * h) // n) >= c + n + 2


def thm5_condition_real(n: int, h: int, c: int) -> bool:
    """The same condition in its real form h >= n/2 + n(1+eps)/(n+c)."""
    eps = degree_target(n, h, c).epsilon
    return Fraction(h) >= Fraction(n, 2) + Fraction(n) * (1 + eps) / (n + c)


def corank_condition(n: int, corank: int, longest: int) -> bool:
    return corank >= max(longest, -(-n // 2) + 1)


def case_conditions(n: int, h: int, c: int) -> dict[str, list[str]]:
    """For each fixed-length case, the list of its conditions that fail."""
    div = (n * (n - 1)) % c == 0
    half = -(-n // 2) + 1
    ell = comb(n, h) % c if 0 <= h <= n else 0
    out = {}
    out["C"] = ([] if h >= max(c, half) else [f"h >= max(c, ceil(n/2)+1) = {max(c, half)}"])
    out["E"] = [m for ok, m in ((h == n - 1, "h = n-1"), (c == n, "c = n")) if not ok]
    out["D"] = [m for ok, m in ((h == n - 2, "h = n-2"), (c in (n - 1, n), "c in {n-1, n}"),
                                (n >= 16, "n >= 16")) if not ok]
    out["A"] = [m for ok, m in ((h == 3, "h = 3"), (div, "c | n(n-1)"), (n >= 85, "n >= 85"),
                                (ell <= n // 3, "leave size <= floor(n/3)")) if not ok]
    out["B"] = [m for ok, m in ((4 <= h < max(c, half), f"4 <= h < {max(c, half)}"),
                                (div, "c | n(n-1)"), (n >= 23, "n >= 23")) if not ok]
    guard = []
    if h < 3:
        guard.append("h >= 3")
    if h >= n:
        guard.append("h < n")
    for k in "CDAB":
        out[k] = guard + out[k]
    if h < 3:
        out["E"] = ["h >= 3"] + out["E"]
    return out


def case_of(n: int, h: int, c: int) -> str:
    """First applicable case among C, E, D, A, B; 'unsupported' if none."""
    if not 2 <= c <= n:
        return "unsupported"
    conds = case_conditions(n, h, c)
    for k in "CEDAB":
        if not conds[k]:
            return k
    return "unsupported"


def leave_size(n: int, h: int, c: int) -> int:
    return comb(n, h) % c


# --- pipeline 1: high corank ---------------------------------------------------

def _incidence_cycle_edges_first(F: list[HEdge], seed: int, budget: int, label: str) -> BergeCycle:
    ys = sorted({v for e in F for v in e.vertices})
    B = BipartiteGraph(F, ys, {e: e.vertices for e in F})
    t = len(F)
    if t == 1:
        raise ValueError("a cycle needs at least two edges")
    try:
        cyc = find_cycle_of_length(B, 2 * t, seed=seed, budget=budget)
    except BudgetExhausted as exc:
        err = ConstructionError(f"{label}: cycle search ran out of budget on {[str(e) for e in F]}")
        err.block = F
        raise err from exc
    if cyc is None:
        err = ConstructionError(f"{label}: no cycle through all edges of {[str(e) for e in F]}")
        err.block = F
        raise err
    xs, yv = cyc[0::2], cyc[1::2]
    return BergeCycle((yv[-1],) + tuple(yv[:-1]), tuple(xs))


def decompose_corank(H: Hypergraph, spec: LengthSpec, seed: int = 0,
                     budget: int = DEFAULT_BUDGET, tag: str = "corank") -> Decomposition:
    """Cycles of the requested lengths for a hypergraph of high corank."""
    spec.check(H.n, len(H))
    if not corank_condition(H.n, H.corank, spec.lengths[-1]):
        raise ValueError(f"corank {H.corank} < max(c_k, ceil(n/2)+1) = "
                         f"{max(spec.lengths[-1], -(-H.n // 2) + 1)}")
    edges = H.sorted_edges()
    parts = []
    pos = 0
    for i, c in enumerate(spec.lengths):
        F = edges[pos:pos + c]
        pos += c
        if c == 1:
            parts.append(Part(tuple(F), None, f"{tag}:singleton {i}"))
            continue
        cyc = _incidence_cycle_edges_first(F, seed, budget, f"{tag} block {i}")
        parts.append(Part.from_cycle(cyc, f"{tag}:block {i}"))
    return Decomposition(H, parts)


# --- pipeline 2: almost regular spanning cycles --------------------------------

def decompose_almost_regular(n: int, h: int, lam: int, spec: LengthSpec, seed: int = 0,
                             budget: int = DEFAULT_BUDGET) -> Decomposition:
    """Almost regular spanning cycles of the requested lengths in lambda*K_n^h."""
    H = complete_uniform(n, h, lam)
    spec.check(n, len(H))
    for c in spec.lengths:
        if c == 1:
            continue
        if not check_thm5_condition(n, h, c):
            raise ValueError(f"length {c} fails h + floor(c h/n) >= (c+n)/2 + 1 "
                             f"for n={n}, h={h}")
    split = almost_regular_partition(SplitSpec(n, h, lam, spec.lengths))
    parts = []
    for i, F in enumerate(split):
        c = len(F)
        if c == 1:
            parts.append(Part(F.edges, None, f"almost-regular:singleton {i}"))
            continue
        X = list(range(1, n + 1))
        B = BipartiteGraph(X, list(F.edges), {v: [e for e in F.edges if v in e] for v in X})
        try:
            cyc = find_cycle_of_length(B, 2 * c, seed=seed, budget=budget)
        except BudgetExhausted as exc:
            raise ConstructionError(f"part {i}: cycle search ran out of budget") from exc
        if cyc is None:
            raise ConstructionError(f"part {i}: incidence graph has no {2 * c}-cycle")
        parts.append(Part(tuple(cyc[1::2]), tuple(cyc[0::2]), f"almost-regular:part {i}"))
    return Decomposition(H, parts)


# --- pipeline 3: fixed length ---------------------------------------------------

def choose_leave(n: int, h: int, c: int, seed: int = 0, matching: bool | None = None) -> list[HEdge]:
    """A seeded random leave of the right size.

    With ``matching`` (default: when h = 3) the leave edges are pairwise
    disjoint.
    """
    ell = leave_size(n, h, c)
    rng = random.Random(seed)
    if matching is None:
        matching = h == 3
    if matching:
        if ell * h > n:
            raise ValueError(f"no matching of {ell} edges of size {h} on {n} vertices")
        vs = list(range(1, n + 1))
        rng.shuffle(vs)
        return [HEdge(tuple(sorted(vs[i * h:(i + 1) * h]))) for i in range(ell)]
    pool = colex_subsets(n, h)
    return [HEdge(s) for s in sorted(rng.sample(pool, ell), key=lambda s: s[::-1])]


def _lifting_graph(G: Hypergraph, Hm: Multigraph) -> BipartiteGraph:
    """X = hyperedges, Y = pair classes of H with their multiplicities."""
    mult = Hm.pair_multiplicity()
    pairs = sorted(mult, key=lambda p: (p[1], p[0]))
    pidx = {p: j for j, p in enumerate(pairs)}
    adj = []
    for e in G.edges:
        row = [pidx[p] for p in combinations(e.vertices, 2) if p in pidx]
        adj.append(row)
    return BipartiteGraph.from_index_lists(list(G.edges), pairs, adj, [mult[p] for p in pairs])


def _assign_copies(Hm: Multigraph, M: Matching, order) -> Matching:
    """Turn a matching into pair classes into one into individual H edges."""
    slots: dict = defaultdict(list)
    for k, e in enumerate(Hm.edges):
        slots[e.pair].append(k)
    for v in slots.values():
        v.reverse()
    out = {}
    for x in order:
        out[x] = slots[M.pairs[x]].pop()
    return Matching(out)


def translate_matching(Hm: Multigraph, M: Matching, target: Hypergraph) -> list[BergeCycle]:
    """Replace each edge of each graph cycle of H by its matched hyperedge.

    ``M`` maps every hyperedge of ``target`` to a distinct edge index of H
    whose pair it contains; anything else is rejected.
    """
    if len(M.pairs) != len(target) or len(M.pairs) != len(Hm.edges):
        raise ValueError(f"matching covers {len(M.pairs)} of {len(target)} hyperedges "
                         f"and {len(Hm.edges)} multigraph edges; not perfect")
    back: dict[int, HEdge] = {}
    for x, k in M.pairs.items():
        if x not in target:
            raise ValueError(f"{x} is not an edge of the target")
        if not 0 <= k < len(Hm.edges) or k in back:
            raise ValueError(f"multigraph edge {k} matched twice or out of range")
        f = Hm.edges[k]
        if f.u not in x or f.v not in x:
            raise ValueError(f"pair {f.pair} is not contained in {x}")
        back[k] = x
    return [BergeCycle(cy.vertices, tuple(back[k] for k in cy.edges)) for cy in Hm.cycles]


def _case_e_cycle(n: int) -> BergeCycle:
    full = set(range(1, n + 1))
    edges = []
    for i in range(1, n + 1):
        skip = (i + 1) % n + 1
        edges.append(HEdge(tuple(sorted(full - {skip}))))
    return BergeCycle(tuple(range(1, n + 1)), tuple(edges))


def decompose_fixed_length(n: int, h: int, c: int, leave=None, seed: int = 0, *,
                           best_effort: bool = False, budget: int = DEFAULT_BUDGET) -> Decomposition:
    """Decompose K_n^h minus a leave into cycles of length c.

    ``leave`` defaults to :func:`choose_leave`.  With ``best_effort`` the
    matching construction runs even when no case applies; the result is then
    either a verified decomposition or a :class:`MatchingDeficient` error.
    """
    if not 2 <= c <= n:
        raise ValueError(f"need 2 <= c <= n, got c={c}, n={n}")
    if not 2 <= h <= n:
        raise ValueError(f"need 2 <= h <= n, got h={h}, n={n}")
    ell = leave_size(n, h, c)
    if leave is None:
        leave = choose_leave(n, h, c, seed, matching=(h == 3 and ell * 3 <= n))
    leave = list(leave)
    if len(leave) != ell:
        raise ValueError(f"leave must have C(n,h) mod c = {ell} edges, got {len(leave)}")
    if any(len(e) != h or e.copy != 0 for e in leave):
        raise ValueError(f"leave edges must be simple {h}-sets")
    G = remove_edges(complete_uniform(n, h), leave)

    case = case_of(n, h, c)
    if case == "A":
        used = [v for e in leave for v in e.vertices]
        if len(used) != len(set(used)):
            raise ValueError("case A needs the leave to be a matching")
    if case == "unsupported":
        if not best_effort:
            conds = case_conditions(n, h, c)
            raise Unsupported("no case applies: " + "; ".join(
                f"{k} misses {', '.join(v)}" for k, v in conds.items()))
        case = "best-effort"

    tag = f"fixed-length/{case}"
    if case == "C":
        d = decompose_corank(G, LengthSpec((c,) * (len(G) // c)), seed, budget, tag=tag)
        return d
    if case == "E":
        return Decomposition(G, [Part.from_cycle(_case_e_cycle(n), tag)])

    if (n * (n - 1)) % c:
        raise Unsupported(f"{c} does not divide n(n-1); the multigraph construction needs it")
    Hm = build_H(n, h, c, len(leave), seed, budget)
    B = _lifting_graph(G, Hm)
    M = max_matching(B)
    if not M.is_perfect(B):
        cert = hall_certificate(B, M)
        raise MatchingDeficient(
            f"lifting graph has no perfect matching ({len(M)} of {len(B.X)} matched)", cert)
    Mx = _assign_copies(Hm, M, B.X)
    cycles = translate_matching(Hm, Mx, G)
    parts = [Part.from_cycle(cy, f"{tag}:{gc.label}") for cy, gc in zip(cycles, Hm.cycles)]
    return Decomposition(G, parts, {"lifting_x": len(B.X), "lifting_y": sum(B.cap),
                                    "lifting_edges": sum(len(a) for a in B.adj),
                                    "matching_size": len(M)})
