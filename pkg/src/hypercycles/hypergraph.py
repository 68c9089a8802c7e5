"""Hypergraph data model, complete uniform generators and the JSON file format.

Edges are sorted vertex tuples tagged with a copy index, so that a lambda-fold
hypergraph is an ordinary set of distinct ``HEdge`` values.  Vertices are the
integers ``1..n``.  The canonical edge order everywhere is colex on the vertex
set, then copy index.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence


@dataclass(frozen=True)
class HEdge:
    vertices: tuple[int, ...]
    copy: int = 0

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 2:
            raise ValueError(f"edge {vs} has fewer than two vertices")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError(f"edge vertices {vs} are not strictly increasing")
        if vs[0] < 1:
            raise ValueError(f"edge {vs} contains a vertex id below 1")
        if self.copy < 0:
            raise ValueError(f"edge {vs} has negative copy index {self.copy}")

    @classmethod
    def of(cls, vertices: Iterable[int], copy: int = 0) -> "HEdge":
        """Build an edge from vertices in any order."""
        return cls(tuple(sorted(vertices)), copy)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def __str__(self):
        body = "{" + ",".join(map(str, self.vertices)) + "}"
        return body if self.copy == 0 else f"{body}#{self.copy}"

    def to_dict(self) -> dict:
        return {"v": list(self.vertices), "copy": self.copy}

    @classmethod
    def from_dict(cls, d: dict) -> "HEdge":
        return cls.of(d["v"], int(d.get("copy", 0)))


def colex_key(edge: HEdge):
    return (edge.vertices[::-1], edge.copy)


class Hypergraph:
    """A vertex set ``[n]`` together with a set of distinct ``HEdge`` members.

    ``lam`` bounds the copy indices (1 for simple hypergraphs).  Instances are
    treated as immutable.
    """

    __slots__ = ("n", "edges", "lam", "_index")

    def __init__(self, n: int, edges: Iterable[HEdge], lam: int | None = None):
        edges = tuple(edges)
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        if lam is None:
            lam = max((e.copy for e in edges), default=0) + 1
        if lam < 1:
            raise ValueError(f"lambda must be at least 1, got {lam}")
        seen = set()
        for e in edges:
            if e.vertices[-1] > n:
                raise ValueError(f"edge {e} uses a vertex above n={n}")
            if e.copy >= lam:
                raise ValueError(f"edge {e} has copy index >= lambda={lam}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        self.edges = edges
        self.lam = lam
        self._index = None

    def __repr__(self):
        return f"Hypergraph(n={self.n}, |E|={len(self.edges)}, lambda={self.lam})"

    def __len__(self):
        return len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.lam) == (other.n, other.lam) and \
            set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, self.lam, frozenset(self.edges)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def corank(self) -> int:
        """Minimum edge size (0 for an edgeless hypergraph)."""
        return min((len(e) for e in self.edges), default=0)

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def is_uniform(self) -> bool:
        return self.corank == self.rank

    def __contains__(self, edge):
        if self._index is None:
            self._index = frozenset(self.edges)
        return edge in self._index

    def sorted_edges(self) -> list[HEdge]:
        return sorted(self.edges, key=colex_key)

    def vertex_sets(self) -> Counter:
        """Multiplicity of each vertex set, ignoring copy labels."""
        return Counter(e.vertices for e in self.edges)

    def to_dict(self) -> dict:
        return {"n": self.n, "lambda": self.lam,
                "edges": [e.to_dict() for e in self.edges]}

    @classmethod
    def from_dict(cls, d: dict) -> "Hypergraph":
        try:
            n = int(d["n"])
            edges = [HEdge.from_dict(e) for e in d["edges"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed hypergraph record: {exc}") from exc
        return cls(n, edges, d.get("lambda"))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]  # degrees[v - 1] is the degree of v

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def regular(self) -> bool:
        return self.min_degree == self.max_degree

    @property
    def almost_regular(self) -> bool:
        return self.max_degree - self.min_degree <= 1

    def __getitem__(self, v: int) -> int:
        return self.degrees[v - 1]


def colex_subsets(n: int, h: int) -> list[tuple[int, ...]]:
    """All h-subsets of [n] in colex order."""
    return sorted(combinations(range(1, n + 1), h), key=lambda s: s[::-1])


def complete_uniform(n: int, h: int, lam: int = 1) -> Hypergraph:
    """The lambda-fold complete h-uniform hypergraph on [n], in colex order."""
    if not 2 <= h <= n:
        raise ValueError(f"need 2 <= h <= n, got h={h}, n={n}")
    if lam < 1:
        raise ValueError(f"lambda must be at least 1, got {lam}")
    edges = [HEdge(s, k) for s in colex_subsets(n, h) for k in range(lam)]
    assert len(edges) == lam * comb(n, h)
    return Hypergraph(n, edges, lam)


def remove_edges(H: Hypergraph, leave: Sequence[HEdge]) -> Hypergraph:
    """Remove the edges in ``leave`` from H; every one of them must be present."""
    remaining = dict.fromkeys(H.edges)
    for e in leave:
        if e not in remaining:
            raise ValueError(f"edge {e} is not present in the hypergraph")
        del remaining[e]
    return Hypergraph(H.n, remaining, H.lam)


def degree_profile(H: Hypergraph) -> DegreeProfile:
    deg = [0] * H.n
    for e in H.edges:
        for v in e.vertices:
            deg[v - 1] += 1
    return DegreeProfile(tuple(deg))


def dumps(H: Hypergraph) -> str:
    return json.dumps(H.to_dict())


def loads(text: str) -> Hypergraph:
    return Hypergraph.from_dict(json.loads(text))


def load(path) -> Hypergraph:
    return loads(Path(path).read_text())


def dump(H: Hypergraph, path) -> None:
    Path(path).write_text(dumps(H) + "\n")
