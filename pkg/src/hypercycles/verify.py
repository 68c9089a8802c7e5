"""Independent checking of claimed decompositions.

Nothing here calls the constructors or the cycle model: edges are compared
as raw (vertex tuple, copy) keys and the Berge condition is re-derived from
scratch.  Failures are recorded in the report, never raised.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

FLAGS = ("spanning", "almost-regular", "regular", "regular-if-integral", "hamiltonian")
RESEARCH_CAP = 12
RESEARCH_BUDGET = 10**6


def _key(e):
    return (tuple(e.vertices), e.copy)


def _witness_problems(vertices, edges) -> list[str]:
    t = len(edges)
    if t < 2:
        return ["fewer than two edges"]
    if vertices is None or len(vertices) != t:
        return ["witness has the wrong number of vertices"]
    probs = []
    if len(set(vertices)) != t:
        probs.append("witness repeats a vertex")
    if len({_key(e) for e in edges}) != t:
        probs.append("witness repeats an edge")
    for i in range(t):
        a, b = vertices[i], vertices[(i + 1) % t]
        s = set(edges[i].vertices)
        if a not in s or b not in s:
            probs.append(f"edge {i} does not contain vertices {a} and {b}")
    return probs


def _research(edges, budget: int):
    """Is there any Berge cycle using exactly these edges?  None if undecided."""
    sets = [frozenset(e.vertices) for e in edges]
    t = len(sets)
    if t < 2 or len({_key(e) for e in edges}) != t:
        return False
    used = [False] * t
    used[0] = True
    on: set[int] = set()
    steps = 0

    class _Out(Exception):
        pass

    def step(cur: int, start: int, depth: int) -> bool:
        # edge ``cur`` is entered at the last vertex placed; pick its exit vertex
        nonlocal steps
        steps += 1
        if steps > budget:
            raise _Out
        if depth == t:
            return start in sets[cur]
        for w in sorted(sets[cur] - on):
            on.add(w)
            # every edge still to come needs a fresh entry and exit (the last may exit at start)
            rest = [k for k in range(t) if not used[k]]
            if any(len(sets[k] - on) + (start in sets[k]) + (w in sets[k]) < 2 for k in rest) \
                    or not any(start in sets[k] for k in rest):
                on.discard(w)
                continue
            for j in range(t):
                if not used[j] and w in sets[j]:
                    used[j] = True
                    if step(j, start, depth + 1):
                        return True
                    used[j] = False
            on.discard(w)
        return False

    try:
        for v1 in sorted(sets[0]):
            on.add(v1)
            if step(0, v1, 1):
                return True
            on.discard(v1)
        return False
    except _Out:
        return None


def _regularity(edges, n: int):
    deg = Counter(v for e in edges for v in e.vertices)
    ds = [deg.get(v, 0) for v in range(1, n + 1)]
    lo, hi = min(ds), max(ds)
    if lo == hi:
        return "regular", (lo,)
    if hi - lo == 1:
        return "almost-regular", (lo, hi)
    return "irregular", (lo, hi)


@dataclass
class PartReport:
    index: int
    length: int
    is_berge_cycle: bool
    witness_ok: bool
    research: bool | None     # None: not run or undecided
    length_ok: bool
    spanning: bool
    regularity: str
    degrees: tuple
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems

    def to_dict(self) -> dict:
        return {"index": self.index, "length": self.length,
                "is_berge_cycle": self.is_berge_cycle, "witness_ok": self.witness_ok,
                "research": self.research, "length_ok": self.length_ok,
                "spanning": self.spanning, "regularity_class": self.regularity,
                "degrees": list(self.degrees), "problems": list(self.problems)}


@dataclass
class DecompositionReport:
    parts: list[PartReport]
    partition_exact: bool
    lengths_match_spec: bool | None
    problems: list[str]

    @property
    def overall_pass(self) -> bool:
        return (self.partition_exact and self.lengths_match_spec is not False
                and not self.problems and all(p.passed for p in self.parts))

    def to_dict(self) -> dict:
        return {"overall_pass": self.overall_pass, "partition_exact": self.partition_exact,
                "lengths_match_spec": self.lengths_match_spec, "problems": list(self.problems),
                "parts": [p.to_dict() for p in self.parts]}


def verify_decomposition(target, d, spec=None, flags=(), *, research_cap: int = RESEARCH_CAP,
                         budget: int = RESEARCH_BUDGET) -> DecompositionReport:
    """Check ``d`` against ``target`` and an optional length spec.

    ``flags`` is any subset of :data:`FLAGS`; each one is applied to every
    cycle part.  Parts of length at most ``research_cap`` are also searched
    for a Berge ordering independently of the supplied witness.
    """
    flags = set(flags)
    unknown = flags - set(FLAGS)
    problems = [f"unknown flag {f!r}" for f in sorted(unknown)]
    n = target.n
    allow_single = bool(spec is not None and spec.allow_singletons)

    want = Counter(_key(e) for e in target.edges)
    have = Counter(_key(e) for p in d.parts for e in p.edges)
    partition_exact = want == have
    if not partition_exact:
        missing = want - have
        extra = have - want
        if missing:
            problems.append(f"{sum(missing.values())} target edges not covered")
        if extra:
            problems.append(f"{sum(extra.values())} edge uses not in the target or repeated")

    lengths = sorted(len(p.edges) for p in d.parts)
    lengths_ok = None if spec is None else lengths == sorted(spec.lengths)

    pool = Counter(spec.lengths) if spec is not None else None
    reports = []
    for i, p in enumerate(d.parts):
        edges = list(p.edges)
        t = len(edges)
        probs = []
        single = t == 1 and p.vertices is None
        if single:
            witness_ok, research, cyc = False, None, False
            if not allow_single:
                probs.append("singleton part not allowed")
        else:
            wp = _witness_problems(p.vertices, edges)
            witness_ok = not wp
            probs += wp
            research = _research(edges, budget) if t <= research_cap else None
            if research is False:
                probs.append("no Berge ordering of these edges exists")
            cyc = witness_ok and research is not False
        covered = {v for e in edges for v in e.vertices}
        spanning = len(covered) == n
        reg, degs = _regularity(edges, n)
        length_ok = True
        if pool is not None:
            length_ok = pool[t] > 0
            pool[t] -= 1
        if "spanning" in flags and not single and not spanning:
            probs.append("not spanning")
        if "hamiltonian" in flags and not single and t != n:
            probs.append(f"length {t} is not Hamiltonian for n={n}")
        if "regular" in flags and not single and reg != "regular":
            probs.append(f"not regular (degrees {degs})")
        if "almost-regular" in flags and not single and reg == "irregular":
            probs.append(f"not almost regular (degrees {degs})")
        if "regular-if-integral" in flags and not single:
            if sum(len(e.vertices) for e in edges) % n == 0 and reg != "regular":
                probs.append(f"integral average degree but not regular (degrees {degs})")
        reports.append(PartReport(i, t, cyc, witness_ok, research, length_ok, spanning,
                                  reg, degs, probs))
    return DecompositionReport(reports, partition_exact, lengths_ok, problems)
