import random

from hypothesis import given, settings, strategies as st

from hypercycles.decompose import Decomposition, LengthSpec, Part, decompose_almost_regular
from hypercycles.hypergraph import HEdge, complete_uniform
from hypercycles.verify import verify_decomposition


def E(s):
    return HEdge(tuple(sorted(int(ch) for ch in str(s))))


K53 = complete_uniform(5, 3)
C = Part(tuple(E(x) for x in (132, 253, 314, 415, 531)), (1, 2, 3, 4, 5), "example")
C2 = Part(tuple(E(x) for x in (243, 354, 421, 125, 542)), (2, 3, 4, 1, 5), "example")


def test_example_decomposition_passes():
    d = Decomposition(K53, [C, C2])
    r = verify_decomposition(K53, d, LengthSpec((5, 5)), ["hamiltonian"])
    assert r.overall_pass and r.partition_exact and r.lengths_match_spec
    assert all(p.research is True for p in r.parts)
    # both cycles are irregular
    assert [p.regularity for p in r.parts] == ["irregular", "irregular"]
    assert not verify_decomposition(K53, d, LengthSpec((5, 5)), ["regular"]).overall_pass


def test_duplicate_edge_breaks_partition():
    bad = Part(C2.edges[:-1] + (E(123),), C2.vertices, "tampered")
    r = verify_decomposition(K53, Decomposition(K53, [C, bad]), LengthSpec((5, 5)))
    assert not r.partition_exact and not r.overall_pass


def test_wrong_lengths():
    r = verify_decomposition(K53, Decomposition(K53, [C, C2]), LengthSpec((4, 6)))
    assert r.lengths_match_spec is False and not r.overall_pass


def test_unknown_flag_is_reported_not_raised():
    r = verify_decomposition(K53, Decomposition(K53, [C, C2]), None, ["sparkly"])
    assert not r.overall_pass and r.problems


def test_long_parts_use_witness_tier():
    d = decompose_almost_regular(13, 12, 1, LengthSpec((13,)))
    r = verify_decomposition(d.target, d, LengthSpec((13,)))
    assert r.overall_pass and r.parts[0].research is None


def mutate(d, rng):
    parts = [Part(p.edges, p.vertices, p.provenance) for p in d.parts]
    kind = rng.randrange(3)
    i = rng.randrange(len(parts))
    p = parts[i]
    if kind == 0:
        # move one edge into another part
        j = (i + 1) % len(parts)
        e = p.edges[0]
        parts[i] = Part(p.edges[1:], p.vertices[1:], p.provenance)
        q = parts[j]
        parts[j] = Part(q.edges + (e,), q.vertices + (p.vertices[0],), q.provenance)
    elif kind == 1:
        # swap an edge between two parts
        j = (i + 1) % len(parts)
        q = parts[j]
        a, b = rng.randrange(len(p.edges)), rng.randrange(len(q.edges))
        if p.edges[a].vertices == q.edges[b].vertices:
            return None
        pe, qe = list(p.edges), list(q.edges)
        pe[a], qe[b] = qe[b], pe[a]
        parts[i] = Part(tuple(pe), p.vertices, p.provenance)
        parts[j] = Part(tuple(qe), q.vertices, q.provenance)
    else:
        # relabel one witness vertex
        k = rng.randrange(len(p.vertices))
        new = rng.choice([v for v in range(1, d.target.n + 1) if v != p.vertices[k]])
        vs = list(p.vertices)
        vs[k] = new
        parts[i] = Part(p.edges, tuple(vs), p.provenance)
    return Decomposition(d.target, parts)


@given(st.integers(0, 10**6))
@settings(max_examples=200, deadline=None)
def test_mutations_are_detected(seed):
    rng = random.Random(seed)
    d = decompose_almost_regular(6, 4, 1, LengthSpec((5, 5, 5)), seed=seed % 3)
    spec = LengthSpec((5, 5, 5))
    assert verify_decomposition(d.target, d, spec).overall_pass
    m = mutate(d, rng)
    if m is None:
        return
    assert verify_decomposition(d.target, m, spec).overall_pass == oracle_ok(m, spec)


def oracle_ok(d, spec):
    # plain restatement: exact multiset cover, correct lengths, every witness walks its edges
    from collections import Counter
    if Counter(d.target.edges) != Counter(e for p in d.parts for e in p.edges):
        return False
    if sorted(len(p.edges) for p in d.parts) != sorted(spec.lengths):
        return False
    for p in d.parts:
        vs, es = p.vertices, p.edges
        if len(set(vs)) != len(vs) or len(vs) != len(es) or len(set(es)) != len(es):
            return False
        for i, e in enumerate(es):
            if vs[i] not in e.vertices or vs[(i + 1) % len(vs)] not in e.vertices:
                return False
    return True


@given(st.integers(0, 10**6))
@settings(max_examples=100, deadline=None)
def test_edge_moves_are_always_detected(seed):
    rng = random.Random(seed)
    d = decompose_almost_regular(6, 4, 1, LengthSpec((5, 5, 5)), seed=seed % 3)
    i = rng.randrange(3)
    p, q = d.parts[i], d.parts[(i + 1) % 3]
    parts = list(d.parts)
    parts[i] = Part(p.edges[1:], p.vertices[1:], p.provenance)
    parts[(i + 1) % 3] = Part(q.edges + p.edges[:1], q.vertices + p.vertices[:1], q.provenance)
    assert not verify_decomposition(d.target, Decomposition(d.target, parts),
                                    LengthSpec((5, 5, 5))).overall_pass
