from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hypercycles.hypergraph import (HEdge, Hypergraph, colex_subsets, complete_uniform,
                                    degree_profile, dumps, loads, remove_edges)


def E(*vs, copy=0):
    return HEdge(tuple(sorted(vs)), copy)


def test_k53_sizes_and_degrees():
    H = complete_uniform(5, 3)
    assert len(H) == 10
    assert degree_profile(H).degrees == (6,) * 5


def test_k85_binomial():
    assert len(complete_uniform(8, 5)) == comb(8, 5) == 56


def test_two_fold_copies():
    H = complete_uniform(4, 2, 2)
    assert len(H) == 12
    assert {e.copy for e in H.edges if e.vertices == (1, 2)} == {0, 1}


def test_colex_order():
    H = complete_uniform(4, 2)
    assert [e.vertices for e in H.edges] == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    assert colex_subsets(4, 3) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


@pytest.mark.parametrize("n,h,lam", [(3, 4, 1), (4, 1, 1), (4, 2, 0)])
def test_rejects_bad_parameters(n, h, lam):
    with pytest.raises(ValueError):
        complete_uniform(n, h, lam)


def test_degenerate_single_edge():
    assert len(complete_uniform(4, 4)) == 1


def test_remove_edges():
    K = complete_uniform(5, 3)
    assert remove_edges(K, []) == K
    assert len(remove_edges(K, [E(1, 2, 3)])) == 9
    K2 = complete_uniform(4, 2, 2)
    R = remove_edges(K2, [E(1, 2), E(1, 2, copy=1)])
    assert len(R) == 10 and (1, 2) not in R.vertex_sets()


def test_remove_missing_edge_is_named():
    K = complete_uniform(5, 3)
    R = remove_edges(K, [E(1, 2, 4)])
    with pytest.raises(ValueError, match=r"\{1,2,4\}"):
        remove_edges(R, [E(1, 2, 3), E(1, 2, 4)])


def test_degree_profile_examples():
    G1 = Hypergraph(6, [E(1, 3, 2), E(2, 6, 4), E(4, 3, 5), E(5, 6, 1)])
    p = degree_profile(G1)
    assert p.degrees == (2,) * 6 and p.regular and p.almost_regular
    p = degree_profile(Hypergraph(3, [E(1, 2), E(1, 3)]))
    assert p.degrees == (2, 1, 1) and p.almost_regular and not p.regular


def test_edge_validation():
    with pytest.raises(ValueError):
        HEdge((2, 1))
    with pytest.raises(ValueError):
        HEdge((1,))
    with pytest.raises(ValueError):
        HEdge((0, 1))
    with pytest.raises(ValueError):
        Hypergraph(3, [E(1, 2), E(1, 2)])
    with pytest.raises(ValueError):
        Hypergraph(3, [E(1, 4)])
    with pytest.raises(ValueError):
        Hypergraph(3, [E(1, 2, copy=1)], lam=1)


def test_format_copy_defaults_to_zero():
    H = loads('{"n": 3, "lambda": 1, "edges": [{"v": [1, 2]}, {"v": [2, 3], "copy": 0}]}')
    assert H.edges == (E(1, 2), E(2, 3))


params = st.integers(2, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(2, n), st.integers(1, 3)))


@given(params)
@settings(max_examples=60, deadline=None)
def test_complete_uniform_counts(p):
    n, h, lam = p
    H = complete_uniform(n, h, lam)
    assert len(H) == lam * comb(n, h)
    assert set(degree_profile(H).degrees) == {lam * comb(n - 1, h - 1)}
    assert sum(degree_profile(H).degrees) == sum(len(e) for e in H.edges)


@given(params, st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_remove_then_readd_and_roundtrip(p, rnd):
    n, h, lam = p
    H = complete_uniform(n, h, lam)
    leave = rnd.sample(list(H.edges), rnd.randint(0, len(H)))
    R = remove_edges(H, leave)
    assert len(R) == len(H) - len(leave)
    back = Hypergraph(n, list(R.edges) + leave, lam)
    assert back == H
    assert loads(dumps(R)) == R
