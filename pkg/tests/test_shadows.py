from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hypercycles.shadows import (SetFamily, gen_binomial, kk_bound_i, kk_bound_ii, kk_bound_iii,
                                 kk_bound_iii_sum, kk_bound_plus, lower_shadow, pq_decompose,
                                 solve_s, upper_shadow)


def fam(n, h, *sets):
    return SetFamily(n, h, frozenset(sets))


def test_lower_shadow_examples():
    assert set(lower_shadow(fam(3, 3, (1, 2, 3)), 1).members) == {(1, 2), (1, 3), (2, 3)}
    full = SetFamily(4, 3, frozenset(combinations(range(1, 5), 3)))
    assert len(lower_shadow(full, 1)) == 6
    C = fam(5, 3, (1, 2, 3), (2, 3, 5), (1, 3, 4), (1, 4, 5), (1, 3, 5))
    sh = lower_shadow(C, 1)
    assert len(sh) == 9
    assert len(sh) >= kk_bound_i(solve_s(5, 3, 5)) - 1e-9


def test_upper_shadow_examples():
    assert set(upper_shadow(fam(4, 2, (1, 2)), 1).members) == {(1, 2, 3), (1, 2, 4)}
    assert set(upper_shadow(fam(5, 2, (1, 2), (1, 3)), 2).members) == {
        (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 4, 5), (1, 3, 4, 5)}
    pairs = SetFamily(6, 2, frozenset(combinations(range(1, 7), 2)))
    assert len(upper_shadow(pairs, 1)) == comb(6, 3)


def test_range_errors():
    with pytest.raises(ValueError):
        lower_shadow(fam(4, 2, (1, 2)), 3)
    with pytest.raises(ValueError):
        upper_shadow(fam(4, 3, (1, 2, 3)), 2)
    with pytest.raises(ValueError):
        SetFamily(4, 2, frozenset({(1, 5)}))


def test_generalized_binomial():
    assert gen_binomial(3.5, 2) == pytest.approx(4.375)
    assert gen_binomial(7, 3) == 35 and isinstance(gen_binomial(7, 3), Fraction)
    assert abs(solve_s(comb(7, 3), 3, 9) - 7) <= 1e-12
    t = solve_s(5, 3, 6)
    assert abs(t * (t - 1) * (t - 2) - 30) < 1e-9
    with pytest.raises(ValueError):
        solve_s(0, 3, 6)


def test_bound_examples():
    assert kk_bound_ii(2, 5) == 4
    assert len(upper_shadow(fam(5, 2, (1, 2), (1, 3)), 2)) >= kk_bound_ii(2, 5)
    for q in range(0, 8):
        assert kk_bound_iii(0, q, 10) == q * 8 - comb(q, 2)
    assert kk_bound_plus(1, 0, 85) == comb(84, 2) == 3486
    with pytest.raises(ValueError):
        kk_bound_plus(9, 0, 85)
    with pytest.raises(ValueError):
        kk_bound_plus(1, 0, 84)
    with pytest.raises(ValueError):
        kk_bound_iii(2, 7, 10)
    with pytest.raises(ValueError):
        kk_bound_ii(5, 5)


def test_pq_decomposition():
    for n in range(3, 20):
        for size in range(0, comb(n, 2)):
            p, q = pq_decompose(size, n)
            assert p * n - comb(p + 1, 2) + q == size
            assert 0 <= q < n - (p + 1) and p < n
            if p >= 1:
                assert size > 0
        with pytest.raises(ValueError):
            pq_decompose(comb(n, 2), n)


def test_sum_form_dominates():
    for n in range(4, 30):
        for p in range(0, n - 1):
            for q in range(0, n - p - 1):
                assert kk_bound_iii_sum(p, q, n) >= kk_bound_iii(p, q, n)


def test_plus_derivation_inequality():
    for n in range(85, 130):
        for p in range(0, 9):
            for q in range(0, n - p - 1):
                assert q * (n - p - 2) - comb(q, 2) >= Fraction(2 * q * n, 5)
                assert kk_bound_iii(p, q, n) >= kk_bound_plus(p, q, n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_exhaustive_small(n):
    bad, checked = oracles.exhaustive_violations(n)
    assert bad == 0 and checked > 0


@given(st.integers(4, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))),
       st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_library_shadows_match_bitmasks(p, rnd):
    n, h = p
    sets = list(combinations(range(1, n + 1), h))
    T = rnd.sample(sets, rnd.randint(1, len(sets)))
    S = SetFamily(n, h, frozenset(T))
    idx = {s: k for k, s in enumerate(sets)}
    for i in range(1, h + 1):
        masks = oracles.lower_masks(n, h, i)
        m = 0
        for s in T:
            m |= masks[idx[s]]
        assert len(lower_shadow(S, i)) == bin(m).count("1")
    for i in range(1, n - h + 1):
        masks = oracles.upper_masks(n, h, i)
        m = 0
        for s in T:
            m |= masks[idx[s]]
        assert len(upper_shadow(S, i)) == bin(m).count("1")


def test_sampled_bounds_quick():
    rng = np.random.default_rng(0)
    assert oracles.sampled_uniform_violations(rng, 9, 3, 50) == 0
    assert oracles.sampled_uniform_violations(rng, 10, 2, 50) == 0
    bad, plus = oracles.sampled_85_violations(rng, 40)
    assert bad == 0 and plus > 0
