import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from energy_voronoi import (
    AssumptionViolation, CandidateSet, CountingDominance, dominates, upper_bound_simple,
    upper_bound_sorted,
)
from oracles import brute_upper_bound, random_pool


def test_example_pool():
    pool = {"a": (1, 1), "b": (2, 2), "c": (1, 2)}
    assert upper_bound_simple((0, 0), pool) == {"a", "c"}
    assert upper_bound_sorted((0, 0), pool) == {"a", "c"}


def test_two_incomparable():
    pool = [(1, 1), (1, -1)]
    assert upper_bound_simple((0, 0), pool) == {2, 3}
    assert upper_bound_sorted((0, 0), pool) == {2, 3}


def test_singleton():
    assert upper_bound_sorted((0, 0), [(0.3, -0.2)]) == {2}


def test_all_on_streamline_keeps_min_x():
    pool = {"x3": (3.0, 0.0), "x1": (1.0, 0.0), "x2": (2.0, 0.0)}
    assert upper_bound_sorted((0, 0), pool) == {"x1"}
    assert upper_bound_simple((0, 0), pool) == {"x1"}


def test_candidate_set_validation():
    cs = CandidateSet.build((0, 0), [(-1, 0)])
    assert not cs.assumption_ok
    with pytest.raises(AssumptionViolation) as exc:
        upper_bound_sorted(cs)
    assert exc.value.offenders[0][0] == 2
    with pytest.raises(AssumptionViolation):
        upper_bound_simple((0, 0), [(1, 1), (1, 1)])


def test_candidate_set_and_pool_exclusive():
    cs = CandidateSet.build((0, 0), [(1, 1)])
    with pytest.raises(TypeError):
        upper_bound_simple(cs, [(1, 2)])


def test_matches_pairwise_definition():
    rng = np.random.default_rng(21)
    for _ in range(200):
        pool = random_pool(rng, int(rng.integers(1, 30)))
        expect = brute_upper_bound((0.0, 0.0), pool, dominates)
        assert upper_bound_simple((0, 0), pool) == expect
        assert upper_bound_sorted((0, 0), pool) == expect


lattice = st.tuples(st.integers(-3, 3).map(float), st.integers(-3, 3).map(float))


@given(st.lists(lattice, min_size=1, max_size=20, unique=True))
def test_sorted_equals_simple_on_lattice(pts):
    pool = {i + 2: p for i, p in enumerate(pts) if p[1] != 0.0 or p[0] > 0.0}
    if not pool:
        return
    assert upper_bound_sorted((0, 0), pool) == upper_bound_simple((0, 0), pool)


def test_sorted_test_count_bounded():
    rng = np.random.default_rng(8)
    for n in (5, 20, 80):
        pool = random_pool(rng, n)
        counter = CountingDominance()
        upper_bound_sorted((0, 0), pool, dominates_fn=counter)
        assert counter.calls <= n - 1


def test_simple_is_quadratic_on_antichain():
    # the survivors of any pool are pairwise undominated, so no scan exits early
    rng = np.random.default_rng(13)
    pool = random_pool(rng, 60)
    keep = upper_bound_sorted((0, 0), pool)
    chain = {k: pool[k] for k in keep}
    n = len(chain)
    counter = CountingDominance()
    assert upper_bound_simple((0, 0), chain, dominates_fn=counter) == keep
    assert n == 10
    assert counter.calls == n * (n - 1)


def test_sweep_soundness_per_partition():
    rng = np.random.default_rng(13)
    for _ in range(100):
        pool = random_pool(rng, 25)
        above = {k: p for k, p in pool.items() if p[1] > 0}
        if not above:
            continue
        got = upper_bound_sorted((0, 0), above)
        assert got == brute_upper_bound((0.0, 0.0), above, dominates)
