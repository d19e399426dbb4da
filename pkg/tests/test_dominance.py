import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from energy_voronoi import (
    DegeneratePairError, DominanceOutcome, Scenario, check_assumption, classify, compare,
    dominance_matrix, dominates,
)
from energy_voronoi.dominance import orient_sign
from oracles import grid_violation, semantic_dominates

small = st.integers(-4, 4).map(float)
lattice = st.tuples(small, small)


def admissible(p1, p):
    return p != p1 and not (p[1] == p1[1] and p[0] < p1[0])


def test_classify_examples():
    assert classify((0, 0), (1, 1)) is Scenario.A
    assert classify((0, 0), (1, -1)) is Scenario.B
    assert classify((0, 0), (1, 0)) is Scenario.D
    assert classify((0, 0), (-1, 0)) is Scenario.C
    with pytest.raises(DegeneratePairError):
        classify((0, 0), (0, 0))


def test_dominates_examples():
    assert dominates((0, 0), (1, 1), (2, 2))
    assert not dominates((0, 0), (1, 1), (1, 2))
    assert dominates((0, 0), (1, 0), (2, 0))


def test_examples_agree_with_grid_oracle():
    assert grid_violation((0, 0), (1, 1), (2, 2)) is None
    verdict, witness = semantic_dominates((0, 0), (1, 1), (1, 2))
    assert verdict is False
    p1, p2, p3 = (0, 0), (1, 1), (1, 2)
    from energy_voronoi import energy
    assert energy(p1, witness) <= energy(p2, witness)
    assert energy(p1, witness) > energy(p3, witness)


def test_dominates_rejects_p1():
    with pytest.raises(DegeneratePairError):
        dominates((0, 0), (0, 0), (1, 1))
    with pytest.raises(DegeneratePairError):
        dominates((0, 0), (1, 1), (0, 0))


def test_scenario_c_breaks_antisymmetry():
    # p2, p3 both upstream on p1's streamline violate the assumption
    p1 = (0.0, 0.0)
    p2, p3 = (-1.0, 0.0), (-2.0, 0.0)
    assert dominates(p1, p2, p3) and dominates(p1, p3, p2)
    assert compare(p1, p2, p3) is DominanceOutcome.MUTUAL
    assert check_assumption(p1, [p2, p3])


def test_downstream_ray_point_is_conservatively_not_dominated():
    # the p1-vs-p3 region is the whole plane, so the set definition says any
    # p2 dominates p3, while the closed-form rule keeps p3 as undominated
    p1, p2, p3 = (0.0, 0.0), (1.0, 1.0), (3.0, 0.0)
    assert grid_violation(p1, p2, p3) is None
    assert semantic_dominates(p1, p2, p3)[0] is True
    assert not dominates(p1, p2, p3)


def test_compare_outcomes():
    p1 = (0.0, 0.0)
    assert compare(p1, (1, 1), (2, 2)) is DominanceOutcome.FIRST_DOMINATES
    assert compare(p1, (2, 2), (1, 1)) is DominanceOutcome.SECOND_DOMINATES
    assert compare(p1, (1, 1), (1, 1)) is DominanceOutcome.MUTUAL
    assert compare(p1, (1, 1), (1, -1)) is DominanceOutcome.INCOMPARABLE


def test_check_assumption_examples():
    assert check_assumption((0, 0), [(1, 0)]) == []
    report = check_assumption((0, 0), [(-1, 0)])
    assert report and "upstream" in report[0][1]
    report = check_assumption((0, 0), {"a": (1, 2), "b": (1, 2)})
    assert report == [("b", "duplicates 'a'")]
    assert check_assumption((0, 0), [(0, 0)])[0][1] == "coincides with p1"


def test_orient_sign_exact_on_near_collinear():
    # the naive float cross product is 0 here; the exact sign is not
    assert (0.1 * 3.0000000000000004) - (0.30000000000000004 * 1.0) == 0.0
    assert orient_sign(0.0, 0.0, 0.1, 0.30000000000000004, 1.0, 3.0000000000000004) != 0
    assert orient_sign(0.0, 0.0, 1.0, 1.0, 2.0, 2.0) == 0
    assert orient_sign(0.0, 0.0, 1.0, 0.0, 0.0, 1.0) == 1
    assert orient_sign(np.float64(0), np.float64(0), np.float64(1), np.float64(0),
                       np.float64(0), np.float64(-1)) == -1


def test_orient_sign_matches_rationals():
    from fractions import Fraction
    rng = np.random.default_rng(5)
    for _ in range(2000):
        a = rng.uniform(-1, 1, 2)
        t = rng.uniform(-2, 2)
        d = rng.uniform(-1, 1, 2)
        b = a + d
        c = a + t * d + rng.choice([0.0, 1e-17, -1e-17]) * np.array([1.0, -1.0])
        exact = ((Fraction(b[0]) - Fraction(a[0])) * (Fraction(c[1]) - Fraction(a[1]))
                 - (Fraction(b[1]) - Fraction(a[1])) * (Fraction(c[0]) - Fraction(a[0])))
        assert orient_sign(*a, *b, *c) == (exact > 0) - (exact < 0)


@given(lattice, lattice, lattice)
def test_reflexive_and_antisymmetric(p1, p2, p3):
    assume(admissible(p1, p2) and admissible(p1, p3))
    assert dominates(p1, p2, p2)
    if p2 != p3:
        assert not (dominates(p1, p2, p3) and dominates(p1, p3, p2))


@given(lattice, lattice, lattice, lattice)
def test_transitive(p1, a, b, c):
    assume(all(admissible(p1, p) for p in (a, b, c)))
    if dominates(p1, a, b) and dominates(p1, b, c):
        assert dominates(p1, a, c)


@given(lattice, st.lists(lattice, min_size=1, max_size=8, unique=True))
def test_matrix_matches_predicate(p1, pts):
    assume(all(p != p1 for p in pts))
    M = dominance_matrix(p1, pts)
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            assert M[i, j] == dominates(p1, a, b)


def test_matrix_rejects_p1():
    with pytest.raises(DegeneratePairError):
        dominance_matrix((0, 0), [(1, 1), (0, 0)])


def test_semantic_soundness_random():
    rng = np.random.default_rng(11)
    for _ in range(100):
        p1, p2, p3 = map(tuple, rng.uniform(-1, 1, (3, 2)))
        if dominates(p1, p2, p3):
            assert grid_violation(p1, p2, p3) is None
        else:
            assert semantic_dominates(p1, p2, p3)[0] is False
