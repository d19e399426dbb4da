import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from energy_voronoi import (
    DegeneratePairError, FlowField, energy, optimal_control, simulate_trajectory,
    weighted_distance, weighted_distances,
)
from oracles import numeric_min_energy, piecewise_control_energy

coord = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)
speed = st.floats(0.1, 10)


# frozen from numeric_min_energy before the closed form was wired in
ORACLE_VALUES = [
    ((0.0, 0.0), (1.0, 0.0), 1.0, 0.0),
    ((0.0, 0.0), (-1.0, 0.0), 1.0, 4.0),
    ((0.0, 0.0), (0.0, 2.0), 1.0, 4.0),
    ((0.0, 0.0), (-2.0, -1.0), 1.0, 8.47213595499958),
    ((1.0, 1.0), (0.0, 3.0), 2.5, 16.18033988749895),
]


@pytest.mark.parametrize("p1,p2,b,expected", ORACLE_VALUES)
def test_energy_matches_frozen_oracle(p1, p2, b, expected):
    assert energy(p1, p2, FlowField(b)) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("p1,p2,b,_", ORACLE_VALUES)
def test_oracle_recomputed(p1, p2, b, _):
    assert numeric_min_energy(p1, p2, b) == pytest.approx(energy(p1, p2, FlowField(b)), rel=1e-7, abs=1e-9)


def test_random_piecewise_controls_never_beat_closed_form():
    rng = np.random.default_rng(3)
    p1, p2 = (0.0, 0.0), (-1.0, 2.0)
    best = energy(p1, p2)
    for _ in range(200):
        T = rng.uniform(0.2, 6.0)
        k = 8
        u = rng.normal(size=(k, 2))
        # shift so the piecewise control lands exactly on p2
        _, end = piecewise_control_energy(p1, p2, T, u)
        u += (np.array(p2) - np.array(end)) / T
        e, end = piecewise_control_energy(p1, p2, T, u)
        assert np.allclose(end, p2)
        assert e >= best - 1e-9


def test_energy_examples():
    assert energy((0, 0), (1, 0)) == 0.0
    assert energy((0, 0), (-1, 0)) == 4.0
    assert energy((0, 0), (0, 2)) == 4.0


def test_energy_of_coincident_points_is_zero():
    assert energy((3, -1), (3, -1)) == 0.0


def test_flow_field_rejects_nonpositive():
    for bad in (0.0, -1.0, float("nan"), float("inf")):
        with pytest.raises(ValueError):
            FlowField(bad)


def test_optimal_control_examples():
    oc = optimal_control((0, 0), (0, 2))
    assert (oc.c1, oc.c2, oc.t_f) == pytest.approx((2.0, -2.0, 2.0))
    oc = optimal_control((0, 0), (1, 0))
    assert (oc.c1, oc.c2, oc.t_f) == pytest.approx((0.0, 0.0, 1.0))
    assert oc.control == (-0.0, -0.0)


def test_optimal_control_rejects_coincident():
    with pytest.raises(DegeneratePairError, match="degenerate pair"):
        optimal_control((1, 1), (1, 1))


def test_weighted_distance_examples():
    assert weighted_distance((0, 0), (0, 0)) == 0.0
    assert weighted_distance((1, 0), (1, 3)) == 4.0


def test_weighted_distances_vectorized():
    g = np.array([[0.0, 0.0], [1.0, 2.0]])
    q = np.array([[3.0, 4.0], [-1.0, 0.5], [0.0, 0.0]])
    W = weighted_distances(g, q)
    assert W.shape == (2, 3)
    for i in range(2):
        for j in range(3):
            assert W[i, j] == pytest.approx(weighted_distance(g[i], q[j]))


def test_trajectory_examples():
    end, used = simulate_trajectory((0, 0), (3, 4), steps=10_000)
    assert math.dist(end, (3, 4)) <= 1e-6 * 5
    assert used == pytest.approx(energy((0, 0), (3, 4)), rel=1e-6)
    end, used = simulate_trajectory((0, 0), (1, 0))
    assert used == 0.0
    assert end == pytest.approx((1.0, 0.0))


def test_trajectory_rejects_bad_steps():
    with pytest.raises(ValueError):
        simulate_trajectory((0, 0), (1, 1), steps=0)


@given(point, point, speed)
def test_nonnegative_and_zero_characterization(p1, p2, b):
    e = energy(p1, p2, FlowField(b))
    assert e >= 0.0
    if p1[1] == p2[1] and p1[0] <= p2[0]:
        assert e == 0.0


def test_zero_only_on_downstream_ray():
    rng = np.random.default_rng(0)
    pts = rng.integers(-3, 4, size=(5000, 4)).astype(float)
    for x1, y1, x2, y2 in pts:
        zero = energy((x1, y1), (x2, y2)) == 0.0
        assert zero == (y1 == y2 and x1 <= x2)


def test_asymmetry():
    assert energy((0, 0), (1, 1)) != energy((1, 1), (0, 0))
    assert energy((0, 0), (0, 3)) == energy((0, 3), (0, 0))


@given(point, point, point)
def test_directed_triangle_inequality(a, b, c):
    lhs = energy(a, c)
    rhs = energy(a, b) + energy(b, c)
    assert lhs <= rhs + 1e-9 * (1 + rhs)


@given(point, point, speed)
def test_control_bound(p1, p2, b):
    if p1 == p2:
        return
    oc = optimal_control(p1, p2, FlowField(b))
    assert oc.t_f >= 0
    assert oc.magnitude <= 2 * b * (1 + 1e-12)


@settings(max_examples=200)
@given(point, point, point, point)
def test_argmin_agrees_with_weighted_distance(g1, g2, g3, p):
    gens = [g1, g2, g3]
    e = [energy(g, p) for g in gens]
    w = [weighted_distance(g, p) for g in gens]
    for i in range(3):
        for j in range(3):
            # equivalent comparisons; allow rounding at near ties
            if abs(w[i] - w[j]) > 1e-9 * (1 + abs(w[i])):
                assert (e[i] <= e[j]) == (w[i] <= w[j])


@settings(max_examples=50)
@given(point, point, speed)
def test_trajectory_consistency(p1, p2, b):
    if math.dist(p1, p2) < 1e-6:
        return
    end, used = simulate_trajectory(p1, p2, FlowField(b), steps=200)
    d = math.dist(p1, p2)
    assert math.dist(end, p2) <= 1e-6 * d + 1e-12
    assert used == pytest.approx(energy(p1, p2, FlowField(b)), rel=1e-6, abs=1e-9)
