"""Minimum-energy metric for a vehicle in a uniform flow along +x.

A vehicle obeys ``dx/dt = U_x + b`` and ``dy/dt = U_y``. The cheapest way
(in ``integral of |U|^2``) from ``p1`` to ``p2`` with free final time uses a
constant control and costs ``2 b (|p2 - p1| + x1 - x2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import DegeneratePairError
from .geometry import Point, as_point


@dataclass(frozen=True)
class FlowField:
    """Uniform flow of speed ``b`` along +x."""

    b: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.b) and self.b > 0):
            raise ValueError(f"flow speed must be finite and positive, got {self.b}")


UNIT_FLOW = FlowField(1.0)


class OptimalControl(NamedTuple):
    """Costate constants and final time of the optimal transfer.

    The control itself is constant: ``U = (-c1 / 2, -c2 / 2)``.
    """

    c1: float
    c2: float
    t_f: float

    @property
    def control(self):
        return (-0.5 * self.c1, -0.5 * self.c2)

    @property
    def magnitude(self):
        return 0.5 * math.hypot(self.c1, self.c2)


def energy(p1, p2, flow=UNIT_FLOW):
    """Minimum control energy to travel from ``p1`` to ``p2``.

    Zero whenever ``p2`` lies straight downstream of ``p1``; not symmetric.
    """
    dx = p2[0] - p1[0]
    dy = p2[1] - p1[1]
    # hypot(dx, 0) == |dx| exactly, so the downstream ray gives exactly 0
    return max(0.0, 2.0 * flow.b * (math.hypot(dx, dy) - dx))


def weighted_distance(p_gen, p):
    """Additively weighted distance ``|p - p_gen| + x_gen``.

    Orders generators exactly like :func:`energy` for a fixed target ``p``,
    independent of the flow speed.
    """
    return math.hypot(p[0] - p_gen[0], p[1] - p_gen[1]) + p_gen[0]


def weighted_distances(generators, points):
    """Vectorized :func:`weighted_distance`; returns shape ``(n_gen, n_pts)``."""
    g = np.asarray(generators, dtype=float).reshape(-1, 2)
    q = np.asarray(points, dtype=float).reshape(-1, 2)
    dx = q[None, :, 0] - g[:, None, 0]
    dy = q[None, :, 1] - g[:, None, 1]
    return np.hypot(dx, dy) + g[:, None, 0]


def optimal_control(p1, p2, flow=UNIT_FLOW):
    """Constant optimal control and transfer time from ``p1`` to ``p2``."""
    p1 = as_point(p1, "p1")
    p2 = as_point(p2, "p2")
    d = math.hypot(p2.x - p1.x, p2.y - p1.y)
    if d == 0.0:
        raise DegeneratePairError("degenerate pair: p1 and p2 coincide")
    b = flow.b
    c1 = 2.0 * b * (1.0 + (p1.x - p2.x) / d)
    c2 = 2.0 * b * (p1.y - p2.y) / d
    return OptimalControl(c1, c2, d / b)


def simulate_trajectory(p1, p2, flow=UNIT_FLOW, steps=1000):
    """Integrate the vehicle dynamics under the optimal control.

    Uses fixed-step forward Euler over ``[0, t_f]``. The control is constant,
    so the scheme is exact up to rounding and the step count only changes
    how rounding accumulates.

    Returns ``(endpoint, energy_used)``.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    oc = optimal_control(p1, p2, flow)
    ux, uy = oc.control
    dt = oc.t_f / steps
    vx = ux + flow.b
    x, y = float(p1[0]), float(p1[1])
    used = 0.0
    power = ux * ux + uy * uy
    for _ in range(steps):
        x += vx * dt
        y += uy * dt
        used += power * dt
    return Point(x, y), used
