"""Equal-energy boundary between two generators.

For two generators the boundary ``{p : J(p1, p) = J(p2, p)}`` is one branch
of a hyperbola whose foci are the generators. It degenerates to the
perpendicular bisector when both share an x coordinate, and to a half-line
running downstream from the downstream generator when both share a y
coordinate.

All orientations are handled through one canonical frame: the origin sits at
the midpoint, and the x' axis points from the upstream generator (smaller x)
to the downstream one. In that frame the branch is
``x' = a cosh t, y' = b sinh t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegeneratePairError
from .geometry import Point, as_point, as_rect
from .metric import UNIT_FLOW, energy


def _check_distinct(p1, p2):
    if p1[0] == p2[0] and p1[1] == p2[1]:
        raise DegeneratePairError("degenerate pair: generators coincide")


def to_local(p, p1, p2):
    """Coordinates of ``p`` in the frame centred at the midpoint of ``p1 p2``
    with x' pointing from ``p1`` to ``p2``."""
    p1 = as_point(p1, "p1")
    p2 = as_point(p2, "p2")
    _check_distinct(p1, p2)
    dx, dy = p2.x - p1.x, p2.y - p1.y
    d = math.hypot(dx, dy)
    ca, sa = dx / d, dy / d
    mx, my = 0.5 * (p1.x + p2.x), 0.5 * (p1.y + p2.y)
    rx, ry = p[0] - mx, p[1] - my
    return (rx * ca + ry * sa, -rx * sa + ry * ca)


def from_local(q, p1, p2):
    """Inverse of :func:`to_local`."""
    p1 = as_point(p1, "p1")
    p2 = as_point(p2, "p2")
    _check_distinct(p1, p2)
    dx, dy = p2.x - p1.x, p2.y - p1.y
    d = math.hypot(dx, dy)
    ca, sa = dx / d, dy / d
    mx, my = 0.5 * (p1.x + p2.x), 0.5 * (p1.y + p2.y)
    xl, yl = q
    return Point(mx + xl * ca - yl * sa, my + xl * sa + yl * ca)


@dataclass(frozen=True)
class HyperbolaBranch:
    """Branch ``x'^2/a^2 - y'^2/b_axis^2 = 1, x' >= a`` in the canonical frame."""

    center: Point
    alpha: float
    a: float
    b_axis: float
    c: float

    @property
    def _axes(self):
        ca, sa = math.cos(self.alpha), math.sin(self.alpha)
        return ca, sa

    @property
    def vertex_parameter(self):
        return 0.0

    def points(self, ts):
        ts = np.asarray(ts, dtype=float)
        ca, sa = self._axes
        xl = self.a * np.cosh(ts)
        yl = self.b_axis * np.sinh(ts)
        return np.column_stack([self.center.x + xl * ca - yl * sa,
                                self.center.y + xl * sa + yl * ca])

    def parameter_range(self, box):
        # X(t) = cx + A cosh t + B sinh t with the e^t substitution gives a quadratic
        ca, sa = self._axes
        a, b = self.a, self.b_axis
        coeffs = [
            (a * ca, -b * sa, box.xmin - self.center.x, 1),
            (a * ca, -b * sa, box.xmax - self.center.x, 1),
            (a * sa, b * ca, box.ymin - self.center.y, 0),
            (a * sa, b * ca, box.ymax - self.center.y, 0),
        ]
        ts = []
        for A, B, K, _ in coeffs:
            for u in _positive_roots(A + B, -2.0 * K, A - B):
                t = math.log(u)
                if math.isfinite(t):
                    ts.append(t)
        tol = 1e-9 * (1.0 + box.diameter)
        inside = [t for t in ts if box.contains(self.points([t])[0], tol)]
        if not inside:
            return None
        return min(inside), max(inside)


@dataclass(frozen=True)
class PerpendicularLine:
    """Horizontal line ``y = y_level``; generators share an x coordinate."""

    y_level: float
    x_mid: float = 0.0

    @property
    def vertex_parameter(self):
        return self.x_mid

    def points(self, ts):
        ts = np.asarray(ts, dtype=float)
        return np.column_stack([ts, np.full_like(ts, self.y_level)])

    def parameter_range(self, box):
        if not box.ymin <= self.y_level <= box.ymax:
            return None
        return box.xmin, box.xmax


@dataclass(frozen=True)
class DownstreamHalfLine:
    """Half-line ``y = origin.y, x >= origin.x``; generators share a y coordinate."""

    origin: Point

    @property
    def vertex_parameter(self):
        return self.origin.x

    def points(self, ts):
        ts = np.asarray(ts, dtype=float)
        return np.column_stack([ts, np.full_like(ts, self.origin.y)])

    def parameter_range(self, box):
        if not box.ymin <= self.origin.y <= box.ymax:
            return None
        lo = max(self.origin.x, box.xmin)
        if lo > box.xmax:
            return None
        return lo, box.xmax


def _positive_roots(qa, qb, qc):
    """Positive real roots of ``qa u^2 + qb u + qc = 0``."""
    if qa == 0.0:
        if qb == 0.0:
            return []
        u = -qc / qb
        return [u] if u > 0 else []
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0:
        return []
    sq = math.sqrt(disc)
    # numerically stable pair
    q = -0.5 * (qb + math.copysign(sq, qb))
    roots = [q / qa]
    if q != 0.0:
        roots.append(qc / q)
    return [u for u in roots if u > 0]


def bisector(p1, p2):
    """Boundary between the cells of ``p1`` and ``p2`` (order does not matter)."""
    p1 = as_point(p1, "p1")
    p2 = as_point(p2, "p2")
    _check_distinct(p1, p2)
    if p1.x == p2.x:
        return PerpendicularLine(0.5 * (p1.y + p2.y), p1.x)
    up, down = (p1, p2) if p1.x < p2.x else (p2, p1)
    if p1.y == p2.y:
        return DownstreamHalfLine(down)
    dx, dy = down.x - up.x, down.y - up.y
    return HyperbolaBranch(
        center=Point(0.5 * (up.x + down.x), 0.5 * (up.y + down.y)),
        alpha=math.atan2(dy, dx),
        a=0.5 * dx,
        b_axis=0.5 * abs(dy),
        c=0.5 * math.hypot(dx, dy),
    )


def closest_boundary_point(p1, p2):
    """Point of the boundary closest to both generators (the branch vertex).

    Lies on segment ``p1 p2`` at distance ``c + a`` from ``p1`` where
    ``a = (x2 - x1) / 2`` is signed and ``c`` is half the separation.
    """
    p1 = as_point(p1, "p1")
    p2 = as_point(p2, "p2")
    _check_distinct(p1, p2)
    a = 0.5 * (p2.x - p1.x)
    c = 0.5 * math.hypot(p2.x - p1.x, p2.y - p1.y)
    s = (c + a) / (2.0 * c)
    return Point(p1.x + s * (p2.x - p1.x), p1.y + s * (p2.y - p1.y))


def membership_tolerance(p1, p2, flow=UNIT_FLOW):
    return 1e-9 * (1.0 + flow.b * math.hypot(p2[0] - p1[0], p2[1] - p1[1]))


def bisector_contains(p1, p2, q, flow=UNIT_FLOW, tol=None):
    """Whether ``q`` is (numerically) equidistant in energy from both generators."""
    if tol is None:
        tol = membership_tolerance(p1, p2, flow)
    return abs(energy(p1, q, flow) - energy(p2, q, flow)) <= tol


def bisector_parameters(bis, box, n):
    """Monotone parameters of ``n`` samples of ``bis`` inside ``box``.

    Samples are uniform in the curve parameter over the clipped range; the
    sample nearest the vertex is snapped onto it when the vertex is inside.
    """
    rng = bis.parameter_range(box)
    if rng is None:
        return np.empty(0)
    lo, hi = rng
    if n == 1 or hi == lo:
        ts = np.array([lo])
    else:
        ts = np.linspace(lo, hi, n)
    tv = bis.vertex_parameter
    if lo <= tv <= hi:
        ts[np.argmin(np.abs(ts - tv))] = tv
    pts = bis.points(ts)
    tol = 1e-9 * (1.0 + box.diameter)
    keep = ((pts[:, 0] >= box.xmin - tol) & (pts[:, 0] <= box.xmax + tol)
            & (pts[:, 1] >= box.ymin - tol) & (pts[:, 1] <= box.ymax + tol))
    return ts[keep]


def sample_bisector(p1, p2, bbox, n):
    """``(k, 2)`` array of boundary points clipped to ``bbox``, ordered along the curve."""
    if n < 2:
        raise ValueError("n must be >= 2")
    box = as_rect(bbox)
    bis = bisector(p1, p2)
    ts = bisector_parameters(bis, box, n)
    return bis.points(ts)
