"""Inner and outer approximations of an energy Voronoi cell.

Two families live here:

* disks ``D(p_i, r_i)`` that sit inside the cell, with the neighbor lower
  bound obtained from the generators that fix the radius;
* wedges bounded by the asymptotes of a pairwise boundary (and their
  parallels through the branch vertex) that sandwich the pairwise cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .bisector import closest_boundary_point
from .exceptions import DegeneratePairError
from .geometry import Point, as_point, as_pool
from .metric import UNIT_FLOW, energy

RADIUS_TIE_TOL = 1e-12


def _radius_term(pi, pj):
    return 0.5 * math.hypot(pj[0] - pi[0], pj[1] - pi[1]) + 0.5 * (pj[0] - pi[0])


def disk_radius(p_i, others):
    """Largest radius ``r`` such that ``D(p_i, r)`` lies in the cell of ``p_i``."""
    p_i = as_point(p_i, "p_i")
    pool = as_pool(others)
    if not pool:
        raise ValueError("disk_radius needs at least one other generator")
    for key, q in pool.items():
        if q == p_i:
            raise DegeneratePairError(f"generator {key!r} coincides with p_i")
    return min(_radius_term(p_i, q) for q in pool.values())


def lower_bound_neighbors(p1, pool):
    """Ids attaining the minimum disk radius; each is a true Voronoi neighbor.

    Ties within ``RADIUS_TIE_TOL`` are all kept.
    """
    p1 = as_point(p1, "p1")
    pool = as_pool(pool)
    if not pool:
        raise ValueError("pool must be nonempty")
    terms = {key: _radius_term(p1, q) for key, q in pool.items()}
    best = min(terms.values())
    return {key for key, r in terms.items() if r - best <= RADIUS_TIE_TOL}


def augment_lower_bound(p1, pool, base, flow=UNIT_FLOW):
    """Grow ``base`` with every candidate whose branch vertex it wins strictly.

    Candidate ``k`` is added when ``J(p_k, p*) < J(p_l, p*)`` for every other
    ``l``, where ``p*`` is the vertex of the boundary between ``p1`` and
    ``p_k``. That vertex then lies on a non-degenerate edge of the cell.
    """
    p1 = as_point(p1, "p1")
    pool = as_pool(pool)
    out = set(base)
    if not out <= pool.keys():
        raise ValueError("base must be a subset of the pool ids")
    for k, pk in pool.items():
        if k in out:
            continue
        star = closest_boundary_point(p1, pk)
        jk = energy(pk, star, flow)
        if all(jk < energy(pl, star, flow) for l, pl in pool.items() if l != k):
            out.add(k)
    return out


class HalfLine(NamedTuple):
    origin: Point
    direction: tuple


def _canonical(p1, p2):
    """``(upstream, downstream, is_p1_upstream)``; x ties are broken by y."""
    if (p1.x, p1.y) == (p2.x, p2.y):
        raise DegeneratePairError("degenerate pair: generators coincide")
    if (p1.x, p1.y) < (p2.x, p2.y):
        return p1, p2, True
    return p2, p1, False


def _double_angle(u, w):
    """Unit vector at twice the angle of ``w - u`` (no trigonometry)."""
    dx, dy = w.x - u.x, w.y - u.y
    if dx == 0.0:
        return (-1.0, 0.0)
    d2 = dx * dx + dy * dy
    return ((dx * dx - dy * dy) / d2, 2.0 * dx * dy / d2)


def asymptote_lines(p1, p2):
    """``(slanted, horizontal)`` asymptotes of the boundary, as half-lines.

    Both start at the midpoint. The horizontal one always points downstream;
    the slanted one has direction at twice the angle of the upstream-to-
    downstream vector. For generators at equal height both collapse onto the
    boundary half-line; for equal x they join into the full boundary line.
    """
    p1 = as_point(p1, "p1")
    p2 = as_point(p2, "p2")
    u, w, _ = _canonical(p1, p2)
    mid = Point(0.5 * (u.x + w.x), 0.5 * (u.y + w.y))
    return HalfLine(mid, _double_angle(u, w)), HalfLine(mid, (1.0, 0.0))


@dataclass(frozen=True)
class Wedge:
    """Closed region bounded by two half-lines from a common apex.

    ``side == "cone"`` is the sector spanned by the two directions (at most a
    half-plane); ``"complement"`` is the closure of everything else.
    """

    apex: Point
    line_a: HalfLine
    line_b: HalfLine
    side: str

    def _sector(self):
        sa, sb = self.line_a.direction, self.line_b.direction
        # counter-clockwise order: start -> end sweeps at most pi
        if _cross(sb, sa) > 0 or (sa[1] == 0.0 and sa[0] < 0):
            return sb, sa
        return sa, sb

    def contains(self, p):
        return wedge_contains(self, p)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def wedge_contains(w, p):
    """Membership of ``p`` in the closed wedge ``w``."""
    v = (p[0] - w.apex[0], p[1] - w.apex[1])
    start, end = w._sector()
    c1 = _cross(start, v)
    c2 = _cross(v, end)
    if w.side == "cone":
        return c1 >= 0 and c2 >= 0 and v[0] * (start[0] + end[0]) + v[1] * (start[1] + end[1]) >= 0
    return not (c1 > 0 and c2 > 0)


def _wedge(p1, p2, lower):
    p1 = as_point(p1, "p1")
    p2 = as_point(p2, "p2")
    u, w, p1_up = _canonical(p1, p2)
    mid = Point(0.5 * (u.x + w.x), 0.5 * (u.y + w.y))
    star = closest_boundary_point(p1, p2)
    slanted = _double_angle(u, w)
    # the cone opens toward the downstream generator; p1 upstream owns the complement
    at_mid = lower == p1_up
    apex = mid if at_mid else star
    side = "complement" if p1_up else "cone"
    return Wedge(apex, HalfLine(apex, slanted), HalfLine(apex, (1.0, 0.0)), side)


def wedge_lower(p1, p2):
    """Wedge contained in ``{p : J(p1, p) <= J(p2, p)}``."""
    return _wedge(p1, p2, lower=True)


def wedge_upper(p1, p2):
    """Wedge containing ``{p : J(p1, p) <= J(p2, p)}``."""
    return _wedge(p1, p2, lower=False)
