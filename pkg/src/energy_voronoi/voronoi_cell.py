"""Bounded energy Voronoi cell of one generator, built from sampled boundaries.

A sample on the boundary between ``p1`` and candidate ``j`` is kept when no
other candidate reaches it more cheaply than ``p1`` does. Runs of kept
samples form the arcs of the cell; their ends are refined by bisection on the
exact predicate. The naive method tests against the whole pool, the
prefiltered one only against the undominated candidates. Both produce
identical cells because dominated candidates never cut the cell.

Samples are tested one candidate at a time over the still-alive set, nearest
candidates first, so each sample stops at its first violator. The number of
energy evaluations performed is recorded on the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bisector import bisector, bisector_parameters
from .exceptions import EnergyVoronoiError
from .geometry import Point, Rect, as_pool, as_rect
from .metric import UNIT_FLOW, energy
from .neighbor_bounds import CandidateSet, CountingDominance, upper_bound_sorted

MIN_RESOLUTION = 16
_REFINE_STEPS = 60


def cell_contains(p1, pool, p, flow=UNIT_FLOW):
    """Whether ``p`` lies in the closed cell of ``p1`` (exact comparisons)."""
    j1 = energy(p1, p, flow)
    return all(j1 <= energy(q, p, flow) for q in as_pool(pool).values())


def boundary_tolerance(box, flow=UNIT_FLOW):
    return 1e-9 * (1.0 + flow.b * as_rect(box).diameter)


@dataclass(frozen=True)
class Arc:
    """Connected piece of the cell boundary.

    ``contributor`` is the pool id whose boundary with the owner this is, or
    ``None`` for a piece of the clipping box.
    """

    contributor: object
    points: np.ndarray

    @property
    def extent(self):
        return float(np.hypot(*(self.points[-1] - self.points[0])))


@dataclass(frozen=True)
class VoronoiCell:
    owner: Point
    box: Rect
    arcs: tuple
    box_edges: tuple
    resolution: int
    evaluations: int = 0
    dominance_tests: int = 0
    tested: tuple = field(default=())

    @property
    def contributors(self):
        return {a.contributor for a in self.arcs}

    @property
    def work(self):
        """Energy evaluations plus dominance tests."""
        return self.evaluations + self.dominance_tests

    def vertices(self):
        """All non-box boundary points, arc by arc."""
        if not self.arcs:
            return np.empty((0, 2))
        return np.vstack([a.points for a in self.arcs])

    def boundary(self):
        """Closed polyline around the owner, counter-clockwise.

        Each piece is oriented by its winding angle about the owner (an arc
        may wrap more than half way round), then pieces are chained end to
        start.
        """
        pieces = []
        ox, oy = self.owner
        for piece in self.arcs + self.box_edges:
            pts = piece.points
            ang = np.unwrap(np.arctan2(pts[:, 1] - oy, pts[:, 0] - ox))
            pieces.append(pts[::-1] if ang[-1] < ang[0] else pts)
        if not pieces:
            return np.empty((0, 2))
        ring = [pieces.pop(0)]
        while pieces:
            end = ring[-1][-1]
            k = min(range(len(pieces)), key=lambda i: math.dist(end, pieces[i][0]))
            ring.append(pieces.pop(k))
        return np.vstack(ring)


class _Tester:
    """Survival predicate against a fixed candidate set, with a work counter."""

    def __init__(self, p1, ids, coords, flow, tol):
        self.p1 = p1
        self.ids = ids
        self.coords = coords
        self.two_b = 2.0 * flow.b
        self.tol = tol
        self.evaluations = 0

    def _energy_from(self, g, qs):
        return np.maximum(0.0, self.two_b * (np.hypot(qs[:, 0] - g[0], qs[:, 1] - g[1]) + g[0] - qs[:, 0]))

    def survives(self, qs, skip=None, near=None, tol=None):
        tol = self.tol if tol is None else tol
        qs = np.atleast_2d(qs)
        alive = np.ones(len(qs), dtype=bool)
        if not len(qs):
            return alive
        j1 = self._energy_from(self.p1, qs)
        self.evaluations += len(qs)
        order = range(len(self.ids))
        if near is not None and len(self.ids):
            order = np.argsort(np.hypot(self.coords[:, 0] - near[0], self.coords[:, 1] - near[1]),
                               kind="stable")
        for k in order:
            if self.ids[k] == skip:
                continue
            idx = np.flatnonzero(alive)
            if not len(idx):
                break
            jk = self._energy_from(self.coords[k], qs[idx])
            self.evaluations += len(idx)
            alive[idx[j1[idx] - jk > tol]] = False
        return alive


def _runs(mask):
    """``(start, stop)`` index pairs of the True runs of ``mask``."""
    padded = np.concatenate([[False], mask, [False]]).astype(np.int8)
    edges = np.flatnonzero(np.diff(padded))
    return list(zip(edges[::2], edges[1::2]))


def _refine(curve, t_in, t_out, ok):
    for _ in range(_REFINE_STEPS):
        mid = 0.5 * (t_in + t_out)
        if mid in (t_in, t_out):
            break
        if ok(curve(mid)):
            t_in = mid
        else:
            t_out = mid
    return t_in


def _trace(ts, curve_many, ok_many, ok_one):
    """Alive runs of a parametrized curve, with refined ends, as point arrays.

    Ends are refined with the exact predicate ``ok_one`` so they land on the
    true crossing rather than on the edge of the tolerance band.
    """
    pts = curve_many(ts)
    alive = ok_many(pts)
    out = []
    for s, e in _runs(alive):
        t_lo, t_hi = ts[s], ts[e - 1]
        if s > 0:
            t_lo = _refine(lambda t: curve_many([t])[0], ts[s], ts[s - 1], ok_one)
        if e < len(ts):
            t_hi = _refine(lambda t: curve_many([t])[0], ts[e - 1], ts[e], ok_one)
        seg = [curve_many([t_lo])] if s > 0 else []
        seg.append(pts[s:e])
        if e < len(ts):
            seg.append(curve_many([t_hi]))
        out.append(np.vstack(seg))
    return out


def _box_sides(box):
    c = box.corners()
    return [(c[i], c[(i + 1) % 4]) for i in range(4)]


def _side_parameters(a, b, arcs, resolution, tol):
    # thin notches can fall between uniform samples; seed the side with arc
    # ends lying on it and with the midpoints next to them
    ts = np.linspace(0.0, 1.0, resolution)
    d = b - a
    length = float(np.hypot(*d))
    seeds = []
    for arc in arcs:
        for q in (arc.points[0], arc.points[-1]):
            t = float(np.dot(q - a, d)) / length ** 2
            off = abs(float(d[0] * (q[1] - a[1]) - d[1] * (q[0] - a[0]))) / length
            if off <= tol and 0.0 < t < 1.0:
                seeds.append(t)
    if not seeds:
        return ts
    ts = np.unique(np.concatenate([ts, seeds]))
    at = np.searchsorted(ts, seeds)
    mids = [0.5 * (ts[i - 1] + ts[i]) for i in at] + [0.5 * (ts[i] + ts[i + 1]) for i in at]
    return np.unique(np.concatenate([ts, mids]))


def _build(p1, pool, box, resolution, test_ids, flow, dominance_tests=0):
    tol = boundary_tolerance(box, flow)
    ids = list(test_ids)
    coords = np.array([pool[i] for i in ids], dtype=float).reshape(-1, 2)
    tester = _Tester(p1, ids, coords, flow, tol)

    arcs = []
    for j in ids:
        pj = pool[j]
        bis = bisector(p1, pj)
        ts = bisector_parameters(bis, box, resolution)
        if not len(ts):
            continue
        for seg in _trace(ts, bis.points,
                          lambda q, j=j, pj=pj: tester.survives(q, skip=j, near=pj),
                          lambda q, j=j, pj=pj: bool(tester.survives(q, skip=j, near=pj, tol=0.0)[0])):
            arcs.append(Arc(j, seg))

    edges = []
    for a, b in _box_sides(box):
        a, b = np.array(a), np.array(b)

        def side(t, a=a, b=b):
            t = np.asarray(t, dtype=float)[:, None]
            return a + t * (b - a)

        near = 0.5 * (a + b)
        ts = _side_parameters(a, b, arcs, resolution, tol)
        for seg in _trace(ts, side,
                          lambda q, near=near: tester.survives(q, near=near),
                          lambda q, near=near: bool(tester.survives(q, near=near, tol=0.0)[0])):
            edges.append(Arc(None, seg))

    return VoronoiCell(p1, box, tuple(arcs), tuple(edges), resolution,
                       tester.evaluations, dominance_tests, tuple(ids))


def _prepare(p1, pool, box, resolution):
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"resolution must be >= {MIN_RESOLUTION}, got {resolution}")
    cs = CandidateSet.build(p1, pool)
    cs.require_assumption()
    box = as_rect(box)
    if not box.contains(cs.p1):
        raise EnergyVoronoiError(f"box {tuple(box)} does not contain p1 {tuple(cs.p1)}")
    return cs, box


def compute_cell(p1, pool, box, resolution=512, flow=UNIT_FLOW):
    """Cell of ``p1`` clipped to ``box``, testing samples against every candidate."""
    cs, box = _prepare(p1, pool, box, resolution)
    return _build(cs.p1, cs.pool, box, resolution, cs.pool.keys(), flow)


def compute_cell_prefiltered(p1, pool, box, resolution=512, flow=UNIT_FLOW):
    """Same cell as :func:`compute_cell`, testing only undominated candidates."""
    cs, box = _prepare(p1, pool, box, resolution)
    counter = CountingDominance()
    keep = upper_bound_sorted(cs, dominates_fn=counter)
    ids = [k for k in cs.pool if k in keep]
    return _build(cs.p1, cs.pool, box, resolution, ids, flow, counter.calls)


def neighbors_from_cell(cell, min_extent=None):
    """Contributors owning an arc whose ends are more than ``min_extent`` apart."""
    if min_extent is None:
        min_extent = 1e-6 * (1.0 + cell.box.diameter)
    return {a.contributor for a in cell.arcs if a.extent > min_extent}


def exact_neighbors(p1, pool, box, resolution=512, flow=UNIT_FLOW, min_extent=None):
    """Ids sharing a boundary piece of positive length with ``p1`` inside ``box``.

    A contributor that only touches the cell in a point leaves an arc of
    numerically zero extent and is excluded.
    """
    return neighbors_from_cell(compute_cell(p1, pool, box, resolution, flow), min_extent)

