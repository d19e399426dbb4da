"""Upper bound on the Voronoi neighbors of a fixed generator.

The bound is the set of candidates no other candidate dominates. Two static
algorithms compute it: a quadratic pairwise scan and an ``O(n log n)``
sort-and-sweep that splits candidates by height relative to ``p1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dominance import check_assumption, dominates
from .exceptions import AssumptionViolation
from .geometry import Point, as_point, as_pool


@dataclass(frozen=True)
class CandidateSet:
    """Fixed generator ``p1`` plus an id-keyed candidate pool."""

    p1: Point
    pool: dict = field(hash=False)
    assumption_ok: bool = True

    @classmethod
    def build(cls, p1, pool):
        p1 = as_point(p1, "p1")
        pool = as_pool(pool)
        return cls(p1, pool, not check_assumption(p1, pool))

    def require_assumption(self):
        if not self.assumption_ok:
            offenders = check_assumption(self.p1, self.pool)
            raise AssumptionViolation(
                f"{len(offenders)} candidate(s) violate the non-degeneracy assumption", offenders)


class CountingDominance:
    """Drop-in for :func:`dominates` that counts its invocations."""

    def __init__(self, fn=dominates):
        self.fn = fn
        self.calls = 0

    def __call__(self, p1, p2, p3):
        self.calls += 1
        return self.fn(p1, p2, p3)


def _as_candidates(cs, pool):
    if isinstance(cs, CandidateSet):
        if pool is not None:
            raise TypeError("pass either a CandidateSet or (p1, pool)")
        return cs
    return CandidateSet.build(cs, pool)


def upper_bound_simple(cs, pool=None, dominates_fn=dominates):
    """Ids not dominated by any other candidate, by exhaustive scan.

    Accepts a :class:`CandidateSet` or ``(p1, pool)``.
    """
    cs = _as_candidates(cs, pool)
    cs.require_assumption()
    p1 = cs.p1
    items = list(cs.pool.items())
    out = set()
    for i, pi in items:
        for j, pj in items:
            if j != i and dominates_fn(p1, pj, pi):
                break
        else:
            out.add(i)
    return out


def _sweep(p1, items, dominates_fn):
    # items all lie strictly above p1; returns the undominated ids
    items = sorted(items, key=lambda kp: (kp[1].y, kp[1].x))
    first_id, anchor = items[0]
    out = [first_id]
    for key, p in items[1:]:
        assert p != anchor, "duplicate candidates"
        if not dominates_fn(p1, anchor, p):
            out.append(key)
            anchor = p
    return out


def upper_bound_sorted(cs, pool=None, dominates_fn=dominates):
    """Same set as :func:`upper_bound_simple` via sort and sweep.

    Candidates above ``p1`` are swept in ascending ``(y, x)`` order, keeping a
    point whenever the last kept one (the anchor) does not dominate it.
    Candidates below are mirrored in ``y`` and swept the same way; among
    candidates at ``p1``'s height only the most upstream one survives.
    """
    cs = _as_candidates(cs, pool)
    cs.require_assumption()
    p1 = cs.p1
    above, level, below = [], [], []
    for key, p in cs.pool.items():
        if p.y > p1.y:
            above.append((key, p))
        elif p.y < p1.y:
            # negation is exact, so mirroring preserves every comparison
            below.append((key, Point(p.x, -p.y)))
        else:
            level.append((key, p))
    out = set()
    if above:
        out.update(_sweep(p1, above, dominates_fn))
    if level:
        out.add(min(level, key=lambda kp: kp[1].x)[0])
    if below:
        out.update(_sweep(Point(p1.x, -p1.y), below, dominates_fn))
    return out
