"""Dominance relation between candidate generators relative to a fixed one.

``p2`` dominates ``p3`` (relative to ``p1``) when adding ``p3`` never shrinks
the region ``{p : J(p1, p) <= J(p2, p)}``. The relation has an exact
closed-form test that depends on where ``p2`` sits relative to ``p1``.
"""

from __future__ import annotations

import enum
from fractions import Fraction

import numpy as np

from .exceptions import DegeneratePairError
from .geometry import as_point, as_pool

_EPS = 2.0 ** -53
# Shewchuk's first-stage orient2d error bound
_ORIENT_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS


class Scenario(enum.Enum):
    A = "A"  # p2 above p1
    B = "B"  # p2 below p1
    C = "C"  # same height, p2 upstream of p1
    D = "D"  # same height, p2 downstream of p1


class DominanceOutcome(enum.Enum):
    FIRST_DOMINATES = "first"
    SECOND_DOMINATES = "second"
    MUTUAL = "mutual"
    INCOMPARABLE = "incomparable"


def orient_sign(x1, y1, x2, y2, x3, y3):
    """Sign of ``(x2 - x1)(y3 - y1) - (y2 - y1)(x3 - x1)``, exactly.

    A floating-point filter settles almost every call; the rest fall back to
    rational arithmetic.
    """
    left = (x2 - x1) * (y3 - y1)
    right = (y2 - y1) * (x3 - x1)
    det = left - right
    if abs(det) > _ORIENT_ERRBOUND * (abs(left) + abs(right)):
        return int(det > 0) - int(det < 0)
    return _orient_sign_exact(x1, y1, x2, y2, x3, y3)


def _orient_sign_exact(x1, y1, x2, y2, x3, y3):
    fx1, fy1 = Fraction(float(x1)), Fraction(float(y1))
    det = ((Fraction(float(x2)) - fx1) * (Fraction(float(y3)) - fy1)
           - (Fraction(float(y2)) - fy1) * (Fraction(float(x3)) - fx1))
    return int(det > 0) - int(det < 0)


def classify(p1, p2):
    """Scenario of ``p2`` relative to ``p1``."""
    x1, y1 = p1
    x2, y2 = p2
    if y1 < y2:
        return Scenario.A
    if y1 > y2:
        return Scenario.B
    if x1 > x2:
        return Scenario.C
    if x1 < x2:
        return Scenario.D
    raise DegeneratePairError("degenerate pair: p2 coincides with p1")


def dominates(p1, p2, p3):
    """True iff ``p2`` dominates ``p3`` relative to ``p1``.

    Coordinate equalities are exact; the slope comparisons use an exact
    orientation sign, so the relation is reflexive, antisymmetric and
    transitive on representable inputs (under the non-degeneracy assumption).
    """
    x1, y1 = p1
    x2, y2 = p2
    x3, y3 = p3
    if (x3 == x1 and y3 == y1) or (x2 == x1 and y2 == y1):
        raise DegeneratePairError("degenerate pair: candidate coincides with p1")
    if x2 == x3 and y2 == y3:
        return True
    if y2 > y1:
        # (y3-y1)(x2-x1) <= (x3-x1)(y2-y1)  <=>  orient(p1, p2, p3) <= 0
        return y3 >= y2 and orient_sign(x1, y1, x2, y2, x3, y3) <= 0
    if y2 < y1:
        return y3 <= y2 and orient_sign(x1, y1, x2, y2, x3, y3) >= 0
    if x2 < x1:
        return y3 != y2 or x3 < x1
    return y3 == y2 and x3 >= x2


def compare(p1, p2, p3):
    """Dominance between ``p2`` and ``p3`` in both directions."""
    fwd = dominates(p1, p2, p3)
    bwd = dominates(p1, p3, p2)
    if fwd and bwd:
        return DominanceOutcome.MUTUAL
    if fwd:
        return DominanceOutcome.FIRST_DOMINATES
    if bwd:
        return DominanceOutcome.SECOND_DOMINATES
    return DominanceOutcome.INCOMPARABLE


def dominance_matrix(p1, points):
    """Boolean matrix ``M[i, j] = dominates(p1, points[i], points[j])``.

    Vectorized over all ordered pairs; entries whose float orientation is
    inconclusive are recomputed exactly, so the result matches
    :func:`dominates` entry for entry.
    """
    x1, y1 = as_point(p1, "p1")
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if np.any((pts[:, 0] == x1) & (pts[:, 1] == y1)):
        raise DegeneratePairError("degenerate pair: candidate coincides with p1")
    dx = pts[:, 0] - x1
    dy = pts[:, 1] - y1
    # det[i, j] = orient(p1, p_i, p_j)
    left = dx[:, None] * dy[None, :]
    right = dy[:, None] * dx[None, :]
    det = left - right
    sign = np.sign(det)
    unsure = np.abs(det) <= _ORIENT_ERRBOUND * (np.abs(left) + np.abs(right))
    # orient(p1, p_i, p_i) is exactly zero
    np.fill_diagonal(sign, 0.0)
    np.fill_diagonal(unsure, False)
    for i, j in zip(*np.nonzero(unsure)):
        sign[i, j] = _orient_sign_exact(x1, y1, pts[i, 0], pts[i, 1], pts[j, 0], pts[j, 1])

    yi = pts[:, 1][:, None]
    yj = pts[:, 1][None, :]
    xi = pts[:, 0][:, None]
    xj = pts[:, 0][None, :]
    above = (yi > y1) & (yj >= yi) & (sign <= 0)
    below = (yi < y1) & (yj <= yi) & (sign >= 0)
    level = yi == y1
    upstream = level & (xi < x1) & ((yj != yi) | (xj < x1))
    downstream = level & (xi > x1) & (yj == yi) & (xj >= xi)
    same = (xi == xj) & (yi == yj)
    return above | below | upstream | downstream | same


def check_assumption(p1, pool):
    """Offending candidates for the non-degeneracy assumption.

    Every candidate must differ from ``p1`` and from every other candidate,
    and may share ``p1``'s height only if it lies strictly downstream.
    Returns a list of ``(id, reason)``; empty means the pool is admissible.
    """
    x1, y1 = as_point(p1, "p1")
    offenders = []
    seen = {}
    for key, (x, y) in as_pool(pool).items():
        if x == x1 and y == y1:
            offenders.append((key, "coincides with p1"))
        elif y == y1 and x < x1:
            offenders.append((key, "on the streamline upstream of p1"))
        if (x, y) in seen:
            offenders.append((key, f"duplicates {seen[(x, y)]!r}"))
        else:
            seen[(x, y)] = key
    return offenders
