"""Basic value types and input validation helpers."""

from __future__ import annotations

import math
from collections.abc import Mapping
from typing import NamedTuple

import numpy as np


class Point(NamedTuple):
    x: float
    y: float


class Rect(NamedTuple):
    """Axis-aligned clipping box ``[xmin, xmax] x [ymin, ymax]``."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float

    @classmethod
    def square(cls, half_width, center=(0.0, 0.0)):
        cx, cy = center
        return cls(cx - half_width, cy - half_width, cx + half_width, cy + half_width)

    @property
    def diameter(self):
        return math.hypot(self.xmax - self.xmin, self.ymax - self.ymin)

    def contains(self, p, tol=0.0):
        return (self.xmin - tol <= p[0] <= self.xmax + tol
                and self.ymin - tol <= p[1] <= self.ymax + tol)

    def corners(self):
        """Corners in counter-clockwise order starting at (xmin, ymin)."""
        return [Point(self.xmin, self.ymin), Point(self.xmax, self.ymin),
                Point(self.xmax, self.ymax), Point(self.xmin, self.ymax)]


def as_point(p, name="point"):
    """Coerce a 2-sequence to a finite :class:`Point`."""
    if isinstance(p, Point):
        x, y = p
    else:
        try:
            x, y = p
        except (TypeError, ValueError):
            raise ValueError(f"{name} must be a pair of coordinates, got {p!r}") from None
    x = float(x)
    y = float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"{name} has non-finite coordinates: ({x}, {y})")
    return Point(x, y)


def as_rect(box):
    if isinstance(box, Rect):
        r = box
    else:
        r = Rect(*(float(v) for v in box))
    if not all(math.isfinite(v) for v in r):
        raise ValueError(f"box has non-finite bounds: {r}")
    if not (r.xmin < r.xmax and r.ymin < r.ymax):
        raise ValueError(f"box must satisfy xmin < xmax and ymin < ymax, got {r}")
    return r


def as_pool(pool, first_id=2):
    """Normalize a candidate pool to an ordered ``{id: Point}`` dict.

    Mappings keep their keys. Sequences and ``(n, 2)`` arrays are numbered
    from ``first_id`` upward, so the fixed generator is implicitly id 1.
    """
    if isinstance(pool, Mapping):
        return {k: as_point(v, f"pool[{k!r}]") for k, v in pool.items()}
    arr = np.asarray(pool, dtype=float)
    if arr.size == 0:
        return {}
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"pool must have shape (n, 2), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("pool contains non-finite coordinates")
    return {first_id + i: Point(float(x), float(y)) for i, (x, y) in enumerate(arr)}


def pool_array(pool):
    """Coordinates of an ``as_pool`` dict as an ``(n, 2)`` float array."""
    if not pool:
        return np.empty((0, 2))
    return np.array(list(pool.values()), dtype=float)
