"""Dominance DAG over a changing candidate pool, updated in O(n) per change.

Each vertex keeps parent and child flag sets (bit sets over ``capacity``
slots) and an in-degree counter. A candidate is an upper-bound neighbor of
``p1`` exactly when its in-degree is zero, so the neighbor set is available
without recomputation after every insertion or deletion.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .dominance import dominance_matrix, dominates
from .exceptions import AssumptionViolation, CapacityError, DegeneratePairError
from .geometry import Point, as_point


@dataclass
class Vertex:
    id: object
    x: float
    y: float
    parent: int = 0
    child: int = 0
    no_of_parent: int = 0

    @property
    def point(self):
        return Point(self.x, self.y)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class DominanceGraph:
    """Dynamically maintained dominance graph for a fixed generator ``p1``.

    Parameters
    ----------
    p1 : point-like
        The generator whose neighbors are tracked.
    capacity : int
        Maximum number of simultaneously present candidates.
    dominates_fn : callable, optional
        Dominance predicate ``f(p1, p2, p3)``; swap in a counting wrapper to
        measure work.
    """

    def __init__(self, p1, capacity=256, dominates_fn=dominates):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.p1 = as_point(p1, "p1")
        self.capacity = int(capacity)
        self.dominates_fn = dominates_fn
        self.slots = [None] * self.capacity
        self.list_of_neighbor = 0
        self._free = list(range(self.capacity))
        self._slot_of = {}
        self._by_coords = {}
        self._next_id = 2

    def __len__(self):
        return len(self._slot_of)

    def __contains__(self, vid):
        return vid in self._slot_of

    def points(self):
        """Present candidates as ``{id: Point}`` in slot order."""
        return {v.id: v.point for v in self.slots if v is not None}

    def _occupied(self):
        return [i for i, v in enumerate(self.slots) if v is not None]

    def _admissible(self, p):
        x1, y1 = self.p1
        if p.x == x1 and p.y == y1:
            return "coincides with p1"
        if p.y == y1 and p.x < x1:
            return "on the streamline upstream of p1"
        if (p.x, p.y) in self._by_coords:
            return f"duplicates {self._by_coords[(p.x, p.y)]!r}"
        return None

    def insert(self, p, vid=None):
        """Add candidate ``p``; returns its id. Rejects before mutating."""
        p = as_point(p, "p")
        if not self._free:
            raise CapacityError(f"dominance graph is full (capacity {self.capacity})")
        if vid is None:
            while self._next_id in self._slot_of:
                self._next_id += 1
            vid = self._next_id
            self._next_id += 1
        elif vid in self._slot_of:
            raise ValueError(f"id {vid!r} is already present")
        reason = self._admissible(p)
        if reason is not None:
            raise AssumptionViolation(f"cannot insert {vid!r}: {reason}", [(vid, reason)])

        slot = heapq.heappop(self._free)
        new = Vertex(vid, p.x, p.y)
        bit = 1 << slot
        for i, v in enumerate(self.slots):
            if v is None:
                continue
            q = v.point
            if self.dominates_fn(self.p1, q, p):
                new.no_of_parent += 1
                new.parent |= 1 << i
                v.child |= bit
            if self.dominates_fn(self.p1, p, q):
                v.no_of_parent += 1
                v.parent |= bit
                self.list_of_neighbor &= ~(1 << i)
                new.child |= 1 << i
        self.slots[slot] = new
        if new.no_of_parent == 0:
            self.list_of_neighbor |= bit
        else:
            self.list_of_neighbor &= ~bit
        self._slot_of[vid] = slot
        self._by_coords[(p.x, p.y)] = vid
        return vid

    def delete(self, vid):
        """Remove candidate ``vid``; touches flags only, no dominance tests."""
        try:
            j = self._slot_of.pop(vid)
        except KeyError:
            raise KeyError(f"id {vid!r} is not present") from None
        gone = self.slots[j]
        bit = 1 << j
        for i, v in enumerate(self.slots):
            if v is None or i == j:
                continue
            if gone.parent >> i & 1:
                v.child &= ~bit
            if gone.child >> i & 1:
                v.parent &= ~bit
                v.no_of_parent -= 1
            if v.no_of_parent == 0:
                self.list_of_neighbor |= 1 << i
        self.list_of_neighbor &= ~bit
        self.slots[j] = None
        del self._by_coords[(gone.x, gone.y)]
        heapq.heappush(self._free, j)

    def move(self, vid, p):
        """Delete then re-insert ``vid`` at ``p``."""
        self.delete(vid)
        return self.insert(p, vid)

    def neighbors(self):
        """Ids whose neighbor flag is set."""
        return {self.slots[i].id for i in _bits(self.list_of_neighbor)}

    def verify(self):
        """First violated structural invariant as a message, or ``None``."""
        occupied = self._occupied()
        occ_mask = sum(1 << i for i in occupied)
        if sorted(self._slot_of.values()) != occupied:
            return "id index does not match occupied slots"
        for i in occupied:
            v = self.slots[i]
            if (v.parent | v.child) & ~occ_mask:
                return f"vertex {v.id!r} has flags pointing at free slots"
            if v.parent >> i & 1 or v.child >> i & 1:
                return f"vertex {v.id!r} has a self-loop"
            for j in _bits(v.child):
                if not self.slots[j].parent >> i & 1:
                    return (f"mirror inconsistency: {v.id!r} lists child {self.slots[j].id!r} "
                            f"which does not list it as parent")
            for j in _bits(v.parent):
                if not self.slots[j].child >> i & 1:
                    return (f"mirror inconsistency: {v.id!r} lists parent {self.slots[j].id!r} "
                            f"which does not list it as child")
            if v.no_of_parent != v.parent.bit_count():
                return f"in-degree counter of {v.id!r} is {v.no_of_parent}, flags say {v.parent.bit_count()}"
            flagged = bool(self.list_of_neighbor >> i & 1)
            if flagged != (v.no_of_parent == 0):
                return f"neighbor flag of {v.id!r} disagrees with its in-degree"
        if self.list_of_neighbor & ~occ_mask:
            return "neighbor flag set on a free slot"

        if occupied:
            pts = np.array([[self.slots[i].x, self.slots[i].y] for i in occupied])
            try:
                expected = dominance_matrix(self.p1, pts)
            except DegeneratePairError:
                return "a candidate coincides with p1"
            np.fill_diagonal(expected, False)
            full = np.zeros((len(occupied), self.capacity), dtype=bool)
            full[:, occupied] = expected
            packed = np.packbits(full, axis=1, bitorder="little")
            for r, i in enumerate(occupied):
                want = int.from_bytes(packed[r].tobytes(), "little")
                have = self.slots[i].child
                if want != have:
                    j = ((want ^ have) & -(want ^ have)).bit_length() - 1
                    return (f"edge {self.slots[i].id!r} -> {self.slots[j].id!r} "
                            f"disagrees with the dominance relation")

        # Kahn's algorithm; leftovers sit on a cycle
        indeg = {i: self.slots[i].no_of_parent for i in occupied}
        ready = [i for i, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            i = ready.pop()
            seen += 1
            for j in _bits(self.slots[i].child):
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        if seen != len(occupied):
            return "dominance graph contains a cycle"
        return None
