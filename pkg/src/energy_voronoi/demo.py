"""Replay of insert/delete events through a dominance graph, with a change log."""

from __future__ import annotations

from .dominance_graph import DominanceGraph
from .exceptions import AssumptionViolation, EnergyVoronoiError


class InvalidEventError(EnergyVoronoiError):
    def __init__(self, index, message):
        super().__init__(f"event {index}: {message}")
        self.index = index


def _key(v):
    return (isinstance(v, str), v if not isinstance(v, str) else 0, str(v))


def _ids(s):
    return sorted(s, key=_key)


def _parse(index, ev):
    if not isinstance(ev, dict):
        raise InvalidEventError(index, "event must be an object")
    op = ev.get("op")
    if op not in ("insert", "delete"):
        raise InvalidEventError(index, f"op must be 'insert' or 'delete', got {op!r}")
    if "id" not in ev or isinstance(ev["id"], (list, dict, float)) or ev["id"] is None:
        raise InvalidEventError(index, "event needs an integer or string id")
    if op == "insert":
        try:
            x, y = float(ev["x"]), float(ev["y"])
        except (KeyError, TypeError, ValueError):
            raise InvalidEventError(index, "insert needs numeric x and y") from None
        return op, ev["id"], (x, y)
    return op, ev["id"], None


def dynamic_demo(script, p1=(0.0, 0.0), capacity=256):
    """Apply ``script`` in order and return one log entry per event.

    Each entry records the neighbor set before and after, what entered and
    left it, and whether the cell of ``p1`` would need recomputing (only when
    the neighbor set changed).
    """
    graph = DominanceGraph(p1, capacity)
    log = []
    for index, ev in enumerate(script):
        op, vid, p = _parse(index, ev)
        before = graph.neighbors()
        try:
            if op == "insert":
                graph.insert(p, vid)
            else:
                graph.delete(vid)
        except AssumptionViolation as exc:
            raise AssumptionViolation(f"event {index}: {exc}", exc.offenders) from None
        except (KeyError, ValueError, EnergyVoronoiError) as exc:
            msg = exc.args[0] if exc.args else str(exc)
            raise InvalidEventError(index, msg) from None
        after = graph.neighbors()
        added, removed = after - before, before - after
        changed = bool(added or removed)
        if not changed:
            message = "neighbors unchanged; no recomputation"
        else:
            parts = []
            if added:
                parts.append("promoted " + ", ".join(map(str, _ids(added))))
            if removed:
                parts.append("dropped " + ", ".join(map(str, _ids(removed))))
            message = "neighbors changed (" + "; ".join(parts) + "); recompute cell"
        log.append({
            "index": index,
            "op": op,
            "id": vid,
            "neighbors_before": _ids(before),
            "neighbors_after": _ids(after),
            "added": _ids(added),
            "removed": _ids(removed),
            "recompute": changed,
            "message": message,
        })
    return log
