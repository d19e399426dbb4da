"""Command-line entry point: ``energy-voronoi <subcommand> ...``.

Exit codes: 0 ok, 1 invalid input, 2 assumption violation, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from .approximation import lower_bound_neighbors
from .demo import dynamic_demo
from .exceptions import AssumptionViolation
from .neighbor_bounds import CandidateSet, upper_bound_simple, upper_bound_sorted
from .simulation import SimConfig, emit_stats, run_trials
from .svg import emit_cell_svg
from .voronoi_cell import compute_cell, compute_cell_prefiltered, neighbors_from_cell

EXIT_OK, EXIT_INPUT, EXIT_ASSUMPTION, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not exit status 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _floats(text, n, what):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise ValueError(f"{what} must be {n} comma-separated numbers, got {text!r}") from None
    if len(vals) != n:
        raise ValueError(f"{what} must be {n} comma-separated numbers, got {text!r}")
    return vals


def _parse_id(raw):
    raw = str(raw).strip()
    try:
        return int(raw)
    except ValueError:
        return raw


def read_points(path):
    """``{id: (x, y)}`` from a CSV (header ``id,x,y``) or JSON file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from None
        if isinstance(data, dict):
            data = data.get("points")
        if not isinstance(data, list):
            raise ValueError(f"{path}: expected a list of {{id, x, y}} objects")
        rows = data
    else:
        reader = csv.DictReader(text.splitlines())
        if reader.fieldnames is None or not {"id", "x", "y"} <= {f.strip() for f in reader.fieldnames}:
            raise ValueError(f"{path}: CSV header must contain id,x,y")
        rows = [{k.strip(): v for k, v in r.items()} for r in reader]
    points = {}
    for n, r in enumerate(rows):
        try:
            key = r["id"] if isinstance(r["id"], int) else _parse_id(r["id"])
            x, y = float(r["x"]), float(r["y"])
        except (KeyError, TypeError, ValueError):
            raise ValueError(f"{path}: row {n} needs id, x and y") from None
        if not (np.isfinite(x) and np.isfinite(y)):
            raise ValueError(f"{path}: row {n} has non-finite coordinates")
        if key in points:
            raise ValueError(f"{path}: duplicate id {key!r}")
        points[key] = (x, y)
    return points


def _split_p1(points, p1_text):
    if p1_text is not None:
        return tuple(_floats(p1_text, 2, "--p1")), points
    if "p1" in points:
        rest = dict(points)
        return rest.pop("p1"), rest
    return (0.0, 0.0), points


def _sorted_ids(ids):
    return sorted(ids, key=lambda v: (isinstance(v, str), v if not isinstance(v, str) else 0, str(v)))


def _write_json(obj, path):
    text = json.dumps(obj, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_neighbors(args):
    p1, pool = _split_p1(read_points(args.input), args.p1)
    cs = CandidateSet.build(p1, pool)
    algo = upper_bound_simple if args.algo == "simple" else upper_bound_sorted
    ng = algo(cs)
    _write_json({
        "p1": list(cs.p1),
        "algorithm": args.algo,
        "n_points": len(cs.pool),
        "upper_bound": _sorted_ids(ng),
        "lower_bound": _sorted_ids(lower_bound_neighbors(cs.p1, cs.pool)) if cs.pool else [],
    }, args.out)


def cmd_cell(args):
    p1, pool = _split_p1(read_points(args.input), args.p1)
    box = _floats(args.box, 4, "--box")
    build = compute_cell_prefiltered if args.prefilter else compute_cell
    cell = build(p1, pool, box, args.resolution)
    summary = {
        "p1": list(cell.owner),
        "box": list(cell.box),
        "resolution": cell.resolution,
        "method": "prefiltered" if args.prefilter else "naive",
        "contributors": _sorted_ids(cell.contributors),
        "neighbors": _sorted_ids(neighbors_from_cell(cell)),
        "energy_evaluations": cell.evaluations,
        "dominance_tests": cell.dominance_tests,
        "arcs": [{"contributor": a.contributor, "points": a.points.tolist()} for a in cell.arcs],
    }
    if args.svg:
        emit_cell_svg(cell, pool, args.svg)
    _write_json(summary, args.out)


def cmd_simulate(args):
    out = Path(args.out)
    fmt = out.suffix.lower().lstrip(".")
    if fmt not in ("json", "csv"):
        raise ValueError("--out must end in .json or .csv")
    cfg = SimConfig(args.n, args.trials, args.seed, args.half_width)
    stats = run_trials(cfg, workers=args.workers, keep_per_trial=args.per_trial)
    emit_stats(stats, fmt, out)


def cmd_dynamic_demo(args):
    try:
        script = json.loads(Path(args.script).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{args.script}: invalid JSON: {exc}") from None
    if isinstance(script, dict):
        script = script.get("events")
    if not isinstance(script, list):
        raise ValueError(f"{args.script}: expected a list of events")
    p1 = tuple(_floats(args.p1, 2, "--p1")) if args.p1 else (0.0, 0.0)
    _write_json(dynamic_demo(script, p1, args.capacity), args.out)


def build_parser():
    parser = _Parser(prog="energy-voronoi", description="Energy-metric Voronoi cells in a uniform flow.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("neighbors", help="upper and lower bounds on the neighbors of p1")
    p.add_argument("--input", required=True)
    p.add_argument("--p1", help="x,y (default: row with id p1, else the origin)")
    p.add_argument("--algo", choices=("simple", "sorted"), default="sorted")
    p.add_argument("--out")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("cell", help="sampled cell of p1 clipped to a box")
    p.add_argument("--input", required=True)
    p.add_argument("--p1")
    p.add_argument("--box", required=True, help="xmin,ymin,xmax,ymax")
    p.add_argument("--resolution", type=int, default=512)
    p.add_argument("--prefilter", action="store_true")
    p.add_argument("--svg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cell)

    p = sub.add_parser("simulate", help="Monte-Carlo statistics of the upper bound size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--half-width", type=float, default=1.0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--per-trial", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("dynamic-demo", help="replay insert/delete events through a dominance graph")
    p.add_argument("--script", required=True)
    p.add_argument("--out")
    p.add_argument("--p1")
    p.add_argument("--capacity", type=int, default=256)
    p.set_defaults(func=cmd_dynamic_demo)
    return parser


_COORD_OPTIONS = ("--p1", "--box")


def _bind_coordinates(argv):
    # "--box -5,-5,5,5" would otherwise read the value as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _COORD_OPTIONS:
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_bind_coordinates(argv))
    try:
        args.func(args)
    except AssumptionViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ASSUMPTION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
