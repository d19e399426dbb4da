"""Monte-Carlo estimates of the neighbor upper bound size.

Every trial draws its own stream from ``SeedSequence(seed, spawn_key=(trial,))``
with numpy's PCG64 generator, so the outcome of a trial depends only on
``(seed, trial)`` and parallel runs match serial ones exactly.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .neighbor_bounds import CandidateSet, upper_bound_sorted

MODES = ("neighbors", "cell", "simulate", "dynamic-demo")


@dataclass(frozen=True)
class SimConfig:
    n_points: int
    trials: int
    seed: int = 0
    square_half_width: float = 1.0
    mode: str = "simulate"

    def __post_init__(self):
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.square_half_width > 0:
            raise ValueError("square_half_width must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass
class SimStats:
    n_points: int
    trials: int
    seed: int
    avg_ng: float
    histogram: dict
    ratio_r: float
    mean_ratio: float
    per_trial: list = field(default_factory=list)

    def to_dict(self):
        d = asdict(self)
        d["histogram"] = {str(k): v for k, v in sorted(self.histogram.items())}
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["histogram"] = {int(k): int(v) for k, v in d["histogram"].items()}
        d.setdefault("per_trial", [])
        return cls(**d)


def trial_rng(seed, trial=None):
    """PCG64 generator for ``(seed, trial)``; ``trial=None`` uses the root stream."""
    key = () if trial is None else (int(trial),)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed), spawn_key=key)))


def _admissible_mask(pts):
    # p1 sits at the origin; reject points at or upstream of it on y = 0
    ok = ~((pts[:, 1] == 0.0) & (pts[:, 0] <= 0.0))
    _, first = np.unique(pts, axis=0, return_index=True)
    unique = np.zeros(len(pts), dtype=bool)
    unique[first] = True
    return ok & unique


def generate_points(n, seed=0, half_width=1.0, trial=None):
    """``(n, 2)`` array of uniform points in ``[-h, h]^2`` admissible for p1 = origin.

    Offending draws are replaced from the same stream until none remain.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = trial_rng(seed, trial)
    pts = rng.uniform(-half_width, half_width, size=(n, 2))
    bad = ~_admissible_mask(pts)
    while bad.any():
        pts[bad] = rng.uniform(-half_width, half_width, size=(int(bad.sum()), 2))
        bad = ~_admissible_mask(pts)
    return pts


def _ng_size(cfg, trial):
    pts = generate_points(cfg.n_points, cfg.seed, cfg.square_half_width, trial)
    return len(upper_bound_sorted(CandidateSet.build((0.0, 0.0), pts)))


def _chunk(args):
    cfg, lo, hi = args
    return [_ng_size(cfg, t) for t in range(lo, hi)]


def run_trials(cfg, workers=1, keep_per_trial=False):
    """Run ``cfg.trials`` independent trials and aggregate ``|N_G|``."""
    if workers <= 1:
        sizes = [_ng_size(cfg, t) for t in range(cfg.trials)]
    else:
        step = -(-cfg.trials // (4 * workers))
        jobs = [(cfg, lo, min(lo + step, cfg.trials)) for lo in range(0, cfg.trials, step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            sizes = [s for part in ex.map(_chunk, jobs) for s in part]
    avg = sum(sizes) / len(sizes)
    return SimStats(
        n_points=cfg.n_points,
        trials=cfg.trials,
        seed=cfg.seed,
        avg_ng=avg,
        histogram=dict(sorted(Counter(sizes).items())),
        ratio_r=cfg.n_points / avg,
        mean_ratio=sum(cfg.n_points / s for s in sizes) / len(sizes),
        per_trial=sizes if keep_per_trial else [],
    )


CSV_COLUMNS = ("n_points", "trials", "seed", "avg_ng", "ratio_r", "n_ng", "count")


def emit_stats(stats, fmt, path):
    """Write ``stats`` as ``"json"`` or ``"csv"`` (one row per histogram bin)."""
    if fmt == "json":
        text = json.dumps(stats.to_dict(), indent=2) + "\n"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    elif fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_COLUMNS)
            for k, c in sorted(stats.histogram.items()):
                w.writerow([stats.n_points, stats.trials, stats.seed,
                            repr(stats.avg_ng), repr(stats.ratio_r), k, c])
    else:
        raise ValueError(f"unknown stats format {fmt!r}")


def load_stats(path):
    with open(path, encoding="utf-8") as fh:
        return SimStats.from_dict(json.load(fh))
