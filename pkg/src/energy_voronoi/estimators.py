"""scikit-learn style wrappers around the functional API."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .approximation import augment_lower_bound, lower_bound_neighbors
from .geometry import as_point
from .metric import FlowField
from .neighbor_bounds import CandidateSet, upper_bound_simple, upper_bound_sorted


def check_points(X, name="X"):
    """Finite float array of shape ``(n, 2)``."""
    X = check_array(X, dtype=float, ensure_2d=True)
    if X.shape[1] != 2:
        raise ValueError(f"{name} must have 2 columns (x, y), got {X.shape[1]}")
    return X


class EnergyVoronoiPartition(BaseEstimator):
    """Assigns query points to the generator that reaches them with least energy.

    Parameters
    ----------
    flow_speed : float, default=1.0
        Speed ``b`` of the uniform flow along +x. It scales energies but never
        changes which generator wins.

    Attributes
    ----------
    generators_ : ndarray of shape (n_generators, 2)
    n_features_in_ : int
    """

    def __init__(self, flow_speed=1.0):
        self.flow_speed = flow_speed

    def fit(self, X, y=None):
        X = check_points(X)
        FlowField(self.flow_speed)
        if len(np.unique(X, axis=0)) != len(X):
            raise ValueError("generators must be distinct")
        self.generators_ = X
        self.n_features_in_ = 2
        return self

    def transform(self, X):
        """Energy from every generator to every query, shape ``(n_queries, n_generators)``."""
        check_is_fitted(self)
        Q = check_points(X)
        g = self.generators_
        d = np.hypot(Q[:, None, 0] - g[None, :, 0], Q[:, None, 1] - g[None, :, 1])
        return np.maximum(0.0, 2.0 * self.flow_speed * (d + g[None, :, 0] - Q[:, None, 0]))

    def predict(self, X):
        """Index of the owning generator (lowest index on ties)."""
        return np.argmin(self.transform(X), axis=1)

    def fit_predict(self, X, y=None):
        return self.fit(X).predict(X)


class NeighborBounds(BaseEstimator):
    """Lower and upper bounds on the Voronoi neighbors of a fixed generator.

    ``fit(X)`` treats the rows of ``X`` as the candidate pool.

    Parameters
    ----------
    p1 : pair of float, default=(0.0, 0.0)
    algorithm : {"sorted", "simple"}, default="sorted"
    augment : bool, default=False
        Grow the disk-based lower bound with candidates that strictly win the
        vertex of their boundary with ``p1``.

    Attributes
    ----------
    upper_bound_ : ndarray of int
        Row indices not dominated by any other row.
    lower_bound_ : ndarray of int
    """

    def __init__(self, p1=(0.0, 0.0), algorithm="sorted", augment=False):
        self.p1 = p1
        self.algorithm = algorithm
        self.augment = augment

    def fit(self, X, y=None):
        X = check_points(X)
        if self.algorithm not in ("sorted", "simple"):
            raise ValueError(f"algorithm must be 'sorted' or 'simple', got {self.algorithm!r}")
        p1 = as_point(self.p1, "p1")
        pool = dict(enumerate(map(tuple, X)))
        cs = CandidateSet.build(p1, pool)
        algo = upper_bound_sorted if self.algorithm == "sorted" else upper_bound_simple
        self.upper_bound_ = np.array(sorted(algo(cs)), dtype=int)
        lower = lower_bound_neighbors(p1, pool)
        if self.augment:
            lower = augment_lower_bound(p1, pool, lower)
        self.lower_bound_ = np.array(sorted(lower), dtype=int)
        self.n_features_in_ = 2
        self.n_candidates_ = len(X)
        return self

    def get_support(self, bound="upper"):
        """Boolean mask over the fitted rows."""
        check_is_fitted(self)
        idx = self.upper_bound_ if bound == "upper" else self.lower_bound_
        mask = np.zeros(self.n_candidates_, dtype=bool)
        mask[idx] = True
        return mask
