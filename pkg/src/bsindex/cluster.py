"""Lloyd's K-means with restarts, tuned for density-balanced partitions.

Initialization draws ``k`` distinct data points (Forgy).  An iteration
assigns points to the nearest centroid (ties to the lowest cluster id),
repairs any empty cluster by giving it the point farthest from its current
centroid, then recomputes centroids.  Convergence is declared when no
centroid coordinate moves more than ``tolerance``.

Restart ``r`` of a run seeded ``s`` draws from an independent random stream
keyed ``(s, RESTARTS, r)``, so results do not depend on execution order.
The best restart is chosen either by highest index score or lowest inertia.
"""

import math
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from ._rng import RESTARTS, stream
from ._validation import check_points
from .errors import DegenerateGeometryError
from .geometry import bsi_of_labeled_data

__all__ = ["KMeansConfig", "ClusteringResult", "kmeans_fit", "best_of_restarts", "BalancedKMeans"]

OBJECTIVES = ("bsi", "inertia")
_OBJECTIVE_ALIASES = {"bsi": "bsi", "max_bsi": "bsi", "inertia": "inertia", "min_inertia": "inertia"}


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    restarts: int = 10
    max_iterations: int = 300
    tolerance: float = 1e-8
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.tolerance < 0:
            raise ValueError(f"tolerance must be >= 0, got {self.tolerance}")


@dataclass
class ClusteringResult:
    assignments: np.ndarray  # n cluster ids in [0, k)
    centroids: np.ndarray  # k x d
    inertia: float  # within-cluster sum of squared distances
    iterations_used: int
    restart_index: int
    bsi_score: float  # nan when every cluster is geometrically degenerate

    @property
    def k(self) -> int:
        return self.centroids.shape[0]


def _squared_distances(X: np.ndarray, centers: np.ndarray) -> np.ndarray:
    d2 = (
        np.einsum("ij,ij->i", X, X)[:, None]
        + np.einsum("ij,ij->i", centers, centers)[None, :]
        - 2.0 * (X @ centers.T)
    )
    return np.maximum(d2, 0.0)


def _repair_empty(labels: np.ndarray, d2: np.ndarray, k: int) -> bool:
    """Give each empty cluster the farthest point whose cluster can spare one."""
    counts = np.bincount(labels, minlength=k)
    if not np.any(counts == 0):
        return False
    n = labels.shape[0]
    cost = d2[np.arange(n), labels]
    for c in range(k):
        if counts[c] > 0:
            continue
        for i in np.argsort(-cost, kind="stable"):
            if counts[labels[i]] > 1:
                counts[labels[i]] -= 1
                counts[c] = 1
                labels[i] = c
                cost[i] = d2[i, c]
                break
    return True


def _score_labels(X: np.ndarray, labels: np.ndarray, k: int) -> float:
    try:
        return bsi_of_labeled_data(X, labels, k).bsi
    except DegenerateGeometryError:
        return math.nan


def kmeans_fit(
    X,
    k: int,
    *,
    seed: int = 0,
    restart: int = 0,
    max_iterations: int = 300,
    tolerance: float = 1e-8,
) -> ClusteringResult:
    """One Lloyd run from a seeded random initialization."""
    X = check_points(X)
    n = X.shape[0]
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > n:
        raise ValueError(f"k={k} exceeds the number of points n={n}")
    rng = stream(seed, RESTARTS, restart)
    centers = X[rng.choice(n, size=k, replace=False)].copy()

    iterations = 0
    prev_inertia = math.inf
    repaired = False
    for _ in range(max_iterations):
        iterations += 1
        d2 = _squared_distances(X, centers)
        labels = np.argmin(d2, axis=1)
        current = float(d2[np.arange(n), labels].sum())
        # inertia is non-increasing across iterations except when an
        # empty-cluster repair intervened
        if not repaired and not current <= prev_inertia + 1e-9 * max(1.0, prev_inertia):
            raise AssertionError(f"inertia increased without repair: {prev_inertia} -> {current}")
        prev_inertia = current
        repaired = _repair_empty(labels, d2, k)
        new_centers = np.vstack([X[labels == c].mean(axis=0) for c in range(k)])
        shift = float(np.abs(new_centers - centers).max())
        centers = new_centers
        if shift < tolerance:
            break

    d2 = _squared_distances(X, centers)
    labels = np.argmin(d2, axis=1)
    _repair_empty(labels, d2, k)
    inertia = float(d2[np.arange(n), labels].sum())
    return ClusteringResult(
        assignments=labels.astype(np.int64),
        centroids=centers,
        inertia=inertia,
        iterations_used=iterations,
        restart_index=restart,
        bsi_score=_score_labels(X, labels, k),
    )


def best_of_restarts(X, config: KMeansConfig, objective: str = "bsi") -> ClusteringResult:
    """Run ``config.restarts`` independent fits and keep the winner.

    ``objective="bsi"`` keeps the highest index score, ``"inertia"`` the
    lowest within-cluster sum of squares.  Ties keep the lowest restart
    index.
    """
    try:
        objective = _OBJECTIVE_ALIASES[objective]
    except KeyError:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}") from None
    X = check_points(X)
    best = None
    for r in range(config.restarts):
        result = kmeans_fit(
            X,
            config.k,
            seed=config.seed,
            restart=r,
            max_iterations=config.max_iterations,
            tolerance=config.tolerance,
        )
        if objective == "bsi":
            if math.isnan(result.bsi_score):
                continue
            better = best is None or result.bsi_score > best.bsi_score
        else:
            better = best is None or result.inertia < best.inertia
        if better:
            best = result
    if best is None:
        raise DegenerateGeometryError(range(config.k))
    return best


class BalancedKMeans(ClusterMixin, BaseEstimator):
    """K-means estimator selecting the restart with the best density balance.

    Parameters mirror :class:`KMeansConfig`; ``objective`` is ``"bsi"``
    (default) or ``"inertia"``.  After ``fit``, exposes ``labels_``,
    ``cluster_centers_``, ``inertia_``, ``bsi_``, ``n_iter_`` and
    ``restart_index_``.
    """

    def __init__(
        self,
        n_clusters: int = 3,
        restarts: int = 10,
        objective: str = "bsi",
        max_iterations: int = 300,
        tolerance: float = 1e-8,
        seed: int = 0,
    ):
        self.n_clusters = n_clusters
        self.restarts = restarts
        self.objective = objective
        self.max_iterations = max_iterations
        self.tolerance = tolerance
        self.seed = seed

    def fit(self, X, y=None):
        X = check_points(X)
        config = KMeansConfig(
            k=self.n_clusters,
            restarts=self.restarts,
            max_iterations=self.max_iterations,
            tolerance=self.tolerance,
            seed=self.seed,
        )
        result = best_of_restarts(X, config, objective=self.objective)
        self.labels_ = result.assignments
        self.cluster_centers_ = result.centroids
        self.inertia_ = result.inertia
        self.bsi_ = result.bsi_score
        self.n_iter_ = result.iterations_used
        self.restart_index_ = result.restart_index
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        if not hasattr(self, "cluster_centers_"):
            raise RuntimeError("estimator is not fitted; call fit first")
        X = check_points(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, estimator was fitted with {self.n_features_in_}"
            )
        return np.argmin(_squared_distances(X, self.cluster_centers_), axis=1).astype(np.int64)
