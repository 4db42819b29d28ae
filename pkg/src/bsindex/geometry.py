"""Spectral geometry of labeled clusters.

Each cluster's shape is summarized by the singular values of its
mean-centered point matrix, scaled by ``1/sqrt(M - 1)`` for ``M`` members so
they estimate the spread (standard deviation) along each principal
direction.  Their product is the cluster's d-dimensional spread volume; its
``d``-th root, the *extent*, is the geometric-mean spread per axis.  Extents
normalized across clusters form the geometric distribution ``q`` that the
index compares against the membership histogram ``p``.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from ._validation import check_labels, check_points
from .errors import DegenerateClusterWarning, DegenerateGeometryError
from .index import BsiReport, bsi, frequency_distribution

__all__ = [
    "ClusterGeometry",
    "cluster_singular_values",
    "cluster_geometries",
    "geometric_distribution",
    "bsi_of_labeled_data",
]

# Degenerate clusters keep a sliver of mass so the index stays finite.
EXTENT_FLOOR_RATIO = 1e-12


@dataclass(frozen=True)
class ClusterGeometry:
    """Spectral summary of one cluster."""

    cluster_id: int
    member_count: int
    singular_values: np.ndarray  # length d, descending, spread units
    volume: float  # product of the d singular values

    @property
    def extent(self) -> float:
        """Geometric-mean spread per axis, ``volume ** (1/d)``."""
        return float(self.volume) ** (1.0 / self.singular_values.shape[0])


def cluster_singular_values(points) -> np.ndarray:
    """Spread spectrum of one cluster: descending singular values of the
    mean-centered point matrix, divided by ``sqrt(M - 1)``.

    A cluster with fewer than ``d + 1`` members is rank deficient after
    centering, so trailing values are exactly 0.  An empty cluster returns
    all zeros and warns.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2:
        raise ValueError(f"points must be 2-D, got shape {pts.shape}")
    m, d = pts.shape
    if d < 1:
        raise ValueError("points need at least one feature column")
    if m == 0:
        warnings.warn("empty cluster has no geometry", DegenerateClusterWarning, stacklevel=2)
        return np.zeros(d)
    if not np.all(np.isfinite(pts)):
        raise ValueError("points contain non-finite values")
    centered = pts - pts.mean(axis=0)
    raw = np.linalg.svd(centered, compute_uv=False)
    out = np.zeros(d)
    out[: raw.shape[0]] = raw / np.sqrt(max(m - 1, 1))
    # centering noise scales with the coordinate magnitude, not the spread;
    # values at that level are rank deficiency, not real spread
    noise = np.abs(pts).max() * np.sqrt(m * d / max(m - 1, 1))
    out[out <= (out[0] + noise) * max(m, d) * np.finfo(float).eps] = 0.0
    return out


def cluster_geometries(points, labels, k: int) -> list[ClusterGeometry]:
    """Per-cluster spectral summaries, in cluster-id order."""
    X = check_points(points)
    lab = check_labels(labels, k, n=X.shape[0])
    out = []
    for c in range(k):
        members = X[lab == c]
        svals = cluster_singular_values(members) if members.shape[0] else np.zeros(X.shape[1])
        out.append(
            ClusterGeometry(
                cluster_id=c,
                member_count=int(members.shape[0]),
                singular_values=svals,
                volume=float(np.prod(svals)),
            )
        )
    return out


def geometric_distribution(points, labels, k: int) -> np.ndarray:
    """Normalized cluster extents: ``q[i] = extent_i / sum_j extent_j``.

    Zero extents (empty, singleton, or duplicate-point clusters) are floored
    at ``1e-12`` times the largest extent before normalizing, so degenerate
    clusters contribute near-zero but nonzero mass.  Raises
    :class:`DegenerateGeometryError` when every cluster is degenerate.
    """
    geoms = cluster_geometries(points, labels, k)
    extents = np.array([g.extent for g in geoms])
    top = float(extents.max())
    if top <= 0.0:
        raise DegenerateGeometryError([g.cluster_id for g in geoms])
    floored = np.flatnonzero(extents < EXTENT_FLOOR_RATIO * top)
    if floored.size:
        warnings.warn(
            f"cluster id(s) {floored.tolist()} have degenerate geometry; "
            "their extent was floored",
            DegenerateClusterWarning,
            stacklevel=2,
        )
    extents = np.maximum(extents, EXTENT_FLOOR_RATIO * top)
    return extents / extents.sum()


def bsi_of_labeled_data(points, labels, k: int | None = None) -> BsiReport:
    """Index of a labeled point set: membership histogram vs. geometry.

    ``k`` defaults to ``max(labels) + 1``.
    """
    lab = np.asarray(labels)
    if k is None:
        if lab.size == 0:
            raise ValueError("labels must be a nonempty 1-D sequence")
        k = int(lab.max()) + 1
    p = frequency_distribution(lab, k)
    q = geometric_distribution(points, lab, k)
    return bsi(p, q)
