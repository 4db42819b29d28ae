"""Classical cluster-validity baselines for side-by-side comparison.

All four scores use Euclidean distance and follow the standard conventions:
silhouette gives singleton clusters a score of 0, Calinski-Harabasz is the
between/within dispersion ratio scaled by ``(n - k)/(k - 1)``, and
Davies-Bouldin averages each cluster's worst similarity ratio
``(s_i + s_j)/d_ij``.  Size entropy is the Shannon entropy (bits) of the
membership histogram.
"""

import math
import warnings

import numpy as np

from ._validation import check_labels, check_points
from .errors import DegenerateClusterWarning
from .index import frequency_distribution

__all__ = [
    "silhouette_score",
    "calinski_harabasz",
    "davies_bouldin",
    "cluster_size_entropy",
]


def _checked(X, labels, k, *, min_k=2):
    X = check_points(X)
    lab = np.asarray(labels)
    if k is None:
        if lab.size == 0:
            raise ValueError("labels must be a nonempty 1-D sequence")
        k = int(lab.max()) + 1
    lab = check_labels(lab, k, n=X.shape[0])
    counts = np.bincount(lab, minlength=k)
    if k < min_k:
        raise ValueError(f"need at least {min_k} clusters, got k={k}")
    if np.any(counts == 0):
        raise ValueError(f"empty cluster id(s): {np.flatnonzero(counts == 0).tolist()}")
    return X, lab, k, counts


def silhouette_score(X, labels, k: int | None = None) -> float:
    """Mean silhouette ``(b - a) / max(a, b)`` over all points.

    ``a`` is the mean distance to the point's own cluster (excluding
    itself), ``b`` the smallest mean distance to another cluster.  Points in
    singleton clusters score 0, as does the degenerate case ``a = b = 0``.
    """
    X, lab, k, counts = _checked(X, labels, k)
    n = X.shape[0]
    if n < k + 1:
        raise ValueError(f"need n >= k + 1 points, got n={n}, k={k}")
    sq = np.einsum("ij,ij->i", X, X)
    d2 = np.maximum(sq[:, None] + sq[None, :] - 2.0 * (X @ X.T), 0.0)
    np.fill_diagonal(d2, 0.0)
    dist = np.sqrt(d2)

    # cluster_sums[i, c] = total distance from point i to members of cluster c
    cluster_sums = np.zeros((n, k))
    for c in range(k):
        cluster_sums[:, c] = dist[:, lab == c].sum(axis=1)

    own = counts[lab]
    scores = np.zeros(n)
    multi = own > 1
    a = np.zeros(n)
    a[multi] = cluster_sums[np.arange(n), lab][multi] / (own[multi] - 1)
    mean_other = cluster_sums / counts[None, :]
    mean_other[np.arange(n), lab] = np.inf
    b = mean_other.min(axis=1)
    denom = np.maximum(a, b)
    ok = multi & (denom > 0)
    scores[ok] = (b[ok] - a[ok]) / denom[ok]
    return float(scores.mean())


def calinski_harabasz(X, labels, k: int | None = None) -> float:
    """Between/within dispersion ratio scaled by ``(n - k)/(k - 1)``."""
    X, lab, k, counts = _checked(X, labels, k)
    n = X.shape[0]
    if n <= k:
        raise ValueError(f"need n > k points, got n={n}, k={k}")
    overall = X.mean(axis=0)
    within = 0.0
    between = 0.0
    for c in range(k):
        members = X[lab == c]
        centroid = members.mean(axis=0)
        within += float(((members - centroid) ** 2).sum())
        between += counts[c] * float(((centroid - overall) ** 2).sum())
    if within == 0.0:
        warnings.warn("zero within-cluster dispersion", DegenerateClusterWarning, stacklevel=2)
        return math.inf
    return (between / within) * (n - k) / (k - 1)


def davies_bouldin(X, labels, k: int | None = None) -> float:
    """Mean over clusters of the worst ``(s_i + s_j) / d_ij`` ratio.

    ``s`` is the mean member distance to the cluster centroid and ``d_ij``
    the centroid separation.  Coincident centroids make the score infinite.
    """
    X, lab, k, _ = _checked(X, labels, k)
    centroids = np.vstack([X[lab == c].mean(axis=0) for c in range(k)])
    scatter = np.array(
        [float(np.linalg.norm(X[lab == c] - centroids[c], axis=1).mean()) for c in range(k)]
    )
    sep = np.linalg.norm(centroids[:, None, :] - centroids[None, :, :], axis=2)
    off_diagonal = ~np.eye(k, dtype=bool)
    if np.any(sep[off_diagonal] == 0.0):
        warnings.warn("coincident centroids", DegenerateClusterWarning, stacklevel=2)
        return math.inf
    pair_sum = scatter[:, None] + scatter[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(off_diagonal, pair_sum / sep, -np.inf)
    return float(ratio.max(axis=1).mean())


def cluster_size_entropy(labels, k: int | None = None) -> float:
    """Shannon entropy (bits) of cluster sizes; at most ``log2 k``."""
    lab = np.asarray(labels)
    if k is None:
        if lab.size == 0:
            raise ValueError("labels must be a nonempty 1-D sequence")
        k = int(lab.max()) + 1
    p = frequency_distribution(lab, k)
    mask = p > 0
    return float(-np.sum(p[mask] * np.log2(p[mask])))
