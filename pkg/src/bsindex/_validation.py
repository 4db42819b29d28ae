"""Input checking helpers used at every public entry point."""

import numpy as np

# Distributions must sum to 1 within this absolute tolerance; smaller
# deviations are renormalized silently, larger ones rejected.
SUM_TOLERANCE = 1e-9


def check_points(points, min_rows=1, name="points") -> np.ndarray:
    X = np.asarray(points, dtype=float)
    if X.ndim != 2:
        raise ValueError(f"{name} must be a 2-D array, got shape {X.shape}")
    if X.shape[0] < min_rows:
        raise ValueError(f"{name} needs at least {min_rows} row(s), got {X.shape[0]}")
    if X.shape[1] < 1:
        raise ValueError(f"{name} needs at least one feature column")
    if not np.all(np.isfinite(X)):
        raise ValueError(f"{name} contains non-finite values")
    return X


def check_labels(labels, k: int, n: int | None = None) -> np.ndarray:
    lab = np.asarray(labels)
    if lab.ndim != 1 or lab.size == 0:
        raise ValueError("labels must be a nonempty 1-D sequence")
    if not np.issubdtype(lab.dtype, np.integer):
        as_int = lab.astype(np.int64, casting="unsafe")
        if not np.array_equal(as_int, lab):
            raise ValueError("labels must be integers")
        lab = as_int
    else:
        lab = lab.astype(np.int64)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if lab.min() < 0 or lab.max() >= k:
        raise ValueError(f"labels must lie in [0, {k}), got range [{lab.min()}, {lab.max()}]")
    if n is not None and lab.shape[0] != n:
        raise ValueError(f"labels length {lab.shape[0]} != number of points {n}")
    return lab


def check_distribution(weights, name="distribution") -> np.ndarray:
    w = np.asarray(weights, dtype=float).ravel()
    if w.size < 1:
        raise ValueError(f"{name} must have at least one entry")
    if not np.all(np.isfinite(w)):
        raise ValueError(f"{name} contains non-finite entries")
    if np.any(w < 0):
        raise ValueError(f"{name} has negative entries")
    total = float(w.sum())
    if abs(total - 1.0) >= SUM_TOLERANCE:
        raise ValueError(f"{name} sums to {total!r}, expected 1 within {SUM_TOLERANCE}")
    return w / total
