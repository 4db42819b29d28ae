"""Core density-balance index over probability vectors.

The Boltzmann-Shannon Index (BSI) of two distributions ``p`` and ``q`` over
the same ``k`` cluster states is::

    BSI = 1 - JSD(p, q)        JSD(p, q) = (KL(p, m) + KL(q, m)) / 2

with midpoint ``m = (p + q) / 2`` and all logarithms base 2, so the
Jensen-Shannon divergence is bounded by 1 bit and BSI lies in ``[0, 1]``.
A score of 1 means the two distributions agree exactly.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._validation import check_distribution, check_labels
from .errors import EmptyClusterWarning

__all__ = [
    "BsiReport",
    "frequency_distribution",
    "kl_divergence",
    "bsi",
    "reversal_bsi_closed_form",
]

# JSD may overshoot its 1-bit bound by a few ulp on disjoint supports;
# anything beyond this is a bug, not roundoff.
_BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class BsiReport:
    """Full decomposition of one index evaluation, all divergences in bits."""

    bsi: float
    jsd_bits: float
    kl_p_m_bits: float
    kl_q_m_bits: float
    k: int


def frequency_distribution(labels, k: int) -> np.ndarray:
    """Normalized histogram of cluster membership counts.

    ``labels`` take values in ``[0, k)``; empty clusters are legal, get
    weight 0, and trigger :class:`EmptyClusterWarning`.
    """
    lab = check_labels(labels, k)
    counts = np.bincount(lab, minlength=k)
    if np.any(counts == 0):
        empty = np.flatnonzero(counts == 0)
        warnings.warn(
            f"cluster id(s) {empty.tolist()} have no members",
            EmptyClusterWarning,
            stacklevel=2,
        )
    return counts / lab.shape[0]


def kl_divergence(a, b) -> float:
    """Kullback-Leibler divergence ``KL(a || b)`` in bits.

    Terms with ``a[i] == 0`` contribute 0 by continuity.  ``a[i] > 0`` with
    ``b[i] == 0`` has no finite value and returns ``inf``.
    """
    a = check_distribution(a, "a")
    b = check_distribution(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    mask = a > 0
    if np.any(b[mask] == 0):
        warnings.warn(
            "KL divergence is infinite: second argument lacks support "
            "where the first has mass",
            RuntimeWarning,
            stacklevel=2,
        )
        return math.inf
    return float(np.sum(a[mask] * np.log2(a[mask] / b[mask])))


def _kl_vs_midpoint(a: np.ndarray, m: np.ndarray) -> float:
    # m > 0 wherever a > 0 by construction, no support check needed
    mask = a > 0
    return float(np.sum(a[mask] * np.log2(a[mask] / m[mask])))


def bsi(p, q) -> BsiReport:
    """Boltzmann-Shannon Index of two distributions over the same states."""
    p = check_distribution(p, "p")
    q = check_distribution(q, "q")
    if p.shape != q.shape:
        raise ValueError(f"length mismatch: {p.shape[0]} vs {q.shape[0]}")
    m = (p + q) / 2.0
    kl_p = _kl_vs_midpoint(p, m)
    kl_q = _kl_vs_midpoint(q, m)
    jsd = (kl_p + kl_q) / 2.0
    if jsd < -_BOUND_SLACK or jsd > 1.0 + _BOUND_SLACK:
        raise ArithmeticError(f"Jensen-Shannon divergence {jsd!r} escaped [0, 1]")
    jsd = min(max(jsd, 0.0), 1.0)
    return BsiReport(
        bsi=1.0 - jsd,
        jsd_bits=jsd,
        kl_p_m_bits=kl_p,
        kl_q_m_bits=kl_q,
        k=int(p.shape[0]),
    )


def reversal_bsi_closed_form(alpha: float) -> float:
    """Exact index of the two-cluster reversal ``p=(a, 1-a)``, ``q=(1-a, a)``.

    Equals the binary entropy ``-a*log2(a) - (1-a)*log2(1-a)``, with the
    ``0*log2(0) = 0`` convention at the endpoints.
    """
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {a!r}")
    out = 0.0
    if a > 0.0:
        out -= a * math.log2(a)
    if a < 1.0:
        out -= (1.0 - a) * math.log2(1.0 - a)
    return out
