"""Independent brute-force oracles.

Everything here is computed with explicit loops and ``math`` so the values
stay independent of the vectorized implementations they check.
"""

import itertools
import math


def kl_bits(a, b):
    total = 0.0
    for x, y in zip(a, b):
        if x > 0:
            total += x * math.log2(x / y)
    return total


def jsd_bits(p, q):
    m = [(x + y) / 2.0 for x, y in zip(p, q)]
    return (kl_bits(p, m) + kl_bits(q, m)) / 2.0


def bsi_value(p, q):
    return 1.0 - jsd_bits(p, q)


def binary_entropy(alpha):
    total = 0.0
    if alpha > 0.0:
        total -= alpha * math.log2(alpha)
    if alpha < 1.0:
        total -= (1.0 - alpha) * math.log2(1.0 - alpha)
    return total


def entropy_bits(counts):
    n = float(sum(counts))
    total = 0.0
    for c in counts:
        if c > 0:
            p = c / n
            total -= p * math.log2(p)
    return total


def _dist(u, v):
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(u, v)))


def _centroid(rows):
    d = len(rows[0])
    return [sum(r[j] for r in rows) / len(rows) for j in range(d)]


def brute_silhouette(X, labels):
    X = [list(map(float, row)) for row in X]
    labels = list(map(int, labels))
    ids = sorted(set(labels))
    members = {c: [i for i, l in enumerate(labels) if l == c] for c in ids}
    scores = []
    for i, row in enumerate(X):
        own = members[labels[i]]
        if len(own) == 1:
            scores.append(0.0)
            continue
        a = sum(_dist(row, X[j]) for j in own if j != i) / (len(own) - 1)
        b = min(
            sum(_dist(row, X[j]) for j in members[c]) / len(members[c])
            for c in ids
            if c != labels[i]
        )
        top = max(a, b)
        scores.append(0.0 if top == 0.0 else (b - a) / top)
    return sum(scores) / len(scores)


def brute_calinski_harabasz(X, labels):
    X = [list(map(float, row)) for row in X]
    labels = list(map(int, labels))
    ids = sorted(set(labels))
    n, k = len(X), len(ids)
    overall = _centroid(X)
    within = 0.0
    between = 0.0
    for c in ids:
        rows = [X[i] for i in range(n) if labels[i] == c]
        cen = _centroid(rows)
        within += sum(_dist(r, cen) ** 2 for r in rows)
        between += len(rows) * _dist(cen, overall) ** 2
    if within == 0.0:
        return math.inf
    return (between / within) * (n - k) / (k - 1)


def brute_davies_bouldin(X, labels):
    X = [list(map(float, row)) for row in X]
    labels = list(map(int, labels))
    ids = sorted(set(labels))
    centroids = {}
    scatter = {}
    for c in ids:
        rows = [X[i] for i in range(len(X)) if labels[i] == c]
        centroids[c] = _centroid(rows)
        scatter[c] = sum(_dist(r, centroids[c]) for r in rows) / len(rows)
    worst = []
    for c in ids:
        ratios = []
        for other in ids:
            if other == c:
                continue
            sep = _dist(centroids[c], centroids[other])
            if sep == 0.0:
                return math.inf
            ratios.append((scatter[c] + scatter[other]) / sep)
        worst.append(max(ratios))
    return sum(worst) / len(worst)


def two_partitions(n):
    """Every split of range(n) into two nonempty parts, each exactly once."""
    for bits in itertools.product((0, 1), repeat=n - 1):
        assignment = (0,) + bits
        if any(b == 1 for b in assignment):
            yield assignment


def partition_inertia(X, assignment):
    X = [list(map(float, row)) for row in X]
    total = 0.0
    for c in set(assignment):
        rows = [X[i] for i in range(len(X)) if assignment[i] == c]
        cen = _centroid(rows)
        total += sum(_dist(r, cen) ** 2 for r in rows)
    return total


def best_two_partition_inertia(X):
    return min(partition_inertia(X, a) for a in two_partitions(len(X)))
