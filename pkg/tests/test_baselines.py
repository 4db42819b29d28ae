import math

import numpy as np
import pytest
import sklearn.metrics

from bsindex import (
    DegenerateClusterWarning,
    calinski_harabasz,
    cluster_size_entropy,
    davies_bouldin,
    silhouette_score,
)
from oracles import brute_calinski_harabasz, brute_davies_bouldin, brute_silhouette


def grid_instance(seed, n=12, k=3, d=2):
    rng = np.random.default_rng(seed)
    points = rng.normal(size=(n, d)) + rng.integers(0, k, size=n)[:, None] * 4.0
    labels = rng.integers(0, k, size=n)
    while len(np.unique(labels)) < k:
        labels = rng.integers(0, k, size=n)
    return points, labels


class TestSilhouette:
    def test_two_tight_far_pairs(self):
        points = np.array([[0.0, 0.0], [0.0, 1.0], [100.0, 0.0], [100.0, 1.0]])
        labels = np.array([0, 0, 1, 1])
        value = silhouette_score(points, labels)
        # every point: a = 1, b = (100 + hypot(100, 1)) / 2
        b = (100.0 + math.hypot(100.0, 1.0)) / 2.0
        assert value == pytest.approx(1.0 - 1.0 / b, abs=1e-12)

    def test_matches_brute_oracle(self):
        for seed in range(12):
            points, labels = grid_instance(seed)
            assert silhouette_score(points, labels) == pytest.approx(
                brute_silhouette(points, labels), abs=1e-9
            )

    def test_matches_sklearn(self, iris):
        ours = silhouette_score(iris.points, iris.labels)
        theirs = sklearn.metrics.silhouette_score(iris.points, iris.labels)
        assert ours == pytest.approx(theirs, abs=1e-10)

    def test_singleton_contributes_zero(self):
        points = np.array([[0.0, 0.0], [0.0, 1.0], [50.0, 0.0]])
        labels = np.array([0, 0, 1])
        # per-point: singleton gets 0; the pair points get (b - a) / b each
        a, b0, b1 = 1.0, 50.0, math.hypot(50.0, 1.0)
        expected = ((b0 - a) / b0 + (b1 - a) / b1 + 0.0) / 3.0
        assert silhouette_score(points, labels) == pytest.approx(expected, abs=1e-12)

    def test_needs_enough_points(self):
        with pytest.raises(ValueError):
            silhouette_score(np.zeros((2, 2)), np.array([0, 1]))


class TestCalinskiHarabasz:
    def test_matches_brute_oracle(self):
        for seed in range(12):
            points, labels = grid_instance(seed)
            assert calinski_harabasz(points, labels) == pytest.approx(
                brute_calinski_harabasz(points, labels), rel=1e-9
            )

    def test_matches_sklearn(self, iris):
        ours = calinski_harabasz(iris.points, iris.labels)
        theirs = sklearn.metrics.calinski_harabasz_score(iris.points, iris.labels)
        assert ours == pytest.approx(theirs, rel=1e-10)

    def test_grows_with_separation(self):
        rng = np.random.default_rng(5)
        base = rng.normal(size=(60, 2))
        labels = np.repeat([0, 1], 30)
        values = []
        for gap in (2.0, 8.0, 32.0):
            shifted = base + labels[:, None] * gap
            values.append(calinski_harabasz(shifted, labels))
        assert values[0] < values[1] < values[2]

    def test_random_labels_stay_small(self):
        rng = np.random.default_rng(11)
        scores = []
        for _ in range(20):
            points = rng.normal(size=(90, 2))
            labels = rng.integers(0, 3, size=90)
            if len(np.unique(labels)) < 3:
                continue
            scores.append(calinski_harabasz(points, labels))
        assert np.mean(scores) < 5.0

    def test_zero_within_dispersion_is_infinite(self):
        points = np.array([[0.0, 0.0], [0.0, 0.0], [5.0, 5.0], [5.0, 5.0]])
        labels = np.array([0, 0, 1, 1])
        with pytest.warns(DegenerateClusterWarning):
            assert calinski_harabasz(points, labels) == math.inf


class TestDaviesBouldin:
    def test_matches_brute_oracle(self):
        for seed in range(12):
            points, labels = grid_instance(seed)
            assert davies_bouldin(points, labels) == pytest.approx(
                brute_davies_bouldin(points, labels), rel=1e-9
            )

    def test_matches_sklearn(self, iris):
        ours = davies_bouldin(iris.points, iris.labels)
        theirs = sklearn.metrics.davies_bouldin_score(iris.points, iris.labels)
        assert ours == pytest.approx(theirs, rel=1e-10)

    def test_tends_to_zero_for_tight_far_clusters(self):
        rng = np.random.default_rng(7)
        points = rng.normal(scale=0.01, size=(40, 2))
        points[20:] += 1000.0
        labels = np.repeat([0, 1], 20)
        assert davies_bouldin(points, labels) < 1e-4

    def test_six_point_hand_instance(self):
        points = np.array(
            [[0.0, 0.0], [2.0, 0.0], [1.0, 1.0], [10.0, 0.0], [12.0, 0.0], [11.0, 1.0]]
        )
        labels = np.array([0, 0, 0, 1, 1, 1])
        # each cluster: centroid (c, 1/3), scatter = mean distance to centroid
        s = (2 * math.hypot(1.0, 1.0 / 3.0) + 2.0 / 3.0) / 3.0
        expected = (s + s) / 10.0
        assert davies_bouldin(points, labels) == pytest.approx(expected, rel=1e-12)

    def test_coincident_centroids_are_infinite(self):
        points = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 1.0], [1.0, -1.0]])
        labels = np.array([0, 0, 1, 1])
        with pytest.warns(DegenerateClusterWarning):
            assert davies_bouldin(points, labels) == math.inf


class TestClusterSizeEntropy:
    def test_uniform_three_way(self):
        labels = np.repeat([0, 1, 2], 10)
        assert cluster_size_entropy(labels, 3) == pytest.approx(math.log2(3.0), abs=1e-12)

    def test_single_cluster_is_zero(self):
        assert cluster_size_entropy(np.zeros(8, dtype=int), 1) == 0.0

    def test_iris_kmeans_sizes(self):
        labels = np.repeat([0, 1, 2], [50, 62, 38])
        assert cluster_size_entropy(labels, 3) == pytest.approx(1.5569905155386894, abs=1e-12)

    def test_three_quarters_split(self):
        labels = np.repeat([0, 1], [3, 1])
        assert cluster_size_entropy(labels, 2) == pytest.approx(0.8112781244591328, abs=1e-12)


class TestSharedValidation:
    def test_relabeling_invariance(self):
        points, labels = grid_instance(3)
        perm = np.array([2, 0, 1])
        relabeled = perm[labels]
        assert silhouette_score(points, relabeled) == pytest.approx(
            silhouette_score(points, labels), abs=1e-12
        )
        assert calinski_harabasz(points, relabeled) == pytest.approx(
            calinski_harabasz(points, labels), rel=1e-12
        )
        assert davies_bouldin(points, relabeled) == pytest.approx(
            davies_bouldin(points, labels), rel=1e-12
        )

    def test_single_cluster_rejected(self):
        points = np.zeros((5, 2))
        labels = np.zeros(5, dtype=int)
        for fn in (silhouette_score, calinski_harabasz, davies_bouldin):
            with pytest.raises(ValueError):
                fn(points, labels, k=1)

    def test_empty_cluster_rejected(self):
        points = np.zeros((4, 2))
        labels = np.array([0, 0, 1, 1])
        for fn in (silhouette_score, calinski_harabasz, davies_bouldin):
            with pytest.raises(ValueError):
                fn(points, labels, k=3)
