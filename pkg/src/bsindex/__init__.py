"""Boltzmann-Shannon Index: density balance of labeled point sets.

The index compares two distributions over the clusters of a labeled
dataset: the membership histogram ``p`` and the geometric distribution
``q`` built from each cluster's spread spectrum.  ``BSI = 1 - JSD(p, q)``
with the Jensen-Shannon divergence measured in bits, so the score lives in
``[0, 1]`` and reaches 1 exactly when membership and geometry agree.
"""

from .baselines import (
    calinski_harabasz,
    cluster_size_entropy,
    davies_bouldin,
    silhouette_score,
)
from .cluster import (
    BalancedKMeans,
    ClusteringResult,
    KMeansConfig,
    best_of_restarts,
    kmeans_fit,
)
from .datasets import (
    CANONICAL_SCENARIOS,
    AllocationScenario,
    LabeledDataset,
    MixtureComponent,
    MixtureSpec,
    allocation_vector,
    build_allocation_dataset,
    canonical_mixture,
    load_iris,
    read_labeled_csv,
    rescale_cluster_to_spectrum,
    sample_mixture,
    write_labeled_csv,
)
from .errors import (
    CsvFormatError,
    DegenerateClusterWarning,
    DegenerateGeometryError,
    DegenerateRescaleError,
    EmptyClusterWarning,
    GenerationError,
)
from .geometry import (
    ClusterGeometry,
    bsi_of_labeled_data,
    cluster_geometries,
    cluster_singular_values,
    geometric_distribution,
)
from .index import (
    BsiReport,
    bsi,
    frequency_distribution,
    kl_divergence,
    reversal_bsi_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "BalancedKMeans",
    "BsiReport",
    "CANONICAL_SCENARIOS",
    "AllocationScenario",
    "ClusterGeometry",
    "ClusteringResult",
    "CsvFormatError",
    "DegenerateClusterWarning",
    "DegenerateGeometryError",
    "DegenerateRescaleError",
    "EmptyClusterWarning",
    "GenerationError",
    "KMeansConfig",
    "LabeledDataset",
    "MixtureComponent",
    "MixtureSpec",
    "allocation_vector",
    "best_of_restarts",
    "bsi",
    "bsi_of_labeled_data",
    "build_allocation_dataset",
    "calinski_harabasz",
    "canonical_mixture",
    "cluster_geometries",
    "cluster_singular_values",
    "cluster_size_entropy",
    "davies_bouldin",
    "frequency_distribution",
    "geometric_distribution",
    "kl_divergence",
    "kmeans_fit",
    "load_iris",
    "read_labeled_csv",
    "rescale_cluster_to_spectrum",
    "reversal_bsi_closed_form",
    "sample_mixture",
    "silhouette_score",
    "write_labeled_csv",
    "__version__",
]
