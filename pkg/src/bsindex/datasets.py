"""Seeded synthetic data generators, CSV helpers, and the bundled Iris table.

Every generator draws from named, independent random streams (see
:mod:`bsindex._rng`), so the same seed always reproduces the same dataset
bit for bit: component labels come from the ``LABELS`` stream, coordinates
from the ``POINTS`` stream.
"""

import csv
import io
from dataclasses import dataclass
from importlib import resources

import numpy as np

from ._rng import LABELS, POINTS, stream
from ._validation import check_distribution, check_labels, check_points
from .errors import CsvFormatError, DegenerateRescaleError, GenerationError

__all__ = [
    "LabeledDataset",
    "MixtureComponent",
    "MixtureSpec",
    "sample_mixture",
    "CANONICAL_SCENARIOS",
    "canonical_mixture",
    "allocation_vector",
    "AllocationScenario",
    "rescale_cluster_to_spectrum",
    "build_allocation_dataset",
    "load_iris",
    "write_labeled_csv",
    "read_labeled_csv",
    "format_float",
]

# all floats written to CSV carry 17 significant digits (lossless for f64)
def format_float(x: float) -> str:
    return format(float(x), ".17g")


@dataclass(frozen=True)
class LabeledDataset:
    """N points in d dimensions with one cluster id per point in [0, k)."""

    points: np.ndarray
    labels: np.ndarray
    k: int

    def __post_init__(self):
        pts = check_points(self.points)
        lab = check_labels(self.labels, self.k, n=pts.shape[0])
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", lab)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class MixtureComponent:
    weight: float
    mean: tuple
    std: float


@dataclass(frozen=True)
class MixtureSpec:
    """Isotropic Gaussian mixture: one (weight, mean, std) per component."""

    components: tuple
    n_total: int
    seed: int

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, MixtureComponent) else MixtureComponent(c[0], tuple(c[1]), c[2])
            for c in self.components
        )
        if not comps:
            raise ValueError("at least one component required")
        check_distribution([c.weight for c in comps], "component weights")
        dims = {len(c.mean) for c in comps}
        if len(dims) != 1:
            raise ValueError(f"component means disagree on dimension: {sorted(dims)}")
        if any(c.std <= 0 for c in comps):
            raise ValueError("every component std must be > 0")
        if self.n_total < 1:
            raise ValueError(f"n_total must be >= 1, got {self.n_total}")
        object.__setattr__(self, "components", comps)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def d(self) -> int:
        return len(self.components[0].mean)

    @property
    def weights(self) -> np.ndarray:
        return check_distribution([c.weight for c in self.components], "component weights")


def sample_mixture(spec: MixtureSpec) -> LabeledDataset:
    """Draw a dataset from the mixture; labels record the source component."""
    means = np.array([c.mean for c in spec.components], dtype=float)
    stds = np.array([c.std for c in spec.components], dtype=float)
    labels = stream(spec.seed, LABELS).choice(spec.k, size=spec.n_total, p=spec.weights)
    noise = stream(spec.seed, POINTS).standard_normal((spec.n_total, spec.d))
    points = means[labels] + noise * stds[labels][:, None]
    return LabeledDataset(points=points, labels=labels, k=spec.k)


CANONICAL_SCENARIOS = ("balanced", "imbalanced", "overlapping")

# Frozen demo configurations.  "balanced" and "imbalanced" share three
# well-separated unit-variance blobs and differ only in weights;
# "overlapping" stacks two diffuse components on top of a dense core, so no
# 3-cell partition can balance membership against extent.
_CANONICAL = {
    "balanced": (
        (1 / 3, (0.0, 0.0), 1.0),
        (1 / 3, (10.0, 0.0), 1.0),
        (1 / 3, (5.0, 8.66), 1.0),
    ),
    "imbalanced": (
        (0.6, (0.0, 0.0), 1.0),
        (0.3, (10.0, 0.0), 1.0),
        (0.1, (5.0, 8.66), 1.0),
    ),
    "overlapping": (
        (0.85, (0.0, 0.0), 0.6),
        (0.10, (0.0, 0.0), 4.0),
        (0.05, (2.0, 2.0), 6.0),
    ),
}


def canonical_mixture(scenario: str, n_total: int = 900, seed: int = 0) -> MixtureSpec:
    """One of the three demo mixtures: balanced, imbalanced, overlapping."""
    try:
        components = _CANONICAL[scenario]
    except KeyError:
        raise ValueError(
            f"scenario must be one of {CANONICAL_SCENARIOS}, got {scenario!r}"
        ) from None
    return MixtureSpec(components=components, n_total=n_total, seed=seed)


def allocation_vector(p_pop, beta: float) -> np.ndarray:
    """Interpolate between population shares and their reversal.

    ``r(beta) = (1 + beta)/2 * p_pop + (1 - beta)/2 * reversed(p_pop)``;
    ``beta = +1`` is exact proportionality, ``beta = -1`` exact inversion.
    """
    p = check_distribution(p_pop, "p_pop")
    if not -1.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [-1, 1], got {beta!r}")
    return (1.0 + beta) / 2.0 * p + (1.0 - beta) / 2.0 * p[::-1]


@dataclass(frozen=True)
class AllocationScenario:
    """Population shares plus a fairness setting for one generated dataset.

    Every group's point cloud is rescaled so its spread spectrum equals
    ``(r_i, ..., r_i)`` where ``r = allocation_vector(p_pop, beta)``.
    """

    p_pop: np.ndarray
    beta: float
    n_total: int
    seed: int
    d: int = 2

    def __post_init__(self):
        p = check_distribution(self.p_pop, "p_pop")
        object.__setattr__(self, "p_pop", p)
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.n_total < 1:
            raise ValueError(f"n_total must be >= 1, got {self.n_total}")
        r = allocation_vector(p, self.beta)
        if np.any(r <= 0):
            bad = np.flatnonzero(r <= 0).tolist()
            raise ValueError(f"allocation vector has non-positive entries at {bad}")

    @property
    def k(self) -> int:
        return self.p_pop.shape[0]

    @property
    def r(self) -> np.ndarray:
        return allocation_vector(self.p_pop, self.beta)


def rescale_cluster_to_spectrum(points, targets) -> np.ndarray:
    """Rebuild a cluster so its spread spectrum equals ``targets``.

    Decomposes the centered cluster matrix, replaces the spectrum, and
    reconstructs around the original mean.  ``targets`` use the same units
    as :func:`cluster_singular_values` (spread per principal direction).
    Rank-deficient clusters cannot be rescaled: a zero singular value leaves
    its principal direction undefined.
    """
    pts = check_points(points)
    m, d = pts.shape
    t = np.asarray(targets, dtype=float).ravel()
    if t.shape[0] != d:
        raise ValueError(f"need {d} target values, got {t.shape[0]}")
    if np.any(t <= 0) or not np.all(np.isfinite(t)):
        raise ValueError("targets must be positive finite reals")
    if m < max(d, 2):
        raise ValueError(f"need at least max(d, 2)={max(d, 2)} points, got {m}")
    mean = pts.mean(axis=0)
    u, s, vt = np.linalg.svd(pts - mean, full_matrices=False)
    if s[0] == 0.0 or s[-1] <= s[0] * max(m, d) * np.finfo(float).eps:
        raise DegenerateRescaleError("cluster is rank deficient; cannot prescribe a spectrum")
    raw = t * np.sqrt(m - 1)
    return (u * raw[None, :]) @ vt + mean


def build_allocation_dataset(scenario: AllocationScenario) -> LabeledDataset:
    """Standard-Gaussian groups rescaled to the scenario's allocation vector.

    Group labels are drawn i.i.d. from ``p_pop``; a draw leaving any group
    with fewer than ``d + 1`` members is redrawn (at most 100 attempts).
    """
    k, d, n = scenario.k, scenario.d, scenario.n_total
    rng_labels = stream(scenario.seed, LABELS)
    labels = None
    for _ in range(100):
        candidate = rng_labels.choice(k, size=n, p=scenario.p_pop)
        if np.bincount(candidate, minlength=k).min() >= d + 1:
            labels = candidate
            break
    if labels is None:
        raise GenerationError(
            f"could not draw labels giving every group >= {d + 1} members "
            f"within 100 attempts (n_total={n}, p_pop={scenario.p_pop.tolist()})"
        )
    points = stream(scenario.seed, POINTS).standard_normal((n, d))
    r = scenario.r
    out = np.empty_like(points)
    for i in range(k):
        mask = labels == i
        out[mask] = rescale_cluster_to_spectrum(points[mask], np.full(d, r[i]))
    return LabeledDataset(points=out, labels=labels, k=k)


def write_labeled_csv(path, dataset: LabeledDataset, label_name: str = "label") -> None:
    """Write ``x1..xd`` feature columns plus a label column, header included."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([f"x{j + 1}" for j in range(dataset.d)] + [label_name])
        for row, lab in zip(dataset.points, dataset.labels):
            writer.writerow([format_float(v) for v in row] + [int(lab)])


def read_labeled_csv(source, label_column="label"):
    """Parse a headered CSV into points, 0-based ids, and the label mapping.

    ``label_column`` is a header name or a 0-based column index.  Label
    values may be arbitrary strings; ids follow first appearance order.
    Returns ``(points, labels, mapping)`` with ``mapping`` an ordered dict
    of label value -> id.  Raises :class:`CsvFormatError` with 1-based
    line/column positions on malformed input.
    """
    if hasattr(source, "read"):
        return _parse_labeled_csv(source, label_column)
    with open(source, "r", newline="", encoding="utf-8") as fh:
        return _parse_labeled_csv(fh, label_column)


def _parse_labeled_csv(fh, label_column):
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise CsvFormatError("empty CSV: no header row") from None
    header = [h.strip() for h in header]
    if isinstance(label_column, int) or (isinstance(label_column, str) and label_column.isdigit()):
        idx = int(label_column)
        if not 0 <= idx < len(header):
            raise CsvFormatError(
                f"label column index {idx} out of range for {len(header)} columns", line=1
            )
    else:
        try:
            idx = header.index(label_column)
        except ValueError:
            raise CsvFormatError(
                f"label column {label_column!r} not in header {header}", line=1
            ) from None
    feature_cols = [j for j in range(len(header)) if j != idx]
    if not feature_cols:
        raise CsvFormatError("no feature columns besides the label column", line=1)

    rows, raw_labels = [], []
    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise CsvFormatError(
                f"expected {len(header)} fields, found {len(row)}", line=line_no
            )
        values = []
        for j in feature_cols:
            try:
                values.append(float(row[j]))
            except ValueError:
                raise CsvFormatError(
                    f"non-numeric feature value {row[j]!r}", line=line_no, column=j + 1
                ) from None
        rows.append(values)
        raw_labels.append(row[idx].strip())
    if not rows:
        raise CsvFormatError("CSV has a header but no data rows")

    mapping = {}
    ids = []
    for value in raw_labels:
        if value not in mapping:
            mapping[value] = len(mapping)
        ids.append(mapping[value])
    points = np.asarray(rows, dtype=float)
    if not np.all(np.isfinite(points)):
        bad = np.argwhere(~np.isfinite(points))[0]
        raise CsvFormatError(
            "non-finite feature value",
            line=int(bad[0]) + 2,
            column=feature_cols[int(bad[1])] + 1,
        )
    return points, np.asarray(ids, dtype=np.int64), mapping


def load_iris():
    """The bundled 150-flower measurement table.

    Returns ``(dataset, species)``: a :class:`LabeledDataset` with ids in
    first-appearance order, and the species name per id.
    """
    text = resources.files(__package__).joinpath("data/iris.csv").read_text(encoding="utf-8")
    points, labels, mapping = read_labeled_csv(io.StringIO(text), label_column="species")
    dataset = LabeledDataset(points=points, labels=labels, k=len(mapping))
    return dataset, list(mapping)
