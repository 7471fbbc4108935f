"""Performance-space geometry: 2D projection, difficulty, distances, selection.

Each algorithm is one axis of the performance space; datasets are points
positioned by their per-algorithm scores.  This module reduces that space
to two principal components, scores dataset difficulty on the reduced
coordinates, measures pairwise dataset diversity as Euclidean distance
(in the full space or the 2D projection), and picks maximally diverse
subsets by greedy farthest-point sampling.

Projection conventions
----------------------
Columns (algorithms) are mean-centered but NOT variance-scaled: all three
metrics already live on the common [0, 1] scale, and standardizing would
inflate noisy, near-constant algorithms.  Within each principal axis the
entry of largest magnitude is made positive (ties break to the lowest
algorithm index), which pins the sign of every component deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateVariance,
    InvalidM,
    TooFewAlgorithms,
    TooFewDatasets,
)
from .results import MetricSpec, PerformanceMatrix


class MissingPolicy(str, Enum):
    """How to complete a matrix with missing cells before projecting.

    DROP_DATASET keeps the algorithm axes intact and discards incomplete
    rows (the default: axes define the space, datasets are points in it).
    """

    DROP_DATASET = "drop_dataset"
    DROP_ALGORITHM = "drop_algorithm"
    FILL_ZERO = "fill_zero"


@dataclass(frozen=True)
class Projection:
    """2D principal-component coordinates of datasets plus the axes used.

    ``coords`` columns are C1 and C2; ``loadings`` rows are the unit-norm
    principal axes expressed over the algorithm dimensions.
    ``mean_performance`` keeps each dataset's mean raw score across the
    projected algorithm columns so difficulty orientation stays computable
    from the projection alone.
    """

    spec: MetricSpec
    dataset_ids: tuple[str, ...]
    algorithm_ids: tuple[str, ...]
    coords: np.ndarray
    loadings: np.ndarray
    explained_variance_ratio: np.ndarray
    column_means: np.ndarray
    mean_performance: np.ndarray

    def __post_init__(self):
        d, a = len(self.dataset_ids), len(self.algorithm_ids)
        coords = np.asarray(self.coords, dtype=float).copy()
        loadings = np.asarray(self.loadings, dtype=float).copy()
        evr = np.asarray(self.explained_variance_ratio, dtype=float).copy()
        means = np.asarray(self.column_means, dtype=float).copy()
        mean_perf = np.asarray(self.mean_performance, dtype=float).copy()
        if coords.shape != (d, 2):
            raise ValueError(f"coords must be ({d}, 2)")
        if loadings.shape != (2, a):
            raise ValueError(f"loadings must be (2, {a})")
        if evr.shape != (2,) or means.shape != (a,) or mean_perf.shape != (d,):
            raise ValueError("explained_variance_ratio / column_means / mean_performance shape mismatch")
        norms = np.linalg.norm(loadings, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-9):
            raise ValueError("loading rows must have unit norm")
        if abs(float(loadings[0] @ loadings[1])) > 1e-9:
            raise ValueError("loading rows must be orthogonal")
        if not (evr[0] >= evr[1] >= 0.0 and evr.sum() <= 1.0 + 1e-9):
            raise ValueError("explained variance ratios must be sorted, non-negative, sum <= 1")
        for row in loadings:
            if row[int(np.argmax(np.abs(row)))] <= 0.0:
                raise ValueError("sign convention violated: largest-magnitude loading must be positive")
        for arr in (coords, loadings, evr, means, mean_perf):
            arr.setflags(write=False)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "loadings", loadings)
        object.__setattr__(self, "explained_variance_ratio", evr)
        object.__setattr__(self, "column_means", means)
        object.__setattr__(self, "mean_performance", mean_perf)


@dataclass(frozen=True)
class DifficultyAssignment:
    """A dataset's difficulty score in [0, 1] and its level in {1..5}."""

    dataset_id: str
    score: float
    level: int

    def __post_init__(self):
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score must lie in [0, 1], got {self.score!r}")
        if self.level not in (1, 2, 3, 4, 5):
            raise ValueError(f"level must be in 1..5, got {self.level!r}")


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise Euclidean distances between datasets."""

    dataset_ids: tuple[str, ...]
    dist: np.ndarray

    def __post_init__(self):
        d = len(self.dataset_ids)
        dist = np.asarray(self.dist, dtype=float)
        if dist.shape != (d, d):
            raise ValueError(f"dist must be ({d}, {d})")
        if np.max(np.abs(dist - dist.T), initial=0.0) > 1e-9:
            raise ValueError("dist must be symmetric")
        if d and (np.max(np.abs(np.diag(dist))) > 1e-12 or dist.min() < -1e-12):
            raise ValueError("dist must be non-negative with zero diagonal")
        dist = (dist + dist.T) / 2.0
        np.fill_diagonal(dist, 0.0)
        dist.setflags(write=False)
        object.__setattr__(self, "dist", dist)


def complete_matrix(
    m: PerformanceMatrix,
    policy: MissingPolicy = MissingPolicy.DROP_DATASET,
    min_datasets: int = 1,
    min_algorithms: int = 1,
) -> tuple[tuple[str, ...], tuple[str, ...], np.ndarray]:
    """Apply a missing-cell policy and return (dataset_ids, algorithm_ids, values)."""
    values = np.where(m.present, m.values, 0.0)
    dataset_ids = m.dataset_ids
    algorithm_ids = m.algorithm_ids
    if policy is MissingPolicy.DROP_DATASET:
        rows = np.flatnonzero(m.present.all(axis=1))
        dataset_ids = tuple(m.dataset_ids[i] for i in rows)
        values = values[rows]
    elif policy is MissingPolicy.DROP_ALGORITHM:
        cols = np.flatnonzero(m.present.all(axis=0))
        algorithm_ids = tuple(m.algorithm_ids[j] for j in cols)
        values = values[:, cols]
    if len(dataset_ids) < min_datasets:
        raise TooFewDatasets(len(dataset_ids), min_datasets)
    if len(algorithm_ids) < min_algorithms:
        raise TooFewAlgorithms(len(algorithm_ids), min_algorithms)
    return dataset_ids, algorithm_ids, values


def _apply_sign_convention(axes: np.ndarray, coords: np.ndarray) -> None:
    """Flip each axis (and its coordinates) so the dominant loading is positive."""
    for r in range(axes.shape[0]):
        j = int(np.argmax(np.abs(axes[r])))  # argmax takes the lowest index on ties
        if axes[r, j] < 0.0:
            axes[r] = -axes[r]
            coords[:, r] = -coords[:, r]


def pca_project(
    m: PerformanceMatrix,
    missing_policy: MissingPolicy = MissingPolicy.DROP_DATASET,
) -> Projection:
    """Project datasets onto the top-2 principal axes of the algorithm space.

    Uses the singular value decomposition of the centered matrix; sample
    covariance uses the 1/(D-1) normalization.  Deterministic for a given
    input, including component signs.
    """
    dataset_ids, algorithm_ids, values = complete_matrix(
        m, missing_policy, min_datasets=3, min_algorithms=2
    )
    d = len(dataset_ids)
    column_means = values.mean(axis=0)
    centered = values - column_means
    total_variance = float((centered**2).sum()) / (d - 1)
    if total_variance <= 0.0:
        raise DegenerateVariance()
    _, singular, vt = np.linalg.svd(centered, full_matrices=False)
    axes = vt[:2].copy()
    coords = centered @ axes.T
    _apply_sign_convention(axes, coords)
    component_variance = (singular[:2] ** 2) / (d - 1)
    evr = component_variance / total_variance
    return Projection(
        spec=m.spec,
        dataset_ids=dataset_ids,
        algorithm_ids=algorithm_ids,
        coords=coords,
        loadings=axes,
        explained_variance_ratio=evr,
        column_means=column_means,
        mean_performance=values.mean(axis=1),
    )


def _minmax_normalize(column: np.ndarray) -> np.ndarray:
    lo, hi = float(column.min()), float(column.max())
    if hi == lo:
        return np.full_like(column, 0.5)
    return (column - lo) / (hi - lo)


def difficulty(p: Projection) -> list[DifficultyAssignment]:
    """Difficulty score and level (1 = easiest .. 5 = hardest) per dataset.

    Each coordinate column is first oriented so it correlates non-positively
    with the dataset's mean raw performance (higher coordinate = harder),
    then min-max normalized to [0, 1] (all-0.5 when the column is constant).
    The score is the mean of the two normalized coordinates.  Levels cut the
    (score, dataset_id)-sorted order into five contiguous groups whose sizes
    differ by at most one, extra datasets going to the lowest levels first.
    """
    d = len(p.dataset_ids)
    if d < 5:
        raise TooFewDatasets(d, 5)
    oriented = np.array(p.coords, dtype=float)
    perf = p.mean_performance - p.mean_performance.mean()
    for col in range(2):
        centered = oriented[:, col] - oriented[:, col].mean()
        if float(centered @ perf) > 0.0:
            oriented[:, col] = -oriented[:, col]
    norm = np.column_stack([_minmax_normalize(oriented[:, 0]), _minmax_normalize(oriented[:, 1])])
    scores = norm.mean(axis=1)

    order = sorted(range(d), key=lambda i: (scores[i], p.dataset_ids[i]))
    base, extra = divmod(d, 5)
    levels = np.empty(d, dtype=int)
    pos = 0
    for level in range(1, 6):
        size = base + (1 if level <= extra else 0)
        for i in order[pos : pos + size]:
            levels[i] = level
        pos += size
    return [
        DifficultyAssignment(p.dataset_ids[i], float(scores[i]), int(levels[i]))
        for i in range(d)
    ]


class DistanceSpace(str, Enum):
    FULL_APS = "full"
    PCA_2D = "pca"


def distances(
    m: PerformanceMatrix,
    space: DistanceSpace = DistanceSpace.FULL_APS,
    missing_policy: MissingPolicy = MissingPolicy.DROP_DATASET,
) -> DistanceMatrix:
    """Pairwise Euclidean distances, in the full space or the 2D projection."""
    if space is DistanceSpace.PCA_2D:
        p = pca_project(m, missing_policy)
        ids, points = p.dataset_ids, p.coords
    else:
        ids, _, points = complete_matrix(m, missing_policy)
    diff = points[:, None, :] - points[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=2))
    dist = (dist + dist.T) / 2.0
    np.fill_diagonal(dist, 0.0)
    return DistanceMatrix(ids, dist)


def select_diverse(dm: DistanceMatrix, m: int) -> list[str]:
    """Greedy farthest-point sampling of ``m`` mutually distant datasets.

    Starts from the globally farthest pair (ties: lexicographically smallest
    id pair), then repeatedly adds the dataset maximizing its minimum
    distance to the chosen set (ties: lowest id).  ``m = 1`` returns the
    medoid-like center minimizing the maximum distance to all others.
    Returned in selection order.
    """
    n = len(dm.dataset_ids)
    if not 1 <= m <= n:
        raise InvalidM(m, n)
    index = {name: i for i, name in enumerate(dm.dataset_ids)}
    ids_sorted = sorted(dm.dataset_ids)

    if m == 1:
        best_id, best_val = None, None
        for a in ids_sorted:
            i = index[a]
            val = max((dm.dist[i, j] for j in range(n) if j != i), default=0.0)
            if best_val is None or val < best_val:
                best_id, best_val = a, val
        return [best_id]

    best_pair, best_d = None, -1.0
    for ai in range(len(ids_sorted)):
        for bi in range(ai + 1, len(ids_sorted)):
            d = dm.dist[index[ids_sorted[ai]], index[ids_sorted[bi]]]
            if d > best_d:
                best_pair, best_d = (ids_sorted[ai], ids_sorted[bi]), d
    selected = list(best_pair)
    chosen = {index[s] for s in selected}

    while len(selected) < m:
        best_id, best_val = None, -1.0
        for a in ids_sorted:
            i = index[a]
            if i in chosen:
                continue
            val = min(dm.dist[i, j] for j in chosen)
            if val > best_val:
                best_id, best_val = a, val
        selected.append(best_id)
        chosen.add(index[best_id])
    return selected
