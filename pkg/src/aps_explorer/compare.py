"""Pairwise algorithm comparison: five-way quadrant classification.

For two algorithms A (x axis) and B (y axis), per-axis nearest-rank
percentile thresholds split each axis into LOW / MID / HIGH bands; the
resulting 3x3 grid collapses to five classes: the four corners (both weak,
both strong, A superior, B superior) and a single moderate class covering
every MID-touching cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import TooFewDatasets, UnknownAlgorithm
from .results import MetricSpec, PerformanceMatrix


class QuadrantClass(str, Enum):
    BOTH_WEAK = "both_weak"  # red
    BOTH_STRONG = "both_strong"  # green
    A_SUPERIOR = "a_superior"  # blue
    B_SUPERIOR = "b_superior"  # yellow
    MODERATE = "moderate"  # white


@dataclass(frozen=True)
class QuadrantConfig:
    """Percentile thresholds: bottom ``low_q`` and top ``1 - high_q`` bands."""

    low_q: float = 0.25
    high_q: float = 0.75

    def __post_init__(self):
        if not (0.0 < self.low_q < self.high_q < 1.0):
            raise ValueError(f"require 0 < low_q < high_q < 1, got {self.low_q}, {self.high_q}")


@dataclass(frozen=True)
class ComparisonPoint:
    dataset_id: str
    x: float
    y: float
    quadrant_class: QuadrantClass


@dataclass(frozen=True)
class ComparisonResult:
    """Classified scatter of datasets under a two-algorithm comparison.

    ``x`` is algorithm A's score, ``y`` algorithm B's.  ``thresholds`` holds
    (low_a, high_a, low_b, high_b).  Datasets missing either algorithm's
    value are listed in ``excluded`` and never classified.
    """

    spec: MetricSpec
    algo_a: str
    algo_b: str
    points: tuple[ComparisonPoint, ...]
    thresholds: tuple[float, float, float, float]
    excluded: tuple[str, ...]


def nearest_rank(sorted_values: list[float], q: float) -> float:
    """Value at 1-based index ceil(q * n) of an ascending sort.

    The small epsilon guards against float fuzz when q * n lands exactly on
    an integer (e.g. 0.3 * 10 evaluating to 3.0000000000000004).
    """
    n = len(sorted_values)
    idx = math.ceil(q * n - 1e-9)
    idx = min(max(idx, 1), n)
    return sorted_values[idx - 1]


_LOW, _MID, _HIGH = -1, 0, 1


def _band(value: float, low: float, high: float) -> int:
    # With heavy ties low and high can coincide; LOW is checked first so the
    # labeling stays a partition.
    if value <= low:
        return _LOW
    if value >= high:
        return _HIGH
    return _MID


def classify(
    m: PerformanceMatrix,
    algo_a: str,
    algo_b: str,
    cfg: QuadrantConfig = QuadrantConfig(),
) -> ComparisonResult:
    """Classify every dataset where both algorithms have scores.

    Thresholds are nearest-rank percentiles over each algorithm's
    participating values, compared inclusively (a value equal to a threshold
    belongs to the extreme band).  Requires at least 4 participating datasets.
    """
    for algo in (algo_a, algo_b):
        if algo not in m.algorithm_ids:
            raise UnknownAlgorithm(algo)
    ja, jb = m.algorithm_index(algo_a), m.algorithm_index(algo_b)
    participating = [
        i for i in range(len(m.dataset_ids)) if m.present[i, ja] and m.present[i, jb]
    ]
    excluded = tuple(
        m.dataset_ids[i] for i in range(len(m.dataset_ids)) if i not in set(participating)
    )
    if len(participating) < 4:
        raise TooFewDatasets(len(participating), 4)

    xs = [float(m.values[i, ja]) for i in participating]
    ys = [float(m.values[i, jb]) for i in participating]
    low_a = nearest_rank(sorted(xs), cfg.low_q)
    high_a = nearest_rank(sorted(xs), cfg.high_q)
    low_b = nearest_rank(sorted(ys), cfg.low_q)
    high_b = nearest_rank(sorted(ys), cfg.high_q)

    points = []
    for i, x, y in zip(participating, xs, ys):
        bx = _band(x, low_a, high_a)
        by = _band(y, low_b, high_b)
        if bx == _LOW and by == _LOW:
            cls = QuadrantClass.BOTH_WEAK
        elif bx == _HIGH and by == _HIGH:
            cls = QuadrantClass.BOTH_STRONG
        elif bx == _HIGH and by == _LOW:
            cls = QuadrantClass.A_SUPERIOR
        elif bx == _LOW and by == _HIGH:
            cls = QuadrantClass.B_SUPERIOR
        else:
            cls = QuadrantClass.MODERATE
        points.append(ComparisonPoint(m.dataset_ids[i], x, y, cls))

    return ComparisonResult(
        spec=m.spec,
        algo_a=algo_a,
        algo_b=algo_b,
        points=tuple(points),
        thresholds=(low_a, high_a, low_b, high_b),
        excluded=excluded,
    )
