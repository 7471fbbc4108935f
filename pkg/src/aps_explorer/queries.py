"""Query facade: registry + query parameters -> analytics results.

The CLI and the HTTP service both answer queries through these functions,
which keeps their behavior (and serialized output) identical.
"""

from __future__ import annotations

from .compare import ComparisonResult, QuadrantConfig, classify
from .errors import InvalidParameter, UnknownMetric
from .registry import Registry, matrix_for
from .results import Metric, MetricSpec, PerformanceMatrix, subset_algorithms
from .space import (
    DifficultyAssignment,
    DistanceMatrix,
    DistanceSpace,
    MissingPolicy,
    Projection,
    difficulty,
    distances,
    pca_project,
    select_diverse,
)


def resolve_spec(metric_name: str, k: int) -> MetricSpec:
    try:
        metric = Metric(metric_name)
    except ValueError:
        raise UnknownMetric(metric_name) from None
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}")
    return MetricSpec(metric, k)


def resolve_space(name: str) -> DistanceSpace:
    try:
        return DistanceSpace(name)
    except ValueError:
        raise InvalidParameter(f"space must be 'full' or 'pca', got {name!r}") from None


def query_matrix(
    reg: Registry, spec: MetricSpec, algorithms: list[str] | None = None
) -> PerformanceMatrix:
    """Matrix over all ingested results, optionally cut to an algorithm subset.

    Changing the algorithm set changes the axes of the space, so projections
    over a subset are recomputed from the reduced matrix.  Unknown ids in
    the filter are ignored.
    """
    m = matrix_for(reg, spec)
    if algorithms is not None:
        m = subset_algorithms(m, algorithms)
    return m


def query_projection(
    reg: Registry,
    spec: MetricSpec,
    algorithms: list[str] | None = None,
    missing_policy: MissingPolicy = MissingPolicy.DROP_DATASET,
) -> tuple[Projection, list[DifficultyAssignment]]:
    """Projection plus difficulty; difficulty is empty below five datasets."""
    p = pca_project(query_matrix(reg, spec, algorithms), missing_policy)
    assignments = difficulty(p) if len(p.dataset_ids) >= 5 else []
    return p, assignments


def query_distances(
    reg: Registry,
    spec: MetricSpec,
    space: DistanceSpace = DistanceSpace.FULL_APS,
    algorithms: list[str] | None = None,
) -> DistanceMatrix:
    return distances(query_matrix(reg, spec, algorithms), space)


def query_select(
    reg: Registry,
    spec: MetricSpec,
    m: int,
    space: DistanceSpace = DistanceSpace.FULL_APS,
    algorithms: list[str] | None = None,
) -> list[str]:
    return select_diverse(query_distances(reg, spec, space, algorithms), m)


def query_compare(
    reg: Registry,
    spec: MetricSpec,
    algo_a: str,
    algo_b: str,
    cfg: QuadrantConfig = QuadrantConfig(),
) -> ComparisonResult:
    return classify(matrix_for(reg, spec), algo_a, algo_b, cfg)
