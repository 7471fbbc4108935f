"""Analytics engine for exploring algorithm performance spaces.

Datasets become points in a space whose axes are per-algorithm benchmark
scores; this package ingests those scores plus raw interaction data, and
offers the derived geometry (2D projection, difficulty levels, pairwise
distances, diverse subsets, quadrant comparisons) through a Python API,
a CLI (``aps``) and an HTTP/JSON service.
"""

from .compare import ComparisonResult, QuadrantClass, QuadrantConfig, classify
from .errors import ApsError
from .interactions import (
    DatasetMeta,
    Feedback,
    Interaction,
    InteractionDataset,
    PruneConfig,
    compute_meta,
    gini,
    k_core_prune,
    parse_interactions,
    to_implicit,
)
from .registry import (
    Registry,
    Selection,
    add_result_set,
    delete_selection,
    empty_registry,
    export_metadata_csv,
    ingest_interactions,
    load_registry,
    matrix_for,
    save_registry,
    save_selection,
)
from .results import (
    Metric,
    MetricSpec,
    PerformanceMatrix,
    PerformanceRecord,
    ResultSet,
    build_matrix,
    merge_result_sets,
    parse_results,
    serialize_results,
    subset_algorithms,
)
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

__version__ = "0.1.0"

__all__ = [
    "ApsError",
    "ComparisonResult",
    "DatasetMeta",
    "DifficultyAssignment",
    "DistanceMatrix",
    "DistanceSpace",
    "Feedback",
    "Interaction",
    "InteractionDataset",
    "Metric",
    "MetricSpec",
    "MissingPolicy",
    "PerformanceMatrix",
    "PerformanceRecord",
    "Projection",
    "PruneConfig",
    "QuadrantClass",
    "QuadrantConfig",
    "Registry",
    "ResultSet",
    "Selection",
    "add_result_set",
    "build_matrix",
    "classify",
    "compute_meta",
    "delete_selection",
    "difficulty",
    "distances",
    "empty_registry",
    "export_metadata_csv",
    "gini",
    "ingest_interactions",
    "k_core_prune",
    "load_registry",
    "matrix_for",
    "merge_result_sets",
    "parse_interactions",
    "parse_results",
    "pca_project",
    "save_registry",
    "save_selection",
    "select_diverse",
    "serialize_results",
    "subset_algorithms",
    "to_implicit",
    "__version__",
]
