"""Evaluation-result data model: records, result sets and performance matrices.

The results CSV format is the carrier for externally computed benchmark
scores.  Header (exact): ``dataset,algorithm,metric,k,fold,value``; metric
names are case-sensitive ``nDCG`` / ``Recall`` / ``HitRate``; ids are
restricted to ``[A-Za-z0-9_.-]+`` so no quoting is ever needed.

All types are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import (
    DuplicateKey,
    MalformedRow,
    NoRecordsForSpec,
    UnknownMetric,
    ValueOutOfRange,
)

RESULTS_HEADER = ("dataset", "algorithm", "metric", "k", "fold", "value")

_ID_RE = re.compile(r"[A-Za-z0-9_.-]+\Z")


class Metric(str, Enum):
    """Top-K ranking metrics accepted by the platform (all valued in [0, 1])."""

    NDCG = "nDCG"
    RECALL = "Recall"
    HIT_RATE = "HitRate"


@dataclass(frozen=True)
class MetricSpec:
    """A (metric, K) pair identifying one slice of the evaluation results."""

    metric: Metric
    k: int

    def __post_init__(self):
        if not isinstance(self.metric, Metric):
            raise UnknownMetric(str(self.metric))
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    @property
    def label(self) -> str:
        return f"{self.metric.value}@{self.k}"


@dataclass(frozen=True)
class PerformanceRecord:
    """One evaluation observation: a fold-level score for (dataset, algorithm)."""

    dataset_id: str
    algorithm_id: str
    spec: MetricSpec
    fold: int
    value: float

    def __post_init__(self):
        if not isinstance(self.fold, int) or self.fold < 1:
            raise ValueError(f"fold must be a positive integer, got {self.fold!r}")
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"value must lie in [0, 1], got {self.value!r}")

    @property
    def key(self) -> tuple[str, str, str, int, int]:
        return (self.dataset_id, self.algorithm_id, self.spec.metric.value, self.spec.k, self.fold)


@dataclass(frozen=True)
class ResultSet:
    """A deduplicated collection of performance records."""

    records: tuple[PerformanceRecord, ...]

    @cached_property
    def dataset_ids(self) -> frozenset[str]:
        return frozenset(r.dataset_id for r in self.records)

    @cached_property
    def algorithm_ids(self) -> frozenset[str]:
        return frozenset(r.algorithm_id for r in self.records)

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class PerformanceMatrix:
    """Datasets x algorithms grid of fold-averaged scores for one (metric, K).

    ``values[d][a]`` is the arithmetic mean over the folds present for that
    cell; ``present[d][a]`` is False where no record exists (such cells hold
    0.0 but must never be interpreted as scores).  Row and column labels are
    lexicographically sorted, so the layout is deterministic.
    """

    spec: MetricSpec
    dataset_ids: tuple[str, ...]
    algorithm_ids: tuple[str, ...]
    values: np.ndarray
    present: np.ndarray

    def __post_init__(self):
        d, a = len(self.dataset_ids), len(self.algorithm_ids)
        if len(set(self.dataset_ids)) != d:
            raise ValueError("duplicate dataset ids")
        if len(set(self.algorithm_ids)) != a:
            raise ValueError("duplicate algorithm ids")
        values = np.asarray(self.values, dtype=float)
        present = np.asarray(self.present, dtype=bool)
        if values.shape != (d, a) or present.shape != (d, a):
            raise ValueError(f"grid shapes must be ({d}, {a})")
        values = values.copy()
        present = present.copy()
        values.setflags(write=False)
        present.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "present", present)

    @cached_property
    def _dataset_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.dataset_ids)}

    @cached_property
    def _algorithm_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.algorithm_ids)}

    def dataset_index(self, dataset_id: str) -> int:
        return self._dataset_index[dataset_id]

    def algorithm_index(self, algorithm_id: str) -> int:
        return self._algorithm_index[algorithm_id]


def parse_results(text: str | io.TextIOBase, fmt: str = "csv") -> ResultSet:
    """Parse a results CSV stream into a :class:`ResultSet`.

    Line numbers in errors are 1-based file lines (the header is line 1).
    Duplicate (dataset, algorithm, metric, k, fold) keys are an error.
    """
    if fmt != "csv":
        raise ValueError(f"unsupported format {fmt!r}")
    if isinstance(text, str):
        text = io.StringIO(text)
    reader = csv.reader(text)
    records: list[PerformanceRecord] = []
    seen: set[tuple] = set()
    header: tuple[str, ...] | None = None
    for line_no, row in enumerate(reader, start=1):
        if header is None:
            if tuple(row) != RESULTS_HEADER:
                raise MalformedRow(line_no, f"expected header {','.join(RESULTS_HEADER)}")
            header = tuple(row)
            continue
        if len(row) != 6:
            raise MalformedRow(line_no, f"expected 6 columns, got {len(row)}")
        dataset_id, algorithm_id, metric_name, k_str, fold_str, value_str = row
        for ident in (dataset_id, algorithm_id):
            if not _ID_RE.match(ident):
                raise MalformedRow(line_no, f"invalid id {ident!r}")
        try:
            metric = Metric(metric_name)
        except ValueError:
            raise UnknownMetric(metric_name) from None
        try:
            k = int(k_str)
            fold = int(fold_str)
        except ValueError:
            raise MalformedRow(line_no, "k and fold must be integers") from None
        if k < 1 or fold < 1:
            raise MalformedRow(line_no, "k and fold must be >= 1")
        try:
            value = float(value_str)
        except ValueError:
            raise MalformedRow(line_no, f"unparsable value {value_str!r}") from None
        if not 0.0 <= value <= 1.0:  # also rejects NaN
            raise ValueOutOfRange(line_no, value_str)
        key = (dataset_id, algorithm_id, metric.value, k, fold)
        if key in seen:
            raise DuplicateKey(line_no, key)
        seen.add(key)
        records.append(
            PerformanceRecord(dataset_id, algorithm_id, MetricSpec(metric, k), fold, value)
        )
    if header is None:
        raise MalformedRow(1, "empty input (missing header)")
    return ResultSet(tuple(records))


def serialize_results(rs: ResultSet) -> str:
    """Serialize a result set back to the CSV wire format (rows sorted by key)."""
    out = io.StringIO()
    out.write(",".join(RESULTS_HEADER) + "\n")
    for rec in sorted(rs.records, key=lambda r: r.key):
        out.write(
            f"{rec.dataset_id},{rec.algorithm_id},{rec.spec.metric.value},"
            f"{rec.spec.k},{rec.fold},{rec.value!r}\n"
        )
    return out.getvalue()


def merge_result_sets(sets: Iterable[ResultSet]) -> ResultSet:
    """Union several result sets; colliding record keys are an error."""
    records: list[PerformanceRecord] = []
    seen: set[tuple] = set()
    for rs in sets:
        for rec in rs.records:
            if rec.key in seen:
                raise DuplicateKey(None, rec.key)
            seen.add(rec.key)
            records.append(rec)
    return ResultSet(tuple(records))


def build_matrix(rs: ResultSet, spec: MetricSpec) -> PerformanceMatrix:
    """Aggregate fold-level records into the datasets x algorithms grid.

    Cell values are unweighted arithmetic means over the folds present.
    Raises :class:`NoRecordsForSpec` when no record matches ``spec``.
    """
    matching = [r for r in rs.records if r.spec == spec]
    if not matching:
        raise NoRecordsForSpec(spec.metric.value, spec.k)
    matching.sort(key=lambda r: r.key)  # canonical order: bit-identical means under shuffling
    dataset_ids = tuple(sorted({r.dataset_id for r in matching}))
    algorithm_ids = tuple(sorted({r.algorithm_id for r in matching}))
    d_index = {name: i for i, name in enumerate(dataset_ids)}
    a_index = {name: i for i, name in enumerate(algorithm_ids)}
    sums = np.zeros((len(dataset_ids), len(algorithm_ids)))
    counts = np.zeros((len(dataset_ids), len(algorithm_ids)), dtype=int)
    for rec in matching:
        i, j = d_index[rec.dataset_id], a_index[rec.algorithm_id]
        sums[i, j] += rec.value
        counts[i, j] += 1
    present = counts > 0
    values = np.divide(sums, counts, out=np.zeros_like(sums), where=present)
    return PerformanceMatrix(spec, dataset_ids, algorithm_ids, values, present)


def subset_algorithms(m: PerformanceMatrix, algorithm_ids: Iterable[str]) -> PerformanceMatrix:
    """Restrict a matrix to the given algorithm columns (unknown ids ignored).

    Order of the surviving columns is preserved (stays lexicographic).
    """
    keep = set(algorithm_ids)
    cols = [j for j, a in enumerate(m.algorithm_ids) if a in keep]
    return PerformanceMatrix(
        m.spec,
        m.dataset_ids,
        tuple(m.algorithm_ids[j] for j in cols),
        m.values[:, cols],
        m.present[:, cols],
    )


def available_specs(rs: ResultSet) -> tuple[MetricSpec, ...]:
    """Distinct (metric, k) pairs present in a result set, sorted."""
    uniq = {r.spec for r in rs.records}
    return tuple(sorted(uniq, key=lambda s: (s.metric.value, s.k)))
