"""Shared error hierarchy.

Every failure that can cross a module boundary carries a stable,
machine-readable ``code`` so the CLI and HTTP layers report it uniformly.
"""

from __future__ import annotations


class ApsError(Exception):
    """Base class for all domain errors."""

    code: str = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class MalformedRow(ApsError):
    """A row has the wrong column count or an unparsable field."""

    code = "malformed_row"

    def __init__(self, line_no: int, reason: str = ""):
        detail = f"line {line_no}" + (f": {reason}" if reason else "")
        super().__init__(f"malformed row ({detail})")
        self.line_no = line_no


class UnknownMetric(ApsError):
    code = "unknown_metric"

    def __init__(self, name: str):
        super().__init__(f"unknown metric {name!r} (expected nDCG, Recall or HitRate)")
        self.name = name


class ValueOutOfRange(ApsError):
    """A performance value lies outside [0, 1]."""

    code = "value_out_of_range"

    def __init__(self, line_no: int, value: float | str = ""):
        super().__init__(f"value out of [0, 1] at line {line_no}: {value}")
        self.line_no = line_no


class DuplicateKey(ApsError):
    """The (dataset, algorithm, metric, k, fold) key occurs more than once."""

    code = "duplicate_key"

    def __init__(self, line_no: int | None, key: tuple | None = None):
        where = f"line {line_no}" if line_no is not None else "merge"
        super().__init__(f"duplicate record key at {where}" + (f": {key}" if key else ""))
        self.line_no = line_no
        self.key = key


class NoRecordsForSpec(ApsError):
    code = "no_records_for_spec"

    def __init__(self, metric: str, k: int):
        super().__init__(f"no records for metric={metric} k={k}")


class EmptyDataset(ApsError):
    code = "empty_dataset"

    def __init__(self, name: str):
        super().__init__(f"dataset {name!r} has no interactions")
        self.name = name


class TooFewDatasets(ApsError):
    code = "too_few_datasets"

    def __init__(self, have: int, need: int):
        super().__init__(f"need at least {need} datasets, have {have}")
        self.have = have
        self.need = need


class TooFewAlgorithms(ApsError):
    code = "too_few_algorithms"

    def __init__(self, have: int, need: int):
        super().__init__(f"need at least {need} algorithms, have {have}")
        self.have = have
        self.need = need


class DegenerateVariance(ApsError):
    code = "degenerate_variance"

    def __init__(self):
        super().__init__("performance matrix has zero total variance")


class UnknownAlgorithm(ApsError):
    code = "unknown_algorithm"

    def __init__(self, algorithm_id: str):
        super().__init__(f"unknown algorithm {algorithm_id!r}")
        self.algorithm_id = algorithm_id


class InvalidM(ApsError):
    code = "invalid_m"

    def __init__(self, m: int, n: int):
        super().__init__(f"subset size m={m} not in [1, {n}]")


class UnknownDataset(ApsError):
    code = "unknown_dataset"

    def __init__(self, dataset_id: str):
        super().__init__(f"unknown dataset {dataset_id!r}")
        self.dataset_id = dataset_id


class NameExists(ApsError):
    code = "name_exists"

    def __init__(self, name: str):
        super().__init__(f"name {name!r} already exists (pass overwrite to replace)")
        self.name = name


class UnknownSelection(ApsError):
    code = "unknown_selection"

    def __init__(self, name: str):
        super().__init__(f"unknown selection {name!r}")
        self.name = name


class UnknownResultSet(ApsError):
    code = "unknown_result_set"

    def __init__(self, name: str):
        super().__init__(f"unknown result set {name!r}")
        self.name = name


class RegistryCorrupt(ApsError):
    code = "registry_corrupt"

    def __init__(self, path: str, reason: str):
        super().__init__(f"registry at {path} is corrupt: {reason}")


class InvalidParameter(ApsError):
    """A query or CLI parameter failed validation before reaching the engine."""

    code = "invalid_parameter"
