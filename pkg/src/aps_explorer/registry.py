"""Registry: result sets, dataset metadata and saved selections, on disk.

On-disk layout under the registry directory:

    metas.json          dataset_id -> DatasetMeta fields
    selections.json     name -> Selection fields
    results/<name>.csv  ingested result CSVs, verbatim

A registry value is an immutable snapshot; every mutation returns a new
snapshot, which is what makes the service's reader/writer model trivial.
File writes are write-temp-then-rename, so readers never see partial files.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

from .errors import (
    NameExists,
    RegistryCorrupt,
    UnknownDataset,
    UnknownResultSet,
    UnknownSelection,
)
from .interactions import (
    DatasetMeta,
    Feedback,
    PruneConfig,
    compute_meta,
    k_core_prune,
    parse_interactions,
    to_implicit,
)
from .results import (
    MetricSpec,
    PerformanceMatrix,
    ResultSet,
    build_matrix,
    merge_result_sets,
    parse_results,
)

METADATA_CSV_HEADER = (
    "dataset,n_users,n_items,n_interactions,sparsity,gini_user,gini_item,"
    "user_coldstart_risk,item_coldstart_risk,feedback"
)


def utc_now_rfc3339() -> str:
    """Current UTC time, second precision, RFC 3339 ``Z`` form."""
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat().replace("+00:00", "Z")


@dataclass(frozen=True)
class Selection:
    """A named, ordered set of dataset ids saved by a researcher."""

    name: str
    dataset_ids: tuple[str, ...]
    created_at: str
    note: str | None = None

    def __post_init__(self):
        if not self.name:
            raise ValueError("selection name must be non-empty")
        if not self.dataset_ids:
            raise ValueError("selection must contain at least one dataset")
        if len(set(self.dataset_ids)) != len(self.dataset_ids):
            # ordered set semantics: first occurrence wins
            deduped = tuple(dict.fromkeys(self.dataset_ids))
            object.__setattr__(self, "dataset_ids", deduped)


@dataclass(frozen=True)
class Registry:
    """Immutable snapshot of everything the platform has ingested."""

    result_sets: Mapping[str, ResultSet]
    result_csvs: Mapping[str, str]
    metas: Mapping[str, DatasetMeta]
    selections: Mapping[str, Selection]

    @cached_property
    def merged_results(self) -> ResultSet:
        """Union of all result sets (record keys are disjoint by construction)."""
        return merge_result_sets(self.result_sets[name] for name in sorted(self.result_sets))


def empty_registry() -> Registry:
    return Registry(result_sets={}, result_csvs={}, metas={}, selections={})


def add_result_set(reg: Registry, name: str, csv_text: str, overwrite: bool = False) -> Registry:
    """Parse and add a results CSV under ``name``; keeps the text verbatim.

    Record keys must not collide with any other result set already in the
    registry, so the merged view stays well-defined.
    """
    if name in reg.result_sets and not overwrite:
        raise NameExists(name)
    rs = parse_results(csv_text)
    others = {k: v for k, v in reg.result_sets.items() if k != name}
    merge_result_sets(list(others.values()) + [rs])  # raises DuplicateKey on collision
    return Registry(
        result_sets={**others, name: rs},
        result_csvs={**{k: v for k, v in reg.result_csvs.items() if k != name}, name: csv_text},
        metas=reg.metas,
        selections=reg.selections,
    )


def remove_result_set(reg: Registry, name: str) -> Registry:
    if name not in reg.result_sets:
        raise UnknownResultSet(name)
    return Registry(
        result_sets={k: v for k, v in reg.result_sets.items() if k != name},
        result_csvs={k: v for k, v in reg.result_csvs.items() if k != name},
        metas=reg.metas,
        selections=reg.selections,
    )


def ingest_interactions(
    reg: Registry,
    name: str,
    text: str,
    prune: PruneConfig = PruneConfig(),
    coldstart_threshold: int = 10,
) -> tuple[Registry, DatasetMeta]:
    """Parse an interactions file, normalize, prune, and register its metadata.

    The stored statistics are post-pruning; the ``feedback`` field records
    the source dataset's feedback type (explicit datasets remain labeled
    Explicit even though stats are computed on the implicit form).
    """
    ds = parse_interactions(text, name)
    implicit = to_implicit(ds)
    pruned = k_core_prune(implicit, prune)
    meta = compute_meta(pruned, coldstart_threshold=coldstart_threshold)
    meta = replace(meta, feedback=ds.feedback)
    return (
        Registry(
            result_sets=reg.result_sets,
            result_csvs=reg.result_csvs,
            metas={**reg.metas, name: meta},
            selections=reg.selections,
        ),
        meta,
    )


def save_selection(reg: Registry, sel: Selection, overwrite: bool = False) -> Registry:
    """Add a selection; members must reference datasets known to the registry."""
    for dataset_id in sel.dataset_ids:
        if dataset_id not in reg.metas:
            raise UnknownDataset(dataset_id)
    if sel.name in reg.selections and not overwrite:
        raise NameExists(sel.name)
    return Registry(
        result_sets=reg.result_sets,
        result_csvs=reg.result_csvs,
        metas=reg.metas,
        selections={**reg.selections, sel.name: sel},
    )


def delete_selection(reg: Registry, name: str) -> Registry:
    if name not in reg.selections:
        raise UnknownSelection(name)
    return Registry(
        result_sets=reg.result_sets,
        result_csvs=reg.result_csvs,
        metas=reg.metas,
        selections={k: v for k, v in reg.selections.items() if k != name},
    )


def matrix_for(reg: Registry, spec: MetricSpec) -> PerformanceMatrix:
    """Performance matrix over the union of all ingested result sets."""
    return build_matrix(reg.merged_results, spec)


def export_metadata_csv(reg: Registry, dataset_ids: Iterable[str] | None = None) -> str:
    """Dataset metadata as CSV: lexicographic rows, reals with 6 decimals.

    ``dataset_ids`` filters the export; unknown ids are ignored and an empty
    filter means all datasets.
    """
    names = sorted(reg.metas)
    if dataset_ids is not None:
        wanted = set(dataset_ids)
        if wanted:
            names = [n for n in names if n in wanted]
    lines = [METADATA_CSV_HEADER]
    for name in names:
        meta = reg.metas[name]
        lines.append(
            f"{meta.name},{meta.n_users},{meta.n_items},{meta.n_interactions},"
            f"{meta.sparsity:.6f},{meta.gini_user:.6f},{meta.gini_item:.6f},"
            f"{meta.user_coldstart_risk:.6f},{meta.item_coldstart_risk:.6f},"
            f"{meta.feedback.value}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Persistence


def _atomic_write(path: Path, content: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(content, encoding="utf-8")
    os.replace(tmp, path)


def _meta_to_dict(meta: DatasetMeta) -> dict:
    return {
        "name": meta.name,
        "n_users": meta.n_users,
        "n_items": meta.n_items,
        "n_interactions": meta.n_interactions,
        "sparsity": meta.sparsity,
        "gini_user": meta.gini_user,
        "gini_item": meta.gini_item,
        "user_coldstart_risk": meta.user_coldstart_risk,
        "item_coldstart_risk": meta.item_coldstart_risk,
        "feedback": meta.feedback.value,
    }


def _meta_from_dict(d: dict) -> DatasetMeta:
    return DatasetMeta(
        name=d["name"],
        n_users=d["n_users"],
        n_items=d["n_items"],
        n_interactions=d["n_interactions"],
        sparsity=d["sparsity"],
        gini_user=d["gini_user"],
        gini_item=d["gini_item"],
        user_coldstart_risk=d["user_coldstart_risk"],
        item_coldstart_risk=d["item_coldstart_risk"],
        feedback=Feedback(d["feedback"]),
    )


def save_registry(reg: Registry, path: str | Path) -> None:
    """Persist a snapshot; each file is written via temp-then-rename."""
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)
    (root / "results").mkdir(exist_ok=True)
    metas = {name: _meta_to_dict(meta) for name, meta in reg.metas.items()}
    _atomic_write(root / "metas.json", json.dumps(metas, indent=2, sort_keys=True) + "\n")
    selections = {
        name: {
            "name": sel.name,
            "dataset_ids": list(sel.dataset_ids),
            "created_at": sel.created_at,
            "note": sel.note,
        }
        for name, sel in reg.selections.items()
    }
    _atomic_write(root / "selections.json", json.dumps(selections, indent=2, sort_keys=True) + "\n")
    for name, csv_text in reg.result_csvs.items():
        _atomic_write(root / "results" / f"{name}.csv", csv_text)
    # drop result files whose sets were removed from the snapshot
    for existing in (root / "results").glob("*.csv"):
        if existing.stem not in reg.result_csvs:
            existing.unlink()


def load_registry(path: str | Path) -> Registry:
    """Load a snapshot from disk; a missing directory is an empty registry."""
    root = Path(path)
    if not root.exists():
        return empty_registry()
    metas: dict[str, DatasetMeta] = {}
    selections: dict[str, Selection] = {}
    result_sets: dict[str, ResultSet] = {}
    result_csvs: dict[str, str] = {}
    try:
        metas_file = root / "metas.json"
        if metas_file.exists():
            raw = json.loads(metas_file.read_text(encoding="utf-8"))
            metas = {name: _meta_from_dict(d) for name, d in raw.items()}
        sel_file = root / "selections.json"
        if sel_file.exists():
            raw = json.loads(sel_file.read_text(encoding="utf-8"))
            selections = {
                name: Selection(
                    name=d["name"],
                    dataset_ids=tuple(d["dataset_ids"]),
                    created_at=d["created_at"],
                    note=d.get("note"),
                )
                for name, d in raw.items()
            }
        results_dir = root / "results"
        if results_dir.exists():
            for csv_file in sorted(results_dir.glob("*.csv")):
                text = csv_file.read_text(encoding="utf-8")
                result_sets[csv_file.stem] = parse_results(text)
                result_csvs[csv_file.stem] = text
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise RegistryCorrupt(str(root), str(exc)) from exc
    return Registry(
        result_sets=result_sets,
        result_csvs=result_csvs,
        metas=metas,
        selections=selections,
    )
