"""Canonical JSON/CSV serialization shared by the CLI and the HTTP service.

Both front ends emit strings produced here, so for identical queries their
outputs are byte-identical.  JSON is compact (no whitespace); floats use
Python's shortest round-trip repr.  CSV strings end with a trailing newline.
"""

from __future__ import annotations

import json

from .compare import ComparisonResult
from .interactions import DatasetMeta
from .registry import Registry, Selection
from .results import MetricSpec
from .space import DifficultyAssignment, DistanceMatrix, Projection


def to_json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def meta_dict(meta: DatasetMeta) -> dict:
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


def datasets_payload(reg: Registry) -> list[dict]:
    return [meta_dict(reg.metas[name]) for name in sorted(reg.metas)]


def algorithms_payload(reg: Registry) -> list[dict]:
    """Algorithm ids with coverage: datasets, records and (metric, k) slices.

    The per-algorithm ``specs`` list is what lets clients offer only valid
    metric/K combinations.
    """
    datasets: dict[str, set[str]] = {}
    records: dict[str, int] = {}
    specs: dict[str, set[tuple[str, int]]] = {}
    for rec in reg.merged_results.records:
        datasets.setdefault(rec.algorithm_id, set()).add(rec.dataset_id)
        records[rec.algorithm_id] = records.get(rec.algorithm_id, 0) + 1
        specs.setdefault(rec.algorithm_id, set()).add((rec.spec.metric.value, rec.spec.k))
    return [
        {
            "id": algo,
            "n_datasets": len(datasets[algo]),
            "n_records": records[algo],
            "specs": [
                {"metric": metric, "k": k} for metric, k in sorted(specs[algo])
            ],
        }
        for algo in sorted(datasets)
    ]


def difficulty_entry(a: DifficultyAssignment) -> dict:
    return {"dataset": a.dataset_id, "score": a.score, "level": a.level}


def projection_payload(
    p: Projection,
    assignments: list[DifficultyAssignment],
    visible_datasets: set[str] | None = None,
) -> dict:
    """Projection + difficulty in one payload.

    ``visible_datasets`` hides points without recomputing the space: the
    axes, loadings and variance ratios always describe the full projection.
    """
    keep = [
        i
        for i, name in enumerate(p.dataset_ids)
        if visible_datasets is None or name in visible_datasets
    ]
    by_id = {a.dataset_id: a for a in assignments}
    return {
        "metric": p.spec.metric.value,
        "k": p.spec.k,
        "dataset_ids": [p.dataset_ids[i] for i in keep],
        "algorithm_ids": list(p.algorithm_ids),
        "coords": [[float(p.coords[i, 0]), float(p.coords[i, 1])] for i in keep],
        "explained_variance_ratio": [float(v) for v in p.explained_variance_ratio],
        "loadings": [[float(v) for v in row] for row in p.loadings],
        "column_means": [float(v) for v in p.column_means],
        "mean_performance": [float(p.mean_performance[i]) for i in keep],
        "difficulty": [
            difficulty_entry(by_id[p.dataset_ids[i]]) for i in keep if p.dataset_ids[i] in by_id
        ],
    }


def projection_csv(p: Projection, assignments: list[DifficultyAssignment]) -> str:
    """``dataset,c1,c2,score,level`` rows in dataset order.

    Score and level columns are blank when difficulty is unavailable
    (fewer than five projected datasets).
    """
    by_id = {a.dataset_id: a for a in assignments}
    lines = ["dataset,c1,c2,score,level"]
    for i, name in enumerate(p.dataset_ids):
        a = by_id.get(name)
        score = repr(a.score) if a else ""
        level = str(a.level) if a else ""
        c1, c2 = float(p.coords[i, 0]), float(p.coords[i, 1])
        lines.append(f"{name},{c1!r},{c2!r},{score},{level}")
    return "\n".join(lines) + "\n"


def difficulty_payload(spec: MetricSpec, assignments: list[DifficultyAssignment]) -> dict:
    return {
        "metric": spec.metric.value,
        "k": spec.k,
        "difficulty": [difficulty_entry(a) for a in assignments],
    }


def distances_payload(dm: DistanceMatrix, spec: MetricSpec, space: str) -> dict:
    return {
        "metric": spec.metric.value,
        "k": spec.k,
        "space": space,
        "dataset_ids": list(dm.dataset_ids),
        "dist": [[float(v) for v in row] for row in dm.dist],
    }


def selection_result_payload(spec: MetricSpec, space: str, m: int, selected: list[str]) -> dict:
    return {
        "metric": spec.metric.value,
        "k": spec.k,
        "space": space,
        "m": m,
        "selected": selected,
    }


def selection_result_csv(selected: list[str]) -> str:
    return "\n".join(["dataset", *selected]) + "\n"


def compare_payload(cr: ComparisonResult) -> dict:
    low_a, high_a, low_b, high_b = cr.thresholds
    return {
        "metric": cr.spec.metric.value,
        "k": cr.spec.k,
        "algo_a": cr.algo_a,
        "algo_b": cr.algo_b,
        "thresholds": {
            "low_a": low_a,
            "high_a": high_a,
            "low_b": low_b,
            "high_b": high_b,
        },
        "points": [
            {"dataset": pt.dataset_id, "x": pt.x, "y": pt.y, "class": pt.quadrant_class.value}
            for pt in cr.points
        ],
        "excluded": list(cr.excluded),
    }


def compare_csv(cr: ComparisonResult) -> str:
    lines = ["dataset,x,y,class"]
    for pt in cr.points:
        lines.append(f"{pt.dataset_id},{pt.x!r},{pt.y!r},{pt.quadrant_class.value}")
    return "\n".join(lines) + "\n"


def selection_payload(sel: Selection) -> dict:
    return {
        "name": sel.name,
        "dataset_ids": list(sel.dataset_ids),
        "created_at": sel.created_at,
        "note": sel.note,
    }


def selections_payload(reg: Registry) -> list[dict]:
    return [selection_payload(reg.selections[name]) for name in sorted(reg.selections)]
