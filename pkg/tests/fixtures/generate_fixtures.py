"""Regenerates the bundled synthetic fixtures (deterministic, seeded).

Run from the repository root:

    python tests/fixtures/generate_fixtures.py

Produces a complete 12 datasets x 6 algorithms x 3 metrics x K in {5,10}
x 5 folds result grid, plus three interaction datasets (two explicit CSV,
one implicit TSV) that survive 5-core pruning with room to spare.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

HERE = Path(__file__).parent

DATASETS = [f"ds{i:02d}" for i in range(1, 13)]
ALGORITHMS = ["BPR", "ItemKNN", "LightGCN", "NeuMF", "Pop", "SASRec"]
METRICS = ["nDCG", "Recall", "HitRate"]
KS = [5, 10]
FOLDS = [1, 2, 3, 4, 5]

METRIC_SHIFT = {"nDCG": 0.0, "Recall": 0.05, "HitRate": 0.12}
K_SHIFT = {5: -0.03, 10: 0.02}


def write_results(path: Path) -> None:
    rng = np.random.default_rng(20250420)
    base = {d: rng.uniform(0.25, 0.62) for d in DATASETS}
    skill = {a: rng.uniform(-0.12, 0.18) for a in ALGORITHMS}
    # per-(dataset, algorithm) affinity so the grid is not rank-1
    affinity = {(d, a): rng.normal(0.0, 0.05) for d in DATASETS for a in ALGORITHMS}
    lines = ["dataset,algorithm,metric,k,fold,value"]
    for d in DATASETS:
        for a in ALGORITHMS:
            for metric in METRICS:
                for k in KS:
                    center = (
                        base[d] + skill[a] + affinity[(d, a)] + METRIC_SHIFT[metric] + K_SHIFT[k]
                    )
                    for fold in FOLDS:
                        v = center + rng.normal(0.0, 0.015)
                        v = float(np.clip(v, 0.005, 0.995))
                        lines.append(f"{d},{a},{metric},{k},{fold},{v:.6f}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _sample_interactions(
    rng: np.random.Generator,
    n_users: int,
    n_items: int,
    per_user_lo: int,
    per_user_hi: int,
    popularity_skew: float,
) -> list[tuple[str, str]]:
    users = [f"u{i:03d}" for i in range(1, n_users + 1)]
    items = [f"i{j:03d}" for j in range(1, n_items + 1)]
    weights = np.array([1.0 / (j**popularity_skew) for j in range(1, n_items + 1)])
    weights /= weights.sum()
    pairs: list[tuple[str, str]] = []
    for u in users:
        n = int(rng.integers(per_user_lo, per_user_hi + 1))
        chosen = rng.choice(n_items, size=min(n, n_items), replace=False, p=weights)
        for j in chosen:
            pairs.append((u, items[int(j)]))
    return pairs


def write_interactions(path: Path, seed: int, explicit: bool, tsv: bool, **kwargs) -> None:
    rng = np.random.default_rng(seed)
    pairs = _sample_interactions(rng, **kwargs)
    sep = "\t" if tsv else ","
    header = sep.join(["user", "item", "rating"] if explicit else ["user", "item"])
    lines = [header]
    for u, i in pairs:
        if explicit:
            rating = int(rng.integers(1, 6))
            lines.append(f"{u}{sep}{i}{sep}{rating}")
        else:
            lines.append(f"{u}{sep}{i}")
    if explicit:
        # a few duplicate pairs to exercise dedup on conversion
        for u, i in pairs[:5]:
            lines.append(f"{u}{sep}{i}{sep}{int(rng.integers(1, 6))}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main() -> None:
    write_results(HERE / "results_synthetic.csv")
    write_interactions(
        HERE / "interactions_ds01.csv",
        seed=101,
        explicit=True,
        tsv=False,
        n_users=80,
        n_items=50,
        per_user_lo=8,
        per_user_hi=22,
        popularity_skew=0.8,
    )
    write_interactions(
        HERE / "interactions_ds02.tsv",
        seed=202,
        explicit=False,
        tsv=True,
        n_users=60,
        n_items=40,
        per_user_lo=6,
        per_user_hi=15,
        popularity_skew=1.1,
    )
    write_interactions(
        HERE / "interactions_ds03.csv",
        seed=303,
        explicit=True,
        tsv=False,
        n_users=45,
        n_items=30,
        per_user_lo=10,
        per_user_hi=24,
        popularity_skew=0.5,
    )
    print("fixtures written to", HERE)


if __name__ == "__main__":
    main()
