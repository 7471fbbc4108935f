"""Compute comparison metadata for raw interaction datasets.

The pipeline mirrors standard preprocessing: explicit ratings become
positive interactions (no thresholding), duplicates collapse, and 5-core
pruning iteratively drops users/items with fewer than five interactions.
All reported statistics are post-pruning.

Run from the repository root:  python demos/02_dataset_statistics.py
"""

from pathlib import Path

import aps_explorer as ax

fixtures = Path(__file__).parent.parent / "tests/fixtures"
files = {
    "ds01": fixtures / "interactions_ds01.csv",  # explicit, CSV
    "ds02": fixtures / "interactions_ds02.tsv",  # implicit, TSV
    "ds03": fixtures / "interactions_ds03.csv",  # explicit, denser
}

for name, path in files.items():
    raw = ax.parse_interactions(path.read_text(), name)
    implicit = ax.to_implicit(raw)
    pruned = ax.k_core_prune(implicit, ax.PruneConfig(k=5))
    meta = ax.compute_meta(pruned)

    print(f"{name} ({raw.feedback.value.lower()} source)")
    print(f"  raw pairs: {len(raw)}, after dedup: {len(implicit)}, after 5-core: {len(pruned)}")
    print(f"  users x items: {meta.n_users} x {meta.n_items}, sparsity {meta.sparsity:.4f}")
    print(f"  gini: user {meta.gini_user:.3f}, item {meta.gini_item:.3f} "
          f"(0 = evenly spread, 1 = concentrated)")
    print(f"  cold-start risk (<10 interactions): users {meta.user_coldstart_risk:.1%}, "
          f"items {meta.item_coldstart_risk:.1%}")
    print()

print("the same numbers, as the CSV export used by the datasets table:")
reg = ax.empty_registry()
for name, path in files.items():
    reg, _ = ax.ingest_interactions(reg, name, path.read_text())
print(ax.export_metadata_csv(reg))
