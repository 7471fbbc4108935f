"""Registry round trip: ingest, save a selection, export, reload.

The registry is a plain directory (metas.json, selections.json, results/*.csv)
so everything stays diff-friendly and inspectable.  The same directory backs
the CLI (``aps --registry DIR ...``) and the HTTP service
(``aps --registry DIR serve``).

Run from the repository root:  python demos/05_registry_and_service.py
"""

import tempfile
from pathlib import Path

import aps_explorer as ax
from aps_explorer.registry import save_selection, utc_now_rfc3339

fixtures = Path(__file__).parent.parent / "tests/fixtures"

reg = ax.empty_registry()
reg = ax.add_result_set(reg, "synthetic", (fixtures / "results_synthetic.csv").read_text())
for name, fname in [
    ("ds01", "interactions_ds01.csv"),
    ("ds02", "interactions_ds02.tsv"),
    ("ds03", "interactions_ds03.csv"),
]:
    reg, meta = ax.ingest_interactions(reg, name, (fixtures / fname).read_text())
    print(f"registered {name}: {meta.n_interactions} interactions, sparsity {meta.sparsity:.3f}")

sel = ax.Selection(
    name="sparse-picks",
    dataset_ids=("ds01", "ds02"),
    created_at=utc_now_rfc3339(),
    note="two sparsest fixtures",
)
reg = save_selection(reg, sel)
print(f"\nsaved selection {sel.name!r} at {sel.created_at}")

with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp) / "registry"
    ax.save_registry(reg, root)
    print("\non-disk layout:")
    for path in sorted(root.rglob("*")):
        if path.is_file():
            print(f"  {path.relative_to(root)}  ({path.stat().st_size} bytes)")

    loaded = ax.load_registry(root)
    same = ax.export_metadata_csv(loaded) == ax.export_metadata_csv(reg)
    print(f"\nreloaded export is byte-identical: {same}")
    print(f"selection survived: {loaded.selections['sparse-picks'].dataset_ids}")

print("\nnext steps:")
print("  aps --registry ./registry serve --port 8000     # HTTP API at /api/v1")
print("  aps --registry ./registry project --metric nDCG --k 10 --format csv")
