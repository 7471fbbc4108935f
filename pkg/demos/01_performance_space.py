"""Build a performance space from benchmark results and project it to 2D.

Each algorithm is one axis; each dataset is a point whose coordinates are
fold-averaged scores.  PCA squeezes the axes down to two components so the
dataset cloud becomes plottable, and a difficulty score orders datasets
from easy (every algorithm does well) to hard.

Run from the repository root:  python demos/01_performance_space.py
"""

from pathlib import Path

import aps_explorer as ax

results = (Path(__file__).parent.parent / "tests/fixtures/results_synthetic.csv").read_text()

rs = ax.parse_results(results)
print(f"parsed {len(rs)} records, {len(rs.dataset_ids)} datasets, {len(rs.algorithm_ids)} algorithms")

spec = ax.MetricSpec(ax.Metric.NDCG, 10)
m = ax.build_matrix(rs, spec)
print(f"\n{spec.label} matrix: {len(m.dataset_ids)} x {len(m.algorithm_ids)}, complete={bool(m.present.all())}")

p = ax.pca_project(m)
print(f"explained variance: C1={p.explained_variance_ratio[0]:.1%}, C2={p.explained_variance_ratio[1]:.1%}")
print("loadings (how much each algorithm pulls on each axis):")
for axis, row in zip(("C1", "C2"), p.loadings):
    weights = ", ".join(f"{a}={w:+.2f}" for a, w in zip(p.algorithm_ids, row))
    print(f"  {axis}: {weights}")

levels = {a.dataset_id: a for a in ax.difficulty(p)}
print("\ndataset        C1       C2   score  level")
for i, name in enumerate(p.dataset_ids):
    a = levels[name]
    print(f"{name:8} {p.coords[i, 0]:+.3f}   {p.coords[i, 1]:+.3f}   {a.score:.3f}    {a.level}")

hardest = max(levels.values(), key=lambda a: a.score)
easiest = min(levels.values(), key=lambda a: a.score)
print(f"\nhardest: {hardest.dataset_id} (score {hardest.score:.3f}), "
      f"easiest: {easiest.dataset_id} (score {easiest.score:.3f})")
