"""Pick a maximally diverse dataset subset by farthest-point sampling.

Euclidean distance between dataset points measures how differently the
algorithm roster behaves on them, so a benchmark suite built from mutually
distant datasets stresses algorithms in genuinely different ways.

Run from the repository root:  python demos/04_diverse_selection.py
"""

from pathlib import Path

import numpy as np

import aps_explorer as ax

results = (Path(__file__).parent.parent / "tests/fixtures/results_synthetic.csv").read_text()
m = ax.build_matrix(ax.parse_results(results), ax.MetricSpec(ax.Metric.NDCG, 10))

dm = ax.distances(m)  # full space: one axis per algorithm
dist = np.asarray(dm.dist)
print(f"distance matrix over {len(dm.dataset_ids)} datasets "
      f"(mean pairwise {dist[np.triu_indices_from(dist, 1)].mean():.3f})")

for size in (1, 2, 4, 6):
    picked = ax.select_diverse(dm, size)
    if size >= 2:
        idx = {name: i for i, name in enumerate(dm.dataset_ids)}
        worst = min(
            dist[idx[a], idx[b]] for i, a in enumerate(picked) for b in picked[i + 1 :]
        )
        print(f"m={size}: {', '.join(picked)}  (min pairwise distance {worst:.3f})")
    else:
        print(f"m={size}: {picked[0]}  (central, medoid-like pick)")

print("\nselection in the 2D projected space instead of the full space:")
dm2 = ax.distances(m, ax.DistanceSpace.PCA_2D)
print("m=4:", ", ".join(ax.select_diverse(dm2, 4)))
