"""Pairwise algorithm comparison: which datasets separate two algorithms?

Scores of algorithm A go on the x axis, B on the y axis.  Nearest-rank
25th/75th percentile thresholds per axis carve the plane into five regions:
both weak (red corner), both strong (green), A superior (blue), B superior
(yellow), and a moderate middle (white).

Run from the repository root:  python demos/03_algorithm_comparison.py
"""

from collections import Counter
from pathlib import Path

import aps_explorer as ax

results = (Path(__file__).parent.parent / "tests/fixtures/results_synthetic.csv").read_text()
m = ax.build_matrix(ax.parse_results(results), ax.MetricSpec(ax.Metric.NDCG, 10))

cr = ax.classify(m, "BPR", "SASRec")
low_a, high_a, low_b, high_b = cr.thresholds
print(f"comparing {cr.algo_a} (x) vs {cr.algo_b} (y) on {cr.spec.label}")
print(f"x thresholds: low <= {low_a:.4f}, high >= {high_a:.4f}")
print(f"y thresholds: low <= {low_b:.4f}, high >= {high_b:.4f}\n")

for pt in cr.points:
    print(f"  {pt.dataset_id}: ({pt.x:.4f}, {pt.y:.4f})  {pt.quadrant_class.value}")

counts = Counter(pt.quadrant_class.value for pt in cr.points)
print("\nregion counts:", dict(sorted(counts.items())))
if cr.excluded:
    print("excluded (missing a score):", ", ".join(cr.excluded))

# swapping the two algorithms mirrors the asymmetric regions
swapped = ax.classify(m, "SASRec", "BPR")
pairs = {p.dataset_id: p.quadrant_class.value for p in swapped.points}
flipped = [d for d, c in pairs.items() if c in ("a_superior", "b_superior")]
print(f"\nafter swapping axes, superior datasets swap colors: {flipped or 'none'}")
