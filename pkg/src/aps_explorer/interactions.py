"""Raw interaction datasets: implicit conversion, k-core pruning, metadata.

Interaction files carry a ``user,item`` or ``user,item,rating`` header and
are CSV or TSV (auto-detected from the header delimiter).  Statistics are
computed on the implicit, deduplicated, pruned form of a dataset; pipelines
that need the source feedback type stamp it onto the metadata afterwards.
"""

from __future__ import annotations

import csv
import io
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import EmptyDataset, MalformedRow


class Feedback(str, Enum):
    EXPLICIT = "Explicit"
    IMPLICIT = "Implicit"


class Interaction(NamedTuple):
    user_id: str
    item_id: str
    rating: float | None = None


@dataclass(frozen=True)
class InteractionDataset:
    """A named list of user-item interactions, explicit or implicit."""

    name: str
    feedback: Feedback
    interactions: tuple[Interaction, ...]

    def __post_init__(self):
        if self.feedback is Feedback.IMPLICIT:
            if any(it.rating is not None for it in self.interactions):
                raise ValueError("implicit datasets must not carry ratings")

    def __len__(self) -> int:
        return len(self.interactions)


@dataclass(frozen=True)
class DatasetMeta:
    """Per-dataset statistics surfaced in the dataset comparison table.

    ``sparsity`` is 1 - interactions / (users * items).  The Gini fields
    summarize the user-activity and item-popularity count distributions.
    Cold-start risk is the fraction of users (items) with fewer than a
    configurable threshold of interactions; it is an artifact-defined
    indicator, computed after pruning, not a standard measure.
    """

    name: str
    n_users: int
    n_items: int
    n_interactions: int
    sparsity: float
    gini_user: float
    gini_item: float
    user_coldstart_risk: float
    item_coldstart_risk: float
    feedback: Feedback

    def __post_init__(self):
        for label in ("sparsity", "gini_user", "gini_item", "user_coldstart_risk", "item_coldstart_risk"):
            v = getattr(self, label)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{label} must lie in [0, 1], got {v!r}")
        for label in ("n_users", "n_items", "n_interactions"):
            if getattr(self, label) < 0:
                raise ValueError(f"{label} must be non-negative")


@dataclass(frozen=True)
class PruneConfig:
    """Degree threshold for k-core pruning (k=5 is the conventional default)."""

    k: int = 5

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k!r}")


def parse_interactions(text: str | io.TextIOBase, name: str) -> InteractionDataset:
    """Parse a ``user,item[,rating]`` file; delimiter sniffed from the header."""
    if isinstance(text, str):
        text = io.StringIO(text)
    first = text.readline()
    if not first:
        raise MalformedRow(1, "empty input (missing header)")
    delimiter = "\t" if "\t" in first else ","
    header = tuple(next(csv.reader([first], delimiter=delimiter)))
    if header == ("user", "item"):
        has_rating = False
    elif header == ("user", "item", "rating"):
        has_rating = True
    else:
        raise MalformedRow(1, "expected header user,item[,rating]")
    width = 3 if has_rating else 2
    rows: list[Interaction] = []
    for line_no, row in enumerate(csv.reader(text, delimiter=delimiter), start=2):
        if len(row) != width:
            raise MalformedRow(line_no, f"expected {width} columns, got {len(row)}")
        if not row[0] or not row[1]:
            raise MalformedRow(line_no, "empty user or item id")
        rating: float | None = None
        if has_rating:
            try:
                rating = float(row[2])
            except ValueError:
                raise MalformedRow(line_no, f"unparsable rating {row[2]!r}") from None
        rows.append(Interaction(row[0], row[1], rating))
    feedback = Feedback.EXPLICIT if has_rating else Feedback.IMPLICIT
    return InteractionDataset(name, feedback, tuple(rows))


def to_implicit(ds: InteractionDataset) -> InteractionDataset:
    """Convert to implicit feedback: every rated pair becomes one positive.

    Ratings are never thresholded (a 1-star rating still counts); duplicate
    (user, item) pairs collapse to the first occurrence, preserving order.
    Idempotent on already-implicit, deduplicated datasets.
    """
    seen: set[tuple[str, str]] = set()
    kept: list[Interaction] = []
    for it in ds.interactions:
        pair = (it.user_id, it.item_id)
        if pair in seen:
            continue
        seen.add(pair)
        kept.append(Interaction(it.user_id, it.item_id, None))
    return InteractionDataset(ds.name, Feedback.IMPLICIT, tuple(kept))


def k_core_prune(ds: InteractionDataset, cfg: PruneConfig = PruneConfig()) -> InteractionDataset:
    """Maximal sub-dataset where every user and item keeps >= k interactions.

    Iterative peeling: degree-deficient users/items are removed and their
    neighbours re-checked until a fixed point.  The result may be empty,
    which is a valid value, not an error.  Interaction order is preserved.
    """
    if ds.feedback is not Feedback.IMPLICIT:
        raise ValueError("k_core_prune requires an implicit dataset; call to_implicit first")
    k = cfg.k
    user_items: dict[str, set[str]] = defaultdict(set)
    item_users: dict[str, set[str]] = defaultdict(set)
    for it in ds.interactions:
        user_items[it.user_id].add(it.item_id)
        item_users[it.item_id].add(it.user_id)

    dead_users: set[str] = set()
    dead_items: set[str] = set()
    queue: deque[tuple[bool, str]] = deque()
    for u, items in user_items.items():
        if len(items) < k:
            dead_users.add(u)
            queue.append((True, u))
    for i, users in item_users.items():
        if len(users) < k:
            dead_items.add(i)
            queue.append((False, i))

    while queue:
        is_user, node = queue.popleft()
        if is_user:
            for i in user_items[node]:
                if i in dead_items:
                    continue
                item_users[i].discard(node)
                if len(item_users[i]) < k:
                    dead_items.add(i)
                    queue.append((False, i))
        else:
            for u in item_users[node]:
                if u in dead_users:
                    continue
                user_items[u].discard(node)
                if len(user_items[u]) < k:
                    dead_users.add(u)
                    queue.append((True, u))

    kept = tuple(
        it
        for it in ds.interactions
        if it.user_id not in dead_users and it.item_id not in dead_items
    )
    return InteractionDataset(ds.name, Feedback.IMPLICIT, kept)


def gini(counts: list[int] | tuple[int, ...]) -> float:
    """Gini coefficient of a non-negative count vector.

    Sorted ascending, G = (2 * sum_i i*x_i) / (n * sum_x) - (n + 1) / n with
    1-based i; 0 when n <= 1 or all counts are equal.  Scale-invariant.
    """
    n = len(counts)
    if n <= 1:
        return 0.0
    xs = sorted(counts)
    if xs[0] == xs[-1]:
        return 0.0
    total = sum(xs)
    if total == 0:
        return 0.0
    weighted = sum(i * x for i, x in enumerate(xs, start=1))
    g = (2.0 * weighted) / (n * total) - (n + 1.0) / n
    return min(max(g, 0.0), 1.0)


def compute_meta(ds: InteractionDataset, coldstart_threshold: int = 10) -> DatasetMeta:
    """Compute dataset statistics; requires an implicit, deduplicated dataset.

    Counts, sparsity, Gini and cold-start fractions are all derived from the
    dataset as given, so callers that prune first get post-pruning numbers.
    """
    if ds.feedback is not Feedback.IMPLICIT:
        raise ValueError("compute_meta requires an implicit dataset; call to_implicit first")
    if coldstart_threshold < 1:
        raise ValueError("coldstart_threshold must be >= 1")
    if len(ds.interactions) == 0:
        raise EmptyDataset(ds.name)
    user_counts = Counter(it.user_id for it in ds.interactions)
    item_counts = Counter(it.item_id for it in ds.interactions)
    n_users = len(user_counts)
    n_items = len(item_counts)
    n = len(ds.interactions)
    sparsity = 1.0 - n / (n_users * n_items)
    user_cold = sum(1 for c in user_counts.values() if c < coldstart_threshold) / n_users
    item_cold = sum(1 for c in item_counts.values() if c < coldstart_threshold) / n_items
    return DatasetMeta(
        name=ds.name,
        n_users=n_users,
        n_items=n_items,
        n_interactions=n,
        sparsity=sparsity,
        gini_user=gini(tuple(user_counts.values())),
        gini_item=gini(tuple(item_counts.values())),
        user_coldstart_risk=user_cold,
        item_coldstart_risk=item_cold,
        feedback=ds.feedback,
    )
