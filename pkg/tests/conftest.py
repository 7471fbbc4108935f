from __future__ import annotations

from pathlib import Path

import pytest

import aps_explorer as ax

FIXTURES = Path(__file__).parent / "fixtures"

RESULTS_CSV = FIXTURES / "results_synthetic.csv"
INTERACTION_FILES = {
    "ds01": FIXTURES / "interactions_ds01.csv",
    "ds02": FIXTURES / "interactions_ds02.tsv",
    "ds03": FIXTURES / "interactions_ds03.csv",
}

# 11 collinear datasets over 2 algorithms: positions 0.0, 0.1, ..., 1.0
LINE_DATASETS = [f"lin{i:02d}" for i in range(11)]


def line_fixture_csv() -> str:
    lines = ["dataset,algorithm,metric,k,fold,value"]
    for i, name in enumerate(LINE_DATASETS):
        pos = i / 10
        for algo in ("a1", "a2"):
            lines.append(f"{name},{algo},nDCG,10,1,{pos:.6f}")
    return "\n".join(lines) + "\n"


@pytest.fixture(scope="session")
def fixture_registry() -> ax.Registry:
    """Registry preloaded with the bundled synthetic fixtures (in memory)."""
    reg = ax.empty_registry()
    reg = ax.add_result_set(reg, "synthetic", RESULTS_CSV.read_text(encoding="utf-8"))
    for name, path in INTERACTION_FILES.items():
        reg, _ = ax.ingest_interactions(reg, name, path.read_text(encoding="utf-8"))
    return reg


@pytest.fixture()
def registry_dir(tmp_path, fixture_registry) -> Path:
    """The fixture registry saved to a fresh directory."""
    path = tmp_path / "registry"
    ax.save_registry(fixture_registry, path)
    return path


@pytest.fixture()
def client(registry_dir):
    from fastapi.testclient import TestClient

    from aps_explorer.service import create_app

    app = create_app(registry_dir)
    with TestClient(app) as c:
        yield c
