from __future__ import annotations

import json
import threading
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

import aps_explorer as ax
from aps_explorer import queries, serialize
from aps_explorer.service import create_app
from conftest import INTERACTION_FILES, RESULTS_CSV

HEADER = "dataset,algorithm,metric,k,fold,value"


@pytest.fixture()
def empty_client(tmp_path):
    app = create_app(tmp_path / "registry")
    with TestClient(app) as c:
        yield c


class TestReads:
    def test_empty_datasets(self, empty_client):
        r = empty_client.get("/api/v1/datasets")
        assert r.status_code == 200
        assert r.text == "[]"

    def test_datasets_list(self, client, fixture_registry):
        r = client.get("/api/v1/datasets")
        assert r.status_code == 200
        assert r.text == serialize.to_json(serialize.datasets_payload(fixture_registry))
        names = [d["name"] for d in r.json()]
        assert names == sorted(names)

    def test_algorithms_coverage(self, client):
        r = client.get("/api/v1/algorithms")
        assert r.status_code == 200
        algos = r.json()
        assert [a["id"] for a in algos] == ["BPR", "ItemKNN", "LightGCN", "NeuMF", "Pop", "SASRec"]
        assert all(a["n_datasets"] == 12 for a in algos)
        # 12 datasets x 3 metrics x 2 K x 5 folds
        assert all(a["n_records"] == 360 for a in algos)
        # 3 metrics x 2 K values, sorted by (metric, k)
        assert all(len(a["specs"]) == 6 for a in algos)
        assert algos[0]["specs"][0] == {"metric": "HitRate", "k": 5}

    def test_projection_too_few_datasets(self, tmp_path):
        reg = ax.add_result_set(
            ax.empty_registry(),
            "tiny",
            f"{HEADER}\nd1,a,nDCG,10,1,0.5\nd1,b,nDCG,10,1,0.4\n"
            f"d2,a,nDCG,10,1,0.6\nd2,b,nDCG,10,1,0.3\n",
        )
        ax.save_registry(reg, tmp_path / "r")
        with TestClient(create_app(tmp_path / "r")) as c:
            r = c.get("/api/v1/aps/projection", params={"metric": "nDCG", "k": 10})
        assert r.status_code == 422
        assert r.json()["code"] == "too_few_datasets"

    def test_projection_matches_engine(self, client, fixture_registry):
        r = client.get("/api/v1/aps/projection", params={"metric": "nDCG", "k": 10})
        assert r.status_code == 200
        spec = queries.resolve_spec("nDCG", 10)
        p, assignments = queries.query_projection(fixture_registry, spec)
        assert r.text == serialize.to_json(serialize.projection_payload(p, assignments))
        body = r.json()
        assert len(body["dataset_ids"]) == 12
        assert len(body["difficulty"]) == 12

    def test_projection_algorithm_filter_recomputes(self, client):
        full = client.get("/api/v1/aps/projection", params={"metric": "nDCG", "k": 10}).json()
        sub = client.get(
            "/api/v1/aps/projection",
            params={"metric": "nDCG", "k": 10, "algorithms": "BPR,ItemKNN,Pop"},
        ).json()
        assert sub["algorithm_ids"] == ["BPR", "ItemKNN", "Pop"]
        assert len(sub["loadings"][0]) == 3
        assert sub["coords"] != full["coords"]

    def test_projection_dataset_filter_hides_points(self, client):
        full = client.get("/api/v1/aps/projection", params={"metric": "nDCG", "k": 10}).json()
        vis = client.get(
            "/api/v1/aps/projection",
            params={"metric": "nDCG", "k": 10, "datasets": "ds01,ds05"},
        ).json()
        assert vis["dataset_ids"] == ["ds01", "ds05"]
        # hidden, not recomputed: coords equal the full projection's entries
        i = full["dataset_ids"].index("ds05")
        assert vis["coords"][1] == full["coords"][i]
        assert vis["loadings"] == full["loadings"]
        # difficulty still reflects the full space
        full_by_id = {e["dataset"]: e for e in full["difficulty"]}
        assert all(e == full_by_id[e["dataset"]] for e in vis["difficulty"])

    def test_unknown_metric_400(self, client):
        r = client.get("/api/v1/aps/projection", params={"metric": "ndcg", "k": 10})
        assert r.status_code == 400
        assert r.json()["code"] == "unknown_metric"

    def test_distances_and_select(self, client, fixture_registry):
        r = client.get("/api/v1/aps/distances", params={"metric": "nDCG", "k": 10, "space": "full"})
        assert r.status_code == 200
        spec = queries.resolve_spec("nDCG", 10)
        dm = queries.query_distances(fixture_registry, spec)
        assert r.text == serialize.to_json(serialize.distances_payload(dm, spec, "full"))

        r = client.get("/api/v1/aps/select", params={"metric": "nDCG", "k": 10, "m": 4})
        assert r.status_code == 200
        assert r.json()["selected"] == queries.query_select(fixture_registry, spec, 4)

    def test_select_invalid_m(self, client):
        r = client.get("/api/v1/aps/select", params={"metric": "nDCG", "k": 10, "m": 999})
        assert r.status_code == 422
        assert r.json()["code"] == "invalid_m"

    def test_bad_space_parameter(self, client):
        r = client.get(
            "/api/v1/aps/distances", params={"metric": "nDCG", "k": 10, "space": "hyperbolic"}
        )
        assert r.status_code == 400
        assert r.json()["code"] == "invalid_parameter"

    def test_compare_matches_engine(self, client, fixture_registry):
        r = client.get(
            "/api/v1/compare", params={"a": "BPR", "b": "SASRec", "metric": "Recall", "k": 5}
        )
        assert r.status_code == 200
        spec = queries.resolve_spec("Recall", 5)
        cr = queries.query_compare(fixture_registry, spec, "BPR", "SASRec")
        assert r.text == serialize.to_json(serialize.compare_payload(cr))

    def test_compare_unknown_algorithm_404(self, client):
        r = client.get(
            "/api/v1/compare", params={"a": "BPR", "b": "Nope", "metric": "nDCG", "k": 10}
        )
        assert r.status_code == 404
        assert r.json()["code"] == "unknown_algorithm"

    def test_export_csv(self, client, fixture_registry):
        r = client.get("/api/v1/export/metadata.csv")
        assert r.status_code == 200
        assert r.headers["content-disposition"] == 'attachment; filename="metadata.csv"'
        assert r.text == ax.export_metadata_csv(fixture_registry)

    def test_export_filter(self, client, fixture_registry):
        r = client.get("/api/v1/export/metadata.csv", params={"datasets": "ds02"})
        assert r.text == ax.export_metadata_csv(fixture_registry, ["ds02"])
        assert len(r.text.splitlines()) == 2


class TestIngest:
    def test_ingest_results_and_query(self, empty_client):
        rows = [f"{HEADER}"]
        for d in range(5):
            for a in ("x", "y"):
                rows.append(f"d{d},{a},nDCG,10,1,0.{d + 1}{'5' if a == 'x' else '9'}")
        r = empty_client.post(
            "/api/v1/ingest/results", params={"name": "run1"}, content="\n".join(rows) + "\n"
        )
        assert r.status_code == 201
        body = r.json()
        assert body == {"name": "run1", "n_records": 10, "n_datasets": 5, "n_algorithms": 2}
        r = empty_client.get("/api/v1/aps/projection", params={"metric": "nDCG", "k": 10})
        assert r.status_code == 200

    def test_ingest_bad_csv_400(self, empty_client):
        r = empty_client.post(
            "/api/v1/ingest/results", params={"name": "bad"}, content="not,a,results,file\n"
        )
        assert r.status_code == 400
        assert r.json()["code"] == "malformed_row"

    def test_ingest_duplicate_name_409(self, empty_client):
        text = f"{HEADER}\nd,a,nDCG,10,1,0.5\n"
        assert empty_client.post(
            "/api/v1/ingest/results", params={"name": "n"}, content=text
        ).status_code == 201
        r = empty_client.post("/api/v1/ingest/results", params={"name": "n"}, content=text)
        assert r.status_code == 409

    def test_ingest_dataset(self, empty_client):
        text = "user,item\n" + "\n".join(f"u{u},i{i}" for u in range(6) for i in range(6)) + "\n"
        r = empty_client.post("/api/v1/ingest/dataset", params={"name": "tiny"}, content=text)
        assert r.status_code == 201
        assert r.json()["n_interactions"] == 36
        assert empty_client.get("/api/v1/datasets").json()[0]["name"] == "tiny"

    def test_ingest_dataset_pruned_empty_422(self, empty_client):
        r = empty_client.post(
            "/api/v1/ingest/dataset", params={"name": "t"}, content="user,item\nu1,i1\n"
        )
        assert r.status_code == 422
        assert r.json()["code"] == "empty_dataset"

    def test_ingest_persists_to_disk(self, tmp_path):
        app = create_app(tmp_path / "reg")
        with TestClient(app) as c:
            text = f"{HEADER}\nd,a,nDCG,10,1,0.5\n"
            c.post("/api/v1/ingest/results", params={"name": "n"}, content=text)
        assert (tmp_path / "reg" / "results" / "n.csv").read_text() == text


class TestSelections:
    def test_crud(self, client):
        r = client.post(
            "/api/v1/selections",
            json={"name": "picks", "dataset_ids": ["ds01", "ds02"], "note": "sparse"},
        )
        assert r.status_code == 201
        r = client.get("/api/v1/selections/picks")
        assert r.status_code == 200
        body = r.json()
        assert body["dataset_ids"] == ["ds01", "ds02"]
        assert body["note"] == "sparse"
        assert body["created_at"].endswith("Z")
        assert client.get("/api/v1/selections").json()[0]["name"] == "picks"
        assert client.delete("/api/v1/selections/picks").status_code == 204
        assert client.get("/api/v1/selections/picks").status_code == 404

    def test_unknown_dataset_422(self, client):
        r = client.post("/api/v1/selections", json={"name": "s", "dataset_ids": ["nope"]})
        assert r.status_code == 422
        assert r.json()["code"] == "unknown_dataset"

    def test_name_conflict_409_and_overwrite(self, client):
        assert client.post(
            "/api/v1/selections", json={"name": "s", "dataset_ids": ["ds01"]}
        ).status_code == 201
        assert client.post(
            "/api/v1/selections", json={"name": "s", "dataset_ids": ["ds02"]}
        ).status_code == 409
        r = client.post(
            "/api/v1/selections",
            json={"name": "s", "dataset_ids": ["ds02"], "overwrite": True},
        )
        assert r.status_code == 201
        assert client.get("/api/v1/selections/s").json()["dataset_ids"] == ["ds02"]

    def test_invalid_body_400(self, client):
        assert client.post("/api/v1/selections", json={"name": "s"}).status_code == 400
        assert client.post(
            "/api/v1/selections", json={"name": "s", "dataset_ids": []}
        ).status_code == 400


class TestConcurrencyModel:
    def test_snapshot_swap_is_atomic_reference(self, tmp_path):
        app = create_app(tmp_path / "reg")
        state = app.state.engine
        with TestClient(app) as c:
            before = state.snapshot
            c.post(
                "/api/v1/ingest/results",
                params={"name": "n"},
                content=f"{HEADER}\nd,a,nDCG,10,1,0.5\n",
            )
            after = state.snapshot
        # the old snapshot object is untouched; the new one is a different object
        assert before is not after
        assert not before.result_sets
        assert "n" in after.result_sets

    def test_concurrent_identical_gets(self, client):
        bodies = []
        lock = threading.Lock()

        def fetch():
            r = client.get("/api/v1/aps/projection", params={"metric": "HitRate", "k": 5})
            with lock:
                bodies.append(r.text)

        threads = [threading.Thread(target=fetch) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(set(bodies)) == 1

    def test_cache_reuses_computation(self, client):
        state = client.app.state.engine
        r1 = client.get("/api/v1/aps/projection", params={"metric": "nDCG", "k": 5})
        r2 = client.get("/api/v1/aps/projection", params={"metric": "nDCG", "k": 5})
        assert r1.text == r2.text
        keys = [k for k in state._cache if k[1] == "projection"]
        assert len(keys) >= 1
