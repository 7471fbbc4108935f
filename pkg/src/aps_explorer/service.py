"""HTTP/JSON facade over the engine, under the versioned prefix /api/v1.

The service is a stateless view over an immutable registry snapshot: every
handler reads the snapshot reference once, so concurrent requests always
see a complete registry, and ingestion swaps in a fully built replacement
under a single-writer lock.  Analytics are computed on demand and cached
per (snapshot version, query) key.  Responses are rendered through
:mod:`aps_explorer.serialize`, which is what the CLI uses too, so bodies
for identical queries are byte-identical across the two front ends.

Error bodies are ``{"code": ..., "message": ...}`` with codes mirroring the
engine's error classes:

    400  malformed_row, unknown_metric, value_out_of_range, duplicate_key,
         invalid_parameter
    404  unknown_algorithm, unknown_selection, unknown_result_set, not_found
    409  name_exists
    422  too_few_datasets, too_few_algorithms, degenerate_variance,
         no_records_for_spec, invalid_m, empty_dataset, unknown_dataset
    500  registry_corrupt
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Query, Request, Response
from fastapi.responses import JSONResponse

from . import queries, serialize
from .compare import QuadrantConfig
from .errors import (
    ApsError,
    DegenerateVariance,
    DuplicateKey,
    EmptyDataset,
    InvalidM,
    InvalidParameter,
    MalformedRow,
    NameExists,
    NoRecordsForSpec,
    RegistryCorrupt,
    TooFewAlgorithms,
    TooFewDatasets,
    UnknownAlgorithm,
    UnknownDataset,
    UnknownMetric,
    UnknownResultSet,
    UnknownSelection,
    ValueOutOfRange,
)
from .interactions import PruneConfig
from .registry import (
    Registry,
    Selection,
    add_result_set,
    delete_selection,
    export_metadata_csv,
    ingest_interactions,
    load_registry,
    save_registry,
    save_selection,
    utc_now_rfc3339,
)

_STATUS_BY_ERROR = {
    MalformedRow: 400,
    UnknownMetric: 400,
    ValueOutOfRange: 400,
    DuplicateKey: 400,
    InvalidParameter: 400,
    UnknownAlgorithm: 404,
    UnknownSelection: 404,
    UnknownResultSet: 404,
    NameExists: 409,
    TooFewDatasets: 422,
    TooFewAlgorithms: 422,
    DegenerateVariance: 422,
    NoRecordsForSpec: 422,
    InvalidM: 422,
    EmptyDataset: 422,
    UnknownDataset: 422,
    RegistryCorrupt: 500,
}


def status_for(exc: ApsError) -> int:
    return _STATUS_BY_ERROR.get(type(exc), 500)


class EngineState:
    """Mutable holder for the current snapshot plus a per-version cache.

    The (snapshot, version) pair lives in a single tuple so readers observe
    both atomically; ``swap`` replaces the tuple after persisting.
    """

    def __init__(self, registry_path: str | Path):
        self.registry_path = Path(registry_path)
        self._current: tuple[Registry, int] = (load_registry(self.registry_path), 0)
        self._write_lock = threading.Lock()
        self._cache_lock = threading.Lock()
        self._cache: dict[tuple, object] = {}

    @property
    def snapshot(self) -> Registry:
        return self._current[0]

    def current(self) -> tuple[Registry, int]:
        return self._current

    def swap(self, new_snapshot: Registry) -> None:
        """Persist and publish a new snapshot (single writer at a time)."""
        save_registry(new_snapshot, self.registry_path)
        self._current = (new_snapshot, self._current[1] + 1)

    def write_lock(self) -> threading.Lock:
        return self._write_lock

    def cached(self, version: int, key: tuple, compute):
        full_key = (version, *key)
        with self._cache_lock:
            if full_key in self._cache:
                return self._cache[full_key]
        value = compute()
        with self._cache_lock:
            self._cache.setdefault(full_key, value)
            return self._cache[full_key]


def _split_ids(raw: str | None) -> list[str] | None:
    if raw is None or raw == "":
        return None
    return [part for part in raw.split(",") if part]


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=serialize.to_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def create_app(registry_path: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    state = EngineState(registry_path)
    app = FastAPI(title="aps-explorer", version="0.1.0", docs_url=None, redoc_url=None)
    app.state.engine = state

    @app.exception_handler(ApsError)
    async def aps_error_handler(_request: Request, exc: ApsError):
        return JSONResponse(
            status_code=status_for(exc), content={"code": exc.code, "message": exc.message}
        )

    @app.get("/api/v1/datasets")
    def get_datasets() -> Response:
        snap = state.snapshot
        return _json_response(serialize.datasets_payload(snap))

    @app.get("/api/v1/algorithms")
    def get_algorithms() -> Response:
        snap = state.snapshot
        return _json_response(serialize.algorithms_payload(snap))

    @app.get("/api/v1/aps/projection")
    def get_projection(
        metric: str,
        k: int,
        algorithms: str | None = Query(default=None),
        datasets: str | None = Query(default=None),
    ) -> Response:
        snap, version = state.current()
        spec = queries.resolve_spec(metric, k)
        algo_filter = _split_ids(algorithms)
        key = ("projection", spec, tuple(algo_filter) if algo_filter else None)
        p, assignments = state.cached(
            version, key, lambda: queries.query_projection(snap, spec, algo_filter)
        )
        visible = set(_split_ids(datasets) or []) or None
        return _json_response(serialize.projection_payload(p, assignments, visible))

    @app.get("/api/v1/aps/distances")
    def get_distances(metric: str, k: int, space: str = "full") -> Response:
        snap, version = state.current()
        spec = queries.resolve_spec(metric, k)
        dspace = queries.resolve_space(space)
        key = ("distances", spec, dspace)
        dm = state.cached(version, key, lambda: queries.query_distances(snap, spec, dspace))
        return _json_response(serialize.distances_payload(dm, spec, dspace.value))

    @app.get("/api/v1/aps/select")
    def get_select(metric: str, k: int, m: int, space: str = "full") -> Response:
        snap = state.snapshot
        spec = queries.resolve_spec(metric, k)
        dspace = queries.resolve_space(space)
        selected = queries.query_select(snap, spec, m, dspace)
        return _json_response(serialize.selection_result_payload(spec, dspace.value, m, selected))

    @app.get("/api/v1/compare")
    def get_compare(
        a: str,
        b: str,
        metric: str,
        k: int,
        low_q: float = 0.25,
        high_q: float = 0.75,
    ) -> Response:
        snap, version = state.current()
        spec = queries.resolve_spec(metric, k)
        try:
            cfg = QuadrantConfig(low_q=low_q, high_q=high_q)
        except ValueError as exc:
            raise InvalidParameter(str(exc)) from None
        key = ("compare", spec, a, b, cfg)
        cr = state.cached(version, key, lambda: queries.query_compare(snap, spec, a, b, cfg))
        return _json_response(serialize.compare_payload(cr))

    @app.get("/api/v1/export/metadata.csv")
    def get_metadata_csv(datasets: str | None = Query(default=None)) -> Response:
        snap = state.snapshot
        csv_text = export_metadata_csv(snap, _split_ids(datasets))
        return Response(
            content=csv_text,
            media_type="text/csv; charset=utf-8",
            headers={"Content-Disposition": 'attachment; filename="metadata.csv"'},
        )

    @app.post("/api/v1/ingest/results")
    async def post_ingest_results(
        request: Request, name: str, overwrite: bool = False
    ) -> Response:
        body = (await request.body()).decode("utf-8")
        with state.write_lock():
            new_snap = add_result_set(state.snapshot, name, body, overwrite=overwrite)
            state.swap(new_snap)
            rs = new_snap.result_sets[name]
        payload = {
            "name": name,
            "n_records": len(rs),
            "n_datasets": len(rs.dataset_ids),
            "n_algorithms": len(rs.algorithm_ids),
        }
        return _json_response(payload, status_code=201)

    @app.post("/api/v1/ingest/dataset")
    async def post_ingest_dataset(
        request: Request,
        name: str,
        k_core: int = 5,
        coldstart_threshold: int = 10,
    ) -> Response:
        if k_core < 1 or coldstart_threshold < 1:
            raise InvalidParameter("k_core and coldstart_threshold must be >= 1")
        body = (await request.body()).decode("utf-8")
        with state.write_lock():
            new_snap, meta = ingest_interactions(
                state.snapshot,
                name,
                body,
                prune=PruneConfig(k=k_core),
                coldstart_threshold=coldstart_threshold,
            )
            state.swap(new_snap)
        return _json_response(serialize.meta_dict(meta), status_code=201)

    @app.get("/api/v1/selections")
    def get_selections() -> Response:
        snap = state.snapshot
        return _json_response(serialize.selections_payload(snap))

    @app.get("/api/v1/selections/{name}")
    def get_selection(name: str) -> Response:
        snap = state.snapshot
        if name not in snap.selections:
            raise UnknownSelection(name)
        return _json_response(serialize.selection_payload(snap.selections[name]))

    @app.post("/api/v1/selections")
    async def post_selection(request: Request) -> Response:
        body = await request.json()
        if not isinstance(body, dict) or "name" not in body or "dataset_ids" not in body:
            raise InvalidParameter("selection body requires 'name' and 'dataset_ids'")
        if not isinstance(body["dataset_ids"], list) or not body["dataset_ids"]:
            raise InvalidParameter("'dataset_ids' must be a non-empty list")
        sel = Selection(
            name=str(body["name"]),
            dataset_ids=tuple(str(d) for d in body["dataset_ids"]),
            created_at=utc_now_rfc3339(),
            note=body.get("note"),
        )
        overwrite = bool(body.get("overwrite", False))
        with state.write_lock():
            state.swap(save_selection(state.snapshot, sel, overwrite=overwrite))
        return _json_response(serialize.selection_payload(sel), status_code=201)

    @app.delete("/api/v1/selections/{name}")
    def delete_selection_endpoint(name: str) -> Response:
        with state.write_lock():
            state.swap(delete_selection(state.snapshot, name))
        return Response(status_code=204)

    if ui_dir is not None and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def serve(
    registry_path: str | Path,
    host: str = "127.0.0.1",
    port: int = 8000,
    ui_dir: str | Path | None = None,
) -> None:
    """Run the service with uvicorn (blocking)."""
    import uvicorn

    app = create_app(registry_path, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
