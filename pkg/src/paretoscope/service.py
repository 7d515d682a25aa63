"""HTTP JSON service exposing the analytics to the UI and batch clients.

Snapshots are content-hash addressed, so every GET is a pure function of the
URL and query parameters. Responses are serialized through the same canonical
encoder as the CLI, making the two surfaces byte-identical.
"""

from __future__ import annotations

import os
import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.staticfiles import StaticFiles

from .dataset import Dataset
from .errors import AnalysisError, ConfigError, ParseError
from .ingest import (
    DatasetDescriptor,
    DatasetRegistry,
    QueryConfig,
    apply_query_config,
    load_csv_text,
    parse_schema_obj,
)
from .payloads import (
    compare_payload,
    descriptor_payload,
    detail_payload,
    distribution_payload,
    projection_payload,
    refine_payload,
    search_payload,
    skyline_payload,
    subspace_payload,
    to_json_bytes,
)
from .skyline import SkylineResult, compute_skyline

ENV_REGISTRY = "PARETOSCOPE_REGISTRY"
ENV_PORT = "PARETOSCOPE_PORT"

STATUS_BY_CODE = {
    "not_found": 404,
    "conflict": 409,
    "contract_violation": 422,
    "parse_error": 400,
    "config_error": 422,
    "capacity": 413,
}


def _json_response(payload: Any, status_code: int = 200) -> Response:
    return Response(
        content=to_json_bytes(payload),
        status_code=status_code,
        media_type="application/json",
    )


class _SkylineCache:
    """Write-once cache of skyline results keyed by snapshot hash."""

    def __init__(self):
        self._results: dict[str, SkylineResult] = {}
        self._lock = threading.Lock()

    def get(self, dataset: Dataset) -> SkylineResult:
        key = dataset.content_hash
        result = self._results.get(key)
        if result is None:
            result = compute_skyline(dataset)
            with self._lock:
                self._results.setdefault(key, result)
        return result


def default_registry_dir() -> Path:
    return Path(os.environ.get(ENV_REGISTRY, "./paretoscope-data"))


def create_app(registry_dir: str | Path | None = None, *, frontend_dir: str | Path | None = None) -> FastAPI:
    registry = DatasetRegistry(registry_dir or default_registry_dir())
    cache = _SkylineCache()
    app = FastAPI(title="paretoscope", docs_url=None, redoc_url=None)

    @app.exception_handler(AnalysisError)
    async def _analysis_error(request: Request, exc: AnalysisError) -> Response:
        return _json_response(exc.to_payload(), STATUS_BY_CODE.get(exc.code, 422))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError) -> Response:
        err = ParseError(f"malformed request body: {exc.errors()[:1]}")
        return _json_response(err.to_payload(), 400)

    def _snapshot(snapshot_hash: str) -> Dataset:
        return registry.load_snapshot(snapshot_hash)

    @app.get("/datasets")
    async def list_datasets() -> Response:
        return _json_response([descriptor_payload(d) for d in registry.list()])

    @app.post("/datasets")
    async def upload_dataset(body: dict) -> Response:
        if not isinstance(body, dict):
            raise ParseError("request body must be a JSON object")
        name = body.get("name")
        csv_text = body.get("csv")
        schema_obj = body.get("schema")
        if not isinstance(name, str) or not name:
            raise ConfigError("upload needs a non-empty 'name'")
        if not isinstance(csv_text, str) or not csv_text:
            raise ConfigError("upload needs CSV content under 'csv'")
        if not isinstance(schema_obj, dict):
            raise ConfigError("upload needs a schema object under 'schema'")
        dataset_id = body.get("id") or name.lower().replace(" ", "-")

        spec = parse_schema_obj(schema_obj)
        dataset = load_csv_text(csv_text, spec)
        snapshot_hash = registry.save_snapshot(dataset)

        uploads = registry.root / "uploads"
        uploads.mkdir(exist_ok=True)
        csv_path = uploads / f"{dataset_id}.csv"
        schema_path = uploads / f"{dataset_id}.schema.json"
        descriptor = DatasetDescriptor(
            id=dataset_id,
            name=name,
            csv_path=str(csv_path),
            schema_path=str(schema_path),
            row_count=dataset.n_points,
            attr_count=len(dataset.schema),
            snapshot_hash=snapshot_hash,
        )
        registry.add(descriptor)  # raises on duplicate before files land
        csv_path.write_text(csv_text, encoding="utf-8")
        schema_path.write_text(to_json_bytes(schema_obj).decode("utf-8"), encoding="utf-8")
        return _json_response(descriptor_payload(descriptor), 201)

    @app.post("/datasets/{dataset_id}/refine")
    async def refine(dataset_id: str, body: dict) -> Response:
        descriptor = registry.get(dataset_id)
        base = registry.load_snapshot(descriptor.snapshot_hash)
        cfg = QueryConfig.from_obj(body or {})
        snapshot = apply_query_config(base, cfg)
        registry.save_snapshot(snapshot)
        return _json_response(
            refine_payload(dataset_id, snapshot, cache.get(snapshot))
        )

    @app.get("/snapshots/{snapshot_hash}/skyline")
    async def get_skyline(snapshot_hash: str) -> Response:
        dataset = _snapshot(snapshot_hash)
        return _json_response(skyline_payload(dataset, cache.get(dataset)))

    @app.get("/snapshots/{snapshot_hash}/projection")
    async def get_projection(
        snapshot_hash: str, seed: int = 42, focus: str | None = None
    ) -> Response:
        dataset = _snapshot(snapshot_hash)
        return _json_response(
            projection_payload(dataset, cache.get(dataset), seed=seed, focus=focus)
        )

    @app.get("/snapshots/{snapshot_hash}/points/{point_id}/detail")
    async def get_detail(snapshot_hash: str, point_id: str) -> Response:
        dataset = _snapshot(snapshot_hash)
        return _json_response(detail_payload(dataset, point_id, cache.get(dataset)))

    @app.post("/snapshots/{snapshot_hash}/compare")
    async def post_compare(snapshot_hash: str, body: dict) -> Response:
        dataset = _snapshot(snapshot_hash)
        ids = (body or {}).get("ids")
        if not isinstance(ids, list):
            raise ParseError("compare body needs an 'ids' list")
        return _json_response(compare_payload(dataset, ids, cache.get(dataset)))

    @app.get("/snapshots/{snapshot_hash}/search")
    async def get_search(snapshot_hash: str, q: str = "") -> Response:
        dataset = _snapshot(snapshot_hash)
        return _json_response(search_payload(dataset, q, cache.get(dataset)))

    @app.get("/snapshots/{snapshot_hash}/attributes/{name}/distribution")
    async def get_distribution(snapshot_hash: str, name: str, bins: int = 40) -> Response:
        dataset = _snapshot(snapshot_hash)
        return _json_response(
            distribution_payload(dataset, name, bins, cache.get(dataset))
        )

    @app.post("/snapshots/{snapshot_hash}/subspace")
    async def post_subspace(snapshot_hash: str, body: dict) -> Response:
        dataset = _snapshot(snapshot_hash)
        attributes = (body or {}).get("attributes")
        if not isinstance(attributes, list):
            raise ParseError("subspace body needs an 'attributes' list")
        return _json_response(subspace_payload(dataset, attributes))

    static_dir = Path(frontend_dir) if frontend_dir else Path("frontend/dist")
    if static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
