"""Command-line access to the same analytics the HTTP service exposes.

Subcommands print exactly the JSON documents the corresponding endpoints
return (same canonical serializer, same defaults, same seed handling), so
batch pipelines and the UI see identical bytes. Errors exit non-zero with an
ApiError JSON object on standard error.
"""

from __future__ import annotations

import csv as csv_module
import io
import json
import sys
from pathlib import Path
from typing import Any

import click

from .dataset import Dataset
from .errors import AnalysisError, ParseError
from .ingest import QueryConfig, apply_query_config, load_csv
from .payloads import (
    compare_payload,
    detail_payload,
    distribution_payload,
    projection_payload,
    skyline_payload,
    to_json,
)


def _load(csv_path: str, schema_path: str, config_path: str | None) -> Dataset:
    dataset = load_csv(csv_path, schema_path)
    if config_path:
        try:
            obj = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"query config is not valid JSON: {exc}") from None
        dataset = apply_query_config(dataset, QueryConfig.from_obj(obj))
    return dataset


def _emit(payload: Any, out: str, out_file: str | None, csv_rows=None) -> None:
    if out == "csv" and csv_rows is not None:
        buf = io.StringIO()
        writer = csv_module.writer(buf)
        for row in csv_rows:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        text = to_json(payload) + "\n"
    if out_file:
        Path(out_file).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _fail(exc: AnalysisError) -> None:
    click.echo(to_json(exc.to_payload()), err=True)
    sys.exit(1)


def dataset_options(fn):
    fn = click.option("--csv", "csv_path", required=True, type=click.Path(), help="CSV data file")(fn)
    fn = click.option("--schema", "schema_path", required=True, type=click.Path(), help="Schema JSON sidecar")(fn)
    fn = click.option("--config", "config_path", type=click.Path(), default=None, help="QueryConfig JSON to apply before computing")(fn)
    fn = click.option("--out", type=click.Choice(["json", "csv"]), default="json", show_default=True)(fn)
    fn = click.option("--out-file", type=click.Path(), default=None, help="Write output here instead of stdout")(fn)
    return fn


@click.group()
def main():
    """Skyline analytics: compute, explain, and compare Pareto-optimal points."""


@main.command()
@dataset_options
def skyline(csv_path, schema_path, config_path, out, out_file):
    """Skyline membership, dominating scores, and dominator lists."""
    try:
        dataset = _load(csv_path, schema_path, config_path)
        payload = skyline_payload(dataset)
        rows = [("id", "dominatingScore")] + [
            (pid, payload["skyline"]["dominatingScore"][pid])
            for pid in payload["skyline"]["ids"]
        ]
        _emit(payload, out, out_file, rows)
    except AnalysisError as exc:
        _fail(exc)


@main.command()
@click.argument("point_id")
@dataset_options
def decisive(point_id, csv_path, schema_path, config_path, out, out_file):
    """Point detail: rankings, diff matrix, and minimal decisive subspaces."""
    try:
        dataset = _load(csv_path, schema_path, config_path)
        payload = detail_payload(dataset, point_id)
        rows = [("subspace",)] + [
            ("+".join(names),) for names in payload["decisive"]["minimal"]
        ]
        _emit(payload, out, out_file, rows)
    except AnalysisError as exc:
        _fail(exc)


@main.command()
@click.argument("point_ids", nargs=-1)
@dataset_options
def compare(point_ids, csv_path, schema_path, config_path, out, out_file):
    """Domination partition and radar data for 2-4 skyline points."""
    try:
        dataset = _load(csv_path, schema_path, config_path)
        payload = compare_payload(dataset, list(point_ids))
        rows = [("members", "pointId")]
        for cell in payload["partition"]["cells"]:
            for pid in cell["pointIds"]:
                rows.append(("+".join(cell["members"]), pid))
        _emit(payload, out, out_file, rows)
    except AnalysisError as exc:
        _fail(exc)


@main.command()
@click.option("--seed", type=int, default=42, show_default=True)
@dataset_options
def project(seed, csv_path, schema_path, config_path, out, out_file):
    """Deterministic 2D embedding of the skyline plus glyph payloads."""
    try:
        dataset = _load(csv_path, schema_path, config_path)
        payload = projection_payload(dataset, seed=seed)
        rows = [("id", "x", "y")] + [
            (pid, *payload["embedding"]["coords"][pid])
            for pid in payload["glyphs"]["sectorValues"]
        ]
        _emit(payload, out, out_file, rows)
    except AnalysisError as exc:
        _fail(exc)


@main.command()
@click.argument("attribute")
@click.option("--bins", type=int, default=40, show_default=True)
@dataset_options
def distribution(attribute, bins, csv_path, schema_path, config_path, out, out_file):
    """Histogram of one attribute over all points, with skyline tick marks."""
    try:
        dataset = _load(csv_path, schema_path, config_path)
        payload = distribution_payload(dataset, attribute, bins)
        rows = [("binStart", "binEnd", "count")] + [
            (payload["edges"][i], payload["edges"][i + 1], c)
            for i, c in enumerate(payload["counts"])
        ]
        _emit(payload, out, out_file, rows)
    except AnalysisError as exc:
        _fail(exc)


@main.command()
@click.option("--registry", "registry_dir", type=click.Path(), default=None, help="Registry directory (default: $PARETOSCOPE_REGISTRY or ./paretoscope-data)")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None, help="Port (default: $PARETOSCOPE_PORT or 8000)")
@click.option("--frontend", "frontend_dir", type=click.Path(), default=None, help="Static UI bundle to serve")
def serve(registry_dir, host, port, frontend_dir):
    """Run the HTTP JSON service."""
    import os

    import uvicorn

    from .service import ENV_PORT, create_app

    if port is None:
        port = int(os.environ.get(ENV_PORT, "8000"))
    app = create_app(registry_dir, frontend_dir=frontend_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
