"""JSON payload builders shared by the HTTP service and the CLI.

Both wire layers serialize through :func:`to_json`, so the same inputs (and
seed) produce byte-identical documents on either surface. Builders emit plain
Python scalars only — numpy types never reach the serializer.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

from .analytics import (
    DEFAULT_BINS,
    SearchOutcome,
    attribute_ranking,
    build_attribute_stats,
    build_diff_matrix,
    domination_partition,
    search_point,
    value_distribution,
)
from .dataset import Dataset
from .embedding import embed_skyline, glyph_payload
from .errors import ContractViolation
from .ingest import DatasetDescriptor
from .skyline import SkylineResult, compute_skyline
from .subspace import decisive_subspaces, subspace_skyline


def to_json(payload: Any) -> str:
    """Canonical serialization used by every wire surface."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def to_json_bytes(payload: Any) -> bytes:
    return to_json(payload).encode("utf-8")


def schema_payload(dataset: Dataset) -> list[dict[str, Any]]:
    return [
        {
            "name": a.name,
            "kind": a.kind,
            "direction": a.direction,
            "included": a.included,
        }
        for a in dataset.schema
    ]


def descriptor_payload(descriptor: DatasetDescriptor) -> dict[str, Any]:
    return descriptor.to_obj()


def skyline_payload(dataset: Dataset, result: SkylineResult | None = None) -> dict[str, Any]:
    if result is None:
        result = compute_skyline(dataset)
    return {
        "snapshotHash": dataset.content_hash,
        "pointCount": dataset.n_points,
        "attributes": schema_payload(dataset),
        "dimensions": list(dataset.dimension_names),
        "skyline": {
            "ids": list(result.skyline_ids),
            "dominatingScore": {
                pid: result.dominating_score[pid] for pid in result.skyline_ids
            },
            "dominatorsOf": {
                pid: list(doms) for pid, doms in result.dominators_of.items()
            },
        },
    }


def refine_payload(
    dataset_id: str, snapshot: Dataset, result: SkylineResult | None = None
) -> dict[str, Any]:
    if result is None:
        result = compute_skyline(snapshot)
    return {
        "datasetId": dataset_id,
        "snapshotHash": snapshot.content_hash,
        "pointCount": snapshot.n_points,
        "skylineSize": len(result.skyline_ids),
        "ids": list(result.skyline_ids),
        "dominatingScore": {
            pid: result.dominating_score[pid] for pid in result.skyline_ids
        },
    }


def projection_payload(
    dataset: Dataset,
    result: SkylineResult | None = None,
    *,
    seed: int = 42,
    focus: str | None = None,
) -> dict[str, Any]:
    if result is None:
        result = compute_skyline(dataset)
    embedding, cfg = embed_skyline(dataset, result, seed=seed)
    glyphs = glyph_payload(dataset, result, focus=focus)
    return {
        "snapshotHash": dataset.content_hash,
        "config": {
            "perplexity": cfg.perplexity,
            "iterations": cfg.iterations,
            "learningRate": cfg.learning_rate,
            "earlyExaggeration": cfg.early_exaggeration,
            "exaggerationIters": cfg.exaggeration_iters,
            "seed": cfg.seed,
        },
        "embedding": {
            "coords": {
                pid: [embedding.coords[pid][0], embedding.coords[pid][1]]
                for pid in embedding.ids
            },
            "finalKLDivergence": embedding.final_kl_divergence,
        },
        "glyphs": {
            "attributes": list(glyphs.attribute_names),
            "sectorValues": {
                pid: list(glyphs.sector_values[pid]) for pid in glyphs.ids
            },
            "innerScore": {pid: glyphs.inner_score[pid] for pid in glyphs.ids},
            "focusId": glyphs.focus_id,
            "focusDiffs": None
            if glyphs.focus_diffs is None
            else {pid: list(glyphs.focus_diffs[pid]) for pid in glyphs.ids},
        },
    }


def detail_payload(
    dataset: Dataset, point_id: str, result: SkylineResult | None = None
) -> dict[str, Any]:
    """Point detail: raw values, rankings, anchored diff matrix, decisive subspaces."""
    if result is None:
        result = compute_skyline(dataset)
    decisive = decisive_subspaces(dataset, point_id, result=result)
    stats = build_attribute_stats(dataset, result)
    diff = build_diff_matrix(dataset, result, anchor_id=point_id, stats=stats)
    point = dataset.points[dataset.index_of(point_id)]
    rankings = {
        name: attribute_ranking(dataset, list(result.skyline_ids), l)[point_id]
        for l, name in enumerate(dataset.dimension_names)
    }
    return {
        "snapshotHash": dataset.content_hash,
        "pointId": point_id,
        "label": point.label,
        "rawValues": {a.name: point.values[i] for i, a in enumerate(dataset.schema)},
        "rankings": rankings,
        "diff": {
            "anchorId": diff.anchor_id,
            "skylineIds": list(diff.skyline_ids),
            "attributes": list(diff.attribute_names),
            "delta": [[float(x) for x in row] for row in diff.delta],
            "summary": [[float(x) for x in row] for row in diff.summary],
            "ranks": [[int(x) for x in row] for row in diff.ranks],
        },
        "decisive": {
            "pointId": decisive.point_id,
            "minimal": [list(names) for names in decisive.named(dataset)],
        },
    }


def compare_payload(
    dataset: Dataset, ids: Sequence[str], result: SkylineResult | None = None
) -> dict[str, Any]:
    if result is None:
        result = compute_skyline(dataset)
    part = domination_partition(dataset, result, ids)
    cells = []
    for bits in range(1, 1 << len(part.selected)):
        members = tuple(
            pid for i, pid in enumerate(part.selected) if bits >> i & 1
        )
        point_ids = part.cells[members]
        cells.append(
            {
                "members": list(members),
                "pointIds": list(point_ids),
                "vectors": [list(dataset.raw_row(pid)) for pid in point_ids],
            }
        )
    radar = {}
    for pid in part.selected:
        rankings = {
            name: attribute_ranking(dataset, list(result.skyline_ids), l)[pid]
            for l, name in enumerate(dataset.dimension_names)
        }
        radar[pid] = {
            "values": dict(zip(dataset.dimension_names, dataset.raw_row(pid))),
            "rankings": rankings,
            "dominatingScore": result.dominating_score[pid],
        }
    return {
        "snapshotHash": dataset.content_hash,
        "selected": list(part.selected),
        "partition": {
            "cells": cells,
            "unionSize": part.union_size,
            "perPointScore": {
                pid: part.per_point_score[pid] for pid in part.selected
            },
        },
        "radar": radar,
        "dimensions": list(dataset.dimension_names),
    }


def distribution_payload(
    dataset: Dataset,
    attribute: str,
    bins: int = DEFAULT_BINS,
    result: SkylineResult | None = None,
) -> dict[str, Any]:
    l = dataset.dimension_index(attribute)
    hist = value_distribution(dataset, l, bins, result=result)
    return {
        "snapshotHash": dataset.content_hash,
        "attribute": hist.attribute,
        "bins": len(hist.counts),
        "edges": list(hist.edges),
        "counts": list(hist.counts),
        "skylineTicks": list(hist.skyline_ticks),
    }


def search_payload(
    dataset: Dataset, query: str, result: SkylineResult | None = None
) -> dict[str, Any]:
    if result is None:
        result = compute_skyline(dataset)
    outcome: SearchOutcome = search_point(dataset, result, query)
    return {
        "query": query,
        "kind": outcome.kind,
        "pointId": outcome.point_id,
        "dominators": list(outcome.dominators),
    }


def subspace_payload(
    dataset: Dataset, attributes: Iterable[str]
) -> dict[str, Any]:
    names = list(attributes)
    if not names:
        raise ContractViolation("subspace selection must name at least one attribute")
    dims = [dataset.dimension_index(name) for name in names]
    ids = subspace_skyline(dataset, dims)
    return {
        "snapshotHash": dataset.content_hash,
        "attributes": names,
        "ids": ids,
    }
