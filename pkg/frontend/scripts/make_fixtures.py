#!/usr/bin/env python3
"""Regenerate the UI test fixtures from the analytics engine.

Every fixture is a literal endpoint body (built by the same payload builders
the service serializes), so the UI tests exercise exactly what the API
delivers. Run from the repository root after changing the engine:

    python frontend/scripts/make_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from paretoscope.analytics import brush_filter
from paretoscope.dataset import Attribute, DataPoint, Dataset
from paretoscope.payloads import (
    compare_payload,
    detail_payload,
    distribution_payload,
    projection_payload,
    skyline_payload,
    subspace_payload,
)
from paretoscope.skyline import compute_skyline

OUT = Path(__file__).parent.parent / "tests" / "fixtures"

TRIP_ATTRS = [
    Attribute("cost", "numeric", "min"),
    Attribute("climate", "numeric", "max"),
    Attribute("environment", "numeric", "max"),
    Attribute("traffic", "numeric", "max"),
]


def trips_dataset() -> Dataset:
    rng = np.random.default_rng(2024)
    n = 16
    base = rng.random(n)
    cost = np.round(40 + 60 * base + rng.normal(0, 4, n), 1)
    climate = np.round(10 * base + rng.normal(0, 1.5, n), 1)
    environment = np.round(10 * (1 - base) + rng.normal(0, 1.5, n), 1)
    traffic = np.round(rng.random(n) * 10, 1)
    points = [
        DataPoint(
            id=f"city{i:02d}",
            label=f"City {i:02d}",
            values=(cost[i], climate[i], environment[i], traffic[i]),
        )
        for i in range(n)
    ]
    return Dataset.build(TRIP_ATTRS, points)


def containment_dataset() -> Dataset:
    # dominated(p) is a strict subset of dominated(q): p keeps no exclusives
    schema = [
        Attribute("alpha", "numeric", "max"),
        Attribute("beta", "numeric", "max"),
    ]
    rows = {"p": (5, 10), "q": (10, 6), "x": (4, 5), "y": (9, 5)}
    points = [DataPoint(pid, pid, vals) for pid, vals in rows.items()]
    return Dataset.build(schema, points)


def write(name: str, payload) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(
        json.dumps(payload, ensure_ascii=False, indent=1), encoding="utf-8"
    )
    print(f"wrote {name}")


def main() -> None:
    trips = trips_dataset()
    result = compute_skyline(trips)
    ids = result.skyline_ids
    assert len(ids) >= 5, f"fixture needs >= 5 skyline points, got {len(ids)}"

    write("skyline.json", skyline_payload(trips, result))
    write(
        "details.json",
        {pid: detail_payload(trips, pid, result) for pid in ids},
    )
    write(
        "distributions.json",
        {
            name: distribution_payload(trips, name, 12, result)
            for name in trips.dimension_names
        },
    )
    write("projection.json", projection_payload(trips, result, seed=7))
    write(
        "projection_focus.json",
        projection_payload(trips, result, seed=7, focus=ids[0]),
    )
    write("subspace.json", subspace_payload(trips, ["climate", "environment"]))

    ranges = {"cost": (40.0, 80.0), "traffic": (2.0, 9.0)}
    outcome = brush_filter(trips, list(ids), ranges)
    assert any(outcome.values()) and not all(outcome.values()), outcome
    write(
        "brush.json",
        {"ranges": {k: list(v) for k, v in ranges.items()}, "expected": outcome},
    )

    write("compare_k3.json", compare_payload(trips, list(ids[:3]), result))
    write("compare_k4.json", compare_payload(trips, list(ids[:4]), result))

    contain = containment_dataset()
    write(
        "compare_k2.json",
        compare_payload(contain, ["p", "q"], compute_skyline(contain)),
    )


if __name__ == "__main__":
    main()
