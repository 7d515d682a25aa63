#!/usr/bin/env python3
"""Optional verification against user-supplied reference datasets.

These checks are dataset-dependent and deliberately not part of the CI gate:
the exact extracts are not redistributable. With the NBA 2010-11 regular
season statistics (452 players, 12 numeric attributes) the pipeline is
expected to report a dominating score of 183 for Lamar Odom; with the Numbeo
quality-of-life extract (176 cities, 8 numeric attributes) and the documented
filters (drop Purchasing Power and Housing Affordability, exclude Asian
cities), 62 skyline cities.

Examples:
    python scripts/verify_reference_datasets.py \
        --csv nba_2010_11.csv --schema nba.schema.json \
        --expect-score "Lamar Odom=183"

    python scripts/verify_reference_datasets.py \
        --csv numbeo.csv --schema numbeo.schema.json \
        --config numbeo_filters.json --expect-skyline-size 62
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from paretoscope.errors import AnalysisError
from paretoscope.ingest import QueryConfig, apply_query_config, load_csv
from paretoscope.analytics import search_point
from paretoscope.skyline import compute_skyline


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True)
    parser.add_argument("--schema", required=True)
    parser.add_argument("--config", default=None, help="QueryConfig JSON to apply first")
    parser.add_argument(
        "--expect-score",
        action="append",
        default=[],
        metavar="WHO=N",
        help="Expect dominating score N for point id/label WHO (repeatable)",
    )
    parser.add_argument(
        "--expect-skyline-size", type=int, default=None, metavar="N"
    )
    args = parser.parse_args(argv)

    try:
        dataset = load_csv(args.csv, args.schema)
        if args.config:
            cfg_obj = json.loads(Path(args.config).read_text(encoding="utf-8"))
            dataset = apply_query_config(dataset, QueryConfig.from_obj(cfg_obj))
        result = compute_skyline(dataset)
    except AnalysisError as exc:
        print(json.dumps(exc.to_payload()), file=sys.stderr)
        return 2

    failures = 0
    print(f"points: {dataset.n_points}, dimensions: {dataset.n_dims}")
    print(f"skyline size: {len(result.skyline_ids)}")

    if args.expect_skyline_size is not None:
        ok = len(result.skyline_ids) == args.expect_skyline_size
        failures += not ok
        print(
            f"[{'PASS' if ok else 'FAIL'}] skyline size expected "
            f"{args.expect_skyline_size}, got {len(result.skyline_ids)}"
        )

    for spec in args.expect_score:
        who, _, expected = spec.rpartition("=")
        try:
            outcome = search_point(dataset, result, who)
        except AnalysisError as exc:
            print(f"[FAIL] {who!r}: {exc.message}")
            failures += 1
            continue
        if outcome.kind != "skyline":
            print(f"[FAIL] {who!r}: not a skyline point ({outcome.kind})")
            failures += 1
            continue
        score = result.dominating_score[outcome.point_id]
        ok = score == int(expected)
        failures += not ok
        print(
            f"[{'PASS' if ok else 'FAIL'}] dominating score of {who!r}: "
            f"expected {expected}, got {score}"
        )

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(run())
