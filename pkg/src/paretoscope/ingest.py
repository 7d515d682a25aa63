"""CSV loading, schema/config parsing, query refinement, and the dataset registry.

The schema lives in a JSON sidecar next to the raw CSV: attribute names,
kinds, directions, inclusion flags, and which column carries the point id.
Ingest is strict — missing or non-numeric cells are rejected, never imputed.
Refinement produces a fresh immutable snapshot; the skyline must be
recomputed on it because fresh candidates can enter.
"""

from __future__ import annotations

import csv
import io
import json
import math
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .dataset import (
    CATEGORICAL,
    NUMERIC,
    Attribute,
    DataPoint,
    Dataset,
)
from .errors import ConfigError, ConflictError, NotFoundError, ParseError


@dataclass(frozen=True)
class SchemaSpec:
    id_column: str
    attributes: tuple[Attribute, ...]
    label_column: str | None = None


def parse_schema_obj(obj: Mapping[str, Any]) -> SchemaSpec:
    if not isinstance(obj, Mapping):
        raise ConfigError("schema must be a JSON object")
    id_column = obj.get("idColumn")
    if not isinstance(id_column, str) or not id_column:
        raise ConfigError("schema needs a non-empty string 'idColumn'")
    raw_attrs = obj.get("attributes")
    if not isinstance(raw_attrs, list) or not raw_attrs:
        raise ConfigError("schema needs a non-empty 'attributes' list")
    attributes = []
    for a in raw_attrs:
        if not isinstance(a, Mapping) or "name" not in a or "kind" not in a:
            raise ConfigError(f"malformed attribute entry: {a!r}")
        attributes.append(
            Attribute(
                name=a["name"],
                kind=a["kind"],
                direction=a.get("direction"),
                included=bool(a.get("included", True)),
            )
        )
    label_column = obj.get("labelColumn")
    if label_column is not None and not isinstance(label_column, str):
        raise ConfigError("'labelColumn' must be a string when present")
    return SchemaSpec(
        id_column=id_column,
        attributes=tuple(attributes),
        label_column=label_column,
    )


def load_schema(schema_path: str | Path) -> SchemaSpec:
    path = Path(schema_path)
    if not path.exists():
        raise NotFoundError(f"schema file not found: {path}")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"schema file is not valid JSON: {exc}") from None
    return parse_schema_obj(obj)


def load_csv_text(csv_text: str, spec: SchemaSpec) -> Dataset:
    """Parse CSV content against a schema spec; strict about every cell."""
    reader = csv.DictReader(io.StringIO(csv_text))
    if reader.fieldnames is None:
        raise ParseError("CSV has no header row")
    headers = set(reader.fieldnames)

    needed = [spec.id_column] + [a.name for a in spec.attributes]
    if spec.label_column:
        needed.append(spec.label_column)
    missing = [c for c in needed if c not in headers]
    if missing:
        raise ConfigError(
            f"schema references columns missing from the CSV: {missing}",
            location={"columns": missing},
        )

    points: list[DataPoint] = []
    seen: dict[str, int] = {}
    duplicates: dict[str, list[int]] = {}
    for row_no, row in enumerate(reader, start=2):  # header is line 1
        pid = (row.get(spec.id_column) or "").strip()
        if not pid:
            raise ParseError(
                "empty point id", location={"row": row_no, "column": spec.id_column}
            )
        if pid in seen:
            duplicates.setdefault(pid, [seen[pid]]).append(row_no)
        else:
            seen[pid] = row_no
        label = pid
        if spec.label_column:
            label = (row.get(spec.label_column) or "").strip() or pid
        values: list[Any] = []
        for attr in spec.attributes:
            cell = row.get(attr.name)
            if cell is None or cell.strip() == "":
                raise ParseError(
                    f"missing value for attribute {attr.name!r}",
                    location={"row": row_no, "column": attr.name},
                )
            cell = cell.strip()
            if attr.kind == NUMERIC:
                try:
                    num = float(cell)
                except ValueError:
                    raise ParseError(
                        f"non-numeric value {cell!r} in numeric attribute {attr.name!r}",
                        location={"row": row_no, "column": attr.name},
                    ) from None
                if not math.isfinite(num):
                    raise ParseError(
                        f"non-finite value {cell!r} in numeric attribute {attr.name!r}",
                        location={"row": row_no, "column": attr.name},
                    )
                values.append(num)
            else:
                values.append(cell)
        points.append(DataPoint(id=pid, label=label, values=tuple(values)))

    if duplicates:
        listing = {pid: rows for pid, rows in sorted(duplicates.items())}
        raise ConflictError(
            f"duplicate point ids: {sorted(duplicates)}",
            location={"ids": listing},
        )
    return Dataset.build(spec.attributes, points)


def load_csv(csv_path: str | Path, schema_path: str | Path) -> Dataset:
    path = Path(csv_path)
    if not path.exists():
        raise NotFoundError(f"CSV file not found: {path}")
    spec = load_schema(schema_path)
    return load_csv_text(path.read_text(encoding="utf-8"), spec)


# -- query refinement ----------------------------------------------------

NUMERIC_OPS = ("gte", "lte", "between")
CATEGORICAL_OPS = ("equals", "not-equals", "in", "not-in")


def _as_bound(value: Any) -> float | None:
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"predicate bound must be a number, got {value!r}")
    if not math.isfinite(float(value)):
        raise ConfigError(f"predicate bound must be finite, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class NumericPredicate:
    attribute: str
    op: str  # gte | lte | between
    lo: float | None = None
    hi: float | None = None

    def accepts(self, value: float) -> bool:
        if self.op == "gte":
            return value >= self.lo
        if self.op == "lte":
            return value <= self.hi
        return self.lo <= value <= self.hi


@dataclass(frozen=True)
class CategoricalPredicate:
    attribute: str
    op: str  # equals | not-equals | in | not-in
    tokens: tuple[str, ...]

    def accepts(self, value: str) -> bool:
        if self.op == "equals":
            return value == self.tokens[0]
        if self.op == "not-equals":
            return value != self.tokens[0]
        if self.op == "in":
            return value in self.tokens
        return value not in self.tokens


@dataclass(frozen=True)
class QueryConfig:
    excluded_attributes: tuple[str, ...] = ()
    numeric_predicates: tuple[NumericPredicate, ...] = ()
    categorical_predicates: tuple[CategoricalPredicate, ...] = ()
    excluded_point_ids: tuple[str, ...] = ()

    _FIELDS = (
        "excludedAttributes",
        "numericPredicates",
        "categoricalPredicates",
        "excludedPointIds",
    )

    @classmethod
    def from_obj(cls, obj: Mapping[str, Any]) -> "QueryConfig":
        if not isinstance(obj, Mapping):
            raise ConfigError("query config must be a JSON object")
        unknown = sorted(set(obj) - set(cls._FIELDS))
        if unknown:
            raise ConfigError(f"unknown query config fields: {unknown}")
        for key in cls._FIELDS:
            if key in obj and not isinstance(obj[key], list):
                raise ConfigError(f"query config field {key!r} must be a list")
        for key in ("excludedAttributes", "excludedPointIds"):
            if any(not isinstance(v, str) for v in obj.get(key, [])):
                raise ConfigError(f"query config field {key!r} must hold strings")
        numeric = []
        for p in obj.get("numericPredicates", []):
            if not isinstance(p, Mapping) or not isinstance(p.get("attribute"), str):
                raise ConfigError(f"malformed numeric predicate: {p!r}")
            op = p.get("op")
            if op not in NUMERIC_OPS:
                raise ConfigError(f"unknown numeric predicate op {op!r}")
            lo = _as_bound(p.get("lo", p.get("bound") if op == "gte" else None))
            hi = _as_bound(p.get("hi", p.get("bound") if op == "lte" else None))
            if op == "gte" and lo is None:
                raise ConfigError("gte predicate needs 'bound' (or 'lo')")
            if op == "lte" and hi is None:
                raise ConfigError("lte predicate needs 'bound' (or 'hi')")
            if op == "between":
                if lo is None or hi is None:
                    raise ConfigError("between predicate needs 'lo' and 'hi'")
                if lo > hi:
                    raise ConfigError(
                        f"between predicate has lo > hi ({lo} > {hi})"
                    )
            numeric.append(
                NumericPredicate(attribute=p["attribute"], op=op, lo=lo, hi=hi)
            )
        categorical = []
        for p in obj.get("categoricalPredicates", []):
            if not isinstance(p, Mapping) or not isinstance(p.get("attribute"), str):
                raise ConfigError(f"malformed categorical predicate: {p!r}")
            op = p.get("op")
            if op not in CATEGORICAL_OPS:
                raise ConfigError(f"unknown categorical predicate op {op!r}")
            tokens = p.get("tokens")
            if not isinstance(tokens, list) or not tokens:
                raise ConfigError("categorical predicate needs non-empty 'tokens'")
            categorical.append(
                CategoricalPredicate(
                    attribute=p["attribute"], op=op, tokens=tuple(map(str, tokens))
                )
            )
        return cls(
            excluded_attributes=tuple(obj.get("excludedAttributes", [])),
            numeric_predicates=tuple(numeric),
            categorical_predicates=tuple(categorical),
            excluded_point_ids=tuple(obj.get("excludedPointIds", [])),
        )

    def to_obj(self) -> dict[str, Any]:
        numeric = []
        for p in self.numeric_predicates:
            entry: dict[str, Any] = {"attribute": p.attribute, "op": p.op}
            if p.lo is not None:
                entry["lo"] = p.lo
            if p.hi is not None:
                entry["hi"] = p.hi
            numeric.append(entry)
        return {
            "excludedAttributes": list(self.excluded_attributes),
            "numericPredicates": numeric,
            "categoricalPredicates": [
                {"attribute": p.attribute, "op": p.op, "tokens": list(p.tokens)}
                for p in self.categorical_predicates
            ],
            "excludedPointIds": list(self.excluded_point_ids),
        }


def apply_query_config(dataset: Dataset, cfg: QueryConfig) -> Dataset:
    """New snapshot with excluded attributes dropped and failing points removed.

    Downstream skyline results must be recomputed on the returned snapshot;
    previously dominated points can enter the skyline once their dominators
    or the deciding attributes are gone.
    """
    names = {a.name for a in dataset.schema}
    for name in cfg.excluded_attributes:
        if name not in names:
            raise ConfigError(f"config excludes unknown attribute {name!r}")
    for pred in cfg.numeric_predicates:
        attr = _require_attr(dataset, pred.attribute)
        if attr.kind != NUMERIC:
            raise ConfigError(
                f"numeric predicate on non-numeric attribute {pred.attribute!r}"
            )
    for pred in cfg.categorical_predicates:
        attr = _require_attr(dataset, pred.attribute)
        if attr.kind != CATEGORICAL:
            raise ConfigError(
                f"categorical predicate on non-categorical attribute {pred.attribute!r}"
            )

    excluded = set(cfg.excluded_attributes)
    kept_pos = [i for i, a in enumerate(dataset.schema) if a.name not in excluded]
    new_schema = [dataset.schema[i] for i in kept_pos]
    if not any(a.kind == NUMERIC and a.included for a in new_schema):
        raise ConfigError("config leaves no included numeric attributes")

    col_of = {a.name: i for i, a in enumerate(dataset.schema)}
    excluded_ids = set(cfg.excluded_point_ids)

    def keep(point: DataPoint) -> bool:
        if point.id in excluded_ids:
            return False
        for pred in cfg.numeric_predicates:
            if not pred.accepts(float(point.values[col_of[pred.attribute]])):
                return False
        for pred in cfg.categorical_predicates:
            if not pred.accepts(str(point.values[col_of[pred.attribute]])):
                return False
        return True

    new_points = [
        DataPoint(
            id=p.id,
            label=p.label,
            values=tuple(p.values[i] for i in kept_pos),
        )
        for p in dataset.points
        if keep(p)
    ]
    return Dataset.build(new_schema, new_points)


def _require_attr(dataset: Dataset, name: str) -> Attribute:
    for a in dataset.schema:
        if a.name == name:
            return a
    raise ConfigError(f"config references unknown attribute {name!r}")


# -- registry ------------------------------------------------------------


@dataclass(frozen=True)
class DatasetDescriptor:
    id: str
    name: str
    csv_path: str
    schema_path: str
    row_count: int
    attr_count: int
    snapshot_hash: str = ""

    def to_obj(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "name": self.name,
            "csvPath": self.csv_path,
            "schemaPath": self.schema_path,
            "rowCount": self.row_count,
            "attrCount": self.attr_count,
            "snapshotHash": self.snapshot_hash,
        }

    @classmethod
    def from_obj(cls, obj: Mapping[str, Any]) -> "DatasetDescriptor":
        return cls(
            id=obj["id"],
            name=obj["name"],
            csv_path=obj["csvPath"],
            schema_path=obj["schemaPath"],
            row_count=int(obj["rowCount"]),
            attr_count=int(obj["attrCount"]),
            snapshot_hash=obj.get("snapshotHash", ""),
        )


class DatasetRegistry:
    """Persistent registry: one JSON index plus hash-addressed snapshot files.

    Mutations funnel through a single lock; snapshots are write-once.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        (self.root / "snapshots").mkdir(exist_ok=True)
        self._index = self.root / "index.json"
        self._lock = threading.Lock()

    def _read_index(self) -> list[dict[str, Any]]:
        if not self._index.exists():
            return []
        return json.loads(self._index.read_text(encoding="utf-8"))

    def list(self) -> list[DatasetDescriptor]:
        return [DatasetDescriptor.from_obj(o) for o in self._read_index()]

    def add(self, descriptor: DatasetDescriptor) -> list[DatasetDescriptor]:
        with self._lock:
            entries = self._read_index()
            if any(e["id"] == descriptor.id for e in entries):
                raise ConflictError(
                    f"dataset id {descriptor.id!r} already registered"
                )
            entries.append(descriptor.to_obj())
            self._index.write_text(
                json.dumps(entries, indent=2, ensure_ascii=False), encoding="utf-8"
            )
        return [DatasetDescriptor.from_obj(o) for o in entries]

    def get(self, dataset_id: str) -> DatasetDescriptor:
        for entry in self._read_index():
            if entry["id"] == dataset_id:
                return DatasetDescriptor.from_obj(entry)
        raise NotFoundError(f"unknown dataset id {dataset_id!r}")

    # -- snapshots ------------------------------------------------------

    def _snapshot_path(self, snapshot_hash: str) -> Path:
        return self.root / "snapshots" / f"{snapshot_hash}.json"

    def save_snapshot(self, dataset: Dataset) -> str:
        h = dataset.content_hash
        path = self._snapshot_path(h)
        if not path.exists():
            with self._lock:
                if not path.exists():
                    path.write_text(
                        json.dumps(dataset.to_json_obj(), ensure_ascii=False),
                        encoding="utf-8",
                    )
        return h

    def load_snapshot(self, snapshot_hash: str) -> Dataset:
        path = self._snapshot_path(snapshot_hash)
        if not path.exists():
            raise NotFoundError(f"unknown snapshot {snapshot_hash!r}")
        return Dataset.from_json_obj(json.loads(path.read_text(encoding="utf-8")))

    def has_snapshot(self, snapshot_hash: str) -> bool:
        return self._snapshot_path(snapshot_hash).exists()
