"""Dataset model: attribute schema, points, and the direction-unified matrix.

Numeric attributes carry a preference direction. The canonical matrix stores
every included numeric attribute so that higher is always better: maximize
columns verbatim, minimize columns negated. Raw values are retained for
display. Categorical attributes never enter the canonical matrix; they exist
for labeling and ingest-time filtering only.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .errors import ConfigError, ContractViolation, ParseError

NUMERIC = "numeric"
CATEGORICAL = "categorical"
MAXIMIZE = "max"
MINIMIZE = "min"


@dataclass(frozen=True)
class Attribute:
    """One column of the schema."""

    name: str
    kind: str
    direction: str | None = None
    included: bool = True

    def __post_init__(self):
        if self.kind not in (NUMERIC, CATEGORICAL):
            raise ConfigError(f"attribute {self.name!r}: unknown kind {self.kind!r}")
        if self.kind == NUMERIC:
            if self.direction not in (MAXIMIZE, MINIMIZE):
                raise ConfigError(
                    f"numeric attribute {self.name!r} needs direction "
                    f"'{MAXIMIZE}' or '{MINIMIZE}', got {self.direction!r}"
                )
        elif self.direction is not None:
            raise ConfigError(
                f"categorical attribute {self.name!r} must not have a direction"
            )


@dataclass(frozen=True)
class DataPoint:
    """One row: stable id, display label, one cell per schema attribute."""

    id: str
    label: str
    values: tuple[Any, ...]


def unify_directions(raw_matrix, schema: Sequence[Attribute]) -> np.ndarray:
    """Build the canonical higher-is-better matrix from raw numeric values.

    Maximize columns are copied verbatim; minimize columns are negated, which
    reverses their value order while keeping magnitudes recoverable for
    display. Non-finite cells are rejected with their location.
    """
    directions = [a.direction for a in schema if a.kind == NUMERIC and a.included]
    arr = np.asarray(raw_matrix, dtype=float)
    if arr.ndim != 2:
        raise ContractViolation(f"raw matrix must be 2D, got ndim={arr.ndim}")
    if arr.shape[1] != len(directions):
        raise ContractViolation(
            f"raw matrix has {arr.shape[1]} columns but the schema includes "
            f"{len(directions)} numeric attributes"
        )
    if arr.size and not np.all(np.isfinite(arr)):
        bad = np.argwhere(~np.isfinite(arr))[0]
        raise ParseError(
            "non-finite numeric value",
            location={"row": int(bad[0]), "column": int(bad[1])},
        )
    canonical = arr.copy()
    for j, direction in enumerate(directions):
        if direction == MINIMIZE:
            canonical[:, j] = -canonical[:, j]
    return canonical


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable snapshot: schema + points + canonical matrix.

    Construct through :meth:`build`, which validates the schema/point
    invariants and derives the canonical matrix.
    """

    schema: tuple[Attribute, ...]
    points: tuple[DataPoint, ...]
    canonical: np.ndarray = field(repr=False)
    raw: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, schema: Iterable[Attribute], points: Iterable[DataPoint]) -> "Dataset":
        schema = tuple(schema)
        points = tuple(points)

        names = [a.name for a in schema]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ConfigError(f"duplicate attribute names in schema: {dupes}")
        numeric_idx = [
            i for i, a in enumerate(schema) if a.kind == NUMERIC and a.included
        ]
        if not numeric_idx:
            raise ConfigError("schema must include at least one numeric attribute")

        ids = [p.id for p in points]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ConfigError(f"duplicate point ids: {dupes}")
        for r, p in enumerate(points):
            if len(p.values) != len(schema):
                raise ContractViolation(
                    f"point {p.id!r} has {len(p.values)} cells, schema has {len(schema)}",
                    location={"row": r},
                )

        raw = np.empty((len(points), len(numeric_idx)), dtype=float)
        for r, p in enumerate(points):
            for c, i in enumerate(numeric_idx):
                cell = p.values[i]
                try:
                    raw[r, c] = float(cell)
                except (TypeError, ValueError):
                    raise ParseError(
                        f"non-numeric value {cell!r} in numeric attribute",
                        location={"row": r, "column": schema[i].name},
                    ) from None
        canonical = unify_directions(raw, schema)
        canonical.flags.writeable = False
        raw.flags.writeable = False
        return cls(schema=schema, points=points, canonical=canonical, raw=raw)

    # -- derived views -------------------------------------------------

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def n_dims(self) -> int:
        return self.canonical.shape[1]

    @property
    def dimension_names(self) -> tuple[str, ...]:
        """Included numeric attribute names, canonical column order."""
        return tuple(
            a.name for a in self.schema if a.kind == NUMERIC and a.included
        )

    @property
    def dimension_attributes(self) -> tuple[Attribute, ...]:
        return tuple(a for a in self.schema if a.kind == NUMERIC and a.included)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.points)

    @property
    def id_index(self) -> Mapping[str, int]:
        cached = getattr(self, "_id_index", None)
        if cached is None:
            cached = {p.id: i for i, p in enumerate(self.points)}
            object.__setattr__(self, "_id_index", cached)
        return cached

    def index_of(self, point_id: str) -> int:
        try:
            return self.id_index[point_id]
        except KeyError:
            from .errors import NotFoundError

            raise NotFoundError(f"unknown point id {point_id!r}") from None

    def attribute(self, name: str) -> Attribute:
        for a in self.schema:
            if a.name == name:
                return a
        from .errors import NotFoundError

        raise NotFoundError(f"unknown attribute {name!r}")

    def dimension_index(self, name: str) -> int:
        try:
            return self.dimension_names.index(name)
        except ValueError:
            from .errors import NotFoundError

            raise NotFoundError(f"unknown numeric attribute {name!r}") from None

    def categorical_values(self, name: str) -> tuple[str, ...]:
        """Raw tokens of one categorical attribute, point order."""
        pos = [i for i, a in enumerate(self.schema) if a.name == name]
        if not pos or self.schema[pos[0]].kind != CATEGORICAL:
            from .errors import NotFoundError

            raise NotFoundError(f"unknown categorical attribute {name!r}")
        i = pos[0]
        return tuple(str(p.values[i]) for p in self.points)

    def raw_row(self, point_id: str) -> tuple[float, ...]:
        """Raw (display-direction) numeric values of one point, dimension order."""
        return tuple(float(v) for v in self.raw[self.index_of(point_id)])

    # -- serialization -------------------------------------------------

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "schema": [
                {
                    "name": a.name,
                    "kind": a.kind,
                    "direction": a.direction,
                    "included": a.included,
                }
                for a in self.schema
            ],
            "points": [
                {"id": p.id, "label": p.label, "values": list(p.values)}
                for p in self.points
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "Dataset":
        schema = [
            Attribute(
                name=a["name"],
                kind=a["kind"],
                direction=a.get("direction"),
                included=bool(a.get("included", True)),
            )
            for a in obj["schema"]
        ]
        points = [
            DataPoint(id=p["id"], label=p["label"], values=tuple(p["values"]))
            for p in obj["points"]
        ]
        return cls.build(schema, points)

    @property
    def content_hash(self) -> str:
        """sha256 over schema + points; identical content, identical hash."""
        cached = getattr(self, "_content_hash", None)
        if cached is None:
            blob = json.dumps(self.to_json_obj(), sort_keys=True, ensure_ascii=False)
            cached = hashlib.sha256(blob.encode("utf-8")).hexdigest()
            object.__setattr__(self, "_content_hash", cached)
        return cached
