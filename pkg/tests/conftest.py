from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from paretoscope.dataset import Attribute, DataPoint, Dataset


def numeric_dataset(matrix, directions=None, ids=None) -> Dataset:
    """Build a Dataset from a plain numeric matrix; all-maximize by default."""
    rows = [list(r) for r in matrix]
    m = len(rows[0]) if rows else 0
    directions = directions or ["max"] * m
    schema = [
        Attribute(name=f"attr{j}", kind="numeric", direction=directions[j])
        for j in range(m)
    ]
    ids = ids or [f"p{i}" for i in range(len(rows))]
    points = [
        DataPoint(id=pid, label=pid, values=tuple(row))
        for pid, row in zip(ids, rows)
    ]
    return Dataset.build(schema, points)


def toy5() -> Dataset:
    """The canonical 5-point, 2-attribute example with skyline {b, i, j}."""
    return numeric_dataset(
        [(1, 5), (2, 6), (1, 1), (6, 2), (4, 4)],
        ids=["a", "b", "c", "i", "j"],
    )


@pytest.fixture
def toy():
    return toy5()
