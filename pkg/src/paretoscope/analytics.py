"""Attribute statistics, standardized pairwise differences, rankings,
distributions, domination partitions, brushing, and point search.

Standardized differences run on canonical values, so a positive difference
always means "first argument better". The scale is the population standard
deviation over skyline points only; a zero-spread attribute yields 0 rather
than NaN.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .dataset import Dataset
from .errors import ConflictError, ContractViolation, NotFoundError
from .skyline import SkylineResult, compute_skyline, dominated_set

DEFAULT_BINS = 40


@dataclass(frozen=True)
class Histogram:
    """Fixed-bin counts over all points' raw values plus skyline tick marks."""

    attribute: str
    edges: tuple[float, ...]
    counts: tuple[int, ...]
    skyline_ticks: tuple[float, ...]


@dataclass(frozen=True)
class AttributeStats:
    """Per-attribute statistics over one (dataset, skyline) pair."""

    skyline_ids: tuple[str, ...]
    attribute_names: tuple[str, ...]
    mean: np.ndarray  # canonical mean over skyline points, per attribute
    std: np.ndarray  # population std over skyline points, per attribute
    skyline_canonical: np.ndarray  # (k, m) canonical rows, skyline order
    histograms: tuple[Histogram, ...]

    def row_of(self, point_id: str) -> int:
        try:
            return self.skyline_ids.index(point_id)
        except ValueError:
            raise ContractViolation(f"{point_id!r} is not a skyline member") from None


def build_attribute_stats(
    dataset: Dataset,
    result: SkylineResult | None = None,
    *,
    bins: int = DEFAULT_BINS,
) -> AttributeStats:
    if result is None:
        result = compute_skyline(dataset)
    rows = [dataset.index_of(pid) for pid in result.skyline_ids]
    sky = dataset.canonical[rows]
    mean = sky.mean(axis=0)
    std = sky.std(axis=0)  # population form
    histograms = tuple(
        value_distribution(dataset, l, bins, result=result)
        for l in range(dataset.n_dims)
    )
    return AttributeStats(
        skyline_ids=result.skyline_ids,
        attribute_names=dataset.dimension_names,
        mean=mean,
        std=std,
        skyline_canonical=sky,
        histograms=histograms,
    )


def standardized_diff(stats: AttributeStats, i: str, k: str, l: int) -> float:
    """(canonical i - canonical k) / skyline std at attribute l; 0 on zero spread."""
    ri, rk = stats.row_of(i), stats.row_of(k)
    if l < 0 or l >= len(stats.attribute_names):
        raise ContractViolation(f"attribute index {l} out of range")
    sigma = float(stats.std[l])
    if sigma == 0.0:
        return 0.0
    return float((stats.skyline_canonical[ri, l] - stats.skyline_canonical[rk, l]) / sigma)


@dataclass(frozen=True)
class DiffMatrix:
    """Anchored pairwise differences for the tabular expansion.

    ``delta[k][l]`` is the standardized difference of skyline point k minus
    the anchor at attribute l (column point minus anchor). ``summary[j][k]``
    is the anchor-minus-k sum over every attribute except j (the diverging
    bar height when column j is on display). ``ranks[l][k]`` is the
    competition rank of point k at attribute l.
    """

    anchor_id: str
    skyline_ids: tuple[str, ...]
    attribute_names: tuple[str, ...]
    delta: np.ndarray  # (k, m)
    summary: np.ndarray  # (m, k)
    ranks: np.ndarray  # (m, k) int


def build_diff_matrix(
    dataset: Dataset,
    result: SkylineResult | None = None,
    *,
    anchor_id: str,
    stats: AttributeStats | None = None,
) -> DiffMatrix:
    if result is None:
        result = compute_skyline(dataset)
    if stats is None:
        stats = build_attribute_stats(dataset, result)
    anchor_row = stats.row_of(anchor_id)

    sky = stats.skyline_canonical
    safe_std = np.where(stats.std == 0.0, 1.0, stats.std)
    delta = (sky - sky[anchor_row]) / safe_std
    delta[:, stats.std == 0.0] = 0.0

    k, m = delta.shape
    anchor_minus = -delta  # Δ terms: anchor minus column point
    total = anchor_minus.sum(axis=1)
    summary = total[None, :] - anchor_minus.T  # drop attribute j per row

    ranks = np.empty((m, k), dtype=int)
    for l in range(m):
        col = sky[:, l]
        ranks[l] = 1 + (col[None, :] > col[:, None]).sum(axis=1)

    return DiffMatrix(
        anchor_id=anchor_id,
        skyline_ids=stats.skyline_ids,
        attribute_names=stats.attribute_names,
        delta=delta,
        summary=summary,
        ranks=ranks,
    )


def summary_diff(diff: DiffMatrix, i: str, k: str, exclude: int) -> float:
    """Anchor-minus-k standardized difference summed over all attributes but one."""
    if i != diff.anchor_id:
        raise ContractViolation(
            f"diff matrix is anchored at {diff.anchor_id!r}, not {i!r}"
        )
    if exclude < 0 or exclude >= len(diff.attribute_names):
        raise ContractViolation(f"attribute index {exclude} out of range")
    try:
        col = diff.skyline_ids.index(k)
    except ValueError:
        raise ContractViolation(f"{k!r} is not a skyline member") from None
    return float(diff.summary[exclude, col])


def attribute_ranking(
    dataset: Dataset, skyline_ids: Sequence[str], l: int
) -> dict[str, int]:
    """Competition ranking on canonical values: best = 1, ties share, next skips."""
    if not skyline_ids:
        raise ContractViolation("skyline id list must be non-empty")
    if l < 0 or l >= dataset.n_dims:
        raise ContractViolation(f"attribute index {l} out of range")
    values = np.array(
        [dataset.canonical[dataset.index_of(pid), l] for pid in skyline_ids]
    )
    ranks = 1 + (values[None, :] > values[:, None]).sum(axis=1)
    return {pid: int(r) for pid, r in zip(skyline_ids, ranks)}


def value_distribution(
    dataset: Dataset,
    l: int,
    bins: int = DEFAULT_BINS,
    *,
    result: SkylineResult | None = None,
) -> Histogram:
    """Uniform-bin histogram of one attribute's raw values over ALL points.

    The maximum value lands in the last bin. A constant column collapses to a
    single bin holding every point. Skyline ticks are the raw values of the
    skyline members.
    """
    if bins < 1:
        raise ContractViolation(f"bin count must be >= 1, got {bins}")
    if l < 0 or l >= dataset.n_dims:
        raise ContractViolation(f"attribute index {l} out of range")
    if result is None:
        result = compute_skyline(dataset)
    values = dataset.raw[:, l]
    lo, hi = float(values.min()), float(values.max())
    if lo == hi:
        counts = np.array([values.size])
        edges = np.array([lo, hi])
    else:
        counts, edges = np.histogram(values, bins=bins, range=(lo, hi))
    ticks = tuple(
        float(dataset.raw[dataset.index_of(pid), l]) for pid in result.skyline_ids
    )
    return Histogram(
        attribute=dataset.dimension_names[l],
        edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
        skyline_ticks=ticks,
    )


@dataclass(frozen=True)
class DominationPartition:
    """Exact-dominator-subset partition of the points dominated by a selection.

    ``cells`` maps every non-empty subset T of the selection (keyed by the
    tuple of member ids in selection order) to the points dominated by all of
    T and by no other selected point.
    """

    selected: tuple[str, ...]
    cells: Mapping[tuple[str, ...], tuple[str, ...]]
    union_size: int
    per_point_score: Mapping[str, int]


def domination_partition(
    dataset: Dataset,
    result: SkylineResult,
    selected: Sequence[str],
) -> DominationPartition:
    """Partition for 2..4 selected skyline points; one cell per non-empty subset."""
    sel = tuple(selected)
    if not 2 <= len(sel) <= 4:
        raise ContractViolation(
            f"comparison selection must hold 2 to 4 skyline points, got {len(sel)}"
        )
    if len(set(sel)) != len(sel):
        raise ContractViolation("comparison selection contains duplicate ids")
    for pid in sel:
        if not result.is_skyline(pid):
            raise ContractViolation(f"{pid!r} is not a skyline member")

    dominated = {pid: set(dominated_set(dataset, pid, result=result)) for pid in sel}
    union: set[str] = set().union(*dominated.values())

    cells: dict[tuple[str, ...], list[str]] = {}
    for bits in range(1, 1 << len(sel)):
        key = tuple(pid for i, pid in enumerate(sel) if bits >> i & 1)
        cells[key] = []
    order = {pid: i for i, pid in enumerate(dataset.ids)}
    for q in sorted(union, key=order.__getitem__):
        key = tuple(pid for pid in sel if q in dominated[pid])
        cells[key].append(q)

    return DominationPartition(
        selected=sel,
        cells={k: tuple(v) for k, v in cells.items()},
        union_size=len(union),
        per_point_score={pid: result.dominating_score[pid] for pid in sel},
    )


def exclusive_dominated_details(
    dataset: Dataset,
    part: DominationPartition,
    members: Sequence[str],
) -> list[tuple[float, ...]]:
    """Raw attribute vectors of one cell's points, for pop-up radar rendering."""
    key = tuple(pid for pid in part.selected if pid in set(members))
    if key != tuple(members) or key not in part.cells:
        raise NotFoundError(f"no partition cell for members {tuple(members)!r}")
    return [dataset.raw_row(pid) for pid in part.cells[key]]


def brush_filter(
    dataset: Dataset,
    skyline_ids: Sequence[str],
    ranges: Mapping[str, tuple[float, float]],
) -> dict[str, bool]:
    """Pass/fail per skyline point: raw value inside every brushed [lo, hi].

    Inclusive on both ends; no ranges means everything passes. Display-state
    only — never triggers a skyline recompute.
    """
    cols: list[tuple[int, float, float]] = []
    for name, (lo, hi) in ranges.items():
        if lo > hi:
            raise ContractViolation(
                f"brush range for {name!r} has lo > hi ({lo} > {hi})"
            )
        cols.append((dataset.dimension_index(name), float(lo), float(hi)))
    out: dict[str, bool] = {}
    for pid in skyline_ids:
        row = dataset.raw[dataset.index_of(pid)]
        out[pid] = all(lo <= row[c] <= hi for c, lo, hi in cols)
    return out


@dataclass(frozen=True)
class SearchOutcome:
    kind: str  # "skyline" | "dominated" | "not_found"
    point_id: str | None = None
    dominators: tuple[str, ...] = ()


def search_point(dataset: Dataset, result: SkylineResult, query: str) -> SearchOutcome:
    """Resolve a query to a skyline hit, a dominator list, or not-found.

    Exact id match wins; otherwise case-insensitive label match. Multiple
    label matches are ambiguous and rejected with the candidate ids.
    """
    if query in dataset.id_index:
        pid = query
    else:
        needle = query.casefold()
        candidates = [p.id for p in dataset.points if p.label.casefold() == needle]
        if len(candidates) > 1:
            raise ConflictError(
                f"label {query!r} is ambiguous",
                location={"candidates": candidates},
            )
        if not candidates:
            return SearchOutcome(kind="not_found")
        pid = candidates[0]
    if result.is_skyline(pid):
        return SearchOutcome(kind="skyline", point_id=pid)
    return SearchOutcome(
        kind="dominated", point_id=pid, dominators=result.dominators_of[pid]
    )
