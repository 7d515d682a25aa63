"""Subspace skylines and minimal decisive subspaces over the attribute lattice.

A subspace is a non-empty subset of the canonical dimensions, represented as
a bitmask. A subspace B is decisive for a skyline point p when p's projection
stays in the subspace skyline of every superset of B up to the full space.
Decisiveness is therefore upward closed; only the inclusion-minimal decisive
subspaces are reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .dataset import Dataset
from .errors import CapacityError, ContractViolation
from .skyline import SkylineBNL, SkylineResult, compute_skyline

MAX_LATTICE_DIMS = 16


def dims_to_mask(dims: Iterable[int], n_dims: int) -> int:
    mask = 0
    for d in dims:
        d = int(d)
        if d < 0 or d >= n_dims:
            raise ContractViolation(
                f"dimension index {d} out of range for {n_dims} dimensions"
            )
        mask |= 1 << d
    if mask == 0:
        raise ContractViolation("subspace must be non-empty")
    return mask


def mask_to_dims(mask: int) -> tuple[int, ...]:
    return tuple(d for d in range(mask.bit_length()) if mask >> d & 1)


def _as_mask(sub: int | Iterable[int], n_dims: int) -> int:
    if isinstance(sub, int):
        if sub <= 0 or sub >= 1 << n_dims:
            raise ContractViolation(
                f"subspace bitmask {sub} invalid for {n_dims} dimensions"
            )
        return sub
    return dims_to_mask(sub, n_dims)


def subspace_skyline(dataset: Dataset, sub: int | Iterable[int]) -> list[str]:
    """Points whose projection onto the subspace is undominated, input order.

    Computed over the whole dataset, not just full-space skyline members.
    """
    if dataset.n_points == 0:
        raise ContractViolation("cannot compute a skyline of an empty dataset")
    mask = _as_mask(sub, dataset.n_dims)
    finder = SkylineBNL(dims=mask_to_dims(mask)).fit(dataset.canonical)
    return [dataset.ids[i] for i in finder.skyline_indices_]


def subspace_membership_map(dataset: Dataset, point_id: str) -> dict[int, bool]:
    """For every non-empty subspace, whether the point is in its subspace skyline.

    Keys are bitmasks 1 .. 2^m - 1. Guarded to m <= 16 lattices.
    """
    m = dataset.n_dims
    if m > MAX_LATTICE_DIMS:
        raise CapacityError(
            f"attribute lattice too large: {m} dimensions exceeds {MAX_LATTICE_DIMS}"
        )
    row = dataset.index_of(point_id)
    X = dataset.canonical
    p = X[row]
    others = np.ones(dataset.n_points, dtype=bool)
    others[row] = False

    membership: dict[int, bool] = {}
    for mask in range(1, 1 << m):
        dims = list(mask_to_dims(mask))
        V = X[:, dims]
        pv = p[dims]
        dominated = (V >= pv).all(axis=1) & (V > pv).any(axis=1) & others
        membership[mask] = not bool(dominated.any())
    return membership


def is_decisive(membership: Mapping[int, bool], mask: int, n_dims: int) -> bool:
    """Literal check: membership must hold for every superset of the mask."""
    full = (1 << n_dims) - 1
    rest = full & ~mask
    sub = rest
    while True:
        if not membership[mask | sub]:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & rest


@dataclass(frozen=True)
class DecisiveSubspaceSet:
    """Inclusion-minimal decisive subspaces of one skyline point."""

    point_id: str
    minimal: tuple[tuple[int, ...], ...]

    def named(self, dataset: Dataset) -> tuple[tuple[str, ...], ...]:
        names = dataset.dimension_names
        return tuple(tuple(names[d] for d in dims) for dims in self.minimal)


def decisive_subspaces(
    dataset: Dataset,
    point_id: str,
    *,
    result: SkylineResult | None = None,
) -> DecisiveSubspaceSet:
    """Minimal decisive subspaces, ordered by cardinality then attribute order.

    The full space is always decisive for a skyline member, so the result is
    never empty.
    """
    dataset.index_of(point_id)  # raises NotFoundError for unknown ids
    if result is None:
        result = compute_skyline(dataset)
    if not result.is_skyline(point_id):
        raise ContractViolation(f"{point_id!r} is not a skyline member")

    m = dataset.n_dims
    membership = subspace_membership_map(dataset, point_id)
    size = 1 << m
    member = np.zeros(size, dtype=bool)
    for mask, ok in membership.items():
        member[mask] = ok

    # Superset conjunction: decisive[B] = AND of member over every B' >= B.
    decisive = member.copy()
    idx = np.arange(size)
    for d in range(m):
        bit = 1 << d
        lower = idx[(idx & bit) == 0]
        decisive[lower] &= decisive[lower | bit]

    minimal: list[tuple[int, ...]] = []
    for mask in range(1, size):
        if not decisive[mask]:
            continue
        has_decisive_subset = any(
            (mask & ~(1 << d)) != 0 and decisive[mask & ~(1 << d)]
            for d in mask_to_dims(mask)
        )
        if not has_decisive_subset:
            minimal.append(mask_to_dims(mask))
    minimal.sort(key=lambda dims: (len(dims), dims))
    return DecisiveSubspaceSet(point_id=point_id, minimal=tuple(minimal))
