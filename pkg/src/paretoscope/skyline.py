"""Skyline computation: dominance semantics and a block-nested-loop finder.

All comparisons run on canonical (higher-is-better) values. The finder keeps
an in-window candidate list while scanning points in input order; at desk
scale the window needs no eviction, so after the scan it holds exactly the
skyline. Worst case O(n^2 m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .dataset import Dataset
from .errors import ContractViolation
from .validation import as_float_matrix, as_vector, check_dims, check_fitted


def dominates(p, q, dims: Iterable[int] | None = None) -> bool:
    """True iff p >= q on every dimension and p > q on at least one."""
    pv = as_vector(p, name="p")
    qv = as_vector(q, name="q")
    if pv.shape != qv.shape:
        raise ContractViolation(
            f"points must share dimensions, got {pv.shape} vs {qv.shape}"
        )
    idx = list(check_dims(dims, pv.shape[0]))
    ps, qs = pv[idx], qv[idx]
    return bool(np.all(ps >= qs) and np.any(ps > qs))


class SkylineBNL(BaseEstimator, TransformerMixin):
    """Block-nested-loop skyline finder over a higher-is-better matrix.

    Parameters
    ----------
    dims : sequence of int, optional
        Column indices to compare on; all columns when None.

    Attributes after fit
    --------------------
    skyline_mask_ : bool array (n,)
        True for undominated rows.
    skyline_indices_ : int array
        Skyline row indices in input order.
    dominating_score_ : int array (n,)
        For skyline rows, the number of non-skyline rows they dominate;
        zero elsewhere.
    dominators_ : tuple of int arrays
        For every row, the skyline row indices dominating it (empty for
        skyline members).
    """

    def __init__(self, dims: Sequence[int] | None = None):
        self.dims = dims

    def fit(self, X, y=None):
        X = as_float_matrix(X, name="X")
        if X.shape[0] == 0:
            raise ContractViolation("cannot compute a skyline of an empty dataset")
        dims = check_dims(self.dims, X.shape[1])
        V = X[:, dims]
        n = V.shape[0]

        window: list[int] = []
        for i in range(n):
            row = V[i]
            if window:
                W = V[window]
                ge = (W >= row).all(axis=1)
                gt = (W > row).any(axis=1)
                if bool(np.any(ge & gt)):
                    continue
                beaten = (row >= W).all(axis=1) & (row > W).any(axis=1)
                if beaten.any():
                    window = [w for w, b in zip(window, beaten) if not b]
            window.append(i)

        mask = np.zeros(n, dtype=bool)
        mask[window] = True
        sky = np.array(window, dtype=int)
        non_sky = np.flatnonzero(~mask)

        score = np.zeros(n, dtype=int)
        dominators: list[np.ndarray] = [np.empty(0, dtype=int)] * n
        if non_sky.size:
            S = V[sky]
            N = V[non_sky]
            dom = (S[:, None, :] >= N[None, :, :]).all(axis=2) & (
                S[:, None, :] > N[None, :, :]
            ).any(axis=2)
            score[sky] = dom.sum(axis=1)
            for col, j in enumerate(non_sky):
                dominators[j] = sky[dom[:, col]]

        self.n_features_in_ = X.shape[1]
        self.dims_ = dims
        self.skyline_mask_ = mask
        self.skyline_indices_ = sky
        self.dominating_score_ = score
        self.dominators_ = tuple(dominators)
        return self

    def transform(self, X):
        """Select the skyline rows of the fitted matrix."""
        check_fitted(self, ["skyline_mask_"])
        X = as_float_matrix(X, name="X")
        if X.shape[0] != self.skyline_mask_.shape[0]:
            raise ContractViolation(
                "transform expects the matrix the finder was fitted on"
            )
        return X[self.skyline_mask_]


@dataclass(frozen=True)
class SkylineResult:
    """Skyline membership plus the domination bookkeeping behind it."""

    dims: tuple[int, ...]
    skyline_ids: tuple[str, ...]
    dominating_score: Mapping[str, int]
    dominators_of: Mapping[str, tuple[str, ...]]

    def is_skyline(self, point_id: str) -> bool:
        return point_id in self.dominating_score


def compute_skyline(dataset: Dataset, dims: Iterable[int] | None = None) -> SkylineResult:
    """Skyline of the dataset on the given canonical dimensions.

    Output order follows input point order. The dominating score counts only
    non-skyline points; every non-skyline point gets its non-empty list of
    skyline dominators.
    """
    if dataset.n_points == 0:
        raise ContractViolation("cannot compute a skyline of an empty dataset")
    dims_t = check_dims(dims, dataset.n_dims)
    finder = SkylineBNL(dims=dims_t).fit(dataset.canonical)
    ids = dataset.ids
    skyline_ids = tuple(ids[i] for i in finder.skyline_indices_)
    score = {ids[i]: int(finder.dominating_score_[i]) for i in finder.skyline_indices_}
    dominators = {
        ids[j]: tuple(ids[s] for s in finder.dominators_[j])
        for j in range(dataset.n_points)
        if not finder.skyline_mask_[j]
    }
    return SkylineResult(
        dims=dims_t,
        skyline_ids=skyline_ids,
        dominating_score=score,
        dominators_of=dominators,
    )


def dominated_set(
    dataset: Dataset,
    point_id: str,
    dims: Iterable[int] | None = None,
    *,
    result: SkylineResult | None = None,
) -> list[str]:
    """Non-skyline points dominated by one skyline member; length equals its score."""
    if result is None:
        result = compute_skyline(dataset, dims)
    if not result.is_skyline(point_id):
        raise ContractViolation(f"{point_id!r} is not a skyline member")
    V = dataset.canonical[:, list(result.dims)]
    p = V[dataset.index_of(point_id)]
    sky = {s for s in result.skyline_ids}
    dom = (p >= V).all(axis=1) & (p > V).any(axis=1)
    return [pid for pid, d in zip(dataset.ids, dom) if d and pid not in sky]


def dominators_of(
    dataset: Dataset,
    point_id: str,
    dims: Iterable[int] | None = None,
    *,
    result: SkylineResult | None = None,
) -> list[str]:
    """Skyline points dominating the given point; empty iff it is in the skyline."""
    if result is None:
        result = compute_skyline(dataset, dims)
    dataset.index_of(point_id)  # raises NotFoundError for unknown ids
    if result.is_skyline(point_id):
        return []
    return list(result.dominators_of[point_id])
