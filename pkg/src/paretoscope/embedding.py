"""Standardization, distance matrix, deterministic exact t-SNE, and glyph data.

The embedder is exact (quadratic) t-SNE driven by a precomputed distance
matrix: per-point Gaussian bandwidths found by bisection against the target
perplexity, symmetrized affinities, Student-t output kernel with one degree
of freedom, and momentum gradient descent with early exaggeration. Identical
input, config, and seed reproduce identical coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy.spatial.distance import pdist, squareform
from sklearn.base import BaseEstimator

from .dataset import Dataset
from .errors import ConfigError, ContractViolation
from .skyline import SkylineResult, compute_skyline
from .validation import as_float_matrix, as_square_matrix, check_fitted

_EPS = np.finfo(float).eps
ENTROPY_TOL = 1e-5
MAX_BISECT_STEPS = 50
MOMENTUM_SWITCH_ITER = 250


def standardize(matrix) -> np.ndarray:
    """Z-score each column (population std); zero-variance columns become zeros."""
    X = as_float_matrix(matrix, name="matrix", min_rows=2)
    mean = X.mean(axis=0)
    std = X.std(axis=0)
    safe = np.where(std == 0.0, 1.0, std)
    Z = (X - mean) / safe
    Z[:, std == 0.0] = 0.0
    return Z


def distance_matrix(z) -> np.ndarray:
    """Pairwise Euclidean distances: symmetric with a zero diagonal."""
    Z = as_float_matrix(z, name="z", min_rows=2)
    return squareform(pdist(Z, metric="euclidean"))


@dataclass(frozen=True)
class EmbeddingConfig:
    perplexity: float
    iterations: int = 1000
    learning_rate: float = 200.0
    early_exaggeration: float = 12.0
    exaggeration_iters: int = 250
    seed: int = 42

    @classmethod
    def default_for(cls, n: int, *, seed: int = 42) -> "EmbeddingConfig":
        """Reference settings scaled for small point counts."""
        perplexity = max(1, min(30, (n - 1) // 3))
        return cls(perplexity=float(perplexity), seed=seed)

    def validate(self, n: int) -> None:
        if self.perplexity <= 0:
            raise ConfigError(f"perplexity must be positive, got {self.perplexity}")
        if self.perplexity >= n:
            raise ConfigError(
                f"perplexity {self.perplexity} must be below the point count {n}"
            )
        if self.learning_rate <= 0:
            raise ConfigError(f"learning rate must be positive, got {self.learning_rate}")
        if self.iterations < self.exaggeration_iters:
            raise ConfigError(
                f"iterations ({self.iterations}) must cover the early-exaggeration "
                f"phase ({self.exaggeration_iters})"
            )


def _affinities(distances: np.ndarray, perplexity: float) -> np.ndarray:
    """Symmetrized joint affinities with per-point bandwidth bisection."""
    n = distances.shape[0]
    sq = distances.astype(float) ** 2
    target = math.log(perplexity)
    cond = np.zeros((n, n))

    for i in range(n):
        beta, beta_min, beta_max = 1.0, -np.inf, np.inf
        di = np.delete(sq[i], i)
        row = np.exp(-di * beta)
        for _ in range(MAX_BISECT_STEPS):
            sum_p = row.sum()
            if sum_p <= 0:
                sum_p = _EPS
            entropy = math.log(sum_p) + beta * float((di * row).sum()) / sum_p
            diff = entropy - target
            if abs(diff) <= ENTROPY_TOL:
                break
            if diff > 0:
                beta_min = beta
                beta = beta * 2.0 if beta_max == np.inf else (beta + beta_max) / 2.0
            else:
                beta_max = beta
                beta = beta / 2.0 if beta_min == -np.inf else (beta + beta_min) / 2.0
            row = np.exp(-di * beta)
        row = row / max(row.sum(), _EPS)
        cond[i, np.arange(n) != i] = row

    P = (cond + cond.T) / (2.0 * n)
    return np.maximum(P, 1e-12)


class ExactTSNE(BaseEstimator):
    """Exact t-SNE over a precomputed distance matrix, 2D output.

    Momentum is 0.5 before iteration 250 and 0.8 after; affinities are
    exaggerated for the first ``exaggeration_iter`` iterations. Initial
    coordinates are drawn from N(0, 1e-4) with the given seed.
    """

    def __init__(
        self,
        perplexity: float = 30.0,
        n_iter: int = 1000,
        learning_rate: float = 200.0,
        early_exaggeration: float = 12.0,
        exaggeration_iter: int = 250,
        random_state: int = 42,
    ):
        self.perplexity = perplexity
        self.n_iter = n_iter
        self.learning_rate = learning_rate
        self.early_exaggeration = early_exaggeration
        self.exaggeration_iter = exaggeration_iter
        self.random_state = random_state

    def _config(self) -> EmbeddingConfig:
        return EmbeddingConfig(
            perplexity=self.perplexity,
            iterations=self.n_iter,
            learning_rate=self.learning_rate,
            early_exaggeration=self.early_exaggeration,
            exaggeration_iters=self.exaggeration_iter,
            seed=self.random_state,
        )

    def fit(self, D, y=None):
        D = as_square_matrix(D, name="D")
        n = D.shape[0]
        if n < 3:
            raise ContractViolation(f"t-SNE needs at least 3 points, got {n}")
        self._config().validate(n)

        P = _affinities(D, self.perplexity)
        rng = np.random.default_rng(self.random_state)
        Y = rng.normal(0.0, 1e-4, size=(n, 2))
        update = np.zeros_like(Y)
        gains = np.ones_like(Y)
        kl_curve: list[float] = []

        for it in range(self.n_iter):
            exaggerated = it < self.exaggeration_iter
            P_eff = P * self.early_exaggeration if exaggerated else P

            diff = Y[:, None, :] - Y[None, :, :]
            num = 1.0 / (1.0 + (diff**2).sum(axis=2))
            np.fill_diagonal(num, 0.0)
            Q = np.maximum(num / num.sum(), _EPS)

            PQ = (P_eff - Q) * num
            grad = 4.0 * (PQ[:, :, None] * diff).sum(axis=1)

            momentum = 0.5 if it < MOMENTUM_SWITCH_ITER else 0.8
            same_sign = np.sign(grad) == np.sign(update)
            gains = np.where(same_sign, gains * 0.8, gains + 0.2)
            np.clip(gains, 0.01, None, out=gains)
            update = momentum * update - self.learning_rate * gains * grad
            Y = Y + update
            Y = Y - Y.mean(axis=0)

            kl_curve.append(float((P * np.log(P / Q)).sum()))
            if (it + 1) % 100 == 0 and not np.all(np.isfinite(Y)):
                raise ContractViolation(
                    f"embedding diverged to non-finite coordinates at iteration {it + 1}"
                )

        if not np.all(np.isfinite(Y)):
            raise ContractViolation("embedding produced non-finite coordinates")
        self.embedding_ = Y
        self.kl_divergence_ = kl_curve[-1]
        self.kl_curve_ = tuple(kl_curve)
        self.n_features_in_ = n
        return self

    def fit_transform(self, D, y=None) -> np.ndarray:
        return self.fit(D).embedding_

    def transform(self, D) -> np.ndarray:
        check_fitted(self, ["embedding_"])
        return self.embedding_


@dataclass(frozen=True)
class Embedding2D:
    """2D coordinates per skyline id plus the final KL divergence."""

    ids: tuple[str, ...]
    coords: Mapping[str, tuple[float, float]]
    final_kl_divergence: float
    kl_curve: tuple[float, ...]


def tsne_embed(
    d,
    cfg: EmbeddingConfig,
    ids: Sequence[str] | None = None,
) -> Embedding2D:
    """Run the embedder on a distance matrix and key coordinates by id."""
    D = as_square_matrix(d, name="d")
    n = D.shape[0]
    id_list = tuple(ids) if ids is not None else tuple(str(i) for i in range(n))
    if len(id_list) != n:
        raise ContractViolation(f"got {len(id_list)} ids for {n} points")
    model = ExactTSNE(
        perplexity=cfg.perplexity,
        n_iter=cfg.iterations,
        learning_rate=cfg.learning_rate,
        early_exaggeration=cfg.early_exaggeration,
        exaggeration_iter=cfg.exaggeration_iters,
        random_state=cfg.seed,
    )
    Y = model.fit_transform(D)
    coords = {pid: (float(x), float(y)) for pid, (x, y) in zip(id_list, Y)}
    return Embedding2D(
        ids=id_list,
        coords=coords,
        final_kl_divergence=model.kl_divergence_,
        kl_curve=model.kl_curve_,
    )


def embed_skyline(
    dataset: Dataset,
    result: SkylineResult | None = None,
    *,
    cfg: EmbeddingConfig | None = None,
    seed: int | None = None,
) -> tuple[Embedding2D, EmbeddingConfig]:
    """Standardize skyline rows, build distances, and embed them."""
    if result is None:
        result = compute_skyline(dataset)
    k = len(result.skyline_ids)
    if k < 3:
        raise ContractViolation(f"t-SNE needs at least 3 skyline points, got {k}")
    if cfg is None:
        cfg = EmbeddingConfig.default_for(k, seed=42 if seed is None else seed)
    elif seed is not None:
        cfg = EmbeddingConfig(
            perplexity=cfg.perplexity,
            iterations=cfg.iterations,
            learning_rate=cfg.learning_rate,
            early_exaggeration=cfg.early_exaggeration,
            exaggeration_iters=cfg.exaggeration_iters,
            seed=seed,
        )
    rows = [dataset.index_of(pid) for pid in result.skyline_ids]
    Z = standardize(dataset.canonical[rows])
    D = distance_matrix(Z)
    return tsne_embed(D, cfg, ids=result.skyline_ids), cfg


HIGHER = "higher"
EQUAL = "equal"
LOWER = "lower"


@dataclass(frozen=True)
class GlyphPayload:
    """Per-skyline-point glyph data for the projection view.

    Sector values are min-max normalized per attribute over ALL points'
    canonical values; the inner score is the dominating score normalized by
    the skyline maximum. Focus difference signs are present only in focus
    mode.
    """

    ids: tuple[str, ...]
    attribute_names: tuple[str, ...]
    sector_values: Mapping[str, tuple[float, ...]]
    inner_score: Mapping[str, float]
    focus_id: str | None = None
    focus_diffs: Mapping[str, tuple[str, ...]] | None = None


def glyph_payload(
    dataset: Dataset,
    result: SkylineResult | None = None,
    focus: str | None = None,
) -> GlyphPayload:
    if result is None:
        result = compute_skyline(dataset)
    if focus is not None and not result.is_skyline(focus):
        raise ContractViolation(f"focus point {focus!r} is not a skyline member")

    X = dataset.canonical
    lo = X.min(axis=0)
    hi = X.max(axis=0)
    span = hi - lo
    degenerate = span == 0.0
    safe_span = np.where(degenerate, 1.0, span)

    sectors: dict[str, tuple[float, ...]] = {}
    for pid in result.skyline_ids:
        v = (X[dataset.index_of(pid)] - lo) / safe_span
        v = np.where(degenerate, 0.5, v)
        sectors[pid] = tuple(float(x) for x in v)

    max_score = max(result.dominating_score.values(), default=0)
    inner = {
        pid: (result.dominating_score[pid] / max_score if max_score else 0.0)
        for pid in result.skyline_ids
    }

    focus_diffs = None
    if focus is not None:
        f_row = X[dataset.index_of(focus)]
        focus_diffs = {}
        for pid in result.skyline_ids:
            row = X[dataset.index_of(pid)]
            focus_diffs[pid] = tuple(
                HIGHER if a > b else LOWER if a < b else EQUAL
                for a, b in zip(row, f_row)
            )

    return GlyphPayload(
        ids=result.skyline_ids,
        attribute_names=dataset.dimension_names,
        sector_values=sectors,
        inner_score=inner,
        focus_id=focus,
        focus_diffs=focus_diffs,
    )
