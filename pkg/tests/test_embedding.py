from __future__ import annotations

import numpy as np
import pytest
from scipy.spatial.distance import cdist

from paretoscope.embedding import (
    EmbeddingConfig,
    ExactTSNE,
    distance_matrix,
    embed_skyline,
    glyph_payload,
    standardize,
    tsne_embed,
)
from paretoscope.errors import ConfigError, ContractViolation
from paretoscope.skyline import compute_skyline

from conftest import numeric_dataset


def clusters_5d(n_per=(33, 33, 34), seed=0):
    rng = np.random.default_rng(seed)
    centers = np.array(
        [[0.0] * 5, [10.0] * 5, [-10.0, 10.0, -10.0, 10.0, -10.0]]
    )
    X = np.vstack(
        [rng.normal(c, 1.0, size=(k, 5)) for k, c in zip(n_per, centers)]
    )
    labels = np.repeat(np.arange(3), n_per)
    return X, labels


class TestStandardize:
    def test_two_values(self):
        assert standardize([[1], [3]]).ravel().tolist() == [-1.0, 1.0]

    def test_constant_column_zeros(self):
        assert standardize([[4], [4], [4]]).ravel().tolist() == [0.0, 0.0, 0.0]

    def test_hand_value(self):
        out = standardize([[1], [2], [3]]).ravel()
        assert out[0] == pytest.approx(-1.224744871391589, abs=1e-12)
        assert out[1] == 0.0
        assert out[2] == pytest.approx(+1.224744871391589, abs=1e-12)

    def test_column_moments(self):
        rng = np.random.default_rng(1)
        Z = standardize(rng.normal(3.0, 7.0, size=(40, 3)))
        assert np.allclose(Z.mean(axis=0), 0.0, atol=1e-12)
        assert np.allclose(Z.std(axis=0), 1.0, atol=1e-12)

    def test_single_row_rejected(self):
        with pytest.raises(ContractViolation):
            standardize([[1, 2]])


class TestDistanceMatrix:
    def test_identical_rows_zero(self):
        D = distance_matrix([[1, 2], [1, 2]])
        assert D.tolist() == [[0.0, 0.0], [0.0, 0.0]]

    def test_three_four_five(self):
        D = distance_matrix([[0, 0], [3, 4]])
        assert D[0, 1] == 5.0

    def test_symmetry_zero_diagonal_triangle(self):
        rng = np.random.default_rng(2)
        X = rng.normal(size=(12, 4))
        D = distance_matrix(X)
        assert np.array_equal(D, D.T)
        assert np.all(np.diag(D) == 0.0)
        for i in range(12):
            for j in range(12):
                for k in range(12):
                    assert D[i, j] <= D[i, k] + D[k, j] + 1e-9


class TestEmbeddingConfig:
    def test_defaults_scale_with_size(self):
        assert EmbeddingConfig.default_for(100).perplexity == 30
        assert EmbeddingConfig.default_for(31).perplexity == 10
        assert EmbeddingConfig.default_for(3).perplexity == 1  # guarded floor

    def test_perplexity_must_stay_below_n(self):
        with pytest.raises(ConfigError):
            EmbeddingConfig(perplexity=10).validate(10)

    def test_iterations_must_cover_exaggeration(self):
        with pytest.raises(ConfigError):
            EmbeddingConfig(perplexity=5, iterations=100, exaggeration_iters=250).validate(50)

    def test_non_positive_perplexity(self):
        with pytest.raises(ConfigError):
            EmbeddingConfig(perplexity=0).validate(10)


class TestExactTSNE:
    def test_same_seed_identical_coordinates(self):
        X, _ = clusters_5d(n_per=(10, 10, 10))
        D = distance_matrix(standardize(X))
        a = ExactTSNE(perplexity=5, n_iter=300, exaggeration_iter=100, random_state=9).fit_transform(D)
        b = ExactTSNE(perplexity=5, n_iter=300, exaggeration_iter=100, random_state=9).fit_transform(D)
        assert np.array_equal(a, b)

    def test_different_seed_differs(self):
        X, _ = clusters_5d(n_per=(8, 8, 8))
        D = distance_matrix(standardize(X))
        a = ExactTSNE(perplexity=5, n_iter=260, exaggeration_iter=50, random_state=1).fit_transform(D)
        b = ExactTSNE(perplexity=5, n_iter=260, exaggeration_iter=50, random_state=2).fit_transform(D)
        assert not np.array_equal(a, b)

    def test_cluster_neighbor_purity(self):
        X, labels = clusters_5d()
        D = distance_matrix(standardize(X))
        Y = ExactTSNE(perplexity=30, random_state=42).fit_transform(D)
        E = cdist(Y, Y)
        np.fill_diagonal(E, np.inf)
        nn = np.argsort(E, axis=1)[:, :5]
        good = [(labels[nn[i]] == labels[i]).sum() >= 3 for i in range(len(Y))]
        assert np.mean(good) >= 0.8

    def test_duplicate_rows_land_close(self):
        rng = np.random.default_rng(3)
        X = rng.normal(size=(20, 4))
        X[7] = X[3]  # exact duplicate
        D = distance_matrix(standardize(X))
        Y = ExactTSNE(perplexity=5, n_iter=500, exaggeration_iter=100, random_state=0).fit_transform(D)
        dup = np.linalg.norm(Y[7] - Y[3])
        E = cdist(Y, Y)
        median = np.median(E[np.triu_indices(20, k=1)])
        assert dup < median

    def test_kl_curve_non_increasing_at_convergence(self):
        X, _ = clusters_5d()
        D = distance_matrix(standardize(X))
        model = ExactTSNE(perplexity=30, random_state=4).fit(D)
        tail = np.array(model.kl_curve_[-100:])
        assert np.all(np.diff(tail) <= 1e-3)
        assert model.kl_divergence_ == tail[-1]

    def test_coordinates_always_finite(self):
        X, _ = clusters_5d(n_per=(10, 10, 10))
        D = distance_matrix(standardize(X))
        Y = ExactTSNE(perplexity=5, n_iter=400, exaggeration_iter=100, random_state=5).fit_transform(D)
        assert np.all(np.isfinite(Y))

    def test_too_few_points(self):
        with pytest.raises(ContractViolation):
            ExactTSNE(perplexity=1).fit(np.zeros((2, 2)))

    def test_perplexity_too_large(self):
        D = distance_matrix(np.eye(4))
        with pytest.raises(ConfigError):
            ExactTSNE(perplexity=4).fit(D)

    def test_estimator_params_roundtrip(self):
        from sklearn.base import clone

        est = ExactTSNE(perplexity=7, n_iter=300, random_state=1)
        assert clone(est).get_params() == est.get_params()


class TestTsneEmbedWrapper:
    def test_coords_keyed_by_ids(self):
        X, _ = clusters_5d(n_per=(4, 4, 4))
        D = distance_matrix(standardize(X))
        cfg = EmbeddingConfig(perplexity=3, iterations=260, exaggeration_iters=50, seed=0)
        ids = [f"pt{i}" for i in range(12)]
        emb = tsne_embed(D, cfg, ids=ids)
        assert emb.ids == tuple(ids)
        assert set(emb.coords) == set(ids)
        assert np.isfinite(emb.final_kl_divergence)

    def test_id_count_mismatch(self):
        D = distance_matrix(np.eye(4))
        cfg = EmbeddingConfig(perplexity=2, iterations=260, exaggeration_iters=50)
        with pytest.raises(ContractViolation):
            tsne_embed(D, cfg, ids=["a", "b"])


class TestEmbedSkyline:
    def test_runs_on_skyline_points_only(self):
        rng = np.random.default_rng(8)
        base = rng.random(30)
        V = np.column_stack([base, 1 - base, rng.random(30)])
        ds = numeric_dataset(V)
        result = compute_skyline(ds)
        emb, cfg = embed_skyline(ds, result, seed=11)
        assert emb.ids == result.skyline_ids
        assert cfg.seed == 11

    def test_needs_three_skyline_points(self):
        ds = numeric_dataset([(5, 5), (1, 1), (2, 2)])  # skyline = single point
        with pytest.raises(ContractViolation):
            embed_skyline(ds)


class TestGlyphPayload:
    def test_sector_min_max_normalization(self):
        ds = numeric_dataset([(0, 1), (10, 0), (5, 0.5)])
        payload = glyph_payload(ds)
        assert payload.sector_values["p2"][0] == 0.5

    def test_focus_equal_sign(self):
        # ties in one attribute need a third to keep both points undominated
        ds = numeric_dataset([(1, 5, 5), (2, 4, 4), (1, 6, 4)])
        result = compute_skyline(ds)
        assert set(result.skyline_ids) == {"p0", "p1", "p2"}
        payload = glyph_payload(ds, result, focus="p0")
        assert payload.focus_diffs["p2"] == ("equal", "higher", "lower")
        assert payload.focus_diffs["p1"] == ("higher", "lower", "lower")
        assert payload.focus_diffs["p0"] == ("equal", "equal", "equal")

    def test_max_score_point_gets_full_inner(self, toy):
        payload = glyph_payload(toy)
        assert payload.inner_score["b"] == 1.0
        assert payload.inner_score["i"] == 0.5

    def test_all_zero_scores(self):
        ds = numeric_dataset([(1, 3), (2, 2), (3, 1)])
        payload = glyph_payload(ds)
        assert set(payload.inner_score.values()) == {0.0}

    def test_values_in_unit_interval(self):
        rng = np.random.default_rng(10)
        ds = numeric_dataset(rng.normal(size=(25, 4)) * 100)
        payload = glyph_payload(ds)
        for pid in payload.ids:
            assert all(0.0 <= v <= 1.0 for v in payload.sector_values[pid])
            assert 0.0 <= payload.inner_score[pid] <= 1.0

    def test_no_focus_no_diffs(self, toy):
        payload = glyph_payload(toy)
        assert payload.focus_diffs is None and payload.focus_id is None

    def test_focus_must_be_skyline(self, toy):
        with pytest.raises(ContractViolation):
            glyph_payload(toy, focus="a")

    def test_sectors_normalized_over_all_points(self, toy):
        # attr0 maximum over ALL points is 6 (point i); b sits at 2 of [1, 6]
        payload = glyph_payload(toy)
        assert payload.sector_values["b"][0] == pytest.approx((2 - 1) / 5)

    def test_degenerate_attribute_midpoint(self):
        ds = numeric_dataset([(1, 7), (2, 7)])
        payload = glyph_payload(ds)
        assert payload.sector_values["p1"][1] == 0.5
