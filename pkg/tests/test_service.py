from __future__ import annotations

import numpy as np
import pytest
from fastapi.testclient import TestClient

from paretoscope.service import create_app

TOY_CSV = "id,x,y\na,1,5\nb,2,6\nc,1,1\ni,6,2\nj,4,4\n"
TOY_SCHEMA = {
    "idColumn": "id",
    "attributes": [
        {"name": "x", "kind": "numeric", "direction": "max"},
        {"name": "y", "kind": "numeric", "direction": "max"},
    ],
}


@pytest.fixture
def client(tmp_path):
    return TestClient(create_app(tmp_path / "registry"))


def upload_toy(client, dataset_id="toy"):
    r = client.post(
        "/datasets",
        json={"id": dataset_id, "name": "Toy", "csv": TOY_CSV, "schema": TOY_SCHEMA},
    )
    assert r.status_code == 201
    return r.json()


class TestDatasets:
    def test_empty_registry_lists_nothing(self, client):
        r = client.get("/datasets")
        assert r.status_code == 200 and r.json() == []

    def test_upload_then_list(self, client):
        desc = upload_toy(client)
        assert desc["rowCount"] == 5 and desc["attrCount"] == 2
        listed = client.get("/datasets").json()
        assert [d["id"] for d in listed] == ["toy"]
        assert listed[0]["snapshotHash"] == desc["snapshotHash"]

    def test_upload_bad_schema_is_config_error(self, client):
        r = client.post(
            "/datasets",
            json={"name": "bad", "csv": TOY_CSV, "schema": {"attributes": []}},
        )
        assert r.status_code == 422
        assert r.json()["code"] == "config_error"

    def test_upload_duplicate_id_conflict(self, client):
        upload_toy(client)
        r = client.post(
            "/datasets",
            json={"id": "toy", "name": "Toy", "csv": TOY_CSV, "schema": TOY_SCHEMA},
        )
        assert r.status_code == 409
        assert r.json()["code"] == "conflict"

    def test_upload_bad_csv_cell(self, client):
        r = client.post(
            "/datasets",
            json={
                "name": "bad",
                "csv": "id,x,y\na,1,oops\n",
                "schema": TOY_SCHEMA,
            },
        )
        assert r.status_code == 400
        body = r.json()
        assert body["code"] == "parse_error"
        assert body["location"] == {"row": 2, "column": "y"}


class TestSkylineEndpoint:
    def test_skyline_body(self, client):
        desc = upload_toy(client)
        r = client.get(f"/snapshots/{desc['snapshotHash']}/skyline")
        body = r.json()
        assert body["skyline"]["ids"] == ["b", "i", "j"]
        assert body["skyline"]["dominatingScore"] == {"b": 2, "i": 1, "j": 1}
        assert body["skyline"]["dominatorsOf"]["c"] == ["b", "i", "j"]
        assert body["pointCount"] == 5

    def test_unknown_snapshot(self, client):
        r = client.get("/snapshots/doesnotexist/skyline")
        assert r.status_code == 404 and r.json()["code"] == "not_found"

    def test_reads_are_stateless(self, client):
        desc = upload_toy(client)
        url = f"/snapshots/{desc['snapshotHash']}/skyline"
        assert client.get(url).content == client.get(url).content


class TestRefine:
    def test_empty_config_reproduces_base(self, client):
        desc = upload_toy(client)
        r = client.post("/datasets/toy/refine", json={})
        body = r.json()
        assert body["snapshotHash"] == desc["snapshotHash"]
        assert body["ids"] == ["b", "i", "j"]

    def test_removing_sole_dominator_promotes_point(self, client):
        # d dominates x; every other point is small. Cutting d readmits x.
        csv = "id,x,y\nd,2,2\nx,1,1\nu,0,1\nv,1,0\nw,0,0\nz,0.5,0.5\n"
        client.post(
            "/datasets",
            json={"id": "wit", "name": "wit", "csv": csv, "schema": TOY_SCHEMA},
        )
        base = client.post("/datasets/wit/refine", json={}).json()
        assert base["ids"] == ["d"]
        refined = client.post(
            "/datasets/wit/refine",
            json={"numericPredicates": [{"attribute": "x", "op": "lte", "bound": 1}]},
        ).json()
        assert "x" in refined["ids"]
        assert refined["snapshotHash"] != base["snapshotHash"]

    def test_attribute_exclusion_promotion_end_to_end(self, client):
        csv = "id,x,y\np,5,1\nq,5,9\nr,3,7\n"
        client.post(
            "/datasets",
            json={"id": "wit2", "name": "wit2", "csv": csv, "schema": TOY_SCHEMA},
        )
        base = client.post("/datasets/wit2/refine", json={}).json()
        assert base["ids"] == ["q"]
        refined = client.post(
            "/datasets/wit2/refine", json={"excludedAttributes": ["y"]}
        ).json()
        assert set(refined["ids"]) == {"p", "q"}
        sky = client.get(f"/snapshots/{refined['snapshotHash']}/skyline").json()
        assert sky["skyline"]["ids"] == refined["ids"]

    def test_excluding_everything_is_config_error(self, client):
        upload_toy(client)
        r = client.post(
            "/datasets/toy/refine", json={"excludedAttributes": ["x", "y"]}
        )
        assert r.status_code == 422 and r.json()["code"] == "config_error"

    def test_unknown_dataset(self, client):
        r = client.post("/datasets/ghost/refine", json={})
        assert r.status_code == 404


class TestAnalyticsEndpoints:
    def test_detail_includes_decisive_and_diff(self, client):
        desc = upload_toy(client)
        r = client.get(f"/snapshots/{desc['snapshotHash']}/points/b/detail")
        body = r.json()
        assert body["decisive"]["minimal"]  # full space always decisive
        assert body["rawValues"] == {"x": 2, "y": 6}
        assert body["diff"]["anchorId"] == "b"
        assert len(body["diff"]["delta"]) == 3  # one row per skyline point
        assert body["rankings"]["y"] == 1

    def test_detail_unknown_point(self, client):
        desc = upload_toy(client)
        r = client.get(f"/snapshots/{desc['snapshotHash']}/points/zz/detail")
        assert r.status_code == 404 and r.json()["code"] == "not_found"

    def test_detail_dominated_point_is_contract_violation(self, client):
        desc = upload_toy(client)
        r = client.get(f"/snapshots/{desc['snapshotHash']}/points/a/detail")
        assert r.status_code == 422 and r.json()["code"] == "contract_violation"

    def test_compare_flow(self, client):
        desc = upload_toy(client)
        r = client.post(
            f"/snapshots/{desc['snapshotHash']}/compare", json={"ids": ["b", "j"]}
        )
        body = r.json()
        cells = {tuple(c["members"]): c["pointIds"] for c in body["partition"]["cells"]}
        assert cells[("b",)] == ["a"]
        assert cells[("b", "j")] == ["c"]
        assert body["partition"]["unionSize"] == 2
        assert body["radar"]["b"]["dominatingScore"] == 2

    def test_compare_selection_cap(self, client):
        desc = upload_toy(client)
        r = client.post(
            f"/snapshots/{desc['snapshotHash']}/compare",
            json={"ids": ["b", "i", "j", "b", "i"]},
        )
        assert r.status_code == 422 and r.json()["code"] == "contract_violation"

    def test_search_dominated_point(self, client):
        desc = upload_toy(client)
        r = client.get(f"/snapshots/{desc['snapshotHash']}/search", params={"q": "c"})
        body = r.json()
        assert body["kind"] == "dominated"
        assert body["dominators"] == ["b", "i", "j"]

    def test_search_not_found(self, client):
        desc = upload_toy(client)
        r = client.get(f"/snapshots/{desc['snapshotHash']}/search", params={"q": "zz"})
        assert r.json()["kind"] == "not_found"

    def test_distribution(self, client):
        desc = upload_toy(client)
        r = client.get(
            f"/snapshots/{desc['snapshotHash']}/attributes/x/distribution",
            params={"bins": 5},
        )
        body = r.json()
        assert sum(body["counts"]) == 5
        assert len(body["skylineTicks"]) == 3

    def test_distribution_unknown_attribute(self, client):
        desc = upload_toy(client)
        r = client.get(
            f"/snapshots/{desc['snapshotHash']}/attributes/zz/distribution"
        )
        assert r.status_code == 404

    def test_subspace(self, client):
        desc = upload_toy(client)
        r = client.post(
            f"/snapshots/{desc['snapshotHash']}/subspace", json={"attributes": ["x"]}
        )
        assert r.json()["ids"] == ["i"]

    def test_projection_deterministic_per_seed(self, client):
        desc = upload_toy(client)
        url = f"/snapshots/{desc['snapshotHash']}/projection"
        a = client.get(url, params={"seed": 7})
        b = client.get(url, params={"seed": 7})
        c = client.get(url, params={"seed": 8})
        assert a.content == b.content
        assert a.content != c.content
        body = a.json()
        assert set(body["embedding"]["coords"]) == {"b", "i", "j"}
        assert body["glyphs"]["innerScore"]["b"] == 1.0

    def test_projection_focus_mode(self, client):
        desc = upload_toy(client)
        r = client.get(
            f"/snapshots/{desc['snapshotHash']}/projection",
            params={"seed": 7, "focus": "b"},
        )
        body = r.json()
        assert body["glyphs"]["focusId"] == "b"
        assert body["glyphs"]["focusDiffs"]["b"] == ["equal", "equal"]


class TestMalformedBodies:
    """Random garbage must produce structured ApiError responses, never crashes."""

    @pytest.mark.parametrize(
        "path,payload",
        [
            ("/datasets", {"name": 3}),
            ("/datasets", {"csv": None}),
            ("/datasets", [1, 2, 3]),
            ("/datasets", "just a string"),
            ("/datasets/toy/refine", {"numericPredicates": "nope"}),
            ("/datasets/toy/refine", {"excludedAttributes": 7}),
            ("/datasets/toy/refine", [[]]),
        ],
    )
    def test_post_garbage(self, client, path, payload):
        upload_toy(client)
        r = client.post(path, json=payload)
        assert 400 <= r.status_code < 500
        body = r.json()
        assert "code" in body and "message" in body

    def test_fuzz_random_json(self, client):
        desc = upload_toy(client)
        rng = np.random.default_rng(0)
        paths = [
            "/datasets",
            "/datasets/toy/refine",
            f"/snapshots/{desc['snapshotHash']}/compare",
            f"/snapshots/{desc['snapshotHash']}/subspace",
        ]
        atoms = [None, True, 0, -1, 3.5, "x", [], {}, {"ids": 1}, {"attributes": {}}]
        for _ in range(60):
            path = paths[int(rng.integers(len(paths)))]
            payload = atoms[int(rng.integers(len(atoms)))]
            r = client.post(path, json=payload)
            assert r.status_code < 500  # never crashes
            if r.status_code >= 400:
                assert "code" in r.json()  # structured ApiError

    def test_non_json_body(self, client):
        r = client.post(
            "/datasets", content=b"\x00\x01binary", headers={"content-type": "application/json"}
        )
        assert 400 <= r.status_code < 500
        assert "code" in r.json()
