import pytest
from fastapi.testclient import TestClient

from template_chroma.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealth:
    def test_health(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"

    def test_routes_cover_every_cli_command(self):
        from template_chroma.cli import build_parser

        parser = build_parser()
        cli_paths = set()

        def walk(p):
            for action in p._actions:
                if hasattr(action, "choices") and isinstance(action.choices, dict):
                    for sub in action.choices.values():
                        walk(sub)
            if p.get_default("path"):
                cli_paths.add(p.get_default("path"))

        walk(parser)
        service_paths = {route.path for route in app.routes}
        assert cli_paths <= service_paths
        assert len(cli_paths) == 15


class TestTemplateEndpoints:
    def test_analyze(self, client):
        r = client.post(
            "/template/analyze", json={"points": [[0, 0], [0, 1], [1, 1]], "continuum": 1}
        )
        assert r.status_code == 200
        assert r.json() == {"e": 2, "simple": True, "connected": True, "chi": "aleph_0"}

    def test_enumerate(self, client):
        r = client.post("/template/enumerate", json={"dim": 2, "k": 2})
        assert r.status_code == 200
        assert r.json()["count"] == 3

    def test_images(self, client):
        r = client.post("/template/images", json={"points": [[0], [1]]})
        assert r.json() == {"count": 1, "images": [{"dim": 1, "points": [[0], [1]]}]}

    def test_domain_error_is_400(self, client):
        r = client.post("/template/analyze", json={"points": [[0], [0]], "continuum": 1})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "duplicate_point"

    def test_shape_error_is_422(self, client):
        r = client.post("/template/analyze", json={"points": "nope", "continuum": 1})
        assert r.status_code == 422


class TestChiEndpoints:
    def test_symbolic(self, client):
        r = client.post(
            "/chi/symbolic", json={"points": [[0, 0], [0, 1], [1, 1]], "continuum": 3}
        )
        body = r.json()
        assert body["chi"] == "aleph_2"
        assert body["e"] == 2
        assert body["setting"] == {"continuum": 3}
        assert "citation" in body

    def test_exact_without_witness(self, client):
        r = client.post(
            "/chi/exact", json={"grid": [2, 2], "points": [[0, 0], [0, 1], [1, 1]]}
        )
        assert r.json() == {"chi": 2}

    def test_exact_with_witness(self, client):
        r = client.post(
            "/chi/exact",
            json={
                "grid": [2, 2],
                "points": [[0, 0], [0, 1], [1, 1]],
                "include_witness": True,
            },
        )
        body = r.json()
        assert body["chi"] == 2
        assert sorted(set(body["witness"])) == [0, 1]

    def test_achievable(self, client):
        r = client.post("/chi/achievable", json={"k": 2, "continuum": 2})
        assert r.json() == {"finite_min": 1, "infinite": ["aleph_0", "aleph_2"]}

    def test_forbidden(self, client):
        r = client.post(
            "/chi/forbidden", json={"k": 3, "kappa": "aleph_0", "continuum": 2}
        )
        body = r.json()
        assert {m["e"] for m in body["members"]} == {1, 2}


class TestEmbedEndpoints:
    def test_lift(self, client):
        r = client.post("/embed/lift", json={"points": [[0], [1]]})
        body = r.json()
        assert body["template"] == {"dim": 2, "points": [[0, 0], [1, 1]]}
        assert body["e"] == 1

    def test_lift_reduce(self, client):
        r = client.post("/embed/lift", json={"points": [[0, 0], [0, 1]], "reduce": True})
        body = r.json()
        assert body["witness"] == [1]
        assert body["template"] == {"dim": 1, "points": [[0], [1]]}

    def test_verify(self, client):
        r = client.post(
            "/embed/verify", json={"points": [[0], [1]], "samples": 100, "seed": 5}
        )
        body = r.json()
        assert body["ok"] is True
        assert body["samples_checked"] == 100

    def test_verify_negative_control(self, client):
        r = client.post(
            "/embed/verify",
            json={
                "points": [[0, 0], [0, 1], [1, 1]],
                "control_points": [[0, 0], [1, 1], [2, 2]],
                "samples": 100,
            },
        )
        assert r.json()["ok"] is False


class TestPolyEndpoints:
    def test_gen_parse_round_trip(self, client):
        gen = client.post("/poly/gen", json={"points": [[0, 0], [0, 1], [1, 1]]}).json()
        parsed = client.post(
            "/poly/parse", json={"text": gen["text"], "k": gen["k"], "n": gen["n"]}
        ).json()
        assert parsed["ast"] == gen["ast"]

    def test_zero_graph(self, client):
        r = client.post(
            "/poly/zero-graph",
            json={
                "text": "(x0_0 - x1_0)^2",
                "k": 2,
                "n": 2,
                "points": [[0, 0], [0, 1], [1, "1/2"]],
            },
        )
        assert r.json()["edges"] == [[0, 1]]

    def test_syntax_error(self, client):
        r = client.post("/poly/parse", json={"text": "x0_0 + ", "k": 2, "n": 1})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "syntax_error"


class TestRegistryEndpoints:
    def test_fox(self, client):
        r = client.post(
            "/registry/query",
            json={"name": "fox", "param": 1, "kappa": "aleph_0", "continuum": 1},
        )
        assert r.json() == {"avoidable": True}

    def test_distance(self, client):
        r = client.post("/registry/query", json={"name": "distance", "cardinality": "aleph_1"})
        assert r.json() == {"chi_upper": "aleph_1"}

    def test_missing_kappa(self, client):
        r = client.post("/registry/query", json={"name": "fox", "param": 1})
        assert r.status_code == 400


class TestShiftEndpoints:
    def test_graph(self, client):
        r = client.post("/shift/graph", json={"n": 3})
        assert r.json() == {
            "k": 2,
            "vertices": [[0, 1], [0, 2], [1, 2]],
            "edges": [[0, 2]],
        }

    def test_color(self, client):
        r = client.post("/shift/color", json={"point": ["1/3", "2/3"]})
        assert r.json() == {"value": "1/2", "tag": 0}

    def test_color_zero(self, client):
        r = client.post("/shift/color", json={"point": [4, 4]})
        assert r.json() == {"value": "0", "tag": None}
