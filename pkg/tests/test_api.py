import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from main import app

FIXTURES = Path(__file__).parent / "fixtures"

client = TestClient(app)


def fixture(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture(scope="module")
def scene2():
    response = client.post("/scenes/generate", json={"shape": "frame", "k": 2})
    assert response.status_code == 200
    return response.json()


def test_generate(scene2):
    assert scene2["level"] == 2
    assert len(scene2["shapes"]) == 3 and len(scene2["probs"]) == 2
    assert all(isinstance(v, str) for v in scene2["probs"][0]["rect"])


def test_generate_from_rects():
    rects = [["0", "1", "0", "3"], ["0", "3", "0", "1"]]
    response = client.post("/scenes/generate", json={"shape": rects, "k": 1})
    assert response.status_code == 200
    assert response.json()["reflected"] is True


def test_bad_level_is_a_bad_request():
    response = client.post("/scenes/generate", json={"shape": "frame", "k": 0})
    assert response.status_code == 400
    assert response.json()["detail"]["code"] == "bad-k"


def test_not_a_pouna_shape():
    response = client.post("/scenes/generate", json={"shape": [["0", "1", "0", "1"]], "k": 1})
    assert response.status_code == 400
    assert response.json()["detail"]["code"] == "not-pouna"


def test_check(scene2):
    response = client.post("/scenes/check", json={"scene": scene2})
    assert response.status_code == 200
    assert response.json()["passed"] is True
    response = client.post("/scenes/check", json={"scene": scene2, "stability": False})
    assert response.json()["stability"] == []


def test_check_reports_a_tampered_scene(scene2):
    tampered = dict(scene2, probs=scene2["probs"] + [dict(scene2["probs"][0], id="again")])
    report = client.post("/scenes/check", json={"scene": tampered}).json()
    assert report["passed"] is False
    assert report["overlapping_probs"]


def test_graph(scene2):
    response = client.post("/scenes/graph", json=scene2)
    assert response.status_code == 200
    doc = response.json()
    assert len(doc["vertices"]) == 3 and len(doc["arcs"]) == 1
    assert "edges" not in doc


def test_render(scene2):
    response = client.post("/scenes/render", params={"territories": True}, json=scene2)
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("image/svg+xml")
    assert "url(#hatch)" in response.text


def test_recognize():
    rejected = client.post("/graphs/recognize", json={"graph": fixture("k3.json")})
    assert rejected.status_code == 200
    assert rejected.json()["verdict"] == "rejected"
    accepted = client.post("/graphs/recognize", json={"graph": fixture("c6.json")}).json()
    assert accepted["verdict"] == "accepted"
    assert len(accepted["orientation"]) == 6


def test_oriented_recognition(scene2):
    graph = client.post("/scenes/graph", json=scene2).json()
    cert = client.post("/graphs/recognize", json={"graph": graph, "oriented": True}).json()
    assert cert["verdict"] == "accepted" and cert["nodes"] == 0
    response = client.post("/graphs/recognize", json={"graph": fixture("k3.json"), "oriented": True})
    assert response.status_code == 400
    assert response.json()["detail"]["code"] == "no-arcs"


def test_analyze():
    doc = client.post("/graphs/analyze", json={"graph": fixture("c6.json")}).json()
    assert doc["vertices"] == 6 and doc["edges"] == 6
    assert doc["chromatic"]["exact"] == 2


def test_malformed_request():
    response = client.post("/graphs/analyze", json={"graph": {"edges": []}})
    assert response.status_code == 422


def test_graph_of_an_unconstrained_family():
    response = client.post("/scenes/graph", json=fixture("c4_scene.json"))
    assert response.status_code == 200
    doc = response.json()
    assert sorted(doc["arcs"]) == [["A", "C"], ["B", "C"]]
    assert "witness_prec" not in doc
