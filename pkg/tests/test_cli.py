import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from cli import app

FIXTURES = Path(__file__).parent / "fixtures"

runner = CliRunner(mix_stderr=False)


def invoke(*args, **kwargs):
    return runner.invoke(app, ["--log-level", "WARNING", *args], **kwargs)


@pytest.fixture(scope="module")
def scene3():
    result = invoke("generate", "--shape", "frame", "--k", "3")
    assert result.exit_code == 0, result.stderr
    return result.stdout


def test_generate_first_level():
    result = invoke("generate", "--shape", "frame", "--k", "1")
    assert result.exit_code == 0
    doc = json.loads(result.stdout)
    assert doc["version"] == 1 and doc["level"] == 1
    assert len(doc["shapes"]) == 1 and len(doc["probs"]) == 1


def test_generate_writes_a_file(tmp_path):
    out = tmp_path / "scene.json"
    result = invoke("generate", "--shape", "gamma", "--k", "2", "--out", str(out))
    assert result.exit_code == 0
    assert json.loads(out.read_text())["reflected"] is True


def test_generated_scene_checks(scene3):
    result = invoke("check", "-", input=scene3)
    assert result.exit_code == 0, result.stdout
    report = json.loads(result.stdout)
    assert report["passed"] is True
    assert report["level"] == 3


def test_check_only_stability(scene3):
    result = invoke("check", "-", "--stability", input=scene3)
    report = json.loads(result.stdout)
    assert report["constraints"]["constraints"] == {}
    assert len(report["stability"]) == 8


def test_bad_level_is_an_error_document():
    result = invoke("generate", "--k", "0")
    assert result.exit_code == 3
    assert json.loads(result.stderr)["error"]["code"] == "bad-k"


def test_missing_file_is_an_error_document():
    result = invoke("check", "/nonexistent/scene.json")
    assert result.exit_code == 3
    assert json.loads(result.stderr)["error"]["code"] == "io-error"


def test_unknown_preset():
    result = invoke("generate", "--shape", "circle", "--k", "1")
    assert result.exit_code == 3
    assert json.loads(result.stderr)["error"]["code"] == "unknown-shape"


def test_recognize_exit_codes():
    assert invoke("recognize", str(FIXTURES / "k3.json")).exit_code == 1
    accepted = invoke("recognize", str(FIXTURES / "c6.json"))
    assert accepted.exit_code == 0
    assert json.loads(accepted.stdout)["verdict"] == "accepted"
    assert invoke("recognize", str(FIXTURES / "c6.json"), "--budget", "1").exit_code == 2


def test_oriented_recognition_needs_arcs():
    result = invoke("recognize", str(FIXTURES / "k3.json"), "--oriented")
    assert result.exit_code == 3
    assert json.loads(result.stderr)["error"]["code"] == "no-arcs"


def test_graph_of_a_scene_is_recognized(scene3, tmp_path):
    graph = tmp_path / "g.json"
    dot = tmp_path / "g.dot"
    result = invoke("graph", "-", "--out", str(graph), "--dot", str(dot), input=scene3)
    assert result.exit_code == 0
    doc = json.loads(graph.read_text())
    assert len(doc["vertices"]) == 13 and doc["witness_prec"] is not None
    assert dot.read_text().lstrip("/ ").startswith("Oriented")
    result = invoke("recognize", str(graph), "--oriented")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["nodes"] == 0


def test_analyze():
    result = invoke("analyze", str(FIXTURES / "c6.json"))
    doc = json.loads(result.stdout)
    assert doc["clique_number"] == 2
    assert doc["triangle_free"] is True
    assert doc["chromatic"]["exact"] == 2
    only = json.loads(invoke("analyze", str(FIXTURES / "k3.json"), "--triangle-free").stdout)
    assert only["triangle_free"] is False and "chromatic" not in only


def test_render(scene3, tmp_path):
    out = tmp_path / "scene.svg"
    result = invoke("render", "-", "--svg", str(out), "--territories", input=scene3)
    assert result.exit_code == 0
    assert out.read_text().startswith("<svg") and "url(#hatch)" in out.read_text()


def test_graph_of_an_unconstrained_family():
    result = invoke("graph", str(FIXTURES / "c4_scene.json"))
    assert result.exit_code == 0, result.stderr
    doc = json.loads(result.stdout)
    assert doc["vertices"] == ["C", "B", "A"]
    assert sorted(doc["arcs"]) == [["A", "C"], ["B", "C"]]
    assert "witness_prec" not in doc


def test_analyze_writes_a_labelled_graph(tmp_path):
    dot = tmp_path / "c6.dot"
    result = invoke("analyze", str(FIXTURES / "c6.json"), "--dot", str(dot))
    assert result.exit_code == 0
    assert "χ = 2" in dot.read_text()
