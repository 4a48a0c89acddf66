import io
import json

import pytest

from coveralg.cli import main

from coveralg.complex_core import dual

from fixtures import K4BAR, SQUARE


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k4bar_file(tmp_path):
    p = tmp_path / "k4bar.json"
    p.write_text(K4BAR.to_json())
    return str(p)


def test_classify_k4bar(capsys, k4bar_file):
    code, out, _ = run(capsys, "classify", k4bar_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["balanced"]["value"] is False
    assert rep["balanced"]["special_odd_cycle"] is not None
    assert rep["standard_graded"]["status"] == "standard-up-to" and rep["standard_graded"]["max_k"] == 4
    assert rep["standard_graded"]["d_A"] == 1
    assert rep["mengerian"]["status"] == "gap"
    assert rep["mengerian"]["witness"]["c"] == [1] * 6
    assert rep["dual"]["facet_count"] == 7


def test_classify_is_deterministic(capsys, k4bar_file):
    first = run(capsys, "classify", k4bar_file)[1]
    assert run(capsys, "classify", k4bar_file)[1] == first


def test_decompose_dual_not_decomposable(capsys, monkeypatch):
    code, out, _ = run(capsys, "decompose", "--k", "2", "--c", "1,1,1,1,1,1",
                       stdin=dual(K4BAR).to_json(), monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["decomposable"] is False


def test_cycles_on_square(capsys, monkeypatch):
    code, out, _ = run(capsys, "cycles", "--parity", "odd", stdin=SQUARE.to_json(), monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["witness"] is None


@pytest.mark.parametrize("argv", [
    ["covers", "--k", "2"], ["dual"], ["polarize", "--c", "1,2,1,1,1,1"], ["canonical"],
    ["unimodular"], ["mengerian", "--c", "[1,1,1,1,1,1]"], ["ideal", "--kind", "symbolic", "--k", "2"],
    ["ideal"], ["skeleton"], ["classify", "--format", "text"],
])
def test_every_command_runs(capsys, k4bar_file, argv):
    code, out, _ = run(capsys, argv[0], k4bar_file, *argv[1:])
    assert code == 0 and out.strip()


def test_random_input_uses_seed(capsys):
    a = run(capsys, "dual", "random:5:4", "--seed", "3")[1]
    b = run(capsys, "dual", "random:5:4", "--seed", "3")[1]
    assert a == b


def test_malformed_input_exits_1(capsys, monkeypatch, tmp_path):
    assert run(capsys, "dual", stdin='{"n": 2}', monkeypatch=monkeypatch)[0] == 1
    assert run(capsys, "dual", stdin="not json", monkeypatch=monkeypatch)[0] == 1
    assert run(capsys, "dual", str(tmp_path / "missing.json"))[0] == 1
    code, _, err = run(capsys, "decompose", "--c", "1,1", stdin=SQUARE.to_json(), monkeypatch=monkeypatch)
    assert code == 1 and json.loads(err)["error"] == "malformed_input"


def test_guard_exceeded_exits_2(capsys, k4bar_file):
    code, _, err = run(capsys, "covers", k4bar_file, "--guard", "search_size=10")
    assert code == 2
    assert json.loads(err)["limit"] == "search_size"


def test_unknown_guard_exits_1(capsys, k4bar_file):
    assert run(capsys, "dual", k4bar_file, "--guard", "bogus=3")[0] == 1


def test_consistency_failure_exits_3(capsys, k4bar_file, monkeypatch):
    monkeypatch.setattr("coveralg.cycles.find_special_cycle", lambda *a, **k: None)
    code, _, err = run(capsys, "classify", k4bar_file)
    assert code == 3 and json.loads(err)["error"] == "consistency"
