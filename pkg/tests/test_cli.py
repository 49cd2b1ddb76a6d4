import json
import subprocess
import sys

import pytest

from affschur.cli import main
from affschur.kclasses import FlagFun
from affschur.symfunc import LaurentPoly as L

M7 = [[1, 1, 1], [0, 1, 0], [1, 0, 2]]


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def run_json(argv, capsys):
    code, out = run(argv + ["--json"], capsys)
    data = json.loads(out)
    # emitted JSON round-trips
    assert json.loads(json.dumps(data, sort_keys=True)) == data
    return code, data


def test_orbits(capsys):
    _, data = run_json(["orbits", "--n", "2", "--d", "1"], capsys)
    assert data["total"] == 4
    _, data = run_json(["orbits", "--n", "1", "--d", "3"], capsys)
    assert data["total"] == 1 and data["groups"][0]["orbits"][0]["matrix"] == [[3]]
    _, data = run_json(["orbits", "--n", "2", "--d", "2"], capsys)
    assert data["total"] == 10


def test_hasse(capsys):
    _, data = run_json(["hasse", "--mu", "1,1", "--nu", "1,1"], capsys)
    assert (data["nodes"], data["edges"]) == (2, 1)
    _, data = run_json(["hasse", "--mu", "1,1,1", "--nu", "1,1,1"], capsys)
    assert (data["nodes"], data["edges"]) == (6, 8)
    code, out = run(["hasse", "--mu", "2", "--nu", "2"], capsys)
    assert code == 0 and out.startswith("digraph")


def test_bruhat(capsys):
    _, data = run_json(["bruhat", "--left", "[[1,0],[0,1]]", "--right", "[[0,1],[1,0]]", "--chain"], capsys)
    assert data == {"leq": True, "cover": True, "chain": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]}


def test_circ(capsys):
    _, data = run_json(["circ", "--factor", json.dumps(M7)], capsys)
    assert len(data) == 5
    _, data = run_json(["circ", "--left", "[[0,1],[1,0]]", "--right", "[[0,1],[1,0]]"], capsys)
    assert data == [[0, 1], [1, 0]]
    _, data = run_json(["circ", "--left", "[[1,0],[0,1]]", "--right", "[[2,0],[0,0]]"], capsys)
    assert data is None


def test_oracle(capsys):
    _, data = run_json(["oracle", "circ", "--left", "[[0,1],[1,0]]", "--right", "[[0,1],[1,0]]"], capsys)
    assert data == [[0, 1], [1, 0]]
    _, data = run_json(["oracle", "realized", "--mu", "1,1", "--nu", "1,1"], capsys)
    assert sorted(data) == [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]


def test_act(capsys):
    v = FlagFun(2, 1, {(1, 0): L.monomial((2,))})
    inp = json.dumps(v.to_json())
    _, data = run_json(["act", "--word", "[]", "--input", inp], capsys)
    assert FlagFun.from_json(data) == v
    word = json.dumps([{"kind": "E", "k": 1, "p": 1}])
    _, data = run_json(["act", "--word", word, "--input", inp], capsys)
    assert FlagFun.from_json(data) == FlagFun.single((0, 1), L.monomial((3,)))


def test_verify(capsys, tmp_path):
    out = tmp_path / "rep.json"
    code = main(["verify", "--n", "2", "--d", "2", "--window", "2", "--json", "--out", str(out)])
    assert code == 0
    reps = json.loads(out.read_text())
    assert all(r["ok"] for r in reps) and reps[0]["tag"] == "1.1"
    code, data = run_json(["verify", "--n", "3", "--d", "2", "--window", "1", "--relation", "plactic"], capsys)
    assert code == 0 and data[0]["tag"] == "plactic"


def test_matrix_file_input(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps(M7))
    _, data = run_json(["circ", "--factor", str(f)], capsys)
    assert len(data) == 5


def test_malformed_json_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["bruhat", "--left", "[[1,0],[0,1]", "--right", "[[1]]"])
    assert e.value.code == 2
    err = capsys.readouterr().err
    assert "line 1 column" in err


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "--n", "2", "--d", "2", "--relation", "9.9"])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        main(["verify", "--n", "2", "--d", "2", "--window", "-1"])


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "affschur", "orbits", "--n", "2", "--d", "1", "--json"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["total"] == 4
