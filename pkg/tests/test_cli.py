import csv
import io
import json
import subprocess
import sys

import pytest

from multitoric import analysis, cli
from multitoric.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--parts", "2,2,1")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert doc["s"] == 8 and doc["n"] == 5 and doc["r"] == 3
    assert doc["edges"][0] == {"index": 1, "u": 0, "v": 2}


def test_sort_parts(capsys):
    _, out, _ = run(capsys, "graph", "--parts", "1,2,2", "--sort-parts")
    assert json.loads(out)["parts"] == [2, 2, 1]


def test_points(capsys, tmp_path):
    path = tmp_path / "points.json"
    code, out, _ = run(capsys, "points", "--parts", "1,1,1", "--q", "3", "--out", str(path))
    assert code == 0 and out == ""
    pts = json.loads(path.read_text())
    assert len(pts) == 4 and all(p[0] == 1 for p in pts)


def test_generators(capsys):
    code, out, _ = run(capsys, "generators", "--parts", "1,1,2", "--q", "3", "--types", "I,II")
    doc = json.loads(out)
    assert code == 0 and doc["counts"] == {"I": 4, "II": 1}
    _, out, _ = run(capsys, "generators", "--parts", "1,1,2", "--q", "3", "--types", "I", "--pairwise-type-i")
    assert json.loads(out)["counts"] == {"I": 10}


def test_groebner(capsys):
    code, out, _ = run(capsys, "groebner", "--parts", "1,1,1", "--q", "3")
    doc = json.loads(out)
    assert code == 0 and len(doc["basis"]) == 2
    assert doc["order"] == {"kind": "grevlex", "priority": [3, 2, 1]}
    code, out, _ = run(capsys, "groebner", "--parts", "1,1,2", "--q", "3", "--ideal", "saturated")
    assert code == 0 and json.loads(out)["ideal"] == "saturated"


def test_hilbert_methods_agree(capsys):
    _, a, _ = run(capsys, "hilbert", "--parts", "2,1,1", "--q", "4", "--method", "oracle")
    _, b, _ = run(capsys, "hilbert", "--parts", "2,1,1", "--q", "4", "--method", "groebner")
    va, vb = json.loads(a)["values"], json.loads(b)["values"]
    assert va == vb and va[-1] == 27


def test_regularity(capsys):
    code, out, _ = run(capsys, "regularity", "--parts", "2,3", "--q", "4", "--method", "formula")
    assert code == 0 and json.loads(out)["regularity"] == {"formula": 4}
    _, out, _ = run(capsys, "regularity", "--parts", "2,2,1", "--q", "3")
    reg = json.loads(out)["regularity"]
    assert reg["formula"] == reg["oracle"] == reg["groebner"] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--parts", "1,1,2", "--q", "3")
    doc = json.loads(out)
    assert code == 0 and doc["cardinality"] == 8 and doc["ok"] and doc["schema"] == 1


def test_verify_failure_exit_code(capsys, monkeypatch):
    real = analysis.verify_generation

    def broken(spec, q, with_saturation=False):
        rep = real(spec, q)
        rep.containment_ok = False
        return rep

    monkeypatch.setattr(cli.analysis, "verify_generation", broken)
    code, out, _ = run(capsys, "verify", "--parts", "1,1,1", "--q", "3")
    assert code == 1 and json.loads(out)["ok"] is False


def test_witness_and_code(capsys):
    code, out, _ = run(capsys, "witness", "--parts", "2,1,1", "--q", "3")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "code", "--parts", "1,1,1", "--q", "3", "--degree", "1", "--min-distance")
    assert code == 0
    assert json.loads(out)["code"] == {"length": 4, "dimension": 3, "degree": 1, "min_distance": 2}


def test_grid(capsys, tmp_path):
    manifest = tmp_path / "m.json"
    manifest.write_text(json.dumps([{"parts": "1,1,1", "q": 3}, {"parts": [2, 2], "q": 4}]))
    out_dir = tmp_path / "reports"
    code, out, _ = run(capsys, "grid", "--manifest", str(manifest), "--jobs", "2", "--out-dir", str(out_dir))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0]) == analysis.CSV_COLUMNS
    assert [r["ok"] for r in rows] == ["ok", "ok"]
    assert sorted(p.name for p in out_dir.iterdir()) == ["K1-1-1_q3.json", "K2-2_q4.json"]


@pytest.mark.parametrize("argv", [
    ["graph", "--parts", "1,x"],
    ["graph", "--parts", "3"],
    ["points", "--parts", "1,1,1", "--q", "6"],
    ["regularity", "--parts", "1,1,1", "--q", "3", "--method", "magic"],
    ["verify", "--parts", "1,1,1"],
    ["nonsense"],
    ["witness", "--parts", "1,1,1", "--q", "3"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_work_bound_exit_code(capsys):
    code, out, err = run(capsys, "points", "--parts", "2,2,2,2", "--q", "16")
    assert code == 3 and "work bound" in err and out == ""


def test_deterministic_output(tmp_path, capsys):
    for name in ("a", "b"):
        main(["verify", "--parts", "2,2,1", "--q", "3", "--out", str(tmp_path / name)])
        main(["groebner", "--parts", "2,2,1", "--q", "4", "--out", str(tmp_path / (name + "gb"))])
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()
    assert (tmp_path / "agb").read_bytes() == (tmp_path / "bgb").read_bytes()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "multitoric", "graph", "--parts", "1,1,1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["s"] == 3
    res = subprocess.run([sys.executable, "-m", "multitoric", "--help"], capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "grid" in res.stdout
