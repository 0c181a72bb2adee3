import json
import os
import subprocess
import sys

import pytest

from mvpoly.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from mvpoly.tables import data_dir, dumps_table, save_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_mult_adjoint(capsys):
    code, out, _ = run(capsys, "mult", "A2", "1,1", "0,0")
    assert code == EXIT_OK
    assert out.splitlines()[0].endswith(": 2")
    assert "2 of 2 contained" in out


def test_mult_highest_weight(capsys):
    code, out, _ = run(capsys, "mult", "A2", "1,1", "1,1", "--json")
    doc = json.loads(out)
    assert doc["multiplicity"] == 1 and doc["total"] == 1


def test_mult_five_of_six(capsys):
    code, out, _ = run(capsys, "mult", "C2", "2,3", "2,-1", "--excluded")
    assert code == EXIT_OK
    assert "5 of 6 contained" in out
    assert "excluded: c2^2" in out


def test_tensor_examples(capsys):
    code, out, _ = run(capsys, "tensor", "A2", "1,0", "1,0")
    assert code == EXIT_OK
    assert out.splitlines()[:2] == ["2,0:1", "0,1:1"]
    assert "ok" in out.splitlines()[2]
    _, out, _ = run(capsys, "tensor", "A1", "1", "1")
    assert out.splitlines()[:2] == ["2:1", "0:1"]
    _, out, _ = run(capsys, "tensor", "A2", "1,1", "1,1", "1,1")
    assert out.strip() == "2"


def test_tensor_json(capsys):
    code, out, _ = run(capsys, "tensor", "C2", "1,2", "2,0", "--json")
    doc = json.loads(out)
    assert doc["dimension_identity"]["holds"]
    mults = {tuple(e["nu"]): e["multiplicity"] for e in doc["decomposition"]}
    assert mults[(1, 2)] == 2 and sum(mults.values()) == 9
    _, out, _ = run(capsys, "tensor", "C2", "1,2", "2,0", "1,2", "--json")
    assert sorted(json.loads(out)["witnesses"]) == ["b2^2", "d1"]


def test_list_polytopes_a2_svg(capsys, tmp_path):
    code, out, err = run(capsys, "list-polytopes", "A2", "-1,-1", "--svg", str(tmp_path))
    assert code == EXIT_OK
    assert out.startswith("2 MV polytope(s)")
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["deg_1_1_1.svg", "deg_1_1_2.svg", "deg_1_1_all.svg"]
    svg = (tmp_path / "deg_1_1_1.svg").read_text()
    assert svg.startswith("<?xml") and 'version="1.1"' in svg and "<polygon" in svg
    assert "α1" in (tmp_path / "deg_1_1_all.svg").read_text()


def test_list_polytopes_zero_and_json(capsys):
    code, out, _ = run(capsys, "list-polytopes", "C2", "0,0", "--json")
    doc = json.loads(out)
    assert doc["polytopes"] == [{"monomial": "1", "vertices": [["0", "0"]]}]
    _, out, _ = run(capsys, "list-polytopes", "C2", "-2,-2", "--json")
    assert [p["monomial"] for p in json.loads(out)["polytopes"]] == ["a1 c3", "b1^2", "b2^2", "d1"]


def test_list_polytopes_fund_basis(capsys):
    _, out, _ = run(capsys, "list-polytopes", "A2", "-1,-1", "--basis", "fund")
    # -omega1 - omega2 = -(a1 + a2)
    assert "degree -1,-1" in out


def test_list_polytopes_rank3_scene(capsys, tmp_path):
    code, _, _ = run(capsys, "list-polytopes", "A3", "-1,-2,-1", "--svg", str(tmp_path))
    assert code == EXIT_OK
    doc = json.loads((tmp_path / "deg_1_2_1_scene.json").read_text())
    assert doc["group"] == "A3" and len(doc["polytopes"]) == 5
    assert all(p["edges"] for p in doc["polytopes"] if len(p["vertices"]) > 1)


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "A1", "--height", "12")
    assert code == EXIT_OK and out.strip().endswith("verify A1: PASS")
    code, out, _ = run(capsys, "verify", "C2", "--coords", "2", "--hopf")
    assert code == EXIT_OK and "hopf table" in out


def test_verify_reflect_fails(capsys):
    code, out, _ = run(capsys, "verify", "C2", "--height", "4", "--coords", "1", "--hopf", "--convention", "reflect")
    assert code == EXIT_FAIL
    assert "verify C2: FAIL" in out


def test_verify_broken_table_fails(capsys, tmp_path, tables):
    from mvpoly.tables import Generator
    t = tables["A2"]
    bad = t.with_changes(generators=[Generator("b1", (-1, -1), t.generator("b2").polytope)])
    path = tmp_path / "bad.json"
    save_table(bad, path)
    code, out, _ = run(capsys, "verify", "A2", "--height", "4", "--coords", "1", "--table", str(path))
    assert code == EXIT_FAIL


def test_calibrate_a2(capsys, tmp_path):
    out_file = tmp_path / "A2.json"
    code, out, err = run(capsys, "calibrate", "A2", "--out", str(out_file))
    assert code == EXIT_OK
    assert out_file.read_text() == (data_dir() / "A2.json").read_text()
    assert "byte-identical" in err and ": yes" in err
    code, out, _ = run(capsys, "calibrate", "A2")
    assert out == (data_dir() / "A2.json").read_text()


@pytest.mark.parametrize("argv", [
    ["mult", "A2", "1,1,1", "0,0"],
    ["mult", "A2", "-1,0", "0,0"],
    ["mult", "A2", "x,y", "0,0"],
    ["mult", "G2", "1,0", "0,0"],
    ["tensor", "A2", "1,0", "0,-1"],
    ["list-polytopes", "A2", "1,0"],
    ["verify", "A2", "--hopf"],
    ["mult", "A2", "1,0", "0,0", "--table", "/nonexistent/table.json"],
    [],
])
def test_usage_errors(capsys, argv):
    code = main(argv)
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_bad_table_file_is_usage_error(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text("{")
    assert main(["mult", "A2", "1,0", "1,0", "--table", str(path)]) == EXIT_USAGE
    assert "line 1" in capsys.readouterr().err


def test_deterministic(capsys):
    first = run(capsys, "tensor", "C2", "2,1", "1,2", "--json")
    second = run(capsys, "tensor", "C2", "2,1", "1,2", "--json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mvpoly", "mult", "A2", "1,1", "0,0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "2 of 2 contained" in proc.stdout


def test_data_dir_env(tmp_path, tables):
    save_table(tables["A2"], tmp_path / "A2.json")
    env = {**os.environ, "MVPOLY_DATA_DIR": str(tmp_path)}
    cmd = [sys.executable, "-m", "mvpoly", "mult", "A2", "1,1", "0,0"]
    assert subprocess.run(cmd, capture_output=True, env=env, check=False).returncode == EXIT_OK
    env["MVPOLY_DATA_DIR"] = str(tmp_path / "missing")
    assert subprocess.run(cmd, capture_output=True, env=env, check=False).returncode == EXIT_USAGE
