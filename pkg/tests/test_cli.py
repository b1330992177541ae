import json
import subprocess
import sys

import pytest

from circix.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def c5(tmp_path):
    path = tmp_path / "c5.json"
    assert main(["gen", "cycle", "5", "--out", str(path)]) == 0
    return path


def test_gen_dot(capsys):
    rc, out, _ = run(capsys, "gen", "circular-clique", "5", "2", "--format", "dot")
    assert rc == 0 and out.count("--") == 5


def test_params(capsys, c5):
    rc, out, _ = run(capsys, "params", str(c5))
    obj = json.loads(out)
    assert rc == 0
    assert (obj["omega"], obj["chi"], obj["omega_c"], obj["chi_c"]) == (2, 3, "5/2", "5/2")
    assert obj["circular_perfect"] and not obj["perfect"]


def test_construct_verify_decode(capsys, c5, tmp_path):
    code = tmp_path / "code.json"
    rc, out, _ = run(capsys, "construct", str(c5), "--q", "3", "--out", str(code))
    info = json.loads(out)
    assert rc == 0 and info["rate"] == "5/2" and info["optimal"] and info["valid"]
    rc, out, _ = run(capsys, "verify", str(c5), str(code))
    assert rc == 0 and json.loads(out)["valid"]
    rc, out, _ = run(capsys, "decode-demo", str(c5), str(code), "--seed", "4")
    assert rc == 0 and json.loads(out)["ok"]


def test_construct_with_explicit_coloring(capsys, c5, tmp_path):
    col = tmp_path / "col.json"
    # colours the complement, whose edges join vertices two apart
    col.write_text(json.dumps({"k": 5, "d": 2, "assignment": [0, 1, 2, 3, 4]}))
    rc, out, _ = run(capsys, "construct", str(c5), "--coloring", str(col))
    assert rc == 0 and json.loads(out)["rate"] == "5/2"


def test_verify_invalid_code_exits_one(capsys, tmp_path):
    g = tmp_path / "e3.json"
    main(["gen", "edgeless", "3", "--out", str(g)])
    code = tmp_path / "sum.json"
    code.write_text(json.dumps({"q": 2, "n": 3, "t": 1, "l": 1,
                                "B": {"q": 2, "rows": 1, "cols": 3, "entries": [1, 1, 1]}}))
    rc, out, _ = run(capsys, "verify", str(g), str(code))
    assert rc == 1 and json.loads(out)["violations"] == [[0, 0], [1, 0], [2, 0]]


def test_oracles_and_reports(capsys, c5):
    rc, out, _ = run(capsys, "oracle", "confusion", str(c5), "--t", "2")
    assert rc == 0 and json.loads(out)["omega"] == 16 and json.loads(out)["bound"] == "2/1"
    rc, out, _ = run(capsys, "oracle", "exhaustive", str(c5))
    assert rc == 0 and json.loads(out)["beta_sl"] == 3
    rc, out, _ = run(capsys, "report", str(c5))
    assert rc == 0 and json.loads(out)["beta_certified"] == "5/2"
    rc, out, _ = run(capsys, "ng", str(c5))
    obj = json.loads(out)
    assert rc == 0 and obj["tensor_rank_ok"] and obj["product_interval"] == ["25/4", "25/4"]


def test_missing_field_names_file_and_field(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3}))
    rc, _, err = run(capsys, "params", str(bad))
    assert rc == 2 and "bad.json" in err and "side_info" in err


def test_missing_file_and_bad_json(capsys, tmp_path):
    rc, _, err = run(capsys, "params", str(tmp_path / "nope.json"))
    assert rc == 2 and "not found" in err
    p = tmp_path / "junk.json"
    p.write_text("{")
    rc, _, err = run(capsys, "params", str(p))
    assert rc == 2 and "invalid JSON" in err


def test_unknown_family(capsys):
    rc, _, err = run(capsys, "gen", "petersen")
    assert rc == 2 and "unknown family" in err


def test_limit_exit_code(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("CIRCIX_LIMIT_OVERRIDE", raising=False)
    g = tmp_path / "big.json"
    main(["gen", "cycle", "14", "--out", str(g)])
    rc, _, err = run(capsys, "params", str(g))
    assert rc == 3 and "instance too large" in err


def test_suite_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    rc, out, _ = run(capsys, "suite", "--max-n", "4", "--out", str(a))
    assert rc == 0 and json.loads(out)["all_passed"]
    run(capsys, "suite", "--max-n", "4", "--out", str(b))
    assert (a / "suite.csv").read_bytes() == (b / "suite.csv").read_bytes()
    assert (a / "suite.csv").read_text().startswith("check,graph,q,t,quantity,value,expected,passed\n")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "circix", "gen", "complete", "3"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["n"] == 3
