import json

import pytest

from inoue.cli import run
from inoue.linalg import format_matrix

from conftest import F, F3, G, companion, diag7, nondiag7


@pytest.fixture
def mat(tmp_path):
    def write(M, name="m.txt"):
        p = tmp_path / name
        p.write_text(format_matrix(M))
        return str(p)
    return write


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_check_accepts(mat, capsys):
    assert run(["check", mat(companion(F))]) == 0
    assert "accepted" in capsys.readouterr().out


def test_check_json_echoes_input(mat, capsys):
    M = companion(F3)
    assert run(["check", "--json", mat(M)]) == 0
    rep = _json(capsys)
    assert rep["schema_version"] == "1.0" and rep["command"] == "check"
    assert rep["input"]["matrix"] == [list(r) for r in M.rows]
    assert rep["exit_code"] == 0
    assert isinstance(rep["timings"]["total_us"], int)
    assert rep["result"]["accepted"] is True


def test_check_rejects(mat, capsys):
    from inoue.linalg import IntMatrix
    assert run(["check", "--json", mat(IntMatrix.identity(3))]) == 1
    assert _json(capsys)["result"]["reason"] == "real-root-count!=1"


def test_bad_input_reports_position(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3\n1 2 3\n4 x 6\n7 8 9\n")
    assert run(["check", str(p)]) == 2
    err = capsys.readouterr().err
    assert "line 3" in err


def test_missing_file(capsys):
    assert run(["check", "/nonexistent/m.txt"]) == 2


def test_invariants(mat, capsys):
    assert run(["invariants", "--json", mat(companion(F3))]) == 0
    res = _json(capsys)["result"]
    assert res["b1"] == 1 and res["torsion"] == [3]
    assert res["flags"]["lck"] == "EXISTS-BY-TRICERRI"
    assert run(["invariants", "--json", mat(nondiag7())]) == 0
    assert _json(capsys)["result"]["flags"]["ot_homeomorphic"] == "EXCLUDED"


def test_present(mat, capsys):
    assert run(["present", mat(companion(F))]) == 0
    out = capsys.readouterr().out
    assert "g0 g1 g0^-1" in out


def test_orbit(mat, capsys):
    assert run(["orbit", "--json", "--word", "0 1 -0", "--check-relations", mat(companion(F))]) == 0
    res = _json(capsys)["result"]
    assert all(c["ok"] for c in res["relations"])


def test_roots(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("[-1, 0, -1, 1]\n")
    assert run(["roots", "--json", str(p)]) == 0
    res = _json(capsys)["result"]
    assert len(res["real_roots"]) == 1 and len(res["complex_boxes"]) == 3


def test_classify(mat, capsys):
    a = mat(companion(F), "a.txt")
    b = mat(companion(F).inverse(), "b.txt")
    assert run(["classify", "--json", a, b]) == 0
    capsys.readouterr()
    assert run(["classify", mat(nondiag7(), "n.txt"), mat(diag7(), "d.txt")]) == 1
    assert run(["classify", a, mat(companion(G), "g.txt")]) == 2


def test_ot(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("-1 0 -1 1\n")
    assert run(["ot", "--json", "--bits", "64", str(p)]) == 0
    assert all(_json(capsys)["result"]["checks"].values())
    p.write_text("-1 0 0 1\n")
    assert run(["ot", str(p)]) == 1


def test_search(tmp_path, capsys):
    assert run(["search", "--json", "--dim", "5", "--count", "3", "--seed", "1", "--out", str(tmp_path / "o")]) == 0
    rep = _json(capsys)
    assert rep["result"]["found"] == 3
    assert len(list((tmp_path / "o").iterdir())) == 3
    assert run(["search", "--dim", "4"]) == 2
