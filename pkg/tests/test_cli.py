import json

import pytest

from nakphi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_text(capsys):
    code, out, _ = run(capsys, "info", "--kupisch", "3,5,4,5,4")
    assert code == 0
    assert "relations = 1:3;3:4" in out
    assert "cl(1): P1 -> P5 -> P4  socle S3" in out
    assert "Δ2 = [S4;S5;S1]  (4:3)" in out
    assert "self-injective = no" in out


def test_info_same_for_both_sources(capsys):
    _, by_kupisch, _ = run(capsys, "info", "--kupisch", "3,5,4,5,4")
    _, by_relations, _ = run(capsys, "info", "--relations", "1:3;3:4", "--vertices", "5")
    assert by_kupisch == by_relations


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "--relations", "1:11;4:11;5:12;7:12", "--vertices", "8",
                       "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["kupisch"] == [11, 13, 12, 11, 12, 13, 12, 12]
    assert doc["delta_kupisch"] == [6, 6, 5, 6]
    assert doc["S"] == [3, 6, 8, 2] and doc["S_prime"] == [4, 7, 1, 3]


def test_bad_kupisch_exit_code(capsys):
    code, out, err = run(capsys, "info", "--kupisch", "3,1,4")
    assert code == 2 and out == ""
    assert "c >= 2" in err


def test_relations_need_vertices(capsys):
    code, _, err = run(capsys, "info", "--relations", "1:3")
    assert code == 2 and "--vertices" in err


def test_bad_module(capsys):
    code, _, err = run(capsys, "resolve", "--kupisch", "3,5,4,5,4", "--module", "1:9")
    assert code == 2 and "length 9" in err


def test_missing_source_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["info"])
    assert exc.value.code == 2


def test_resolve(capsys):
    code, out, _ = run(capsys, "resolve", "--kupisch", "3,5,4,5,4", "--module", "1:2")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("Ω^0 = 1:2 [S1;S2]")
    assert lines[2].startswith("Ω^2 = 4:3 [S4;S5;S1] = Δ2")
    assert lines[-1] == "periodic entry at step 2, rho = 2"


def test_resolve_json_finite(capsys):
    code, out, _ = run(capsys, "resolve", "--kupisch", "3,5,4,5,4", "--module", "4:2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["pdim"] == 1
    assert [row["module"] for row in doc["trail"]] == ["4:2", "1:3"]


def test_resolve_truncated(capsys):
    code, out, _ = run(capsys, "resolve", "--kupisch", "3,5,4,5,4", "--module", "1:2",
                       "--steps", "1", "--json")
    doc = json.loads(out)
    assert doc["truncated_after"] == 1 and doc["pdim"] == "inf" and doc["rho"] == 2


def test_phi_all(capsys):
    code, out, _ = run(capsys, "phi", "--kupisch", "3,5,4,5,4", "--all")
    assert code == 0
    assert "phi_dim = 2" in out and "alpha_trace = 16,5,2" in out
    assert "omega_per = {2:2, 4:3}" in out


def test_phi_json(capsys):
    code, out, _ = run(capsys, "phi", "--kupisch", "3,5,4,5,4", "--module", "1:2,4:2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"phi", "alpha_trace", "omega_per", "rho"}
    assert doc["rho"] == {"1:2": 2, "4:2": None}
    assert doc["omega_per"] == ["2:2", "4:3"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--kupisch", "11,13,12,11,12,13,12,12")
    assert code == 0
    assert "phi_dim = 6" in out and "FAIL" not in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--kupisch", "4,4,4", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["phi_dim"] == 0 and doc["gldim"] == "inf"
    assert {c["status"] for c in doc["checks"]} <= {"pass", "n/a"}


def test_census(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("NAKPHI_WORKERS", raising=False)
    out_path = tmp_path / "c.csv"
    code, out, _ = run(capsys, "census", "--vertices", "3-4", "--max-proj-len", "6",
                       "--out", str(out_path), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["all_checks_passed"]
    assert doc["total"] == doc["finite_gldim"] + doc["infinite_gldim"]
    assert out_path.read_text().count("\n") == doc["total"] + 1


def test_census_worker_env(capsys, monkeypatch):
    monkeypatch.setenv("NAKPHI_WORKERS", "2")
    code, out, _ = run(capsys, "census", "--vertices", "3", "--max-proj-len", "5")
    assert code == 0 and "all_checks_passed: True" in out
