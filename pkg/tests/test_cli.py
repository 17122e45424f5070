"""Unit tests for the command-line interface (driven in-process)."""

import json

import pytest

from apery4.cli_report import main


def test_verify_identity_text_report(capsys):
    assert main(["verify-identity", "--n-max", "2"]) == 0
    out = capsys.readouterr().out
    assert "cell n= 2 m= 1" in out
    assert "identity=True pure=True recurrence=n/a" in out
    assert "identity=True pure=True recurrence=True" in out  # (2, 0)
    assert "6 cells up to n = 2: all verified" in out


def test_verify_identity_json_report_is_canonical(capsys):
    assert main(["verify-identity", "--n-max", "1", "--json", "-"]) == 0
    raw = capsys.readouterr().out.strip()
    payload = json.loads(raw)
    assert raw == json.dumps(payload, sort_keys=True, separators=(",", ":"))
    assert sorted(payload) == ["cells", "configEcho", "summary", "toolVersion"]
    assert payload["summary"] == {"total": 3, "passed": 3, "failed": 0}
    assert payload["configEcho"]["nMax"] == 1
    assert payload["configEcho"]["command"] == "verify-identity"
    cells = payload["cells"]
    assert [(c["n"], c["m"]) for c in cells] == [(0, 0), (1, 0), (1, 1)]
    assert cells[0]["left"] == cells[0]["right"] == {"z4": "1"}
    assert cells[1]["left"] == {"c0": "277/16", "z4": "-16"}
    assert all(c["identityPass"] and c["pureWeight4"] for c in cells)
    assert all(c["recurrencePass"] is None for c in cells)  # rows too short
    assert all(c["elapsedMs"] >= 0 for c in cells)


def test_verify_identity_smallest_grid(capsys):
    assert main(["verify-identity", "--n-max", "0", "--json", "-"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"] == {"total": 1, "passed": 1, "failed": 0}


def test_verify_identity_json_and_csv_files(tmp_path, capsys):
    json_path = tmp_path / "report.json"
    csv_path = tmp_path / "report.csv"
    assert main(["verify-identity", "--n-max", "2",
                 "--json", str(json_path), "--csv", str(csv_path)]) == 0
    assert "6 cells up to n = 2" in capsys.readouterr().out  # text still shown
    payload = json.loads(json_path.read_text())
    assert payload["summary"]["total"] == 6
    recurrence = {(c["n"], c["m"]): c["recurrencePass"]
                  for c in payload["cells"]}
    assert recurrence[(2, 0)] is True
    assert recurrence[(2, 1)] is None
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "n,m,constant,zeta4,identityPass,recurrencePass"
    assert lines[1] == "0,0,0,1,true,"
    assert lines[4] == "2,0,-9695399/6912,1296,true,true"
    assert len(lines) == 7


def test_verify_identity_parallel_jobs(capsys):
    assert main(["verify-identity", "--n-max", "1", "--jobs", "2"]) == 0
    assert "all verified" in capsys.readouterr().out


def test_jobs_environment_variable(capsys, monkeypatch):
    monkeypatch.setenv("APERY4_JOBS", "2")
    assert main(["verify-identity", "--n-max", "1"]) == 0
    assert "all verified" in capsys.readouterr().out


@pytest.mark.parametrize("suite,n_max", [
    ("main", 4), ("boundary-m0", 2), ("boundary-zr", 1),
    ("closed-forms", 3), ("binom-identity", 6),
])
def test_verify_recurrences_suites(capsys, suite, n_max):
    assert main(["verify-recurrences", "--suite", suite, "--n-max", str(n_max)]) == 0
    out = capsys.readouterr().out
    assert f"suite {suite}" in out
    assert "fail=0" in out and "all suites pass" in out


def test_verify_recurrences_all(capsys):
    assert main(["verify-recurrences", "--suite", "all", "--n-max", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("suite ") == 5


def test_verify_recurrences_json_report(capsys):
    assert main(["verify-recurrences", "--suite", "closed-forms",
                 "--n-max", "3", "--json", "-"]) == 0
    raw = capsys.readouterr().out.strip()
    payload = json.loads(raw)
    assert raw == json.dumps(payload, sort_keys=True, separators=(",", ":"))
    assert payload["suites"] == [
        {"suite": "closed-forms", "checks": 7, "passed": 7, "failed": 0}]
    assert payload["summary"] == {"total": 7, "passed": 7, "failed": 0}
    assert payload["configEcho"]["suite"] == "closed-forms"
    assert payload["toolVersion"]


def test_eval_prints_exact_and_decimal(capsys):
    assert main(["eval", "--n", "1", "--m", "0", "--digits", "10"]) == 0
    out = capsys.readouterr().out
    assert "Z(1, 0) = 277/16 - 16*zeta(4)" in out
    assert "constant    = 277/16" in out
    assert "zeta(4)     = -16" in out
    assert "-0.0046717394" in out


def test_eval_rejects_out_of_domain(capsys):
    assert main(["eval", "--n", "1", "--m", "3"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "0 <= m <= n" in err


def test_summand_audit_deterministic_across_runs(capsys):
    assert main(["summand-audit", "--n-max", "3", "--samples", "1",
                 "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["summand-audit", "--n-max", "3", "--samples", "1",
                 "--seed", "5"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "0 disagreements" in first


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify-identity", "--bogus"])
    assert excinfo.value.code == 2
