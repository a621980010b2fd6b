import io
import json

import pytest

from app import cli
from app.models import VerificationRun
from app.services.verification import CheckResult, VerificationReport
from app.services.witt import witt_series


def _run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _json(capsys, *argv):
    code, out, _ = _run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


# ── Closed formulas ──────────────────────────────────────────────

def test_witt_single_degree(capsys):
    assert _run(capsys, "witt", "--rank", "2", "--degree", "6")[:2] == (0, "9\n")


def test_witt_series_as_json(capsys):
    document = _json(capsys, "witt", "--rank", "2", "--max-degree", "5")
    assert document == {"result": [0, 2, 1, 2, 3, 6], "meta": {"truncation": 5}}


def test_witt_rank_zero_is_the_zero_algebra(capsys):
    assert _run(capsys, "witt", "--rank", "0", "--degree", "3")[:2] == (0, "0\n")
    assert _json(capsys, "witt", "--rank", "0", "--max-degree", "4")["result"] == [0, 0, 0, 0, 0]


def test_witt_series_as_csv(capsys):
    code, out, _ = _run(capsys, "witt", "--rank", "1", "--odd", "1", "--max-degree", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,coefficient", "0,0", "1,2", "2,2"]


def test_schreier_color(capsys):
    assert _run(capsys, "schreier", "color", "--rank-l", "4", "--odd-codim", "1")[:2] == (0, "7\n")


def test_schreier_group(capsys):
    assert _run(capsys, "schreier", "group", "--rank", "2", "--index", "3")[:2] == (0, "4\n")


def test_euler_table_output(capsys):
    code, out, _ = _run(capsys, "euler", "--coeffs", "0,1,1", "--max-degree", "4")
    assert code == 0
    assert out == "0  1\n1  1\n2  2\n3  2\n4  3\n"


def test_transform_keeps_long_input_without_max_degree(capsys):
    coeffs = ",".join(str(c) for c in witt_series(2, 40).coefficients)
    document = _json(capsys, "euler", "--coeffs", coeffs)
    assert document["meta"] == {"truncation": 40}
    assert document["result"] == [2 ** n for n in range(41)]


def test_inverse_euler_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1 2 4 8 16\n"))
    document = _json(capsys, "inv-euler", "--max-degree", "4")
    assert document["result"] == [0, 2, 1, 2, 3]


def test_geom_inverse(capsys):
    assert _json(capsys, "geom-inverse", "--coeffs", "0 1 1", "--max-degree", "6")["result"] == [1, 1, 2, 3, 5, 8, 13]


def test_envelope_characteristic_gate(capsys):
    code, out, err = _run(capsys, "envelope", "--even", "1", "--odd", "1", "--prime", "3", "--max-degree", "5")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")

    document = _json(
        capsys, "envelope", "--even", "1", "--odd", "1", "--prime", "3",
        "--allow-small-characteristic", "--max-degree", "5",
    )
    assert document["result"] == [1, 2, 2, 1, 0, 0]


def test_envelope_without_prime(capsys):
    assert _json(capsys, "envelope", "--even", "2", "--max-degree", "4")["result"] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("argv", [
    ["witt", "--rank", "2", "--degree", "0"],
    ["witt", "--degree", "3"],
    ["inv-euler", "--coeffs", "2,1"],
    ["euler", "--coeffs", "1,x"],
    ["euler", "--coeffs", "0,1", "--max-degree", "-1"],
    ["growth", "--coeffs", "0,1,2,3", "--window", "3"],
    ["schreier", "color", "--rank-l", "0", "--odd-codim", "1"],
    ["verify", "no-such-suite"],
])
def test_invalid_input_exits_with_2(capsys, argv):
    assert _run(capsys, *argv)[0] == 2


# ── Alphabet files ───────────────────────────────────────────────

def test_schreier_lie_from_alphabet_file(capsys, tmp_path):
    path = tmp_path / "alphabet.json"
    path.write_text(json.dumps({"generators": [{"label": "x"}, {"label": "y"}]}))
    document = _json(capsys, "schreier", "lie", "--alphabet", str(path), "--quotient-coeffs", "0,2", "--max-degree", "6")
    assert document["result"] == [0, 0, 1, 2, 3, 4, 5]


def test_schreier_lie_rejects_odd_alphabet(capsys, tmp_path):
    path = tmp_path / "alphabet.json"
    path.write_text(json.dumps({
        "group": [2], "gamma_on_generators": [[-1]], "generators": [{"label": "y", "degree": [1]}],
    }))
    assert _run(capsys, "schreier", "lie", "--alphabet", str(path), "--quotient-coeffs", "0,1")[0] == 2


def test_schreier_lie_missing_file(capsys, tmp_path):
    missing = tmp_path / "missing.json"
    assert _run(capsys, "schreier", "lie", "--alphabet", str(missing), "--quotient-coeffs", "0,1")[0] == 2


# ── Growth ───────────────────────────────────────────────────────

def test_growth_estimate(capsys):
    coeffs = ",".join(str(c) for c in witt_series(2, 80).coefficients)
    document = _json(capsys, "growth", "--coeffs", coeffs, "--window", "40,80")
    assert document["meta"] == {"truncation": 80, "window": [40, 80]}
    assert document["result"]["classification"] == "exponential"
    assert 1.9 < document["result"]["rate"] <= 2.0


# ── Verification ─────────────────────────────────────────────────

def test_verify_witt(capsys):
    code, out, _ = _run(capsys, "verify", "witt", "--max-rank", "3", "--max-degree", "7")
    assert code == 0
    assert "FAIL" not in out
    last = out.splitlines()[-1]
    assert last.startswith("suite witt:")
    passed, total = last.split()[2].split("/")
    assert passed == total


def test_verify_output_is_deterministic(capsys):
    argv = ("verify", "jacobi", "--trials", "5", "--max-degree", "2", "--seed", "4")
    first = _json(capsys, *argv)
    second = _json(capsys, *argv)
    assert first == second
    assert first["meta"]["seed"] == 4
    assert first["result"]["passed"] is True


def test_verify_record_appends_to_ledger(capsys, db_session):
    before = db_session.query(VerificationRun).filter(VerificationRun.suite == "pbw").count()
    code, _, _ = _run(capsys, "verify", "pbw", "--max-degree", "3", "--record")
    assert code == 0
    assert db_session.query(VerificationRun).filter(VerificationRun.suite == "pbw").count() == before + 1


def test_verify_failure_exits_with_3(capsys, monkeypatch):
    report = VerificationReport(
        suite="witt",
        passed=False,
        checks=[CheckResult(label="witt_dim(2,3)", expected="2", actual="3", passed=False)],
    )
    monkeypatch.setattr(cli, "timed_run", lambda *args, **kwargs: (report, 1.0))
    code, out, _ = _run(capsys, "verify", "witt")
    assert code == 3
    assert "FAIL  witt_dim(2,3): expected 2, got 3" in out
    assert "suite witt: 0/1 checks passed" in out
