import csv
import io
import json
import subprocess
import sys

import pytest

from gcns.cli import main
from gcns.verify import CSV_COLUMNS

EX34 = ["--a", "50", "--d", "1", "--u", "4", "--s", "2,2,3"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_show(capsys):
    code, out, _ = run(capsys, "show", *EX34, "--p", "5")
    assert code == 0
    assert "H=(5, 13, 29, 89)" in out
    assert "monotonicity_ok=True" in out


def test_show_gcd_violation(capsys):
    code, _, err = run(capsys, "show", "--a", "4", "--d", "2", "--u", "1", "--s", "1")
    assert code == 2
    assert "GcdViolation" in err


def test_show_json_schema(capsys):
    code, out, _ = run(capsys, "--format", "json", "show", *EX34, "--p", "5")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"spec", "p", "conditions", "result"}
    assert doc["spec"] == {"a": 50, "d": 1, "u": 4, "s": [2, 2, 3], "B": [1, 3, 7, 22],
                           "H": [5, 13, 29, 89], "A": [50, 251, 653, 1457, 4472]}
    assert doc["conditions"]["frobenius_ok"] is True
    assert doc["result"] is None


def test_show_with_b(capsys):
    code, out, _ = run(capsys, "show", "--a", "50", "--d", "1", "--u", "4",
                       "--b", "1,3,7,22")
    assert code == 0 and "s=(2, 2, 3)" in out
    code, _, err = run(capsys, "show", "--a", "50", "--d", "1", "--u", "4", "--b", "1,4,6")
    assert code == 2 and "ParameterDomain" in err


@pytest.mark.parametrize("argv, expected", [
    (["frobenius", *EX34, "--p", "5"], 1829),
    (["frobenius", "--a", "243", "--d", "2", "--u", "3", "--s", "3,4,4", "--p", "9"], 19195),
])
def test_frobenius(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.split()[0] == str(expected)
    assert "path=formula" in out


def test_genus_auto_json(capsys):
    code, out, _ = run(capsys, "genus", "--a", "5", "--d", "1", "--u", "2", "--s", "2",
                       "--p", "1", "--method", "auto", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"] == {"quantity": "genus", "value": 26, "path": "formula"}


def test_methods_agree(capsys):
    outs = {}
    for method in ("formula", "oracle"):
        code, out, _ = run(capsys, "--format", "json", "apery", *EX34, "--p", "5",
                           "--method", method)
        assert code == 0
        outs[method] = json.loads(out)["result"]
    assert outs["formula"]["value"] == outs["oracle"]["value"]
    assert outs["oracle"]["path"] == "oracle"


def test_condition_not_met(capsys):
    argv = ["frobenius", "--a", "6", "--d", "1", "--u", "1", "--s", "3"]
    code, _, err = run(capsys, *argv, "--method", "formula")
    assert code == 3 and "ConditionNotMet" in err
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "path=oracle" in out


def test_oracle_any_p(capsys):
    # p = a: the quotient is N
    code, out, _ = run(capsys, "frobenius", *EX34, "--p", "50")
    assert code == 0 and out.startswith("-1 (path=oracle)")


def test_csv_single(capsys):
    code, out, _ = run(capsys, "--format", "csv", "frobenius", *EX34, "--p", "5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["value"] == "1829" and rows[0]["s"] == "2,2,3"


@pytest.mark.parametrize("argv, x", [
    (["greedy", "--s", "2,2,3", "--m", "45"], [1, 0, 0, 2]),
    (["greedy", "--s", "2,2,3", "--m", "0"], [0, 0, 0, 0]),
    (["greedy", "--b", "1,3,10", "--m", "9"], [0, 3, 0]),
])
def test_greedy(capsys, argv, x):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    assert json.loads(out)["x"] == x


def test_greedy_text(capsys):
    code, out, _ = run(capsys, "greedy", "--s", "2,2,3", "--m", "45", "--u", "4")
    assert "(1, 0, 0, 2)" in out and "weight=183" in out


SMALL = ["verify", "--a", "4-24", "--d=-1,1,3", "--u", "1-3", "--patterns", "2;2,3"]


def test_verify_json_deterministic(capsys):
    code1, out1, _ = run(capsys, *SMALL, "--format", "json")
    code2, out2, _ = run(capsys, *SMALL, "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["mismatches"] == []
    assert doc["total_instances"] == doc["agreements"] + doc["skipped_condition_failures"]
    assert doc["agreements"] > 0


def test_verify_p_equals_a_skipped(capsys):
    code, out, _ = run(capsys, "verify", "--a", "6,8", "--d", "1", "--u", "2",
                       "--patterns", "2", "--p", "6,8", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["agreements"] == 0
    assert doc["skipped_condition_failures"] == doc["total_instances"] > 0


def test_verify_quantities_apery(capsys):
    code, out, _ = run(capsys, *SMALL, "--quantities", "apery", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and set(doc["by_quantity"]) == {"apery"}
    code, out, _ = run(capsys, *SMALL, "--quantities", "apery")
    assert "frobenius" not in out and "apery" in out


def test_verify_csv(capsys, tmp_path):
    target = tmp_path / "report.csv"
    code, _, _ = run(capsys, *SMALL, "--format", "csv", "--output", str(target))
    assert code == 0
    rows = list(csv.DictReader(target.open()))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows and all(r["match"] == "True" for r in rows)


def test_verify_mismatch_exit(monkeypatch, capsys):
    import gcns.verify as verify
    real = verify.frobenius_quotient
    monkeypatch.setattr(verify, "frobenius_quotient", lambda qs: real(qs) + 1)
    code, out, _ = run(capsys, "verify", "--a", "6", "--d", "1", "--u", "2",
                       "--patterns", "2")
    assert code == 1 and "MISMATCH" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gcns", "frobenius", *EX34, "--p", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("1829")
