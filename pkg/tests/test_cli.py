import io
import json
import subprocess
import sys

import pytest

from qhyper.cli import TABLE_COLUMNS, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def test_eval():
    assert call("eval", "a as") == (0, "1 + q^2 g gs\n", "")


def test_laplacian():
    assert call("laplacian", "--side", "left", "--n", "2", "a^2")[1] == "-q^4*(1+q^2) a^2\n"
    assert call("laplacian", "--side", "right", "a^2")[1] == "-q^-4*(1+q^2) a^2\n"
    status, out, _ = call("laplacian", "--base", "g gs")
    assert status == 0 and "g gs" in out


def test_forms_commands():
    assert call("d", "a")[1] == "q gs ep + 1/(1+q^2) a e3\n"
    assert call("D", "a")[1] == "q gs ep\n"
    assert call("star", "e3")[1] == "-e3\n"
    assert call("star", "a g")[1] == "q as gs\n"
    assert call("hodge", "1")[1] == "em^ep\n"


def test_commutator():
    assert call("commutator", "--n", "1", "a g gs") == (0, "0\n", "")


def test_tables_csv():
    status, out, _ = call("tables", "--which", "2", "--n", "1", "--bound", "2")
    assert status == 0
    lines = out.split("\r\n")
    assert lines[0] == ",".join(TABLE_COLUMNS)
    assert lines[1] == "2,1,gamma-gamma*,0,1,0,-q^4"
    assert lines[-1] == ""


def test_tables_json_and_value_column():
    status, out, _ = call("tables", "--which", "1", "--bound", "1", "--format", "json", "--at-q", "1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert status == 0
    assert rows[0] == {"table": 1, "n": 0, "family": "gamma-gamma*", "t": 0, "k": 0, "l": 0, "eigenvalue": "0", "value": "0"}
    assert rows[1]["value"] == "-4"


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "a +"),
        ("eval", "x"),
        ("bogus",),
        ("tables", "--which", "7"),
        ("tables", "--which", "1", "--n", "3"),
        ("laplacian", "--n", "2", "a"),
        ("laplacian", "a + gs"),
        ("hodge", "e3"),
        ("D", "e3"),
    ],
)
def test_errors_exit_one(argv):
    status, out, err = call(*argv)
    assert status == 1
    assert out == ""
    assert err


def test_bound_from_environment(monkeypatch):
    monkeypatch.setenv("QH_BOUND", "1")
    _, out, _ = call("tables", "--which", "1")
    assert out.count("\r\n") == 1 + 4
    assert "\n" not in out.replace("\r\n", "")
    monkeypatch.setenv("QH_BOUND", "x")
    assert call("tables", "--which", "1")[0] == 1


def test_verify_suite():
    status, out, _ = call("verify", "--suite", "relations")
    assert status == 0
    assert out.strip().endswith("0 failed")


def test_verify_failure_exits_two(monkeypatch):
    import qhyper.checks as checks

    monkeypatch.setitem(checks.SUITES, "relations", lambda bound: [checks.Check("relations", "broken", False, "x")])
    status, out, _ = call("verify", "--suite", "relations")
    assert status == 2
    assert "FAIL [relations] broken: x" in out


def test_tables_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "qhyper.cli", "tables", "--which", "4", "--n", "1", "--bound", "3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_console_script():
    res = subprocess.run(["qhyper", "eval", "g a"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == "q^-1 a g\n"
