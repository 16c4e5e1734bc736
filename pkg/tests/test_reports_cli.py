import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from diobench import cli
from diobench.reports import Check, Report


def _schema():
    return json.loads(
        resources.files("diobench").joinpath("report.schema.json").read_text()
    )


def _run_cli(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_check_status_validation():
    assert Check("a", True).status == "pass"
    assert Check("a", False).status == "fail"
    with pytest.raises(ValueError):
        Check("a", "maybe")


def test_report_exit_contract():
    r = Report("x")
    r.add("one", True).add("two", "measured").add("three", "exhausted")
    assert r.ok
    r.add("four", False)
    assert not r.ok


def test_report_json_schema_and_order():
    r = Report("demo", inputs={"b": 2, "a": 1})
    r.add("zeta", True, {"k": 3}).add("alpha", "measured", "note")
    doc = json.loads(r.to_json())
    jsonschema.validate(doc, _schema())
    assert [c["name"] for c in doc["checks"]] == ["alpha", "zeta"]


@pytest.mark.parametrize("argv", [
    ["pell", "--s", "t", "--n", "3"],
    ["pell", "--s", "2*t", "--n", "2", "--check-laws", "--bound", "6"],
    ["defsys", "exp", "--base", "2", "--result", "8", "--exp", "3"],
    ["defsys", "singlefold-int", "--c", "3", "--bound", "20"],
    ["defsys", "constants", "--x", "5"],
    ["defsys", "odd-int", "--r", "3"],
    ["defsys", "nonneg", "--d", "-1"],
    ["cyclo", "phi", "--n", "12"],
    ["cyclo", "special", "--n", "20"],
    ["cyclo", "forweak", "--poly", "1+t+t^2", "--d", "3"],
    ["cyclo", "approx", "--indices", "3:2,5:1"],
    ["qform", "report", "--a", "2", "--b", "5"],
    ["qform", "eisenstein", "--poly", "2+4*t+t^2", "--p", "2"],
    ["qform", "xi", "--f", "t^2", "--p", "3"],
    ["qform", "xi", "--f", "t^2", "--real"],
    ["qform", "gate", "--g", "t"],
    ["par", "theta", "--n", "42"],
    ["par", "eval", "--n", "7"],
    ["par", "five-squares", "--poly", "t^2+1"],
])
def test_cli_subcommands_emit_valid_reports(argv, capsys):
    code, out = _run_cli(["--format", "json"] + argv, capsys)
    assert code == 0, out
    jsonschema.validate(json.loads(out), _schema())


def test_cli_pell_example(capsys):
    code, out = _run_cli(["--format", "json", "pell", "--s", "t",
                          "--n", "3"], capsys)
    doc = json.loads(out)
    assert doc["result"]["f"] == "-3*T + 4*T^3"
    assert doc["result"]["g"] == "-1 + 4*T^2"


def test_cli_exit_codes(capsys):
    code, _ = _run_cli(["qform", "eisenstein", "--poly", "1+t+t^2",
                        "--p", "3"], capsys)
    assert code == 1  # check failed
    code = cli.main(["pell", "--s", "not-a-poly", "--n", "1"])
    assert code == 2  # parse error


def test_cli_text_format(capsys):
    code, out = _run_cli(["defsys", "nonneg", "--d", "4"], capsys)
    assert code == 0
    assert "[measured]" in out and "accepted" in out


def test_workbench_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("WORKBENCH_BOUND", "0")
    code, out = _run_cli(["--format", "json", "defsys", "singlefold-int",
                          "--c", "3"], capsys)
    doc = json.loads(out)
    # bound 0 cannot reach the witness at n = 3
    assert "refuted-to-bound" in json.dumps(doc)


def test_verify_all_quick_deterministic(capsys):
    code1, out1 = _run_cli(["--format", "json", "verify-all",
                            "--profile", "quick", "--seed", "3"], capsys)
    code2, out2 = _run_cli(["--format", "json", "verify-all",
                            "--profile", "quick", "--seed", "3"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    jsonschema.validate(doc, _schema())
    assert len(doc["checks"]) == 13


def test_kernel_backends_agree():
    env = dict(os.environ, WORKBENCH_PURE_PY="1")
    code = (
        "from diobench.kernels import BACKEND, four_squares_raw,"
        " mod_scan_soluble\n"
        "print(BACKEND)\n"
        "print([four_squares_raw(n) for n in (0, 7, 30, 9999)])\n"
        "print([mod_scan_soluble(a, b, 27, 3)"
        " for a in (1, 2, -1) for b in (1, 3, -3)])\n"
    )
    runs = {}
    for name, e in (("cython", os.environ.copy()), ("python", env)):
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True,
            env=e, check=True,
        ).stdout.splitlines()
        runs[name] = out
    assert runs["cython"][0] == "cython"
    assert runs["python"][0] == "python"
    assert runs["cython"][1:] == runs["python"][1:]
