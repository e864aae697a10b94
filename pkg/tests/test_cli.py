import json
import subprocess
import sys

import pytest

from nsjack.cli import run
from nsjack.polyalg import parse_poly, to_text


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_documented_examples_byte_exact(capsys):
    assert call(capsys, "zeta", "--n", "2", "--k", "1", "--alpha", "1,0")[:2] == (0, '{"poly":"2*x1 + 1*x2"}\n')
    assert call(capsys, "eval1n", "--n", "2", "--k", "1", "--alpha", "0,1")[:2] == (0, '{"value":"3/2"}\n')


def test_verify_suite_exit_code(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "all", "--n", "2", "--k", "1/2", "--k1", "2", "--deg", "4")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and all(s["failed"] == 0 and s["passed"] > 0 for s in report["suites"])


def test_verify_single_suite_text(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "jack", "--n", "2", "--deg", "3", "--format", "text")
    assert code == 0
    assert out.splitlines()[-1] == "ok"
    assert all(line.startswith("jack.") for line in out.splitlines()[:-1])


def test_deterministic_output(capsys):
    argv = ["hermite", "--n", "2", "--k", "1/2", "--k1", "2", "--beta", "2,1"]
    assert call(capsys, *argv) == call(capsys, *argv)


@pytest.mark.parametrize("argv,key", [
    (["jack", "--n", "3", "--alpha", "0,1,2", "--normalization", "omega"], "poly"),
    (["norms", "--n", "2", "--k", "1/2", "--alpha", "0,2", "--check"], "p_norm"),
    (["coset", "--n", "2", "--alpha", "1,0", "--interval", "1..2"], "H"),
    (["invariant", "--n", "2", "--alpha", "1,0", "--interval", "1..2"], "poly"),
    (["invariant", "--n", "2", "--k1", "1/2", "--alpha", "1,0", "--ell", "1"], "B_norm"),
    (["alternant", "--n", "3", "--alpha", "2,1,0"], "poly"),
    (["psi", "--n", "2", "--interval", "1..2", "--poly", "x1"], "poly"),
    (["psi", "--n", "3", "--interval", "1..3", "--alpha", "2,1,0"], "scalar"),
    (["weyl-eval", "--n", "2", "--interval", "1..2", "--poly", "x1^2"], "value"),
    (["weyl-eval", "--n", "4", "--interval", "1..2", "--interval", "3..4", "--alpha", "3,1,2,0"], "value"),
    (["binomial", "--n", "2", "--alpha", "2,1"], "coefficients"),
    (["spectrum", "--n", "2", "--k1", "1/2", "--beta", "1,2", "--which", "H2"], "value"),
    (["spectrum", "--n", "3", "--alpha", "2,1,0", "--which", "H1"], "value"),
])
def test_commands_succeed(capsys, argv, key):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    assert key in json.loads(out)


def test_psi_output_value(capsys):
    _, out, _ = call(capsys, "psi", "--n", "2", "--k", "1", "--interval", "1..2", "--poly", "x1")
    assert json.loads(out) == {"poly": "2*x1 + 1*x2"}


def test_coset_matrices(capsys):
    _, out, _ = call(capsys, "coset", "--n", "2", "--k", "1", "--alpha", "1,0", "--interval", "1..2")
    report = json.loads(out)
    assert report["orbit"] == [[1, 0], [0, 1]]
    assert report["B"] == [["1", "-1/2"], ["0", "1"]]
    assert report["H"] == [["1", "1/2"], ["1/2", "1"]]


def test_hermite_output(capsys):
    _, out, _ = call(capsys, "hermite", "--n", "1", "--k", "1", "--k1", "2", "--beta", "2")
    assert json.loads(out) == {"poly": "2*x1^2 - 10", "norm_B": "40"}


@pytest.mark.parametrize("argv", [
    ["zeta", "--n", "2", "--alpha", "1"],
    ["zeta", "--n", "2", "--alpha", "1,-1"],
    ["zeta", "--n", "2", "--alpha", "a,b"],
    ["zeta", "--n", "2"],
    ["zeta", "--n", "2", "--k", "0.5", "--alpha", "1,0"],
    ["zeta", "--n", "7", "--alpha", "0,0,0,0,0,0,0"],
    ["zeta", "--n", "2", "--alpha", "9,0"],
    ["coset", "--n", "2", "--alpha", "1,0", "--interval", "1..3"],
    ["psi", "--n", "2", "--alpha", "1,1", "--interval", "1..2"],
    ["eval1n", "--n", "2", "--k", "-1", "--alpha", "0,1"],
])
def test_user_errors_exit_1(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_usage_errors_exit_1(capsys):
    for argv in (["frobnicate"], ["zeta", "--bogus"], []):
        with pytest.raises(SystemExit) as info:
            run(argv)
        assert info.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_guard_override(capsys):
    code, out, _ = call(capsys, "zeta", "--n", "1", "--alpha", "9", "--allow-large")
    assert code == 0 and json.loads(out)["poly"].startswith("10*x1^9")


def test_text_format(capsys):
    code, out, _ = call(capsys, "eval1n", "--n", "2", "--k", "1", "--alpha", "0,1", "--format", "text")
    assert (code, out) == (0, "value: 3/2\n")


def test_printed_polynomials_round_trip(capsys):
    _, out, _ = call(capsys, "jack", "--n", "3", "--k", "2/3", "--alpha", "1,0,2")
    text = json.loads(out)["poly"]
    assert to_text(parse_poly(text, 3)) == text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nsjack", "zeta", "--n", "2", "--k", "1", "--alpha", "1,0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == '{"poly":"2*x1 + 1*x2"}\n'
    proc = subprocess.run([sys.executable, "-m", "nsjack", "nope"], capture_output=True, text=True)
    assert proc.returncode == 1
