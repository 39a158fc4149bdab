import io
import json
import subprocess
import sys

import pytest

from continuum.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_dichotomy_json():
    code, out, _ = call("paradox", "dichotomy", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["cumulative"] == "7/8"
    assert data["steps"] == ["1/2", "1/4", "1/8"]
    assert list(data) == sorted(data)


def test_paradox_which_option():
    assert call("paradox", "--which", "arrow", "--n", "10", "--format", "json")[1] == call(
        "paradox", "arrow", "--n", "10", "--format", "json"
    )[1]


def test_dual_mul_plain():
    assert call("dual", "mul", "--x", "0,1", "--y", "0,1") == (0, "0 + 0·h\n", "")


def test_dual_json():
    code, out, _ = call("dual", "eval", "--coeffs", "0,-2,0,1", "--x", "2,1", "--format", "json")
    assert json.loads(out) == {"a": "4/1", "b": "10/1"}


def test_seq_value():
    assert call("seq", "value", "--seq", ":(10)") == (0, "2/3\n", "")


def test_seq_commands():
    assert call("seq", "compare", "--x", "0:(1)", "--y", "1:(0)")[1] == "Less\n"
    assert call("seq", "canon", "--seq", "0:(1)")[1] == "1:(0)\n"
    assert call("seq", "classify", "--seq", "0:(1)")[1] == "B\n"
    assert call("seq", "witness", "--x", ":(0)", "--y", "1:(0)")[1] == "01:(0)\n"
    assert call("seq", "gap", "--k", "3", "--n", "2")[1] == "true\n"
    assert call("seq", "gap", "--k", "1", "--n", "1", "--candidates", ":(10);01:(0)")[1] == "true\n"
    pair = json.loads(call("seq", "pair", "--k", "3", "--n", "2", "--format", "json")[1])
    assert pair == {"lower": "10:(1)", "upper": "11:(0)", "value": "3/4"}


def test_poincare_cli():
    code, out, _ = call("seq", "poincare", "--epsilon", "3/2", "--values", "10,11,12", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["intransitive"] is True
    assert data["witnesses"] == [["10/1", "11/1", "12/1"]]


def test_tree_expand_json_schema():
    data = json.loads(call("tree", "expand", "--n", "2", "--format", "json")[1])
    assert data == [
        {"label": "00", "lower": "0/1", "upper": "1/4"},
        {"label": "01", "lower": "1/4", "upper": "1/2"},
        {"label": "10", "lower": "1/2", "upper": "3/4"},
        {"label": "11", "lower": "3/4", "upper": "1/1"},
    ]


def test_tree_counts_and_interval():
    assert json.loads(call("tree", "counts", "--n", "20", "--format", "json")[1]) == {
        "n": 20,
        "partitions": 1048575,
        "parts": 1048576,
    }
    assert call("tree", "interval", "--word", "101")[1] == "[5/8, 3/4]\n"
    assert call("tree", "interval", "--word", "")[1] == "[0, 1]\n"


def test_csv_output():
    code, out, _ = call("paradox", "stadium", "--N", "4", "--k", "3", "--format", "csv")
    header, row = out.strip().splitlines()
    assert code == 0
    assert dict(zip(header.split(","), row.split(",")))["passings_bc"] == "6"


def test_domain_error_exit_one():
    code, out, err = call("dual", "div", "--x", "1,0", "--y", "0,1")
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "ZeroDivisorError"
    code, _, err = call("paradox", "achilles", "--r", "1", "--s", "1", "--k", "1")
    assert code == 1 and json.loads(err)["error"] == "NeverClosesError"


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("dual", "add", "--x", "1.5,0", "--y", "0,0"),
        ("seq", "poincare", "--epsilon", "x/2", "--values", "1,2"),
        ("paradox", "achilles", "--r", "2"),
        ("paradox",),
        ("tree", "interval", "--word", "012"),
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(list(argv)) == 2
    assert capsys.readouterr().err


def test_check_passes():
    code, out, _ = call("check")
    assert code == 0
    assert "FAIL" not in out


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "continuum", "paradox", "achilles", "--r", "10", "--s", "100", "--k", "3"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert b"1111/10" in first
