import csv
import io
import json
import subprocess
import sys

import pytest

from chernmather.cli import dump_json, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_eulerian_text():
    code, out, _ = call("eulerian", "--n", "0")
    assert code == 0 and out == "1\n"
    code, out, _ = call("eulerian", "--n", "3", "--check", "20")
    assert out.splitlines() == ["1 + 4x + x^2", "defining identity mod x^20: holds"]


def test_genus5_json():
    code, out, _ = call("genus5", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert [v["residue"] for v in doc["verdicts"]] == [2, 1]
    assert doc["excluded"] is True
    assert doc["rhs_multiplier"] == 14


def test_criterion_example():
    code, out, _ = call("criterion", "--g", "6", "--case", "nonhyp", "--c0", "252", "--c1", "70", "--c2", "20", "--codim", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["verdict"] == "Jacobian"
    assert doc["reconstruction"] == {"c0": 10, "c1": "1/1", "c2": "0/1"}
    assert doc["scale_invariant"] is True


def test_criterion_rational_inputs():
    code, out, _ = call("criterion", "--g", "6", "--case", "nonhyp", "--c0", "252", "--c1", "140/2", "--c2", "41/2", "--codim", "3", "--format", "json")
    assert json.loads(out)["verdict"] == "NotConclusive"


def test_global_flags_before_subcommand():
    code, out, _ = call("--format", "json", "c2-gap", "--g", "5")
    assert json.loads(out)["value"] == "-16/1"


def test_ecoef():
    code, out, _ = call("ecoef", "--n", "8", "--g", "5", "--k", "4", "--index", "0,1,0,0")
    assert code == 0 and out.strip().endswith("= -16")


def test_parse_error_exit_2():
    code, _, _ = call("criterion", "--g", "6")
    assert code == 2
    code, _, _ = call("criterion", "--g", "6", "--case", "nonhyp", "--c0", "1.5", "--c1", "1", "--c2", "1", "--codim", "3")
    assert code == 2
    code, _, _ = call("nonsense")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["c2-gap", "--g", "3"],
        ["criterion", "--g", "3", "--case", "hyp", "--c0", "1", "--c1", "1", "--c2", "1", "--codim", "3"],
        ["prym-chi", "--g", "3", "--t", "0"],
        ["prym-chi", "--g", "6", "--partition", "1,2"],
        ["prym-chi", "--g", "6"],
        ["prym-classes", "--g", "6", "--t", "4"],
        ["ecoef", "--n", "4", "--g", "3", "--k", "1", "--index", "1"],
    ],
)
def test_domain_error_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert "error" in err and out == ""


TABLE_COMMANDS = [
    ["jacobian-classes", "--g", "7", "--case", "hyp"],
    ["prym-chi", "--g", "4", "--g-max", "6", "--k", "2", "--sweep"],
    ["prym-classes", "--g", "6", "--t", "2"],
    ["prym-classes", "--g", "6", "--t", "0"],
    ["eulerian", "--n", "6"],
    ["genus5"],
]


@pytest.mark.parametrize("argv", TABLE_COMMANDS)
def test_csv_and_json_agree(argv):
    _, csv_out, _ = call(*argv, "--format", "csv")
    _, json_out, _ = call(*argv, "--format", "json")
    csv_rows = list(csv.DictReader(io.StringIO(csv_out)))
    json_rows = json.loads(json_out)["rows"]

    def norm(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        return "" if v is None else str(v)

    assert csv_rows == [{k: norm(v) for k, v in row.items()} for row in json_rows]


ALL_COMMANDS = TABLE_COMMANDS + [
    ["criterion", "--g", "5", "--case", "hyp", "--c0", "42", "--c1", "14", "--c2", "5", "--codim", "4"],
    ["ecoef", "--n", "8", "--g", "5", "--k", "2", "--index", "1,0,0,0"],
    ["c2-gap", "--g", "9"],
    ["prym-chi", "--g", "7", "--partition", "1,6", "--k", "2"],
]


@pytest.mark.parametrize("argv", ALL_COMMANDS)
def test_json_round_trip(argv):
    _, out, _ = call(*argv, "--format", "json")
    assert dump_json(json.loads(out)) == out


def test_sweep_sorted():
    _, out, _ = call("prym-chi", "--g", "4", "--g-max", "5", "--k", "1", "--sweep", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["g"] for r in rows] == sorted(r["g"] for r in rows)
    assert sum(r["matches-jacobian"] for r in rows) == 6


def test_output_file(tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = call("jacobian-classes", "--g", "4", "--case", "nonhyp", "--format", "csv", "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_text(encoding="utf-8").splitlines()[0] == "r,multiplier,basis"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chernmather", "eulerian", "--n", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
