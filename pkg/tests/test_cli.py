import json
import os
import subprocess
import sys

import pytest

from diagharm.cli import main


QUICK_CONFIG = os.path.join(os.path.dirname(__file__), os.pardir, "configs", "quick.yaml")


def _run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_hilbert_json(capsys):
    status, out, err = _run(capsys, "hilbert", "--n", "2", "--method", "schedules")
    assert status == 0
    document = json.loads(out)
    assert document["schema"] == "diagharm/1"
    assert document["kind"] == "series"
    assert document["total"] == "3"
    assert document["entries"] == [
        {"q": 0, "t": 0, "c": "1"},
        {"q": 1, "t": 0, "c": "1"},
        {"q": 0, "t": 1, "c": "1"},
    ]
    # Config and arguments are reported on stderr only.
    assert "ENUMERATION" in err


def test_hilbert_parking_and_trivial(capsys):
    status, out, _ = _run(capsys, "hilbert", "--n", "3", "--method", "parking")
    assert status == 0 and json.loads(out)["total"] == "16"
    status, out, _ = _run(capsys, "hilbert", "--n", "1")
    assert status == 0 and json.loads(out)["total"] == "1"


def test_hilbert_csv(capsys):
    status, out, _ = _run(capsys, "hilbert", "--n", "2", "--format", "csv")
    assert status == 0
    assert out == "q,t,c\n0,0,1\n1,0,1\n0,1,1\n"


def test_hilbert_over_bound(capsys):
    status, out, err = _run(capsys, "hilbert", "--n", "11")
    assert status == 2
    assert out == ""
    assert "MAX_SCHEDULES_N" in err


def test_dimpoly(capsys):
    status, out, _ = _run(capsys, "dimpoly", "--a", "1", "--b", "1")
    assert status == 0
    document = json.loads(out)
    assert document["kind"] == "polynomial"
    assert document["variable"] == "n"
    assert document["stable_from"] == 2
    assert document["coeffs"] == [["0", "1"], ["-2", "1"], ["1", "1"]]

    status, out, _ = _run(capsys, "dimpoly", "--a", "3", "--b", "0")
    assert json.loads(out)["coeffs"] == [["0", "1"], ["-7", "6"], ["0", "1"], ["1", "6"]]


def test_dimpoly_interpolate(capsys):
    status, out, _ = _run(capsys, "dimpoly", "--a", "0", "--b", "0", "--method", "interpolate")
    assert status == 0 and json.loads(out)["coeffs"] == [["1", "1"]]

    status, _, err = _run(capsys, "dimpoly", "--a", "3", "--b", "3", "--method", "interpolate")
    assert status == 2
    assert "--method recursion" in err


def test_dimpoly_is_deterministic(capsys):
    _, first, _ = _run(capsys, "dimpoly", "--a", "2", "--b", "1")
    _, second, _ = _run(capsys, "dimpoly", "--a", "2", "--b", "1")
    assert first == second


def test_count(capsys):
    status, out, _ = _run(capsys, "count", "--S", "1", "--tau", "1", "--U", "1")
    assert status == 0
    document = json.loads(out)
    assert document["coeffs"] == [["-1", "1"], ["1", "1"]]
    assert document["first_nonzero"] == 2

    status, out, _ = _run(
        capsys, "count", "--S", "2", "--tau", "1,2", "--mode", "exact", "--n", "6"
    )
    assert status == 0
    assert json.loads(out)["value"] == "1"


def test_count_tree(capsys):
    status, _, err = _run(
        capsys, "count", "--S", "1,3,5", "--tau", "1,2,2,1,3", "--U", "5", "--tree"
    )
    assert status == 0
    assert "[3] 1.1.1≥3" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--S", "2,1", "--tau", "1,1"],
        ["count", "--S", "1", "--tau", "x"],
        ["count", "--S", "1", "--tau", "1", "--mode", "exact"],
        ["verify", "table1", "--max-ab", "0", "--format", "latex"],
        ["hilbert", "--n", "2", "--threads", "0"],
    ],
)
def test_invalid_input_exits_with_two(capsys, argv):
    status, _, _ = _run(capsys, *argv)
    assert status == 2


def test_verify(capsys):
    status, out, _ = _run(capsys, "verify", "table1", "--max-ab", "2")
    assert status == 0
    document = json.loads(out)
    assert document["kind"] == "report"
    assert document["passed"] == 9 and document["failed"] == 0

    status, out, _ = _run(capsys, "verify", "sharpness", "--a", "1", "--b", "1")
    assert status == 0
    assert json.loads(out)["checks"][0]["check"] == "P(1,1)(1) = -1 < 0"


def test_verify_csv_and_out(capsys, tmp_path):
    path = tmp_path / "report.csv"
    status, out, _ = _run(
        capsys, "verify", "oracle", "--max-n", "3", "--format", "csv", "--out", str(path)
    )
    assert status == 0
    assert out == ""
    lines = path.read_text().splitlines()
    assert lines[0] == "check,expected,actual,passed"
    assert len(lines) == 1 + 3 * 3


def test_table1_latex(capsys):
    status, out, _ = _run(capsys, "table1", "--max-ab", "1", "--format", "latex")
    assert status == 0
    assert out.startswith("\\begin{tabular}{c|cc}")
    assert "\\end{tabular}" in out


def test_verify_over_bound(capsys):
    status, out, err = _run(
        capsys, "verify", "stability", "--max-n", "7", "--config", QUICK_CONFIG
    )
    assert status == 2
    assert out == ""
    assert "MAX_SCHEDULES_N" in err


def test_script_entry_point(tmp_path):
    repo_root = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
    env = dict(os.environ, PYTHONPATH=repo_root)
    completed = subprocess.run(
        [sys.executable, os.path.join(repo_root, "scripts", "run_diagharm.py"),
         "dimpoly", "--a", "3", "--b", "0"],
        cwd=str(tmp_path),
        env=env,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        universal_newlines=True,
    )
    assert completed.returncode == 0, completed.stderr
    assert json.loads(completed.stdout)["coeffs"] == [["0", "1"], ["-7", "6"], ["0", "1"], ["1", "6"]]
