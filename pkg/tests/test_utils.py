from fractions import Fraction
import json

import pytest

from diagharm.oracle import Report
from diagharm.polyalg import DimensionPolynomial
from diagharm.schedules import BivariateSeries
from diagharm.utils import common
from diagharm.utils.common import parse_int_list, reduce_blocks
from diagharm.utils.export import (
    count_document,
    polynomial_document,
    polynomial_from_document,
    series_document,
    series_latex,
    table_latex,
    to_csv,
    to_json,
)


def test_reduce_blocks_keeps_task_order():
    tasks = [-3, 1, -2, 5]
    assert reduce_blocks(abs, tasks) == [3, 1, 2, 5]
    assert reduce_blocks(abs, tasks, threads=2) == [3, 1, 2, 5]
    assert reduce_blocks(abs, []) == []
    with pytest.raises(ValueError):
        reduce_blocks(abs, tasks, threads=0)


def test_parse_int_list():
    assert parse_int_list("1,3,5") == (1, 3, 5)
    assert parse_int_list(" 2 ") == (2,)
    assert parse_int_list("none") == ()
    assert parse_int_list("None") == ()
    with pytest.raises(ValueError):
        parse_int_list("1,,2")


def test_polynomial_document():
    poly = DimensionPolynomial([0, Fraction(-7, 6), 0, Fraction(1, 6)])
    document = polynomial_document(poly, 3, a=3, b=0)
    assert document["coeffs"] == [["0", "1"], ["-7", "6"], ["0", "1"], ["1", "6"]]
    assert document["stable_from"] == 3
    assert document["a"] == 3
    assert polynomial_from_document(json.loads(to_json(document))) == poly
    assert to_csv(document) == "power,num,den\n0,0,1\n1,-7,6\n2,0,1\n3,1,6\n"


def test_json_is_sorted_and_exact():
    big = 10 ** 30
    series = BivariateSeries({(0, 0): big})
    text = to_json(series_document(1, series))
    assert text.endswith("\n")
    assert list(json.loads(text)) == sorted(json.loads(text))
    assert json.loads(text)["entries"][0]["c"] == str(big)


def test_count_and_report_csv():
    assert to_csv(count_document(6, 1, "12")) == "n,value\n6,1\n"
    report = Report("demo")
    report.check("x", 1, 1)
    assert to_csv(report.as_dict()) == "check,expected,actual,passed\nx,1,1,True\n"
    with pytest.raises(ValueError):
        to_csv({"kind": "unknown"})


def test_latex():
    series = BivariateSeries({(0, 0): 1, (1, 0): 2, (0, 2): 1})
    assert series_latex(series) == "1 + 2q + t^{2}"
    assert series_latex(BivariateSeries()) == "0"

    grid = {(a, b): DimensionPolynomial([1]) for a in range(2) for b in range(2)}
    lines = table_latex(grid, 1).splitlines()
    assert lines[1] == " & $q^{0}$ & $q^{1}$ \\\\"
    assert lines[3] == "$t^{0}$ & $1$ & $1$ \\\\"


def _fail_on_negative(value):
    if value < 0:
        raise RuntimeError("negative task")
    return value


def test_reduce_blocks_closes_progress_on_error(monkeypatch):
    bars = []

    class RecordingBar(object):
        def __init__(self, **kwargs):
            self.closed = False
            bars.append(self)

        def __enter__(self):
            return self

        def __exit__(self, *exc_info):
            self.closed = True
            return False

        def update(self, count):
            pass

    monkeypatch.setattr(common, "tqdm", RecordingBar)
    with pytest.raises(RuntimeError):
        reduce_blocks(_fail_on_negative, [1, -1, 2], show_progress=True)
    assert len(bars) == 1 and bars[0].closed
