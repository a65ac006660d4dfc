import json
from fractions import Fraction

import numpy as np
import numpy.testing as npt
import pytest

from ..exceptions import PathFormatError
from ..utils.io import (
    dumps_json,
    format_rational,
    parse_path_csv,
    parse_path_json,
    parse_rational,
    path_to_json,
    read_path_file,
    rows_to_csv,
    rows_to_table,
    table_from_csv,
    table_to_csv,
    to_jsonable,
)


def test_rationals():
    assert format_rational(Fraction(7, 2)) == "7/2"
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert format_rational(3) == "3"
    assert parse_rational(" -21/34 ") == Fraction(-21, 34)
    assert parse_rational(5) == 5
    for bad in ("x", "1/0"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_to_jsonable():
    payload = {"q": Fraction(1, 3), "a": np.arange(3), "i": np.int64(4), "b": np.bool_(True), "t": (1, 2.5)}
    assert to_jsonable(payload) == {"q": "1/3", "a": [0, 1, 2], "i": 4, "b": True, "t": [1, 2.5]}
    assert json.loads(dumps_json({"b": 1, "a": Fraction(2)})) == {"a": "2", "b": 1}
    assert dumps_json({"b": 1, "a": 2}).index('"a"') < dumps_json({"b": 1, "a": 2}).index('"b"')
    with pytest.raises(TypeError):
        to_jsonable(object())


def test_rows_rendering():
    assert rows_to_csv(["p", "chi"], [(1, Fraction(-1, 2))]) == "p,chi\n1,-1/2\n"
    lines = rows_to_table(["p", "chi"], [(10, Fraction(1, 2))]).splitlines()
    assert lines[0] == " p  chi"
    assert lines[1] == "--  ---"
    assert lines[2] == "10  1/2"


def test_path_json():
    rotation = np.array([np.eye(2), [[0.0, -1.0], [1.0, 0.0]]])
    n, grid, samples = parse_path_json(path_to_json([0.0, 1.0], rotation))
    assert n == 1
    npt.assert_equal(grid, [0.0, 1.0])
    npt.assert_equal(samples, rotation)
    nested = json.dumps({"n": 1, "grid": [0.0], "samples": [[[1, 0], [0, 1]]]})
    assert parse_path_json(nested)[2].shape == (1, 2, 2)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"grid": [0], "samples": [[1, 0, 0, 1]]}',
        '{"n": 1, "grid": [0, 1], "samples": [[1, 0, 0, 1]]}',
        '{"n": 1, "grid": [0], "samples": [[1, 0, 0]]}',
        '{"n": 0, "grid": [], "samples": []}',
    ],
)
def test_path_json_errors(text):
    with pytest.raises(PathFormatError):
        parse_path_json(text)


def test_path_csv(tmp_path):
    text = "t,a,b,c,d\n0,1,0,0,1\n0.5,0,-1,1,0\n"
    n, grid, samples = parse_path_csv(text)
    assert n == 1
    npt.assert_equal(grid, [0.0, 0.5])
    npt.assert_equal(samples[1], [[0.0, -1.0], [1.0, 0.0]])

    path = tmp_path / "path.csv"
    path.write_text(text)
    assert read_path_file(path)[0] == 1
    for bad in ("", "t,a\n", "0,1,0,0\n", "0,1,0,0,1\n1,1,0,0\n", "0,1,0,x,1\n"):
        with pytest.raises(PathFormatError):
            parse_path_csv(bad)
    with pytest.raises(PathFormatError):
        read_path_file(tmp_path / "missing.json")
    assert isinstance(PathFormatError("x"), ValueError)


def test_function_table_csv():
    grid = np.linspace(0.0, 1.0, 5)
    text = table_to_csv(grid, grid ** 2, name="f")
    assert text.splitlines()[0] == "t,f"
    parsed_grid, values = table_from_csv(text)
    npt.assert_equal(parsed_grid, grid)
    npt.assert_equal(values, grid ** 2)
    with pytest.raises(ValueError):
        table_from_csv("t,f\n0,1\n1,2\n")
    with pytest.raises(ValueError):
        table_from_csv("0,1\n1\n2,3\n")
