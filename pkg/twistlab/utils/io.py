r"""
Reading and writing of path files, function tables and reports.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral) so exact values survive
a JSON round trip. JSON output is key-sorted and carries no timestamps.
"""

import csv
import dataclasses
import enum
import io
import json
import logging
import math
from fractions import Fraction
from pathlib import Path

import numpy as np

from ..exceptions import PathFormatError

LOGGER = logging.getLogger(__name__)


def format_rational(q):
    r"""``Fraction(7, 2) -> "7/2"``, ``Fraction(-2) -> "-2"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    r"""Inverse of :func:`format_rational`. Also accepts ints and ``Fraction``."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError(f"not a rational number: {text!r}") from err


def to_jsonable(obj):
    r"""
    Convert nested results to plain JSON types.

    Fractions become ``"p/q"`` strings, numpy scalars and arrays become python numbers and
    lists, enums become their values and objects with a ``to_dict`` method are expanded.
    """
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return to_jsonable(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(obj):
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2)


def rows_to_csv(header, rows):
    r"""CSV text of ``rows`` under ``header``, with rationals written as ``"p/q"``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([to_jsonable(v) for v in row])
    return buf.getvalue()


def rows_to_table(header, rows):
    r"""Right-aligned plain text table."""
    cells = [[str(h) for h in header]]
    for row in rows:
        cells.append([str(to_jsonable(v)) for v in row])
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# path files


def _samples_from_rows(n, grid, flat_rows, source):
    grid = np.asarray(grid, dtype=float)
    try:
        samples = np.asarray(flat_rows, dtype=float).reshape(len(grid), 2 * n, 2 * n)
    except ValueError as err:
        raise PathFormatError(
            "sample sizes do not match 2n x 2n", source=str(source), n=n
        ) from err
    return grid, samples


def parse_path_json(text, source="<string>"):
    r"""
    Parse the JSON path format ``{"n": n, "grid": [t, ...], "samples": [[...], ...]}``.

    Each sample is either a flat row-major list of :math:`4n^2` entries or a nested
    :math:`2n\times 2n` list.

    Returns:
        tuple: ``(n, grid, samples)`` with ``samples`` of shape ``(K+1, 2n, 2n)``
    """
    try:
        payload = json.loads(text)
        n = int(payload["n"])
        grid = payload["grid"]
        samples = payload["samples"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
        raise PathFormatError(f"malformed path file: {err}", source=str(source)) from err
    if n < 1 or len(grid) != len(samples):
        raise PathFormatError(
            "grid and samples must have equal length and n must be positive",
            source=str(source),
            n=n,
            grid_points=len(grid),
            samples=len(samples),
        )
    flat = [np.ravel(np.asarray(s, dtype=float)) for s in samples]
    return (n,) + _samples_from_rows(n, grid, flat, source)


def parse_path_csv(text, source="<string>"):
    r"""
    Parse the CSV path format: one row per sample, first column ``t``, then the
    :math:`4n^2` matrix entries row-major. A non-numeric first row is a header.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if rows:
        try:
            float(rows[0][0])
        except ValueError:
            rows = rows[1:]
    if not rows:
        raise PathFormatError("empty path file", source=str(source))
    width = len(rows[0]) - 1
    n = int(round(math.sqrt(width) / 2))
    if width < 4 or 4 * n * n != width or any(len(r) - 1 != width for r in rows):
        raise PathFormatError(
            "each row must hold t and 4n^2 entries", source=str(source), columns=width + 1
        )
    try:
        values = np.array([[float(c) for c in r] for r in rows])
    except ValueError as err:
        raise PathFormatError(f"non-numeric entry: {err}", source=str(source)) from err
    return (n,) + _samples_from_rows(n, values[:, 0], values[:, 1:], source)


def read_path_file(path):
    r"""Read a JSON or CSV path file (chosen by suffix, JSON otherwise)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as err:
        raise PathFormatError(f"cannot read path file: {err}", source=str(path)) from err
    if path.suffix.lower() == ".csv":
        return parse_path_csv(text, source=path)
    return parse_path_json(text, source=path)


def path_to_json(grid, samples):
    r"""Serialize a path in the JSON path format, samples flattened row-major."""
    samples = np.asarray(samples, dtype=float)
    return json.dumps(
        {
            "n": samples.shape[1] // 2,
            "grid": [float(t) for t in grid],
            "samples": [s.ravel().tolist() for s in samples],
        },
        sort_keys=True,
    )


# function tables


def table_to_csv(grid, values, name="value"):
    r"""Two-column CSV ``t,<name>`` of a function table."""
    return rows_to_csv(["t", name], zip(np.asarray(grid).tolist(), np.asarray(values).tolist()))


def table_from_csv(text):
    r"""Parse two-column CSV (header optional) into ``(grid, values)`` arrays."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if rows:
        try:
            float(rows[0][0])
        except ValueError:
            rows = rows[1:]
    try:
        data = np.array([[float(r[0]), float(r[1])] for r in rows])
    except (ValueError, IndexError) as err:
        raise ValueError(f"malformed table: {err}") from err
    if data.shape[0] < 3:
        raise ValueError("a table needs at least three rows")
    return data[:, 0], data[:, 1]
