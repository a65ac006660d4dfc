import dataclasses
import logging

import numpy as np

from ..utils.io import table_from_csv, table_to_csv
from ..utils.math import central_difference, cumulative_simpson

LOGGER = logging.getLogger(__name__)

MIN_VERIFY_POINTS = 1024


@dataclasses.dataclass(frozen=True)
class FunctionTable:
    r"""
    A function sampled on a uniform grid of a closed interval.

    Attributes:
        grid (numpy.ndarray): uniform nodes, at least 3.
        values (numpy.ndarray): samples.
        slope (numpy.ndarray): analytic derivative, if known. Otherwise :meth:`derivative`
            falls back on central differences.
        name (str): column name used for CSV output.
    """

    grid: np.ndarray
    values: np.ndarray
    slope: np.ndarray = None
    name: str = "value"

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        if self.slope is not None:
            object.__setattr__(self, "slope", np.asarray(self.slope, dtype=float))
        if grid.ndim != 1 or grid.shape != values.shape:
            raise ValueError(f"grid and values must be 1d of equal length, got {grid.shape} and {values.shape}")
        if grid.size < 3:
            raise ValueError("a table needs at least 3 nodes")
        steps = np.diff(grid)
        if not np.all(steps > 0) or not np.allclose(steps, steps[0], rtol=1e-6, atol=0.0):
            raise ValueError("table grid must be uniform and increasing")

    def __len__(self):
        return self.grid.size

    @property
    def spacing(self):
        return (self.grid[-1] - self.grid[0]) / (self.grid.size - 1)

    def derivative(self):
        if self.slope is not None:
            return self.slope
        return central_difference(self.values, self.spacing)

    def integral_from(self, t0=0.0):
        r"""Running integral :math:`\int_{t_0}^{t}` at every node; ``t0`` must be a node."""
        i0 = self.node_index(t0)
        running = cumulative_simpson(self.values, self.spacing)
        return running - running[i0]

    def node_index(self, t):
        i = int(np.argmin(np.abs(self.grid - t)))
        if abs(self.grid[i] - t) > 1e-9 * max(1.0, abs(t)):
            raise ValueError(f"{t} is not a grid node")
        return i

    def at(self, t):
        return np.interp(t, self.grid, self.values)

    def restrict(self, lo, hi):
        keep = (self.grid >= lo - 1e-12) & (self.grid <= hi + 1e-12)
        slope = None if self.slope is None else self.slope[keep]
        return FunctionTable(self.grid[keep], self.values[keep], slope, self.name)

    def with_values(self, values, name=None, slope=None):
        return FunctionTable(self.grid, values, slope, self.name if name is None else name)

    def to_csv(self):
        return table_to_csv(self.grid, self.values, self.name)

    @classmethod
    def from_csv(cls, text, name="value"):
        grid, values = table_from_csv(text)
        return cls(grid, values, name=name)


def uniform_table(lo, hi, size, function, name="value"):
    r"""Tabulate a vectorized ``function`` on ``size`` uniform nodes of :math:`[lo, hi]`."""
    grid = np.linspace(lo, hi, size)
    return FunctionTable(grid, function(grid), name=name)


def require_resolution(table, what):
    if len(table) < MIN_VERIFY_POINTS:
        raise ValueError(f"{what} needs at least {MIN_VERIFY_POINTS} grid points, got {len(table)}")


def require_same_grid(a, b):
    if a.grid.shape != b.grid.shape or not np.allclose(a.grid, b.grid, rtol=0.0, atol=1e-12):
        raise ValueError("tables must share a grid")
