r"""
Graded dimension sequences and their (mean) Euler characteristics.

For a graded vector space with dimensions :math:`b_i` the mean Euler characteristic is the
common value of

.. math::

    \liminf_{N\to\infty} \frac1N \sum_{i=-N}^{N} (-1)^i b_i
    \quad\text{and}\quad
    \limsup_{N\to\infty} \frac1N \sum_{i=-N}^{N} (-1)^i b_i

when the two agree. For eventually periodic sequences it is the signed sum over one period
divided by the period; the finite part does not contribute.
"""

import dataclasses
import logging
from fractions import Fraction

import numpy as np

from ..exceptions import InfiniteSupport, InvalidGradedDims
from ..utils.math import window_averages

LOGGER = logging.getLogger(__name__)


def _check_dim(value, where):
    if isinstance(value, bool) or int(value) != value or value < 0:
        raise InvalidGradedDims("dimensions must be nonnegative integers", degree=where, value=value)
    return int(value)


@dataclasses.dataclass(frozen=True)
class PeriodicTail:
    r"""
    Periodic continuation :math:`b_{s+j+rP} = \mathrm{pattern}[j]` for :math:`r \ge 0`.

    Args:
        start_degree (int): :math:`s`.
        period (int): :math:`P`, positive and even.
        pattern (tuple): :math:`P` nonnegative dimensions.
    """

    start_degree: int
    period: int
    pattern: tuple

    def __post_init__(self):
        pattern = tuple(
            _check_dim(v, self.start_degree + j) for j, v in enumerate(self.pattern)
        )
        object.__setattr__(self, "pattern", pattern)
        if self.period < 1 or self.period % 2:
            raise InvalidGradedDims("period must be a positive even integer", period=self.period)
        if len(pattern) != self.period:
            raise InvalidGradedDims(
                "pattern length must equal the period", period=self.period, length=len(pattern)
            )


@dataclasses.dataclass(frozen=True)
class GradedDims:
    r"""
    Finitely supported dimensions plus an optional periodic tail above them.

    Args:
        finite_part (dict): degree to dimension, supported below the tail start.
        tail (PeriodicTail): optional.
    """

    finite_part: dict = dataclasses.field(default_factory=dict)
    tail: PeriodicTail = None

    def __post_init__(self):
        finite = {int(i): _check_dim(v, i) for i, v in self.finite_part.items() if v != 0}
        object.__setattr__(self, "finite_part", finite)
        if self.tail is not None and finite and max(finite) >= self.tail.start_degree:
            raise InvalidGradedDims(
                "finite part must lie below the start of the tail",
                max_finite_degree=max(finite),
                start_degree=self.tail.start_degree,
            )

    @classmethod
    def from_betti(cls, betti, shift=0):
        r"""Finite module with ``betti[i]`` in degree ``i + shift``."""
        return cls({i + shift: b for i, b in enumerate(betti)})

    @property
    def is_finite(self):
        return self.tail is None

    def dim(self, degree):
        degree = int(degree)
        if self.tail is not None and degree >= self.tail.start_degree:
            return self.tail.pattern[(degree - self.tail.start_degree) % self.tail.period]
        return self.finite_part.get(degree, 0)

    def dims(self, lo, hi):
        r"""Dimensions in degrees ``lo..hi`` inclusive, as an int64 array."""
        degrees = np.arange(lo, hi + 1)
        out = np.array([self.finite_part.get(int(i), 0) for i in degrees], dtype=np.int64)
        if self.tail is not None:
            s, P = self.tail.start_degree, self.tail.period
            above = degrees >= s
            out[above] = np.asarray(self.tail.pattern, dtype=np.int64)[(degrees[above] - s) % P]
        return out

    def to_dict(self):
        payload = {"finite_part": {str(i): v for i, v in sorted(self.finite_part.items())}}
        if self.tail is not None:
            payload["tail"] = dataclasses.asdict(self.tail)
        return payload


def chi(g):
    r"""
    Euler characteristic :math:`\sum_i (-1)^i \dim_i` of a finite graded space.

    Raises:
        InfiniteSupport: ``g`` has a periodic tail.
    """
    if g.tail is not None:
        raise InfiniteSupport("Euler characteristic of an infinite module", start_degree=g.tail.start_degree)
    return sum((-1) ** (i % 2) * v for i, v in g.finite_part.items())


def chi_m_periodic(g):
    r"""
    Exact mean Euler characteristic of an eventually periodic sequence,

    .. math::

        \chi_m = \frac{1}{P}\sum_{j=0}^{P-1} (-1)^{s+j}\,\mathrm{pattern}[j].

    A finite sequence has :math:`\chi_m = 0`.

    Returns:
        fractions.Fraction
    """
    if g.tail is None:
        return Fraction(0)
    s, P = g.tail.start_degree, g.tail.period
    signed = sum((-1) ** ((s + j) % 2) * v for j, v in enumerate(g.tail.pattern))
    return Fraction(signed, P)


def chi_m_window(g, window=2000):
    r"""
    Windowed estimate of the mean Euler characteristic.

    The partial averages :math:`A(N) = \frac1N\sum_{i=-N}^{N}(-1)^ib_i` are formed for
    :math:`N \le W`; the minimum and maximum over the last quarter :math:`N \ge 3W/4` stand in
    for the lower and upper limits and the estimate is their mean. The bias is of order
    :math:`|\chi_m|\,p_0/W` for a sequence starting in degree :math:`p_0`.

    Args:
        g (GradedDims): the sequence.
        window (int): :math:`W \ge 10`.

    Returns:
        float
    """
    if window < 10:
        raise ValueError(f"window must be at least 10, got {window}")
    degrees = np.arange(-window, window + 1)
    values = np.where(degrees % 2 == 0, 1.0, -1.0) * g.dims(-window, window)
    averages = window_averages(values, window, window)
    last = averages[(3 * window) // 4 - 1 :]
    return 0.5 * (float(np.min(last)) + float(np.max(last)))


def tensor_cp_infinity(finite, shift=0):
    r"""
    :math:`V \otimes H_*(\mathbb{CP}^\infty)` shifted by ``shift``:

    .. math::

        \dim_i = \sum_{j \le i - s,\; i-s-j \text{ even}} \dim V_j.

    The result is periodic with pattern :math:`[E, O]` (total even and odd dimension of
    :math:`V`) from degree :math:`s + 2\lfloor j_{max}/2 \rfloor` on.

    Args:
        finite (GradedDims): finite module :math:`V`.
        shift (int): :math:`s`.

    Returns:
        GradedDims
    """
    if finite.tail is not None:
        raise InvalidGradedDims("tensor_cp_infinity takes a finite module")
    if not finite.finite_part:
        return GradedDims()
    lo, hi = min(finite.finite_part), max(finite.finite_part)
    even = sum(v for j, v in finite.finite_part.items() if j % 2 == 0)
    odd = sum(v for j, v in finite.finite_part.items() if j % 2)
    start = shift + 2 * (hi // 2)
    part = {}
    for i in range(shift + lo, start):
        part[i] = sum(
            v for j, v in finite.finite_part.items() if j <= i - shift and (i - shift - j) % 2 == 0
        )
    return GradedDims(part, PeriodicTail(start, 2, (even, odd)))
