r"""
Gluing data of the fibered Dehn twist, verified on grids.

Near the boundary of the Liouville collar the contact form is :math:`\rho(t)\,\alpha`
with

.. math::

    \rho(t) =
        \begin{cases}
            e^{t-C}, & t \le 1/4 \\
            t(2-t), & t \ge 3/4
        \end{cases}

blended by a :math:`C^2` smoothstep in between. The twisting profile is

.. math::

    f(t) = 2\pi\,\frac{\rho(t) - \rho'(t)}{\rho(t)^2},

which solves :math:`\rho(t)\big(2\pi + \int_0^t e^{s-C} f(s)\,ds\big) = 2\pi e^{t-C}`, and the
mapping torus shift is

.. math::

    h(t) = A - e^{t-C} f(t) + \int_0^t e^{s-C} f(s)\,ds,

which works out to :math:`2\pi e^{t-C}\rho'/\rho^2 + A - 2\pi`. Every check returns a
residual; tolerances are applied by the caller.
"""

import dataclasses
import logging
import math
import typing

import numpy as np

from ..exceptions import ConditionViolated, NonPositiveRho, NonPositiveShift
from ..utils.math import central_difference, smoothstep, smoothstep_slope
from .tables import FunctionTable, require_resolution, require_same_grid

LOGGER = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
RHO_DOMAIN = (-0.99, 0.99)
COLLAR_END = 0.25
CAP_START = 0.75
SIGN_TOL = 1e-12


@dataclasses.dataclass(frozen=True)
class ProfileConfig:
    r"""
    Constants of the construction.

    Attributes:
        C (float): collar constant, positive.
        eta (float): binding transition width, :math:`0 < \eta < \min\{C, 1\}`.
        grid_size (int): nodes of every table.
        multiplicity (int): number of times the collar is twisted.
    """

    C: float = 1.0
    eta: float = 0.5
    grid_size: int = 10001
    multiplicity: int = 1

    def __post_init__(self):
        if not self.C > 0:
            raise ValueError(f"C must be positive, got {self.C}")
        if not 0 < self.eta < min(self.C, 1.0):
            raise ValueError(f"eta must lie in (0, min(C, 1)), got {self.eta}")
        if self.grid_size < 3:
            raise ValueError(f"grid_size must be at least 3, got {self.grid_size}")
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be at least 1, got {self.multiplicity}")


def rho_closed_form(t, C):
    r"""
    :math:`\rho` and :math:`\rho'` at the points ``t`` (multiplicity one).

    Returns:
        tuple: ``(rho, slope)`` arrays.
    """
    t = np.asarray(t, dtype=float)
    a = np.exp(t - C)
    b = t * (2.0 - t)
    db = 2.0 - 2.0 * t
    width = CAP_START - COLLAR_END
    u = (t - COLLAR_END) / width
    s = smoothstep(np.atleast_1d(u)).reshape(t.shape)
    ds = smoothstep_slope(np.atleast_1d(u)).reshape(t.shape) / width
    rho = np.where(t <= COLLAR_END, a, np.where(t >= CAP_START, b, a + s * (b - a)))
    slope = np.where(t <= COLLAR_END, a, np.where(t >= CAP_START, db, a + s * (db - a) + ds * (b - a)))
    return rho, slope


def build_rho(cfg):
    r"""
    Tabulate :math:`\rho_N = \rho / N` on :math:`[-0.99, 0.99]`, with its analytic slope.

    The grid size is rounded up to an odd number so that :math:`t = 0` is a node.

    Raises:
        NonPositiveRho: the blend dips to or below zero.
    """
    size = cfg.grid_size | 1
    grid = np.linspace(*RHO_DOMAIN, size)
    grid[size // 2] = 0.0
    rho, slope = rho_closed_form(grid, cfg.C)
    rho, slope = rho / cfg.multiplicity, slope / cfg.multiplicity
    i = int(np.argmin(rho))
    if rho[i] <= 0:
        raise NonPositiveRho("rho is not positive", t=float(grid[i]), rho=float(rho[i]), C=cfg.C)
    LOGGER.debug("built rho on %d nodes, C=%g, multiplicity=%d", size, cfg.C, cfg.multiplicity)
    return FunctionTable(grid, rho, slope, name="rho")


def twisting_profile(rho):
    r"""
    :math:`f = 2\pi(\rho - \rho')/\rho^2` on the grid of ``rho``.

    Uses the analytic slope carried by ``rho`` if present, otherwise central differences.
    For :math:`\rho_N = \rho/N` this is :math:`N f`.
    """
    values = rho.values
    if np.any(values <= 0):
        i = int(np.argmin(values))
        raise NonPositiveRho("rho is not positive", t=float(rho.grid[i]), rho=float(values[i]))
    f = TWO_PI * (values - rho.derivative()) / values ** 2
    return rho.with_values(f, name="f")


def unit_profile(cfg, size=40001):
    r"""
    :math:`f_N` on its own uniform grid of ``size`` nodes of :math:`[0, 1]`, with
    :math:`\rho_N` in closed form, for :func:`exactness_check`. The table of :func:`build_rho`
    covers :math:`[-0.99, 0.99]`, so it has half the nodes on :math:`[0, 1]` and misses 1.
    """
    if size < 3:
        raise ValueError(f"size must be at least 3, got {size}")
    grid = np.linspace(0.0, 1.0, size)
    rho, slope = rho_closed_form(grid, cfg.C)
    return twisting_profile(
        FunctionTable(grid, rho / cfg.multiplicity, slope / cfg.multiplicity, name="rho")
    )


def verify_profile(rho, f, C, multiplicity=1):
    r"""
    Residual of the defining equation of the twisting profile,

    .. math::

        \max_t \Big|\rho(t)\Big(2\pi + \frac{1}{N}\int_0^t e^{s-C} f(s)\,ds\Big)
            - \frac{2\pi e^{t-C}}{N}\Big|,

    with the integral by composite Simpson. The grid must contain :math:`0`.

    Returns:
        float: the residual.
    """
    require_same_grid(rho, f)
    require_resolution(rho, "verify_profile")
    weight = np.exp(rho.grid - C)
    integral = f.with_values(weight * f.values / multiplicity).integral_from(0.0)
    residual = rho.values * (TWO_PI + integral) - TWO_PI * weight / multiplicity
    return float(np.max(np.abs(residual)))


def mapping_torus_shift(f, C, A=TWO_PI, multiplicity=1):
    r"""
    :math:`h = A - e^{t-C}f_N/N + \int_0^t e^{s-C} f_N/N`, the same for every multiplicity.

    Raises:
        NonPositiveShift: :math:`\min h \le 0`.
    """
    weighted = np.exp(f.grid - C) * f.values / multiplicity
    h = A - weighted + f.with_values(weighted).integral_from(0.0)
    i = int(np.argmin(h))
    if h[i] <= 0:
        raise NonPositiveShift("mapping torus shift is not positive", t=float(f.grid[i]), h=float(h[i]), A=A)
    return f.with_values(h, name="h")


def exactness_check(f, A=TWO_PI, integral=None):
    r"""
    Residual of the exactness identity of the collar map,

    .. math::

        \frac{d}{dt}\Big[A - e^t f(t) + \int_0^t e^s f(s)\,ds\Big] + e^t f'(t) = 0,

    with both derivatives by central differences, so the residual is
    :math:`O(h^2 \max|f' + 2f''|)`.

    Args:
        f (FunctionTable): the profile, usually on :math:`[0, 1]`.
        A (float): constant of the primitive.
        integral (numpy.ndarray): running integral of :math:`e^s f`; computed by quadrature
            from the first node when omitted.

    Returns:
        float: the residual.
    """
    require_resolution(f, "exactness_check")
    weight = np.exp(f.grid)
    if integral is None:
        integral = f.with_values(weight * f.values).integral_from(f.grid[0])
    primitive = A - weight * f.values + integral
    h = f.spacing
    residual = central_difference(primitive, h) + weight * central_difference(f.values, h)
    return float(np.max(np.abs(residual)))


# binding interpolation


class ContactPair(typing.NamedTuple):
    r"""Functions :math:`(h_1, h_2)` of :math:`\alpha = h_1\,d\theta + h_2\,\lambda` and their slopes."""

    r: np.ndarray
    h1: np.ndarray
    h2: np.ndarray
    dh1: np.ndarray
    dh2: np.ndarray

    def blend(self, other, s):
        return ContactPair(self.r, *((1.0 - s) * a + s * b for a, b in zip(self[1:], other[1:])))


def binding_profile(cfg):
    r"""
    The monotone profile :math:`f_\eta` on :math:`[0, 1]`: zero for :math:`t \le \eta/4`,
    :math:`2\pi` for :math:`t \ge 3\eta/4`, smoothstep in between.
    """
    grid = np.linspace(0.0, 1.0, cfg.grid_size)
    return FunctionTable(grid, TWO_PI * _binding_step(grid, cfg.eta), name="f_eta")


def _binding_step(t, eta):
    return smoothstep((t - eta / 4.0) / (eta / 2.0))


def _binding_ends(cfg):
    r"""
    Both ends :math:`s = 0` and :math:`s = 1` of the interpolation on :math:`r \in (0, 1]`.

    The :math:`s = 0` end is assembled from its slopes. With :math:`S` the smoothstep on
    :math:`[(1-\eta)/2, 1-\eta]`,

    .. math::

        h_1' = -(1-S)\,2r - S e^{1-r-C}, \qquad h_2' = (1-S)\,2ar + S\,\partial_r h_2^0,

    integrated so that both agree with the collar pair for :math:`r \ge 1-\eta`. Near
    :math:`r = 0` this gives :math:`h_1 = K - r^2` and :math:`h_2 = ar^2`, and :math:`a > 0`
    because :math:`h_2^0` is positive where :math:`f_\eta = 2\pi`.
    """
    r = np.linspace(0.0, 1.0, cfg.grid_size)
    # the collar pair lives on u = 1 - r, tabulated on the same nodes
    u = r
    collar_u = np.exp(u - cfg.C)
    shift_u = 1.0 + FunctionTable(u, collar_u * _binding_step(u, cfg.eta)).integral_from(0.0) - collar_u
    collar, shift = collar_u[::-1], shift_u[::-1]
    dshift = collar * (1.0 - _binding_step(1.0 - r, cfg.eta))

    lo, hi = (1.0 - cfg.eta) / 2.0, 1.0 - cfg.eta
    inner = 1.0 - smoothstep((r - lo) / (hi - lo))
    table = FunctionTable(r, inner * (2.0 * r - collar))
    h1 = collar - table.integral_from(1.0)
    ramp = table.with_values(inner * 2.0 * r).integral_from(0.0)
    # shift is flat on r <= 1 - 3 eta / 4, so the ramp carries h2 from 0 up to it
    a = shift[0] / ramp[-1]
    h2 = shift - shift[0] + a * ramp
    start = ContactPair(
        r[1:],
        h1[1:],
        h2[1:],
        (-inner * 2.0 * r - (1.0 - inner) * collar)[1:],
        (inner * 2.0 * a * r + (1.0 - inner) * dshift)[1:],
    )
    rho, slope = rho_closed_form(1.0 - r[1:], cfg.C)
    end = ContactPair(r[1:], rho, 1.0 - rho, -slope, slope)
    return start, end


def interpolation_pair(cfg, s):
    r"""
    :math:`(1-s)(h_1^0, h_2^0) + s(h_1^1, h_2^1)` on the radial grid, where

    .. math::

        h_1^0 = e^{1-r-C}, \quad
        h_2^0 = 1 + \frac{1}{2\pi}\int_0^{1-r} e^{s-C} f_\eta(s)\,ds - e^{1-r-C}, \quad
        h_1^1 = \rho(1-r), \quad h_2^1 = 1 - \rho(1-r),

    and near :math:`r = 0` the :math:`s = 0` end is joined to :math:`(K - r^2, ar^2)` through
    a smoothstep of the slopes on :math:`[(1-\eta)/2, 1-\eta]`.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    start, end = _binding_ends(cfg)
    return start.blend(end, s)


def check_contact_pair(pair, s=None, tol=SIGN_TOL):
    r"""
    Check :math:`h_1 > 0`, :math:`h_1' < 0`, :math:`h_2 > 0` and :math:`h_2' \ge 0`.

    The weak condition is tested as :math:`h_2' \ge -` **tol**, which absorbs the round-off
    of slopes that vanish identically.

    Raises:
        ConditionViolated: at the first failing node, with ``s``, ``r`` and the condition.
    """
    conditions = (
        ("h1 > 0", pair.h1 > 0),
        ("h1' < 0", pair.dh1 < 0),
        ("h2 > 0", pair.h2 > 0),
        ("h2' >= 0", pair.dh2 >= -tol),
    )
    for name, holds in conditions:
        if not np.all(holds):
            i = int(np.argmin(holds))
            raise ConditionViolated(
                f"contact condition {name} fails",
                s=None if s is None else float(s),
                r=float(pair.r[i]),
                condition=name,
            )
    return True


def binding_interpolation_check(cfg, s_samples=21):
    r"""
    Check the four contact conditions for every :math:`s` of a uniform grid of
    ``s_samples`` points of :math:`[0, 1]`.

    Returns:
        bool: ``True``; failures raise.

    Raises:
        ConditionViolated
    """
    if s_samples < 11:
        raise ValueError(f"s_samples must be at least 11, got {s_samples}")
    start, end = _binding_ends(cfg)
    for s in np.linspace(0.0, 1.0, s_samples):
        check_contact_pair(start.blend(end, s), s)
    LOGGER.debug("binding interpolation holds for %d values of s", s_samples)
    return True
