r"""
Discretized paths of symplectic matrices and the model paths of periodic Reeb flows.

Coordinates are ordered :math:`(x_1,\dots,x_n,y_1,\dots,y_n)` and the standard form is
:math:`\omega_0 = \sum dx_i\wedge dy_i`, so :math:`\omega_0(u,v) = u^T\Omega v` with

.. math::

    \Omega = \begin{pmatrix} 0 & I \\ -I & 0 \end{pmatrix}, \qquad
    J_0 = -\Omega = \begin{pmatrix} 0 & -I \\ I & 0 \end{pmatrix}.

:math:`J_0` maps :math:`x_i` to :math:`y_i`, and a full turn :math:`e^{tJ_0}`,
:math:`t\in[0,2\pi]`, has index :math:`+2` per plane.
"""

import dataclasses
import functools
import logging
import math

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.linalg import sqrtm

from ..exceptions import (
    EmptyInput,
    EndpointMismatch,
    IncompatibleGrids,
    NonSymplecticSample,
    NotALoop,
    PrincipalNotExceptional,
)
from ..utils.io import path_to_json, read_path_file

LOGGER = logging.getLogger(__name__)

ANALYTIC = "analytic"
FINITE_DIFFERENCE = "finite-difference"
MIN_INTERVALS = 8
MODEL_MIN_INTERVALS = 64


def standard_j(n):
    r""":math:`J_0` of half-dimension ``n``."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, -eye], [eye, zero]])


def omega_matrix(n):
    r""":math:`\Omega = -J_0`, the Gram matrix of :math:`\omega_0`."""
    return -standard_j(n)


def symplectic_defect(M):
    r""":math:`\|M^TJ_0M - J_0\|_{max}`."""
    M = np.asarray(M, dtype=float)
    J = standard_j(M.shape[0] // 2)
    return float(np.max(np.abs(M.T @ J @ M - J)))


def is_symplectic(M, tol=1e-9):
    r"""
    Symplecticity test :math:`\|M^TJ_0M - J_0\|_{max} \le` **tol**.

    Args:
        M (numpy.ndarray): shape (2n, 2n) matrix.
        tol (float): must be positive.

    Returns:
        bool
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2:
        return False
    return symplectic_defect(M) <= tol


def symplectic_projection(M):
    r"""
    Nearby symplectic matrix :math:`MB^{-1/2}` with :math:`B = -J_0M^TJ_0M`.

    :math:`B = \mathrm{Id}` exactly when :math:`M` is symplectic, and the correction is of
    the size of the defect, so spline values are moved back onto :math:`Sp(2n)` without
    losing their interpolation accuracy.
    """
    M = np.asarray(M, dtype=float)
    J = standard_j(M.shape[0] // 2)
    B = -J @ M.T @ J @ M
    return M @ np.linalg.inv(np.real(sqrtm(B)))


def rotation_matrix(n, angle):
    r""":math:`e^{\theta J_0}`: rotation by ``angle`` in every :math:`(x_i,y_i)` plane."""
    c, s = math.cos(angle), math.sin(angle)
    if n == 1:
        return np.array([[c, -s], [s, c]])
    eye = np.eye(n)
    return np.block([[c * eye, -s * eye], [s * eye, c * eye]])


@functools.lru_cache(maxsize=256)
def _summand_coords(halves):
    n = sum(halves)
    coords = []
    offset = 0
    for h in halves:
        idx = np.concatenate([np.arange(offset, offset + h), np.arange(n + offset, n + offset + h)])
        coords.append((idx[:, None], idx[None, :]))
        offset += h
    return n, tuple(coords)


def direct_sum(mats):
    r"""
    Symplectic direct sum of square matrices of sizes :math:`2n_i`.

    Block ``i`` occupies :math:`x`-coordinates :math:`o_i..o_i+n_i-1` and the matching
    :math:`y`-coordinates, so the result is symplectic iff every summand is. Works on
    stacks of shape (..., 2n_i, 2n_i).
    """
    mats = [np.asarray(m, dtype=float) for m in mats]
    n, coords = _summand_coords(tuple(m.shape[-1] // 2 for m in mats))
    out = np.zeros(mats[0].shape[:-2] + (2 * n, 2 * n))
    for m, (rows, cols) in zip(mats, coords):
        out[..., rows, cols] = m
    return out


@dataclasses.dataclass
class SymplecticPath:
    r"""
    A path :math:`\psi:[0,T]\to Sp(2n)` sampled on a grid.

    Args:
        grid (numpy.ndarray): shape (K+1,) strictly increasing times, ``grid[0] == 0``,
            :math:`K \ge 8`.
        samples (numpy.ndarray): shape (K+1, 2n, 2n) symplectic matrices.
        derivative_mode (str): ``"analytic"`` when ``slope`` gives :math:`\dot\psi`
            exactly, ``"finite-difference"`` otherwise.
        evaluator (callable): optional exact :math:`t\mapsto\psi(t)`. Without it, off-grid
            values come from a cubic spline through the samples.
        slope (callable): :math:`t\mapsto\dot\psi(t)`, required in analytic mode.
        symplectic_tol (float): tolerance of the sample validation.

    Raises:
        NonSymplecticSample: a sample fails :func:`is_symplectic`.
    """

    grid: np.ndarray
    samples: np.ndarray
    derivative_mode: str = FINITE_DIFFERENCE
    evaluator: object = dataclasses.field(default=None, repr=False)
    slope: object = dataclasses.field(default=None, repr=False)
    symplectic_tol: float = 1e-9

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.samples = np.asarray(self.samples, dtype=float)
        if self.grid.ndim != 1 or self.grid.shape[0] < MIN_INTERVALS + 1:
            raise ValueError(f"a path needs at least {MIN_INTERVALS} grid intervals")
        if self.grid[0] != 0.0 or np.any(np.diff(self.grid) <= 0):
            raise ValueError("grid must start at 0 and be strictly increasing")
        dim = self.samples.shape[-1]
        if (
            self.samples.ndim != 3
            or self.samples.shape[0] != self.grid.shape[0]
            or self.samples.shape[1] != dim
            or dim % 2
        ):
            raise ValueError("samples must have shape (K+1, 2n, 2n)")
        if self.derivative_mode not in (ANALYTIC, FINITE_DIFFERENCE):
            raise ValueError(f"unknown derivative mode {self.derivative_mode!r}")
        if self.derivative_mode == ANALYTIC and self.slope is None:
            raise ValueError("analytic derivative mode needs a slope callable")
        J = standard_j(dim // 2)
        defects = np.max(
            np.abs(np.einsum("kji,jl,klm->kim", self.samples, J, self.samples) - J), axis=(1, 2)
        )
        worst = int(np.argmax(defects))
        if defects[worst] > self.symplectic_tol:
            raise NonSymplecticSample(
                "sample is not symplectic",
                index=worst,
                t=float(self.grid[worst]),
                defect=float(defects[worst]),
                tol=self.symplectic_tol,
            )
        self._spline = None
        self._slope_spline = None

    @property
    def n(self):
        return self.samples.shape[-1] // 2

    @property
    def duration(self):
        return float(self.grid[-1])

    @property
    def intervals(self):
        return self.grid.shape[0] - 1

    @property
    def min_cell(self):
        return float(np.min(np.diff(self.grid)))

    def at(self, t):
        r""":math:`\psi(t)`, from the evaluator if present, else by spline interpolation."""
        t = min(max(float(t), 0.0), self.duration)
        if self.evaluator is not None:
            return np.asarray(self.evaluator(t), dtype=float)
        if self._spline is None:
            self._spline = CubicSpline(self.grid, self.samples, axis=0)
        return self._spline(t)

    def derivative_samples(self):
        r""":math:`\dot\psi` on the grid: analytic, or second order differences."""
        if self.derivative_mode == ANALYTIC:
            return np.array([self.slope(t) for t in self.grid])
        return np.gradient(self.samples, self.grid, axis=0, edge_order=2)

    def derivative(self, t):
        r""":math:`\dot\psi(t)`. Finite-difference paths interpolate the grid differences."""
        t = min(max(float(t), 0.0), self.duration)
        if self.derivative_mode == ANALYTIC:
            return np.asarray(self.slope(t), dtype=float)
        if self._slope_spline is None:
            self._slope_spline = CubicSpline(self.grid, self.derivative_samples(), axis=0)
        return self._slope_spline(t)

    def interpolation_defect(self):
        r"""
        Largest symplectic defect of the cubic spline at the cell midpoints, 0 for paths
        with an evaluator. Scales like the interpolation error of the samples.
        """
        if self.evaluator is not None:
            return 0.0
        if self._spline is None:
            self._spline = CubicSpline(self.grid, self.samples, axis=0)
        values = self._spline(0.5 * (self.grid[:-1] + self.grid[1:]))
        J = standard_j(self.n)
        return float(np.max(np.abs(np.einsum("kji,jl,klm->kim", values, J, values) - J)))

    def is_loop(self, tol=1e-9):
        return float(np.max(np.abs(self.samples[-1] - self.samples[0]))) <= tol

    def is_constant_identity(self, tol=1e-12):
        return float(np.max(np.abs(self.samples - np.eye(2 * self.n)))) <= tol

    def to_json(self):
        return path_to_json(self.grid, self.samples)

    @classmethod
    def from_file(cls, path, symplectic_tol=1e-9):
        r"""Read a JSON or CSV path file. Derivatives are finite differences."""
        _, grid, samples = read_path_file(path)
        return cls(grid, samples, symplectic_tol=symplectic_tol)


def _grid(duration, samples, minimum=MIN_INTERVALS):
    if samples < minimum:
        raise ValueError(f"samples must be at least {minimum}, got {samples}")
    if not duration > 0:
        raise ValueError(f"duration must be positive, got {duration}")
    return np.linspace(0.0, float(duration), int(samples) + 1)


def _analytic_path(grid, evaluator, slope):
    samples = np.array([evaluator(t) for t in grid])
    return SymplecticPath(grid, samples, ANALYTIC, evaluator, slope)


def rotation_path(winding_rate, duration, samples, start_angle=0.0):
    r"""
    Planar rotation :math:`\psi(t) = e^{(\theta_0 + wt)J_0}` of half-dimension 1.

    Args:
        winding_rate (fractions.Fraction): :math:`w`, radians per unit time. ints and floats work too.
        duration (float): :math:`T > 0`.
        samples (int): grid intervals, at least 8.
        start_angle (float): :math:`\theta_0`.

    Returns:
        SymplecticPath: with analytic slope :math:`wJ_0\psi(t)`.
    """
    w = float(winding_rate)
    theta0 = float(start_angle)
    J = standard_j(1)

    def evaluator(t):
        return rotation_matrix(1, theta0 + w * t)

    def slope(t):
        return w * J @ rotation_matrix(1, theta0 + w * t)

    return _analytic_path(_grid(duration, samples), evaluator, slope)


def constant_path(matrix, duration, samples):
    r"""The constant path at a symplectic ``matrix``."""
    matrix = np.array(matrix, dtype=float)
    zero = np.zeros_like(matrix)
    return _analytic_path(_grid(duration, samples), lambda t: matrix, lambda t: zero)


def identity_path(n, duration, samples):
    return constant_path(np.eye(2 * n), duration, samples)


def hyperbolic_path(rate, duration, samples):
    r""":math:`\psi(t) = \mathrm{diag}(e^{\lambda t}, e^{-\lambda t})`, half-dimension 1."""
    lam = float(rate)

    def evaluator(t):
        return np.diag([math.exp(lam * t), math.exp(-lam * t)])

    def slope(t):
        return np.diag([lam * math.exp(lam * t), -lam * math.exp(-lam * t)])

    return _analytic_path(_grid(duration, samples), evaluator, slope)


def conjugate_path(path, S, tol=1e-9):
    r"""
    :math:`S\psi(t)S^{-1}` for a symplectic matrix :math:`S`. Conjugation does not change
    the index, and a generic :math:`S` destroys any block structure.
    """
    S = np.asarray(S, dtype=float)
    if not is_symplectic(S, tol):
        raise NonSymplecticSample("conjugating matrix is not symplectic", defect=symplectic_defect(S))
    S_inv = np.linalg.inv(S)
    samples = S @ path.samples @ S_inv
    if path.derivative_mode == ANALYTIC:
        return SymplecticPath(
            path.grid.copy(),
            samples,
            ANALYTIC,
            lambda t: S @ path.at(t) @ S_inv,
            lambda t: S @ path.derivative(t) @ S_inv,
            symplectic_tol=max(path.symplectic_tol, tol),
        )
    return SymplecticPath(path.grid.copy(), samples, symplectic_tol=max(path.symplectic_tol, tol))


def _resample(path, grid):
    values = np.array([path.at(t) for t in grid])
    if path.evaluator is None:
        values = np.array([symplectic_projection(M) for M in values])
    return values


def block_diag_path(parts, resample=False):
    r"""
    Symplectic direct sum of paths, of half-dimension :math:`\sum n_i`.

    Args:
        parts (list): of :class:`SymplecticPath`.
        resample (bool): when grids differ, evaluate every part on the union of the grids
            (all parts must share the duration). Off-grid values of parts without an
            evaluator come from their cubic splines and are projected back onto
            :math:`Sp(2n)` by :func:`symplectic_projection`.

    Raises:
        EmptyInput: ``parts`` is empty.
        IncompatibleGrids: grids differ and ``resample`` is false, or durations differ.
    """
    parts = list(parts)
    if not parts:
        raise EmptyInput("block_diag_path needs at least one part")
    if len(parts) == 1:
        return parts[0]
    grid = parts[0].grid
    same = all(p.grid.shape == grid.shape and np.allclose(p.grid, grid, atol=1e-14) for p in parts)
    if not same:
        durations = [p.duration for p in parts]
        if not resample or not np.allclose(durations, durations[0]):
            raise IncompatibleGrids(
                "parts are sampled on different grids",
                durations=durations,
                grid_points=[p.grid.shape[0] for p in parts],
                resample=resample,
            )
        grid = parts[0].grid
        for p in parts[1:]:
            grid = np.union1d(grid, p.grid)
        LOGGER.debug("resampled %d parts onto a union grid of %d points", len(parts), grid.size)
        samples = direct_sum([_resample(p, grid) for p in parts])
    else:
        samples = direct_sum([p.samples for p in parts])

    analytic = all(p.derivative_mode == ANALYTIC for p in parts)
    if not analytic:
        return SymplecticPath(grid, samples)

    def evaluator(t):
        return direct_sum([p.at(t) for p in parts])

    def slope(t):
        return direct_sum([p.derivative(t) for p in parts])

    return SymplecticPath(grid, samples, ANALYTIC, evaluator, slope)


def bw_principal_model(n, c, k, N, samples=256):
    r"""
    Linearized Reeb flow along the :math:`k`-fold cover of a principal orbit of the
    Boothby-Wang orbibundle, over :math:`[0, 2\pi]`.

    The base loop is a single plane winding at rate :math:`(c-k)N` and the normal
    direction winds at rate :math:`k`; the remaining :math:`n-3` planes are constant
    identity. The index is

    .. math::

        \mu = 2(c-k)N + 2k = 2(N(c-k)+k).

    Args:
        n (int): half-dimension of the filling, at least 3. The path has half-dimension
            :math:`n-1`.
        c (int): Chern number.
        k (int): degree, at least 1.
        N (int): power, at least 1.
        samples (int): grid intervals, at least 64.
    """
    if n < 3 or k < 1 or N < 1:
        raise ValueError(f"need n >= 3, k >= 1, N >= 1, got n={n}, k={k}, N={N}")
    duration = 2 * math.pi
    _grid(duration, samples, MODEL_MIN_INTERVALS)
    blocks = [
        rotation_path((c - k) * N, duration, samples),
        rotation_path(k, duration, samples),
    ]
    blocks += [identity_path(1, duration, samples) for _ in range(n - 3)]
    return block_diag_path(blocks)


def bw_exceptional_model(n, c, N, m, samples=256):
    r"""
    Linearized Reeb flow along the :math:`m`-fold cover of an exceptional orbit
    (:math:`k = 1`), over :math:`[0, 2\pi m/N]`.

    The base plane winds at rate :math:`(c-1)N`, closing up :math:`(c-1)m` times, and the
    normal plane at rate 1, which is not a loop. The index is

    .. math::

        \mu = 2(c-1)m + 2\lfloor m/N \rfloor + 1.

    Raises:
        PrincipalNotExceptional: ``m`` is a multiple of ``N``.
    """
    if n < 3 or N < 1 or m < 1:
        raise ValueError(f"need n >= 3, N >= 1, m >= 1, got n={n}, N={N}, m={m}")
    if m % N == 0:
        raise PrincipalNotExceptional(
            "the cover is a principal orbit", N=N, m=m
        )
    duration = 2 * math.pi * m / N
    _grid(duration, samples, MODEL_MIN_INTERVALS)
    blocks = [
        rotation_path((c - 1) * N, duration, samples),
        rotation_path(1, duration, samples),
    ]
    blocks += [identity_path(1, duration, samples) for _ in range(n - 3)]
    return block_diag_path(blocks)


def _catenate_many(parts):
    offsets = np.cumsum([0.0] + [p.duration for p in parts])
    grid = np.concatenate([parts[0].grid] + [p.grid[1:] + o for p, o in zip(parts[1:], offsets[1:])])
    samples = np.concatenate([parts[0].samples] + [p.samples[1:] for p in parts[1:]])
    if not all(p.evaluator is not None for p in parts):
        return SymplecticPath(grid, samples)

    def locate(t):
        i = int(np.searchsorted(offsets, t, side="right")) - 1
        i = min(max(i, 0), len(parts) - 1)
        return parts[i], t - offsets[i]

    def evaluator(t):
        part, s = locate(t)
        return part.at(s)

    if all(p.derivative_mode == ANALYTIC for p in parts):

        def slope(t):
            part, s = locate(t)
            return part.derivative(s)

        return SymplecticPath(grid, samples, ANALYTIC, evaluator, slope)
    return SymplecticPath(grid, samples, evaluator=evaluator)


def catenate(p1, p2, tol=1e-9):
    r"""
    Catenation :math:`\psi_1 * \psi_2` on :math:`[0, T_1+T_2]`.

    Raises:
        EndpointMismatch: :math:`\psi_1(T_1) \ne \psi_2(0)` within ``tol`` or the
            half-dimensions differ.
    """
    if p1.n != p2.n:
        raise EndpointMismatch("half-dimensions differ", n1=p1.n, n2=p2.n)
    gap = float(np.max(np.abs(p1.samples[-1] - p2.samples[0])))
    if gap > tol:
        raise EndpointMismatch("end of the first path is not the start of the second", gap=gap, tol=tol)
    return _catenate_many([p1, p2])


def iterate(loop, m, tol=1e-9):
    r"""
    The ``m``-fold catenation of a loop with itself.

    Raises:
        NotALoop: :math:`\psi(T) \ne \psi(0)` within ``tol``.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if not loop.is_loop(tol):
        raise NotALoop(
            "path does not close up",
            gap=float(np.max(np.abs(loop.samples[-1] - loop.samples[0]))),
            tol=tol,
        )
    if m == 1:
        return loop
    return _catenate_many([loop] * m)


def suggest_perturbation(path, epsilon=1e-3):
    r"""
    :math:`e^{\varepsilon tJ_0}\psi(t)`, the path pushed off a degenerate crossing by a small
    positive rotation. Never applied by the index engine itself; for constant identity
    blocks the result has index :math:`+1` per plane.
    """
    n = path.n
    eps = float(epsilon)
    J = standard_j(n)

    def evaluator(t):
        return rotation_matrix(n, eps * t) @ path.at(t)

    def slope(t):
        R = rotation_matrix(n, eps * t)
        return eps * J @ R @ path.at(t) + R @ path.derivative(t)

    if path.derivative_mode == ANALYTIC:
        return _analytic_path(path.grid.copy(), evaluator, slope)
    samples = np.array([rotation_matrix(n, eps * t) for t in path.grid]) @ path.samples
    return SymplecticPath(path.grid.copy(), samples, symplectic_tol=path.symplectic_tol)
