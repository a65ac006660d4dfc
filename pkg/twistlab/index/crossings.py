r"""
Robbin-Salamon index of symplectic paths by crossing forms.

A time :math:`t` is a crossing when :math:`\det(\psi(t)-\mathrm{Id}) = 0`. The crossing form
on :math:`V_t = \ker(\psi(t)-\mathrm{Id})` is

.. math::

    Q_t(v, v) = \omega_0(v, \dot\psi(t)v),

and for a path with only non-degenerate crossings

.. math::

    \mu(\psi) = \tfrac12\,\mathrm{sgn}\,Q_0
        + \sum_{0<t<T} \mathrm{sgn}\,Q_t
        + \tfrac12\,\mathrm{sgn}\,Q_T.
"""

import dataclasses
import logging
import math
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..exceptions import (
    DegenerateCrossing,
    IterationBoundViolation,
    UnresolvedCrossingCluster,
)
from .paths import ANALYTIC, SymplecticPath, iterate, omega_matrix

LOGGER = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
MERGE_FRACTION = 1e-7
INWARD_FRACTION = 1e-6
REST_TOL = 1e-12
SLACK_FACTOR = 10.0
MAX_KERNEL_TOL = 1e-3


@dataclasses.dataclass(frozen=True)
class CrossingRecord:
    r"""
    One crossing of a path.

    Attributes:
        t (float): crossing time.
        kernel_dim (int): :math:`\dim\ker(\psi(t)-\mathrm{Id}) \ge 1`.
        signature (int): signature of :math:`Q_t` on the kernel.
        degenerate (bool): some eigenvalue of :math:`Q_t` lies within the rank threshold.
        spectrum (tuple): eigenvalues of :math:`Q_t` on the kernel.
        block (int): direct summand of the path the crossing belongs to.
        endpoint (bool): the crossing ends the path, or a stretch of it off the identity,
            and counts with weight one half.
    """

    t: float
    kernel_dim: int
    signature: int
    degenerate: bool
    spectrum: tuple = ()
    block: int = 0
    endpoint: bool = False

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, payload):
        payload = dict(payload)
        payload["spectrum"] = tuple(payload.get("spectrum", ()))
        return cls(**payload)


@dataclasses.dataclass
class IndexResult:
    index: Fraction
    crossings: list
    warnings: list

    def to_dict(self):
        return {
            "index": self.index,
            "crossings": [c.to_dict() for c in self.crossings],
            "warnings": list(self.warnings),
        }


def _det_minus_identity(M):
    return float(np.linalg.det(M - np.eye(M.shape[-1])))


def _sigma_min(M):
    return float(np.linalg.svd(M - np.eye(M.shape[-1]), compute_uv=False)[-1])


def _kernel_basis(M, kernel_tol):
    _, s, vt = np.linalg.svd(M - np.eye(M.shape[-1]))
    return vt[s <= kernel_tol].T


def split_blocks(path, tol=1e-12):
    r"""
    Split a path into its symplectic direct summands.

    The coordinate planes :math:`(x_i, y_i)` are the nodes of a graph with an edge whenever
    some sample couples the two planes by an entry above ``tol``. Each connected component
    is a symplectic subspace preserved by the whole path.

    Returns:
        list: of ``(coords, SymplecticPath)`` pairs, ``coords`` the coordinate indices.
    """
    n = path.n
    mask = np.any(np.abs(path.samples) > tol, axis=0)
    if path.derivative_mode == ANALYTIC:
        mask |= np.any(np.abs(path.derivative_samples()) > tol, axis=0)
    plane = np.arange(2 * n) % n
    adjacency = np.zeros((n, n), dtype=bool)
    rows, cols = np.nonzero(mask)
    adjacency[plane[rows], plane[cols]] = True
    count, labels = connected_components(csr_matrix(adjacency), directed=False)
    if count == 1:
        return [(np.arange(2 * n), path)]

    LOGGER.debug("path of half-dimension %d splits into %d blocks", n, count)
    blocks = []
    for label in range(count):
        planes = np.flatnonzero(labels == label)
        coords = np.concatenate([planes, planes + n])
        sub = np.ix_(coords, coords)
        evaluator = None
        if path.evaluator is not None:
            evaluator = lambda t, sub=sub: path.at(t)[sub]  # noqa: E731
        slope = None
        if path.derivative_mode == ANALYTIC:
            slope = lambda t, sub=sub: path.derivative(t)[sub]  # noqa: E731
        samples = path.samples[:, coords[:, None], coords[None, :]]
        blocks.append(
            (
                coords,
                SymplecticPath(
                    path.grid,
                    samples,
                    path.derivative_mode,
                    evaluator,
                    slope,
                    symplectic_tol=path.symplectic_tol,
                ),
            )
        )
    return blocks


def crossing_signature(path, t, kernel_tol=1e-8, slope_time=None):
    r"""
    Crossing form of ``path`` at a crossing ``t``.

    The kernel basis :math:`V` is read off the right singular vectors of
    :math:`\psi(t)-\mathrm{Id}` with singular value at most ``kernel_tol``, and
    :math:`Q = V^T\Omega\dot\psi(t)V` is symmetrized before taking eigenvalues.
    ``slope_time`` moves the evaluation of :math:`\dot\psi` off ``t``, for one-sided
    slopes at the ends of a stretch where the path rests at the identity.

    Returns:
        CrossingRecord

    Raises:
        ValueError: :math:`\psi(t)-\mathrm{Id}` has no kernel at ``t``.
    """
    V = _kernel_basis(path.at(t), kernel_tol)
    if V.shape[1] == 0:
        raise ValueError(f"t={t} is not a crossing at kernel_tol={kernel_tol}")
    slope = path.derivative(t if slope_time is None else slope_time)
    Q = V.T @ omega_matrix(path.n) @ slope @ V
    eig = np.linalg.eigvalsh(0.5 * (Q + Q.T))
    positive = int(np.sum(eig > kernel_tol))
    negative = int(np.sum(eig < -kernel_tol))
    return CrossingRecord(
        t=float(t),
        kernel_dim=int(V.shape[1]),
        signature=positive - negative,
        degenerate=bool(np.any(np.abs(eig) <= kernel_tol)),
        spectrum=tuple(float(e) for e in eig),
    )


def _bisect(path, a, b, iters):
    fa = _det_minus_identity(path.at(a))
    for _ in range(iters):
        mid = 0.5 * (a + b)
        fm = _det_minus_identity(path.at(mid))
        if fm == 0.0:
            return mid
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def _golden_min(path, a, b, iters):
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = _sigma_min(path.at(c)), _sigma_min(path.at(d))
    for _ in range(iters):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = _sigma_min(path.at(c))
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = _sigma_min(path.at(d))
    # endpoints of the bracket are candidates too, the minimum may sit on one
    best = min((a, b, 0.5 * (a + b)), key=lambda s: _sigma_min(path.at(s)))
    return best


def _plateau_check(path, small, offset=0):
    run = 0
    for i, flag in enumerate(small):
        run = run + 1 if flag else 0
        if run >= 3:
            start = i - run + 1
            while i + 1 < small.size and small[i + 1]:
                i += 1
            raise UnresolvedCrossingCluster(
                "det(psi - Id) stays below the detection tolerance over several grid points",
                t_start=float(path.grid[offset + start]),
                t_end=float(path.grid[offset + i]),
                grid_points=int(i - start + 1),
            )


def _rest_cells(path):
    r"""Cells over which the path sits at the identity, checked at the midpoint too."""
    eye = np.eye(2 * path.n)
    at_identity = np.max(np.abs(path.samples - eye), axis=(1, 2)) <= REST_TOL
    rest = at_identity[:-1] & at_identity[1:]
    if path.evaluator is not None:
        for i in np.flatnonzero(rest):
            mid = 0.5 * (path.grid[i] + path.grid[i + 1])
            rest[i] = float(np.max(np.abs(path.at(mid) - eye))) <= REST_TOL
    return rest


def _active_segments(rest):
    r"""Maximal runs ``(lo, hi)`` of grid nodes whose cells are not at rest."""
    segments = []
    lo = None
    for i, flag in enumerate(rest):
        if not flag and lo is None:
            lo = i
        elif flag and lo is not None:
            segments.append((lo, i))
            lo = None
    if lo is not None:
        segments.append((lo, rest.size))
    return segments


def _segment_candidates(path, lo, hi, dets, det_tol, refine_iters):
    grid = path.grid
    absdet = np.abs(dets)
    _plateau_check(path, absdet[lo : hi + 1] <= det_tol, offset=lo)

    candidates = [float(grid[i]) for i in (lo, hi) if absdet[i] <= det_tol]
    for i in range(lo, hi):
        if np.sign(dets[i]) * np.sign(dets[i + 1]) < 0:
            candidates.append(_bisect(path, grid[i], grid[i + 1], refine_iters))
    for i in range(lo, hi + 1):
        left = absdet[i - 1] if i > lo else np.inf
        right = absdet[i + 1] if i < hi else np.inf
        if absdet[i] <= left and absdet[i] <= right and absdet[i] > 0.0:
            a, b = grid[max(i - 1, lo)], grid[min(i + 1, hi)]
            candidates.append(_golden_min(path, a, b, refine_iters))
        elif absdet[i] == 0.0 and lo < i < hi:
            candidates.append(float(grid[i]))

    merge_tol = MERGE_FRACTION * path.min_cell
    ends = (float(grid[lo]), float(grid[hi]))
    accepted = []
    for t in sorted(candidates):
        # exact ends win over refined times converging onto them
        if accepted and t - accepted[-1] <= merge_tol:
            if t in ends:
                accepted[-1] = t
            continue
        accepted.append(t)
    return accepted


def _scan_crossings(path, det_tol, refine_iters, kernel_tol):
    T = path.duration
    warnings = []

    if path.is_constant_identity():
        return [
            dataclasses.replace(crossing_signature(path, t, kernel_tol), endpoint=True)
            for t in (0.0, T)
        ], warnings

    # sampled paths are only known up to the spline error between nodes
    defect = path.interpolation_defect()
    tol = max(kernel_tol, SLACK_FACTOR * defect)
    if tol > MAX_KERNEL_TOL:
        raise UnresolvedCrossingCluster(
            "spline through the samples is too far from symplectic to resolve crossings; refine the grid",
            defect=defect,
            kernel_tol=tol,
        )
    if defect > 0.0:
        LOGGER.debug("spline defect %.3g, crossing tolerance %.3g", defect, tol)

    dets = np.linalg.det(path.samples - np.eye(2 * path.n))
    rest = _rest_cells(path)
    nudge = INWARD_FRACTION * path.min_cell
    records = []
    for lo, hi in _active_segments(rest):
        t_lo, t_hi = float(path.grid[lo]), float(path.grid[hi])
        if lo > 0 or hi < path.intervals:
            LOGGER.debug("path is off the identity on [%.6g, %.6g]", t_lo, t_hi)
        for t in _segment_candidates(path, lo, hi, dets, det_tol, refine_iters):
            M = path.at(t)
            d = _det_minus_identity(M)
            sigma = _sigma_min(M)
            if sigma <= tol and (abs(d) <= det_tol or defect > 0.0):
                if sigma > kernel_tol:
                    message = f"crossing at t={t:.12g} accepted at the interpolation tolerance {tol:.3g}"
                    LOGGER.warning(message)
                    warnings.append(message)
                slope_time = None
                if t == t_lo and lo > 0:
                    slope_time = t + nudge
                elif t == t_hi and hi < path.intervals:
                    slope_time = t - nudge
                rec = crossing_signature(path, t, tol, slope_time)
                records.append(dataclasses.replace(rec, endpoint=t in (t_lo, t_hi)))
                continue
            if sigma <= math.sqrt(tol):
                raise UnresolvedCrossingCluster(
                    "candidate crossing is neither resolved nor clear of the identity; refine the grid",
                    t=t,
                    sigma_min=sigma,
                    det=d,
                    kernel_tol=tol,
                )
            LOGGER.debug("near-crossing at t=%.6g rejected, |det| = %.3g", t, abs(d))

    for first, second in zip(records, records[1:]):
        if second.t - first.t < path.min_cell:
            raise UnresolvedCrossingCluster(
                "two crossings lie within one grid cell",
                t_first=first.t,
                t_second=second.t,
                cell=path.min_cell,
            )
    return records, warnings


def find_crossings(path, det_tol=1e-10, refine_iters=60, kernel_tol=1e-8):
    r"""
    Locate the crossings of a path.

    Candidates are the endpoints, sign changes of :math:`t\mapsto\det(\psi(t)-\mathrm{Id})`
    refined by bisection, and discrete local minima of :math:`|\det(\psi(t)-\mathrm{Id})|`
    refined by golden-section search on the smallest singular value of
    :math:`\psi(t)-\mathrm{Id}` over the two neighbouring cells. A candidate is kept when
    :math:`|\det| \le` **det_tol** and the smallest singular value is at most
    **kernel_tol**. Paths without an evaluator are spline interpolants, so their kernel
    threshold is raised to ten times the symplectic defect of the spline at the cell
    midpoints and the determinant test is dropped.

    Cells over which the path rests at the identity are cut out: each stretch off the
    identity is scanned on its own, its ends count as endpoints and their crossing forms
    use the slope from inside the stretch.

    Args:
        path (SymplecticPath): the path.
        det_tol (float): must be positive.
        refine_iters (int): bisection and golden-section iterations per candidate.
        kernel_tol (float): singular value threshold of the kernel.

    Returns:
        list: of :class:`CrossingRecord` sorted by time.

    Raises:
        UnresolvedCrossingCluster: three or more consecutive grid points below ``det_tol``
            off the identity, two crossings within one grid cell, or a rejected candidate
            whose smallest singular value is below the square root of the kernel
            threshold. Refine the grid.
    """
    if not det_tol > 0:
        raise ValueError("det_tol must be positive")
    records, _ = _scan_crossings(path, det_tol, refine_iters, kernel_tol)
    return records


def index_report(path, det_tol=1e-10, kernel_tol=1e-8, refine_iters=60):
    r"""
    Index of a path together with its crossings and the rejected near-crossings.

    The path is split into direct summands by :func:`split_blocks`; summands that are
    constantly the identity contribute 0, every other summand is scanned by
    :func:`find_crossings`. Twice the index is accumulated as an integer.

    Returns:
        IndexResult

    Raises:
        DegenerateCrossing: a crossing form has a zero eigenvalue on the kernel.
    """
    if not det_tol > 0:
        raise ValueError("det_tol must be positive")
    twice = 0
    crossings = []
    warnings = []
    for label, (coords, block) in enumerate(split_blocks(path)):
        if block.is_constant_identity():
            LOGGER.debug("block %d (coordinates %s) is constant identity", label, coords.tolist())
            continue
        records, block_warnings = _scan_crossings(block, det_tol, refine_iters, kernel_tol)
        warnings.extend(block_warnings)
        LOGGER.debug("block %d: %d crossings", label, len(records))
        for rec in records:
            if rec.degenerate:
                raise DegenerateCrossing(
                    "degenerate crossing; perturb the path or refine the grid",
                    t=rec.t,
                    spectrum=list(rec.spectrum),
                    kernel_dim=rec.kernel_dim,
                    block=label,
                )
            twice += rec.signature if rec.endpoint else 2 * rec.signature
            crossings.append(dataclasses.replace(rec, block=label))
    crossings.sort(key=lambda rec: (rec.t, rec.block))
    return IndexResult(Fraction(twice, 2), crossings, warnings)


def rs_index(path, det_tol=1e-10, kernel_tol=1e-8, refine_iters=60):
    r"""
    Robbin-Salamon index :math:`\mu(\psi)` as an exact half-integer.

    Args:
        path (SymplecticPath): the path.
        det_tol (float): crossing detection tolerance on :math:`|\det(\psi-\mathrm{Id})|`.
        kernel_tol (float): singular value threshold and crossing-form rank threshold.
        refine_iters (int): refinement iterations per crossing.

    Returns:
        fractions.Fraction: the index, with denominator 1 or 2.
    """
    return index_report(path, det_tol, kernel_tol, refine_iters).index


def mean_index(loop, max_covers=16, det_tol=1e-10, kernel_tol=1e-8, refine_iters=60):
    r"""
    Mean index estimate :math:`\hat\Delta = \mu(\psi^M)/M` for :math:`M` = **max_covers**.

    Also checks the iteration bound

    .. math::

        |\mu(\psi^m) - m\hat\Delta| \le n - 1, \qquad m = 1, \dots, M.

    Returns:
        fractions.Fraction

    Raises:
        IterationBoundViolation: the bound fails for some cover.
        NotALoop: the path does not close up.
    """
    if max_covers < 4:
        raise ValueError(f"max_covers must be at least 4, got {max_covers}")
    indices = [
        rs_index(iterate(loop, m), det_tol, kernel_tol, refine_iters)
        for m in range(1, max_covers + 1)
    ]
    estimate = indices[-1] / max_covers
    bound = loop.n - 1
    for m, mu in enumerate(indices, start=1):
        if abs(mu - m * estimate) > bound:
            raise IterationBoundViolation(
                "index of a cover strays too far from the mean index",
                m=m,
                index=mu,
                mean_index=estimate,
                bound=bound,
            )
    return estimate
