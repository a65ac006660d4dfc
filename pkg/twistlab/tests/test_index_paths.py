import math

import numpy as np
import numpy.testing as npt
import pytest

from ..exceptions import (
    EmptyInput,
    EndpointMismatch,
    IncompatibleGrids,
    NonSymplecticSample,
    NotALoop,
    PrincipalNotExceptional,
)
from ..index import (
    SymplecticPath,
    block_diag_path,
    bw_exceptional_model,
    bw_principal_model,
    catenate,
    conjugate_path,
    hyperbolic_path,
    identity_path,
    is_symplectic,
    iterate,
    rotation_path,
)
from ..index.paths import rotation_matrix, standard_j, symplectic_projection
from ..utils.io import parse_path_json


def test_is_symplectic():
    r"""Identity and rotations are symplectic, a stretch in one direction is not."""

    assert is_symplectic(np.eye(2), 1e-10)
    assert is_symplectic(rotation_matrix(1, 0.7), 1e-10)
    assert not is_symplectic(np.diag([2.0, 1.0]), 1e-10)
    assert is_symplectic(np.diag([2.0, 3.0, 0.5, 1.0 / 3.0]), 1e-10)
    with pytest.raises(ValueError):
        is_symplectic(np.eye(2), 0.0)


def test_standard_j_maps_x_to_y(n=3):
    r""":math:`J_0 e_{x_i} = e_{y_i}`."""

    J = standard_j(n)
    for i in range(n):
        e = np.zeros(2 * n)
        e[i] = 1.0
        npt.assert_array_equal(J @ e, np.eye(2 * n)[n + i])


def test_rotation_path_endpoints(samples=64):
    r"""Full, multiple and half rotations end where expected."""

    full = rotation_path(1, 2 * math.pi, samples)
    npt.assert_allclose(full.samples[-1], np.eye(2), atol=1e-12)
    assert full.is_loop()
    triple = rotation_path(3, 2 * math.pi, samples)
    assert triple.is_loop()
    half = rotation_path(0.5, 2 * math.pi, samples)
    npt.assert_allclose(half.samples[-1], -np.eye(2), atol=1e-12)
    assert not half.is_loop()
    assert full.derivative_mode == "analytic"
    npt.assert_allclose(full.derivative(0.0), standard_j(1))


def test_path_validation():
    r"""Short grids, bad grids and non-symplectic samples are rejected."""

    grid = np.linspace(0, 1, 5)
    with pytest.raises(ValueError):
        SymplecticPath(grid, np.repeat(np.eye(2)[None], 5, axis=0))
    grid = np.linspace(0, 1, 9)
    bad = np.repeat(np.eye(2)[None], 9, axis=0)
    bad[4] = np.diag([2.0, 1.0])
    with pytest.raises(NonSymplecticSample) as info:
        SymplecticPath(grid, bad)
    assert info.value.details["index"] == 4
    with pytest.raises(ValueError):
        rotation_path(1, 2 * math.pi, 4)


def test_block_diag_path(samples=64):
    r"""Blocks land in their own :math:`(x_i, y_i)` planes."""

    a = rotation_path(1, 2 * math.pi, samples)
    b = rotation_path(2, 2 * math.pi, samples)
    ab = block_diag_path([a, b])
    assert ab.n == 2
    t = 0.3
    M = ab.at(t)
    npt.assert_allclose(M[np.ix_([0, 2], [0, 2])], a.at(t), atol=1e-14)
    npt.assert_allclose(M[np.ix_([1, 3], [1, 3])], b.at(t), atol=1e-14)
    assert M[0, 1] == 0.0 and M[2, 3] == 0.0
    assert block_diag_path([a]) is a


def test_block_diag_path_errors(samples=64):
    r"""Empty input and mismatched grids."""

    with pytest.raises(EmptyInput):
        block_diag_path([])
    a = rotation_path(1, 2 * math.pi, samples)
    b = rotation_path(1, 2 * math.pi, 2 * samples)
    with pytest.raises(IncompatibleGrids):
        block_diag_path([a, b])
    ab = block_diag_path([a, b], resample=True)
    assert ab.grid.size >= 2 * samples + 1
    assert ab.n == 2
    c = rotation_path(1, math.pi, samples)
    with pytest.raises(IncompatibleGrids):
        block_diag_path([a, c], resample=True)


def _sampled(path):
    return SymplecticPath(path.grid, path.samples)


def test_block_diag_resample_sampled_parts():
    r"""Spline values of sampled parts are projected back onto the symplectic group."""

    a = _sampled(rotation_path(1, 2 * math.pi, 64))
    b = _sampled(rotation_path(2, 2 * math.pi, 96))
    assert a.interpolation_defect() > 1e-9
    ab = block_diag_path([a, b], resample=True)
    assert ab.derivative_mode == "finite-difference"
    assert all(is_symplectic(M, 1e-12) for M in ab.samples)
    for t in (0.1, 1.0, 3.0):
        npt.assert_allclose(ab.at(t)[np.ix_([0, 2], [0, 2])], rotation_matrix(1, t), atol=1e-4)


def test_symplectic_projection():
    M = rotation_matrix(1, 0.4) * (1 + 1e-5)
    S = symplectic_projection(M)
    assert is_symplectic(S, 1e-13)
    npt.assert_allclose(S, rotation_matrix(1, 0.4), atol=1e-12)
    shear = np.array([[1.0, 0.3, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, -0.3, 1.0]])
    npt.assert_allclose(symplectic_projection(shear), shear, atol=1e-12)
    assert rotation_path(1, 1.0, 16).interpolation_defect() == 0.0


def test_bw_models_shape(samples=64):
    r"""Model paths have half-dimension :math:`n-1` and the documented durations."""

    p = bw_principal_model(5, 4, 1, 2, samples)
    assert p.n == 4
    assert p.duration == pytest.approx(2 * math.pi)
    assert p.is_loop()
    e = bw_exceptional_model(4, 4, 3, 4, samples)
    assert e.n == 3
    assert e.duration == pytest.approx(2 * math.pi * 4 / 3)
    assert not e.is_loop()
    with pytest.raises(PrincipalNotExceptional):
        bw_exceptional_model(4, 4, 2, 2, samples)
    with pytest.raises(ValueError):
        bw_principal_model(4, 4, 1, 1, 32)


def test_catenate_and_iterate(samples=64):
    r"""Catenation lengths, endpoint checks and loop checks."""

    first = rotation_path(1, math.pi, samples)
    second = rotation_path(1, math.pi, samples, start_angle=math.pi)
    whole = catenate(first, second)
    assert whole.duration == pytest.approx(2 * math.pi)
    assert whole.intervals == 2 * samples
    npt.assert_allclose(whole.at(1.5 * math.pi), rotation_matrix(1, 1.5 * math.pi), atol=1e-12)
    with pytest.raises(EndpointMismatch):
        catenate(first, first)
    with pytest.raises(EndpointMismatch):
        catenate(identity_path(1, 1.0, samples), identity_path(2, 1.0, samples))

    loop = rotation_path(1, 2 * math.pi, samples)
    assert iterate(loop, 1) is loop
    assert iterate(loop, 3).duration == pytest.approx(6 * math.pi)
    with pytest.raises(NotALoop):
        iterate(first, 2)


def test_conjugate_path(samples=64):
    r"""Conjugation by a symplectic matrix stays symplectic; a non-symplectic one is refused."""

    S = np.array([[2.0, 1.0], [0.0, 0.5]])
    p = conjugate_path(rotation_path(1, 2 * math.pi, samples), S)
    assert all(is_symplectic(M, 1e-9) for M in p.samples)
    with pytest.raises(NonSymplecticSample):
        conjugate_path(p, np.diag([2.0, 1.0]))


def test_path_json_round_trip(samples=32):
    r"""Reading a written path restores the samples on the same grid."""

    p = hyperbolic_path(1.0, 1.0, samples)
    n, grid, values = parse_path_json(p.to_json())
    assert n == 1
    npt.assert_allclose(grid, p.grid)
    npt.assert_allclose(values, p.samples)
