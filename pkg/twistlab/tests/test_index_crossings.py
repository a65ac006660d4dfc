import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ..exceptions import DegenerateCrossing, UnresolvedCrossingCluster
from ..index import (
    SymplecticPath,
    block_diag_path,
    bw_exceptional_model,
    bw_principal_model,
    catenate,
    conjugate_path,
    constant_path,
    crossing_signature,
    find_crossings,
    hyperbolic_path,
    identity_path,
    index_report,
    iterate,
    mean_index,
    rotation_path,
    rs_index,
    split_blocks,
    suggest_perturbation,
)
from ..index.paths import rotation_matrix, standard_j
from ..utils.io import parse_path_json

TWO_PI = 2 * math.pi


def test_find_crossings_examples(samples=64):
    r"""Full rotation crosses at both ends, half rotation and hyperbolic path only at 0."""

    full = find_crossings(rotation_path(1, TWO_PI, samples))
    assert [c.t for c in full] == pytest.approx([0.0, TWO_PI])
    assert [c.kernel_dim for c in full] == [2, 2]

    half = find_crossings(rotation_path(Fraction(1, 2), TWO_PI, samples))
    assert [c.t for c in half] == [0.0]

    hyp = find_crossings(hyperbolic_path(1.0, 1.0, samples))
    assert [c.t for c in hyp] == [0.0]
    assert hyp[0].kernel_dim == 2


def test_find_crossings_between_nodes(samples=64):
    r"""Crossings strictly between grid nodes are found by refinement."""

    w = 3.3
    crossings = find_crossings(rotation_path(w, TWO_PI, samples))
    expected = [0.0] + [TWO_PI * j / w for j in (1, 2, 3)]
    assert [c.t for c in crossings] == pytest.approx(expected, abs=1e-9)
    assert all(c.signature == 2 for c in crossings)


def test_crossing_signature_examples(samples=64):
    r"""Rotation: positive definite form. Hyperbolic: split form. Identity: degenerate."""

    rec = crossing_signature(rotation_path(1, TWO_PI, samples), 0.0)
    assert (rec.kernel_dim, rec.signature, rec.degenerate) == (2, 2, False)
    rec = crossing_signature(hyperbolic_path(1.0, 1.0, samples), 0.0)
    assert (rec.kernel_dim, rec.signature, rec.degenerate) == (2, 0, False)
    np.testing.assert_allclose(sorted(rec.spectrum), [-1.0, 1.0], atol=1e-12)
    rec = crossing_signature(identity_path(1, TWO_PI, samples), 1.0)
    assert rec.degenerate
    with pytest.raises(ValueError):
        crossing_signature(rotation_path(1, TWO_PI, samples), 1.0)


def test_rs_index_examples(samples=64):
    r"""Index values of the planar models."""

    assert rs_index(rotation_path(1, TWO_PI, samples)) == 2
    assert rs_index(identity_path(1, TWO_PI, samples)) == 0
    assert rs_index(identity_path(3, TWO_PI, samples)) == 0
    assert rs_index(rotation_path(Fraction(1, 2), TWO_PI, samples)) == 1
    assert rs_index(hyperbolic_path(1.0, 1.0, samples)) == 0
    assert rs_index(rotation_path(-1, TWO_PI, samples)) == -2
    assert isinstance(rs_index(rotation_path(1, math.pi, samples)), Fraction)
    assert rs_index(rotation_path(1, math.pi, samples)) == 1


def test_rotation_multiples(samples=128):
    r"""A :math:`k`-fold rotation loop has index :math:`2k`."""

    for k in range(1, 9):
        assert rs_index(rotation_path(k, TWO_PI, samples)) == 2 * k


def test_block_additivity(samples=128):
    r"""Direct sums add indices."""

    p = block_diag_path([rotation_path(1, TWO_PI, samples), rotation_path(2, TWO_PI, samples)])
    assert len(split_blocks(p)) == 2
    assert rs_index(p) == 6
    report = index_report(p)
    assert {c.block for c in report.crossings} == {0, 1}


def test_principal_orbit_lattice(samples=256):
    r"""Principal covers have index :math:`2(N(c-k)+k)`."""

    for n in (3, 4, 5):
        for c in range(0, 7):
            for k in range(1, 5):
                for N in range(1, 6):
                    mu = rs_index(bw_principal_model(n, c, k, N, samples))
                    assert mu == 2 * (N * (c - k) + k), (n, c, k, N)


def test_principal_orbit_examples(samples=256):
    r"""Three principal covers with hand-computed indices."""

    assert rs_index(bw_principal_model(4, 4, 1, 1, samples)) == 8
    assert rs_index(bw_principal_model(4, 4, 1, 2, samples)) == 14
    assert rs_index(bw_principal_model(4, 2, 2, 1, samples)) == 4


def test_exceptional_orbit_formula(samples=256):
    r"""Exceptional covers have the odd index :math:`2(c-1)m + 2\lfloor m/N\rfloor + 1`."""

    assert rs_index(bw_exceptional_model(4, 4, 2, 1, samples)) == 7
    assert rs_index(bw_exceptional_model(4, 4, 3, 4, samples)) == 27
    for c in range(2, 6):
        for N in range(2, 5):
            for m in range(1, 2 * N + 1):
                if m % N == 0:
                    continue
                mu = rs_index(bw_exceptional_model(4, c, N, m, samples))
                assert mu.denominator == 1 and mu.numerator % 2 == 1
                assert mu == 2 * (c - 1) * m + 2 * (m // N) + 1, (c, N, m)


def test_catenate_halves(samples=64):
    r"""Two half turns catenate to a full turn, 1 + 1 = 2."""

    first = rotation_path(1, math.pi, samples)
    second = rotation_path(1, math.pi, samples, start_angle=math.pi)
    assert rs_index(first) == 1
    assert rs_index(second) == 1
    assert rs_index(catenate(first, second)) == 2
    tail = rotation_path(0, 1.0, samples, start_angle=math.pi)
    assert rs_index(catenate(first, tail)) == 1


ANGLES = st.integers(min_value=0, max_value=7)
RATES = st.integers(min_value=1, max_value=8)
DURATIONS = st.integers(min_value=1, max_value=4)
SIGNS = st.sampled_from([-1, 1])


@settings(deadline=None, max_examples=100)
@given(ANGLES, ANGLES, RATES, RATES, RATES, RATES, SIGNS, SIGNS, DURATIONS, DURATIONS)
def test_catenation_additivity(a1, a2, r1, r2, r3, r4, s1, s2, d1, d2):
    r"""
    :math:`\mu(p * q) = \mu(p) + \mu(q)` for matched two-plane rotation paths.

    Start angles are multiples of :math:`\pi/4`, rates multiples of :math:`1/4` and
    durations multiples of :math:`\pi/2`, so every crossing is either on an endpoint or
    well inside. Each plane keeps its rotation sense across the junction.
    """
    samples = 64
    T1, T2 = d1 * math.pi / 2, d2 * math.pi / 2
    theta1, theta2 = a1 * math.pi / 4, a2 * math.pi / 4
    w1, w2 = s1 * r1 / 4, s2 * r2 / 4
    w3, w4 = s1 * r3 / 4, s2 * r4 / 4
    p = block_diag_path(
        [rotation_path(w1, T1, samples, theta1), rotation_path(w2, T1, samples, theta2)]
    )
    q = block_diag_path(
        [
            rotation_path(w3, T2, samples, theta1 + w1 * T1),
            rotation_path(w4, T2, samples, theta2 + w2 * T1),
        ]
    )
    assert rs_index(catenate(p, q)) == rs_index(p) + rs_index(q)


def test_iterate_rotation_linear(samples=64):
    r"""Iterating a winding-:math:`w` loop :math:`m` times gives :math:`2wm`."""

    for w in (1, 2, -1):
        loop = rotation_path(w, TWO_PI, samples)
        for m in range(1, 17):
            assert rs_index(iterate(loop, m)) == 2 * w * m


def test_mean_index(samples=128):
    r"""Mean indices of model loops, with the iteration bound checked up to 16 covers."""

    assert mean_index(rotation_path(1, TWO_PI, samples), 8) == 2
    assert mean_index(bw_principal_model(4, 4, 1, 1, 256), 4) == 8
    assert mean_index(identity_path(2, TWO_PI, samples), 4) == 0
    for loop in (
        rotation_path(3, TWO_PI, samples),
        bw_principal_model(4, 4, 1, 2, 256),
        bw_principal_model(5, 2, 3, 1, 256),
    ):
        mean_index(loop, 16)
    with pytest.raises(ValueError):
        mean_index(rotation_path(1, TWO_PI, samples), 2)


def test_grid_refinement_invariance():
    r"""Doubling the number of samples does not change the index."""

    for build in (
        lambda K: rotation_path(3, TWO_PI, K),
        lambda K: rotation_path(Fraction(1, 2), TWO_PI, K),
        lambda K: hyperbolic_path(1.0, 1.0, K),
        lambda K: bw_principal_model(4, 5, 2, 3, K),
        lambda K: bw_exceptional_model(4, 3, 3, 5, K),
    ):
        assert rs_index(build(128)) == rs_index(build(256)) == rs_index(build(512))


def test_conjugation_invariance(samples=128):
    r"""A symplectic change of basis mixing the planes keeps the index."""

    rng = np.random.default_rng(7)
    A = rng.normal(size=(2, 2))
    S = np.block([[np.eye(2), A + A.T], [np.zeros((2, 2)), np.eye(2)]])
    base = block_diag_path([rotation_path(1, TWO_PI, samples), rotation_path(2.5, TWO_PI, samples)])
    mixed = conjugate_path(base, S)
    assert len(split_blocks(mixed)) == 1
    assert rs_index(mixed) == rs_index(base) == 7


def test_finite_difference_path(samples=256):
    r"""A path read from samples only, with differenced slopes, has the same index."""

    _, grid, values = parse_path_json(rotation_path(2, TWO_PI, samples).to_json())
    path = SymplecticPath(grid, values)
    assert path.derivative_mode == "finite-difference"
    assert rs_index(path) == 4


def test_degenerate_crossing(samples=64):
    r"""A path leaving the identity with zero speed has a degenerate crossing at 0."""

    J = standard_j(1)
    path = SymplecticPath(
        np.linspace(0, 1, samples + 1),
        np.array([rotation_matrix(1, t * t) for t in np.linspace(0, 1, samples + 1)]),
        "analytic",
        lambda t: rotation_matrix(1, t * t),
        lambda t: 2 * t * J @ rotation_matrix(1, t * t),
    )
    with pytest.raises(DegenerateCrossing) as info:
        rs_index(path)
    assert info.value.details["t"] == 0.0
    assert len(info.value.details["spectrum"]) == 2


def test_suggest_perturbation(samples=64):
    r"""Pushing the identity off by a small positive rotation gives index :math:`+1` per plane."""

    perturbed = suggest_perturbation(identity_path(2, TWO_PI, samples), 1e-2)
    assert rs_index(perturbed) == 2


def _sampled(path):
    return SymplecticPath(path.grid, path.samples)


@pytest.mark.parametrize(
    "build, expected",
    [
        (lambda: rotation_path(3, TWO_PI, 256), 6),
        (lambda: rotation_path(6, TWO_PI, 256), 12),
        (lambda: rotation_path(Fraction(5, 2), TWO_PI, 256), 5),
        (lambda: bw_principal_model(4, 4, 1, 2, 256), 14),
        (lambda: bw_exceptional_model(4, 4, 2, 1, 256), 7),
    ],
)
def test_sampled_copies_keep_the_index(build, expected):
    r"""Crossings between nodes of a spline-interpolated path are found, not dropped."""

    model = build()
    sampled = _sampled(model)
    assert sampled.evaluator is None
    report = index_report(sampled)
    assert report.index == rs_index(model) == expected
    expected_times = [c.t for c in index_report(model).crossings]
    assert [c.t for c in report.crossings] == pytest.approx(expected_times, abs=1e-5)


def test_near_crossing_is_not_skipped(samples=64):
    r"""A path brushing past the identity cannot be told apart from a crossing and raises."""

    def brushing(delta):
        J = standard_j(1)
        grid = np.linspace(0, 1, samples + 1)

        def angle(t):
            return (t - 0.5) ** 2 + delta

        return SymplecticPath(
            grid,
            np.array([rotation_matrix(1, angle(t)) for t in grid]),
            "analytic",
            lambda t: rotation_matrix(1, angle(t)),
            lambda t: 2 * (t - 0.5) * J @ rotation_matrix(1, angle(t)),
        )

    with pytest.raises(UnresolvedCrossingCluster) as info:
        rs_index(brushing(1e-6))
    assert info.value.details["t"] == pytest.approx(0.5, abs=1e-6)
    assert 0 < info.value.details["sigma_min"] < 1e-4
    assert rs_index(brushing(0.1)) == 0


def test_coarse_samples_raise():
    with pytest.raises(UnresolvedCrossingCluster) as info:
        rs_index(_sampled(rotation_path(3, TWO_PI, 16)))
    assert info.value.details["defect"] > 1e-4


def test_identity_rest_adds_nothing(samples=64):
    r"""Resting at the identity before or after a loop leaves its index unchanged."""

    loop = rotation_path(1, TWO_PI, samples)
    rest = identity_path(1, 1.0, samples)
    tail = catenate(loop, rest)
    assert rs_index(tail) == 2
    crossings = find_crossings(tail)
    assert [c.t for c in crossings] == pytest.approx([0.0, TWO_PI])
    assert all(c.endpoint and c.signature == 2 for c in crossings)
    assert rs_index(catenate(rest, loop)) == 2
    assert rs_index(catenate(catenate(loop, rest), loop)) == 4
    assert rs_index(catenate(rotation_path(1, math.pi, samples), constant_path(-np.eye(2), 1.0, samples))) == 1
