import pytest

from ..catalog import (
    build_example,
    cp_hypersurface,
    f_poly,
    f_poly_deriv,
    fermat_nonvanishing_scan,
    fermat_pair,
    hypersurface_chi,
    lefschetz_betti,
    list_catalog,
    projective_betti,
    sphere,
)
from ..classes import BWData


def _alternating(betti):
    return sum((-1) ** q * b for q, b in enumerate(betti))


def test_hypersurface_chi():
    r"""Cubic and quartic surfaces, quadrics and the cubic threefold."""

    assert hypersurface_chi(2, 3) == 9
    assert hypersurface_chi(2, 4) == 24
    assert hypersurface_chi(2, 2) == 4
    assert hypersurface_chi(3, 3) == -6
    assert hypersurface_chi(4, 3) == 27
    assert hypersurface_chi(3, 1) == 4


def test_betti_numbers():
    assert projective_betti(2) == (1, 0, 1, 0, 1)
    assert lefschetz_betti(2, 24) == (1, 0, 22, 0, 1)
    assert lefschetz_betti(3, -6) == (1, 0, 1, 10, 1, 0, 1)
    assert lefschetz_betti(1, -4) == (1, 6, 1)
    with pytest.raises(ValueError):
        lefschetz_betti(2, 1)


def test_cp_hypersurface():
    r""":math:`\chi(M) = n`, :math:`\chi(H) = ((1-k)^n - 1)/k + n`, :math:`c = n`, :math:`N = k` by default."""

    record = cp_hypersurface(4, 2)
    assert record.data == BWData(4, 4, 4, 4, 2, 2)
    assert cp_hypersurface(4, 1).data == BWData(4, 4, 3, 4, 1, 1)
    assert cp_hypersurface(4, 2, N=5).data.N == 5
    for n in range(4, 9):
        for k in range(1, 7):
            rec = cp_hypersurface(n, k)
            assert _alternating(rec.betti_M) == rec.data.chi_M
            assert _alternating(rec.betti_H) == rec.data.chi_H
    with pytest.raises(ValueError):
        cp_hypersurface(3, 2)


def test_fermat_pair():
    record = fermat_pair(5, 3)
    assert record.data == BWData(5, 27, -6, 3, 1, 1)
    assert record.betti_H == (1, 0, 1, 10, 1, 0, 1)
    assert fermat_pair(4, 1).data == BWData(4, 4, 3, 4, 1, 1)
    with pytest.raises(ValueError):
        fermat_pair(4, 0)


@pytest.mark.parametrize("n", range(4, 13))
def test_fermat_linear_is_projective(n):
    r"""A degree one Fermat hypersurface is a hyperplane, so the pair is the projective one."""

    linear, projective = fermat_pair(n, 1), cp_hypersurface(n, 1)
    assert linear.data == projective.data == BWData(n, n, n - 1, n, 1, 1)
    assert linear.betti_M == projective.betti_M
    assert linear.betti_H == projective.betti_H


def test_sphere_and_catalog():
    assert sphere().data == BWData(4, 4, 3, 4, 1, 1)
    assert sphere().name == "sphere"
    names = [entry["name"] for entry in list_catalog()]
    assert names == sorted(names) == ["cp-hypersurface", "fermat-pair", "sphere"]
    assert build_example("cp-hypersurface", ("4", "2")).data == cp_hypersurface(4, 2).data
    assert build_example("sphere", N=3).data.N == 3
    assert build_example("fermat-pair", (6, 3)).to_dict()["data"]["c"] == 4
    with pytest.raises(ValueError):
        build_example("torus")
    with pytest.raises(ValueError):
        build_example("fermat-pair", (6,))


def test_f_poly_endpoints():
    r""":math:`f_n(2)`, :math:`f_n(n-1)` and :math:`f_n(n)` in closed form."""

    for n in range(4, 13):
        assert f_poly(n, 2) == 3 + (-1) ** n * (2 * n - 3)
        assert f_poly(n, n - 1) == ((2 - n) ** (n - 1) - 1) * (2 - n) * n
        assert f_poly(n, n) == (1 - n) ** n - 1 + n * n
        assert f_poly(n, 1) == 0
    assert f_poly_deriv(4, 2) == pytest.approx((f_poly(4, 2 + 1e-6) - f_poly(4, 2 - 1e-6)) / 2e-6, rel=1e-6)


def test_fermat_scan():
    report = fermat_nonvanishing_scan(12)
    assert report["passed"]
    assert len(report["rows"]) == sum(n - 1 for n in range(4, 13))
    assert all(row["f"] != 0 for row in report["rows"])
    with pytest.raises(ValueError):
        fermat_nonvanishing_scan(3)
