import itertools
from fractions import Fraction

import pytest

from ..catalog import cp_hypersurface, fermat_pair
from ..classes import BWData
from ..exceptions import IncompletePeriod, NonIntegerCombination, UnsupportedK, ZeroDenominator
from ..mec import (
    Stratum,
    build_e1_strata_bw,
    chi_m_bw,
    chi_m_from_e1,
    chi_m_periodic,
    chi_m_window,
    e1_csv,
    e1_graded_dims,
    e1_page,
    e1_table,
    exceptional_index,
    is_bad_orbit,
)

CP3 = (1, 0, 1, 0, 1, 0, 1)
CP2 = (1, 0, 1, 0, 1)


def _records():
    return [cp_hypersurface(4, 1), cp_hypersurface(5, 1), fermat_pair(4, 2), fermat_pair(5, 3)]


def test_stratum_column_and_validation():
    s = Stratum("T1^1", "exceptional", 1, 7, 4, CP2)
    assert s.column == 5
    assert s.chi_s1 == 3
    with pytest.raises(NonIntegerCombination):
        Stratum("x", "exceptional", 1, Fraction(7, 2), 4, CP2).column
    with pytest.raises(ValueError):
        Stratum("x", "orbit", 1, 7, 4, CP2)
    with pytest.raises(ValueError):
        Stratum("x", "exceptional", 1, 7, 3, CP2)
    with pytest.raises(ValueError):
        Stratum("x", "exceptional", 1, 7, 4, CP2, chi_s1=2)


def test_e1_example():
    r"""Sphere data with :math:`N = 2`: one exceptional and one principal stratum per period."""

    d = BWData(4, 4, 3, 4, 1, 2)
    strata = build_e1_strata_bw(d, CP2, CP3, periods=1)
    assert [s.label for s in strata] == ["T1^1", "T2^1"]
    assert [s.index for s in strata] == [exceptional_index(4, 2, 1), d.mu_P] == [7, 14]
    page = e1_page(strata)
    assert page.window == (5, 11)
    assert chi_m_from_e1(page, d.mu_P) == Fraction(-1, 2) == chi_m_bw(d)
    assert e1_csv(page).splitlines()[0] == "p,q,dim"
    table = e1_table(page)
    assert table.splitlines()[0].split()[0] == "q\\p"
    assert e1_table(e1_page([])) == ""


def test_e1_cross_check_lattice():
    r""":math:`\chi_m` read off the page equals the closed formula over the :math:`k = 1` lattice."""

    for record in _records():
        base = record.data
        for c, N in itertools.product(range(2, 7), range(1, 5)):
            d = BWData(base.n, base.chi_M, base.chi_H, c, 1, N)
            validate = base.n == 4 and record.name.startswith("cp")
            strata = build_e1_strata_bw(d, record.betti_H, record.betti_M, periods=2, validate=validate)
            page = e1_page(strata)
            assert chi_m_from_e1(page, d.mu_P) == chi_m_bw(d)
            assert chi_m_periodic(e1_graded_dims(page, d.mu_P)) == chi_m_bw(d)


def test_e1_window_estimate():
    r"""Windowed estimate of the page sequence near the exact value."""

    for d in (BWData(4, 4, 3, 4, 1, 2), BWData(5, 5, 4, 3, 1, 3)):
        betti_M = (1, 0) * (d.n - 1) + (1,)
        betti_H = (1, 0) * (d.n - 2) + (1,)
        page = e1_page(build_e1_strata_bw(d, betti_H, betti_M, validate=False))
        g = e1_graded_dims(page, d.mu_P)
        exact = float(chi_m_bw(d))
        assert abs(chi_m_window(g, 2000) - exact) < 10 / 2000
        assert chi_m_window(g, 20000) == pytest.approx(exact, abs=1e-3)


def test_incomplete_period():
    d = BWData(4, 4, 3, 4, 1, 3)
    strata = build_e1_strata_bw(d, CP2, CP3, validate=False)
    assert [s.label for s in strata] == ["T1^1", "T1^2", "T2^1"]
    with pytest.raises(IncompletePeriod):
        chi_m_from_e1(e1_page([strata[0], strata[2]]), d.mu_P)
    with pytest.raises(IncompletePeriod):
        chi_m_from_e1(e1_page(strata[:2]), d.mu_P)
    with pytest.raises(IncompletePeriod):
        chi_m_from_e1(e1_page([]), d.mu_P)
    with pytest.raises(ZeroDenominator):
        chi_m_from_e1(e1_page(strata), 0)


def test_build_e1_errors():
    with pytest.raises(UnsupportedK):
        build_e1_strata_bw(BWData(4, 4, 4, 4, 2, 2), CP2, CP3)
    with pytest.raises(ValueError):
        build_e1_strata_bw(BWData(4, 4, 3, 4, 1, 2), CP3, CP3)
    with pytest.raises(ValueError):
        build_e1_strata_bw(BWData(4, 4, 3, 4, 1, 2), CP2, CP3, periods=0)


def test_no_bad_orbits():
    r"""Every even cover of a stratum has the same index parity as its half."""

    for n, c, N in itertools.product((4, 5), range(2, 7), range(1, 5)):
        d = BWData(n, n, n - 1, c, 1, N)
        betti_M = (1, 0) * (n - 1) + (1,)
        betti_H = (1, 0) * (n - 2) + (1,)
        strata = {s.multiplicity: s for s in build_e1_strata_bw(d, betti_H, betti_M, periods=2, validate=False)}
        for m, s in strata.items():
            if m % 2 == 0:
                half = strata[m // 2]
                assert not is_bad_orbit(s.index, s.dim_quotient, half.index, half.dim_quotient)
