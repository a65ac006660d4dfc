r"""
Morse-Bott :math:`E^1`-page bookkeeping for Boothby-Wang orbibundles.

Every orbit stratum :math:`N_T` contributes its equivariant homology
:math:`H^{S^1}_q(N_T)` in column

.. math::

    p = \mu(N_T) - \tfrac12\dim(N_T/S^1),

and the blocks of one period repeat with degree shift :math:`\mu_P`. The Betti numbers of
the strata only serve the display; the mean Euler characteristic depends on
:math:`\chi^{S^1}` alone.
"""

import dataclasses
import functools
import logging
from fractions import Fraction

from ..exceptions import (
    IncompletePeriod,
    NonIntegerCombination,
    TwistlabError,
    UnsupportedK,
    ZeroDenominator,
)
from ..index import bw_exceptional_model, bw_principal_model, rs_index
from ..utils.io import rows_to_csv, rows_to_table
from .graded import GradedDims, PeriodicTail

LOGGER = logging.getLogger(__name__)

EXCEPTIONAL = "exceptional"
PRINCIPAL = "principal"


def _alternating(betti):
    return sum((-1) ** q * b for q, b in enumerate(betti))


@dataclasses.dataclass(frozen=True)
class Stratum:
    r"""
    An orbit stratum of a periodic Reeb flow.

    Attributes:
        label (str): display name.
        kind (str): ``"exceptional"`` or ``"principal"``.
        multiplicity (int): cover multiplicity :math:`m` of the binding period :math:`T_1`.
        index (fractions.Fraction): Maslov index :math:`\mu(N_T)`.
        dim_quotient (int): :math:`\dim(N_T/S^1)`, even.
        betti (tuple): equivariant Betti numbers in degrees :math:`0, 1, \dots`.
        chi_s1 (int): alternating sum of ``betti``; computed when omitted.
    """

    label: str
    kind: str
    multiplicity: int
    index: Fraction
    dim_quotient: int
    betti: tuple
    chi_s1: int = None

    def __post_init__(self):
        object.__setattr__(self, "index", Fraction(self.index))
        object.__setattr__(self, "betti", tuple(int(b) for b in self.betti))
        if self.kind not in (EXCEPTIONAL, PRINCIPAL):
            raise ValueError(f"unknown stratum kind {self.kind!r}")
        if self.dim_quotient % 2:
            raise ValueError(f"quotient dimension must be even, got {self.dim_quotient}")
        chi = _alternating(self.betti)
        if self.chi_s1 is None:
            object.__setattr__(self, "chi_s1", chi)
        elif self.chi_s1 != chi:
            raise ValueError(f"chi_s1={self.chi_s1} differs from the alternating Betti sum {chi}")

    @property
    def column(self):
        r"""Column :math:`p = \mu - \tfrac12\dim(N_T/S^1)`."""
        p = self.index - Fraction(self.dim_quotient, 2)
        if p.denominator != 1:
            raise NonIntegerCombination("stratum column is not an integer", label=self.label, p=p)
        return p.numerator

    def to_dict(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class E1Page:
    r"""
    Entries :math:`E^1_{pq}` of a list of strata.

    Attributes:
        window (tuple): smallest and largest occupied column.
        entries (dict): ``(p, q)`` to dimension, nonzero entries only.
        strata (tuple): the strata the page was built from.
    """

    window: tuple
    entries: dict
    strata: tuple

    def rows(self):
        return [(p, q, v) for (p, q), v in sorted(self.entries.items())]

    def to_dict(self):
        return {
            "window": list(self.window),
            "entries": [{"p": p, "q": q, "dim": v} for p, q, v in self.rows()],
            "strata": [s.to_dict() for s in self.strata],
        }


@functools.lru_cache(maxsize=1024)
def _exceptional_oracle(n, c, N, m, samples):
    return rs_index(bw_exceptional_model(n, c, N, m, samples))


@functools.lru_cache(maxsize=1024)
def _principal_oracle(n, c, N, samples):
    return rs_index(bw_principal_model(n, c, 1, N, samples))


def exceptional_index(c, N, m):
    r""":math:`2(c-1)m + 2\lfloor m/N\rfloor + 1`, index of the :math:`m`-fold exceptional cover."""
    return 2 * (c - 1) * m + 2 * (m // N) + 1


def build_e1_strata_bw(d, betti_H, betti_M, periods=1, validate=True, samples=256):
    r"""
    Orbit strata of one or more periods of a Boothby-Wang orbibundle with :math:`k = 1`.

    For :math:`m = 1, \dots, \text{periods}\cdot N`: when :math:`N \nmid m` an exceptional
    stratum with index :math:`2(c-1)m + 2\lfloor m/N\rfloor + 1`, quotient dimension
    :math:`2n-4` and the Betti numbers of :math:`H`; when :math:`m = m'N` a principal stratum
    with index :math:`m'\mu_P`, quotient dimension :math:`2n-2` and the Betti numbers of
    :math:`M`.

    Args:
        d (twistlab.classes.BWData): the data, with :math:`k = 1`.
        betti_H (list): Betti numbers of :math:`H`, alternating sum :math:`\chi(H)`.
        betti_M (list): Betti numbers of :math:`M`, alternating sum :math:`\chi(M)`.
        periods (int): number of periods, at least 1.
        validate (bool): check every exceptional index, and the simple principal index,
            against :func:`twistlab.index.rs_index` on the model paths.
        samples (int): grid intervals of the model paths.

    Raises:
        UnsupportedK: :math:`k > 1`.
    """
    if d.k != 1:
        raise UnsupportedK("E1 strata are only known for k = 1", k=d.k)
    if periods < 1:
        raise ValueError(f"periods must be at least 1, got {periods}")
    if _alternating(betti_H) != d.chi_H or _alternating(betti_M) != d.chi_M:
        raise ValueError("Betti numbers do not match chi_H and chi_M")
    if validate and d.n < 3:
        raise ValueError("index validation needs n >= 3")

    if validate:
        mu = _principal_oracle(d.n, d.c, d.N, samples)
        if mu != d.mu_P:
            raise TwistlabError("principal index disagrees with the index engine", expected=d.mu_P, found=mu)

    strata = []
    for m in range(1, periods * d.N + 1):
        if m % d.N:
            mu = exceptional_index(d.c, d.N, m)
            if validate:
                found = _exceptional_oracle(d.n, d.c, d.N, m, samples)
                LOGGER.debug("exceptional cover m=%d: index %s, engine %s", m, mu, found)
                if found != mu:
                    raise TwistlabError(
                        "exceptional index disagrees with the index engine", m=m, expected=mu, found=found
                    )
            strata.append(Stratum(f"T1^{m}", EXCEPTIONAL, m, mu, 2 * d.n - 4, tuple(betti_H)))
        else:
            mp = m // d.N
            strata.append(Stratum(f"T2^{mp}", PRINCIPAL, m, mp * d.mu_P, 2 * d.n - 2, tuple(betti_M)))
    return strata


def e1_page(strata):
    r"""Place the Betti numbers of every stratum in column :math:`p` and row :math:`q`."""
    entries = {}
    for s in strata:
        p = s.column
        for q, b in enumerate(s.betti):
            if b:
                entries[(p, q)] = entries.get((p, q), 0) + b
    columns = [s.column for s in strata]
    window = (min(columns), max(columns)) if columns else (0, -1)
    return E1Page(window, entries, tuple(strata))


def _one_period(page, mu_P):
    if mu_P == 0:
        raise ZeroDenominator("mu_P vanishes")
    if not page.strata:
        raise IncompletePeriod("the page has no strata")
    width = abs(mu_P)
    p0 = page.window[0]
    inside = [s for s in page.strata if p0 <= s.column < p0 + width]
    principal = [s for s in page.strata if s.kind == PRINCIPAL]
    if not principal:
        raise IncompletePeriod("no principal stratum closes a period", p0=p0, width=width)
    N = min(s.multiplicity for s in principal)
    residues = sorted(s.multiplicity % N for s in inside)
    if residues != list(range(N)):
        raise IncompletePeriod(
            "the strata in the window do not form one period",
            p0=p0,
            width=width,
            residues=residues,
            N=N,
        )
    return p0, width, inside


def chi_m_from_e1(page, mu_P):
    r"""
    Mean Euler characteristic read off one period of the :math:`E^1`-page,

    .. math::

        \chi_m = \frac{1}{|\mu_P|}\sum_{p_0 \le p < p_0+|\mu_P|}\sum_q (-1)^{p+q} E^1_{pq},

    with :math:`p_0` the lowest occupied column. The strata in the window must hold every
    cover multiplicity of one period exactly once.

    Raises:
        IncompletePeriod: no strata, no principal stratum, or an incomplete window.
    """
    p0, width, inside = _one_period(page, mu_P)
    total = 0
    for s in inside:
        total += sum((-1) ** ((s.column + q) % 2) * b for q, b in enumerate(s.betti))
    return Fraction(total, width)


def e1_graded_dims(page, mu_P):
    r"""
    The page as a graded sequence in total degree :math:`p+q`, one period block repeated
    with shift :math:`|\mu_P|` (twice that when :math:`|\mu_P|` is odd, to keep the period even).

    Returns:
        GradedDims: eventually periodic, with
        ``chi_m_periodic(e1_graded_dims(page, mu_P)) == chi_m_from_e1(page, mu_P)``.
    """
    p0, width, inside = _one_period(page, mu_P)
    block = {}
    for s in inside:
        for q, b in enumerate(s.betti):
            if b:
                block[s.column + q] = block.get(s.column + q, 0) + b
    shift = width
    period = width if width % 2 == 0 else 2 * width
    span = max(block) - p0 + 1
    start = p0 + period * (-(-span // period))

    def total(degree):
        value = 0
        r = 0
        while degree - r * shift >= p0:
            value += block.get(degree - r * shift, 0)
            r += 1
        return value

    finite = {i: total(i) for i in range(p0, start)}
    pattern = tuple(total(start + j) for j in range(period))
    return GradedDims(finite, PeriodicTail(start, period, pattern))


def e1_csv(page):
    return rows_to_csv(["p", "q", "dim"], page.rows())


def e1_table(page):
    r"""Aligned text grid of the page, rows :math:`q` from the top, columns :math:`p`."""
    if not page.entries:
        return ""
    lo, hi = page.window
    q_max = max(q for _, q in page.entries)
    header = ["q\\p"] + list(range(lo, hi + 1))
    rows = []
    for q in range(q_max, -1, -1):
        rows.append([q] + [page.entries.get((p, q), ".") for p in range(lo, hi + 1)])
    return rows_to_table(header, rows)
