r"""
Worked example families: hypersurfaces in projective space and Fermat pairs.

Euler characteristics of smooth degree :math:`d` hypersurfaces come from the binomial
identity

.. math::

    \chi(H_d^{m}) = \frac{(1-d)^{m+2} - 1}{d} + m + 2,

exact in integers because :math:`(1-d)^j \equiv 1 \bmod d`.
"""

import dataclasses
import logging

from ..classes import BWData
from ..exceptions import ScanFailure

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ExampleRecord:
    r"""
    A named example.

    Attributes:
        name (str): catalog name.
        data (twistlab.classes.BWData): the integer data.
        provenance (str): where the values come from.
        betti_M (tuple): Betti numbers of :math:`M`.
        betti_H (tuple): Betti numbers of :math:`H`.
    """

    name: str
    data: BWData
    provenance: str
    betti_M: tuple
    betti_H: tuple

    def to_dict(self):
        return {
            "name": self.name,
            "data": self.data.to_dict(),
            "provenance": self.provenance,
            "betti_M": list(self.betti_M),
            "betti_H": list(self.betti_H),
        }


def projective_betti(complex_dim):
    r"""Betti numbers :math:`1, 0, 1, \dots, 1` of :math:`\mathbb{CP}^m`."""
    return tuple(1 - q % 2 for q in range(2 * complex_dim + 1))


def lefschetz_betti(complex_dim, chi):
    r"""
    Betti numbers of a smooth hypersurface of complex dimension :math:`m` in projective
    space: those of :math:`\mathbb{CP}^m` outside the middle degree, the middle one fixed by
    the Euler characteristic.
    """
    betti = list(projective_betti(complex_dim))
    m = complex_dim
    middle = chi - m if m % 2 == 0 else m + 1 - chi
    if middle < 0:
        raise ValueError(f"no hypersurface of dimension {m} has Euler characteristic {chi}")
    betti[m] = middle
    return tuple(betti)


def hypersurface_chi(complex_dim, d):
    r""":math:`\chi` of a smooth degree ``d`` hypersurface of complex dimension ``complex_dim``."""
    j = complex_dim + 2
    return ((1 - d) ** j - 1) // d + j


def cp_hypersurface(n, k, N=None):
    r"""
    :math:`M = \mathbb{CP}^{n-1}` with a degree :math:`k` hypersurface :math:`H`:

    .. math::

        \chi(M) = n, \qquad \chi(H) = \frac{(1-k)^n - 1}{k} + n, \qquad c = n.

    Args:
        n (int): at least 4.
        k (int): degree, at least 1.
        N (int): power; defaults to :math:`k`, the first power with :math:`k \mid N`.
    """
    if n < 4 or k < 1:
        raise ValueError(f"need n >= 4 and k >= 1, got n={n}, k={k}")
    chi_H = hypersurface_chi(n - 2, k)
    data = BWData(n, n, chi_H, n, k, k if N is None else N)
    return ExampleRecord(
        f"cp-hypersurface({n},{k})",
        data,
        f"CP^{n - 1} with a degree {k} hypersurface; chi(H) = ((1-k)^n - 1)/k + n, c = n",
        projective_betti(n - 1),
        lefschetz_betti(n - 2, chi_H),
    )


def fermat_pair(n, d, N=None):
    r"""
    :math:`M = H_d^{n-1} \subset \mathbb{CP}^n` with hyperplane section
    :math:`H = H_d^{n-2}` (so :math:`k = 1`) and :math:`c = n + 1 - d`.

    Args:
        n (int): at least 4.
        d (int): degree, at least 1.
        N (int): power; defaults to 1.
    """
    if n < 4 or d < 1:
        raise ValueError(f"need n >= 4 and d >= 1, got n={n}, d={d}")
    chi_M = hypersurface_chi(n - 1, d)
    chi_H = hypersurface_chi(n - 2, d)
    data = BWData(n, chi_M, chi_H, n + 1 - d, 1, 1 if N is None else N)
    return ExampleRecord(
        f"fermat-pair({n},{d})",
        data,
        f"degree {d} Fermat hypersurface in CP^{n} with its hyperplane section; c = n + 1 - d",
        lefschetz_betti(n - 1, chi_M),
        lefschetz_betti(n - 2, chi_H),
    )


def sphere(N=1):
    r"""The standard sphere :math:`S^{2n-1}`, :math:`n = 4`, as the bundle over
    :math:`\mathbb{CP}^3` with a hyperplane."""
    record = cp_hypersurface(4, 1, N)
    return dataclasses.replace(
        record,
        name="sphere",
        provenance="standard contact S^7 over CP^3 with a hyperplane CP^2",
    )


CATALOG = {
    "sphere": (sphere, ()),
    "cp-hypersurface": (cp_hypersurface, ("n", "k")),
    "fermat-pair": (fermat_pair, ("n", "d")),
}


def list_catalog():
    return [{"name": name, "parameters": list(params)} for name, (_, params) in sorted(CATALOG.items())]


def build_example(name, params=(), N=None):
    r"""Build a catalog record by name from integer parameters."""
    if name not in CATALOG:
        raise ValueError(f"unknown catalog entry {name!r}; choose from {', '.join(sorted(CATALOG))}")
    builder, names = CATALOG[name]
    if len(params) != len(names):
        raise ValueError(f"{name} takes parameters {' '.join(names) or '(none)'}")
    return builder(*[int(p) for p in params], N=N)


def f_poly(n, d):
    r""":math:`f_n(d) = (1-d)^n(1+nd-d^2) - (1-d^2)`, exact."""
    return (1 - d) ** n * (1 + n * d - d * d) - (1 - d * d)


def f_poly_deriv(n, d):
    r""":math:`f_n'(d) = (1-d)^{n-1}\,d\,((n+2)d - (n^2+n+2)) + 2d`."""
    d = float(d)
    return (1.0 - d) ** (n - 1) * d * ((n + 2) * d - (n * n + n + 2)) + 2.0 * d


def _fail(message, **details):
    raise ScanFailure(message, **details)


def fermat_nonvanishing_scan(n_max=12):
    r"""
    Check that :math:`f_n(d) \ne 0` for :math:`2 \le d \le n`, :math:`4 \le n \le n_{max}`,
    together with the facts the argument rests on:

    * :math:`f_n(2) = 3 + (-1)^n(2n-3)`, positive for even and negative for odd :math:`n`;
    * :math:`f_n(n-1) = ((2-n)^{n-1} - 1)(2-n)n` and :math:`f_n(n) = (1-n)^n - 1 + n^2`;
    * :math:`f_n'` is positive on the integers of :math:`[2, n-2]` for even :math:`n` and
      negative for odd :math:`n`;
    * :math:`d\,(c\chi(H) - (c-1)\chi(M)) = f_n(d)` for the Fermat pair data.

    Returns:
        dict: ``{"n_max", "passed", "rows"}`` with one row per :math:`(n, d)`.

    Raises:
        ScanFailure: with the counterexample.
    """
    if n_max < 4:
        raise ValueError(f"n_max must be at least 4, got {n_max}")
    rows = []
    for n in range(4, n_max + 1):
        f2 = f_poly(n, 2)
        if f2 != 3 + (-1) ** n * (2 * n - 3):
            _fail("f_n(2) closed form fails", n=n, value=f2)
        if (f2 > 0) != (n % 2 == 0):
            _fail("sign of f_n(2) does not follow the parity of n", n=n, value=f2)
        if f_poly(n, n - 1) != ((2 - n) ** (n - 1) - 1) * (2 - n) * n:
            _fail("f_n(n-1) closed form fails", n=n, value=f_poly(n, n - 1))
        if f_poly(n, n) != (1 - n) ** n - 1 + n * n:
            _fail("f_n(n) closed form fails", n=n, value=f_poly(n, n))
        for d in range(2, n - 1):
            slope = f_poly_deriv(n, d)
            if (slope > 0) != (n % 2 == 0) or slope == 0:
                _fail("sign of f_n' does not follow the parity of n", n=n, d=d, slope=slope)
        for d in range(2, n + 1):
            f = f_poly(n, d)
            if f == 0:
                _fail("f_n(d) vanishes", n=n, d=d)
            data = fermat_pair(n, d).data
            combination = d * (data.c * data.chi_H - (data.c - 1) * data.chi_M)
            if combination != f:
                _fail("Fermat pair data disagree with f_n(d)", n=n, d=d, f=f, combination=combination)
            rows.append({"n": n, "d": d, "f": f, "c": data.c, "chi_M": data.chi_M, "chi_H": data.chi_H})
    LOGGER.debug("fermat scan passed for 4 <= n <= %d", n_max)
    return {"n_max": n_max, "passed": True, "rows": rows}
