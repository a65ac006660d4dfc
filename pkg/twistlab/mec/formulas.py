r"""
Closed formulas for mean Euler characteristics.

All values are exact :class:`fractions.Fraction` objects.
"""

import logging
import math
from fractions import Fraction

from ..exceptions import NonIntegerCombination, ParityViolation, UnsupportedK, ZeroDenominator

LOGGER = logging.getLogger(__name__)


def _sign(n):
    r""":math:`(-1)^{n+1}`."""
    return 1 if n % 2 else -1


def chi_m_subcritical(n, chi_W):
    r"""
    Mean Euler characteristic of a subcritical Stein filling of dimension :math:`2n`,

    .. math::

        \chi_m(W) = (-1)^{n+1}\frac{\chi(W)}{2},

    always a half-integer.
    """
    return Fraction(_sign(n) * chi_W, 2)


def gysin_chi_m(chi_B, index_positive):
    r""":math:`\pm\chi(B)/2` for the equivariant homology of a circle bundle over :math:`B`,
    with the sign given by index positivity."""
    return Fraction(chi_B if index_positive else -chi_B, 2)


def chi_m_bw(d):
    r"""
    Mean Euler characteristic of the filling of a Boothby-Wang orbibundle,

    .. math::

        \chi_m = (-1)^{n+1}\frac{(N-\ell)\chi(H) + \ell\chi(M)}{2|N(c-k)+k|}.

    Args:
        d (twistlab.classes.BWData): the data.

    Raises:
        ZeroDenominator: :math:`N(c-k)+k = 0`.
    """
    if d.index_sum == 0:
        raise ZeroDenominator("N(c-k)+k vanishes", **d.to_dict())
    return Fraction(
        _sign(d.n) * ((d.N - d.ell) * d.chi_H + d.ell * d.chi_M), 2 * abs(d.index_sum)
    )


def chi_m_contact(n, N, ell, chi_s1_T1, chi_s1_T2, mu_P):
    r"""
    Mean Euler characteristic from the two orbit strata of a periodic Reeb flow,

    .. math::

        \chi_m = (-1)^{n+1}\frac{(N/\ell - 1)\chi^{S^1}(N_{T_1}) + \chi^{S^1}(N_{T_2})}{|\mu_P|}.
    """
    if mu_P == 0:
        raise ZeroDenominator("mu_P vanishes", n=n, N=N, ell=ell)
    if ell < 1 or N % ell:
        raise ValueError(f"ell must divide N, got N={N}, ell={ell}")
    return Fraction(_sign(n) * ((N // ell - 1) * chi_s1_T1 + chi_s1_T2), abs(mu_P))


def chi_m_cover(d, m):
    r"""
    Mean Euler characteristic of the connected :math:`m`-fold cover,

    .. math::

        \chi_m = (-1)^{n+1}\frac{(N/\ell - \gcd(N,m))\chi(H) + \gcd(N,m)\chi(M)}{|\mu_P|}.

    At :math:`m = 1` this is :func:`chi_m_bw`.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if d.mu_P == 0:
        raise ZeroDenominator("mu_P vanishes", m=m, **d.to_dict())
    g = math.gcd(d.N, m)
    return Fraction(_sign(d.n) * ((d.N // d.ell - g) * d.chi_H + g * d.chi_M), abs(d.mu_P))


def chi_m_brieskorn(n, N):
    r"""
    Mean Euler characteristic of the Brieskorn manifold :math:`\Sigma(N, 2, \dots, 2)`,

    .. math::

        \chi_m = \frac{nN + 1}{2((n-1)N + 2)},

    an injective function of :math:`N`.

    Raises:
        ParityViolation: :math:`n` odd or :math:`N` even.
    """
    if n % 2 or N % 2 == 0:
        raise ParityViolation("n must be even and N odd", n=n, N=N)
    return Fraction(n * N + 1, 2 * ((n - 1) * N + 2))


def is_bad_orbit(mu_T, dimq_T, mu_half, dimq_half):
    r"""
    Parity test for bad orbits: true iff

    .. math::

        \mu(N_T) - \tfrac12\dim(N_T/S^1) - \mu(N_{T/2m}) + \tfrac12\dim(N_{T/2m}/S^1)

    is odd.

    Raises:
        NonIntegerCombination: the combination is not an integer.
    """
    if dimq_T % 2 or dimq_half % 2:
        raise ValueError("quotient dimensions must be even")
    value = Fraction(mu_T) - Fraction(dimq_T, 2) - Fraction(mu_half) + Fraction(dimq_half, 2)
    if value.denominator != 1:
        raise NonIntegerCombination(
            "index combination is not an integer",
            value=value,
            mu_T=Fraction(mu_T),
            mu_half=Fraction(mu_half),
        )
    return value.numerator % 2 == 1


def _require_k1(d):
    if d.k != 1:
        raise UnsupportedK("only k = 1 is supported", k=d.k)


def inertia_chi(d):
    r"""Euler characteristic :math:`(N-1)\chi(H) + \chi(M)` of the inertia orbifold, :math:`k = 1`."""
    _require_k1(d)
    return (d.N - 1) * d.chi_H + d.chi_M


def c1_orb_pairing(d):
    r"""Orbifold Chern pairing :math:`c - 1 + 1/N`, :math:`k = 1`."""
    _require_k1(d)
    return d.c - 1 + Fraction(1, d.N)


def chi_m_orbifold(d):
    r"""
    :math:`\chi_m` from orbifold data,

    .. math::

        (-1)^{n+1}\frac{\chi(|\Lambda M_N|)}{2N\,|c_1^{orb}|},

    equal to :func:`chi_m_bw` for :math:`k = 1`.
    """
    pairing = c1_orb_pairing(d)
    if pairing == 0:
        raise ZeroDenominator("orbifold Chern pairing vanishes", **d.to_dict())
    return _sign(d.n) * Fraction(inertia_chi(d)) / (2 * d.N * abs(pairing))


def principal_mean_index(d):
    r"""Mean index :math:`2(N(c-k)+k)/k = \mu_P\ell/k` of a simple principal orbit."""
    return Fraction(d.mu_P * d.ell, d.k)


def first_negative_power(c, k):
    r"""Smallest :math:`N \ge 1` with :math:`N(c-k)+k < 0`, or ``None`` when :math:`c \ge k`."""
    if c >= k:
        return None
    return k // (k - c) + 1
