r"""
Obstructions to isotoping powers of fibered Dehn twists to the identity.

If :math:`\tau^N` were symplectically isotopic to the identity, the filling of the
Boothby-Wang orbibundle and a subcritical filling would have equal mean Euler
characteristics. Comparing the two formulas gives, for all :math:`m \ge 1`,

.. math::

    \big((k(c-k)+1)Nm + k^2 - g_m^2\big)\chi(H)
        = \big(k(c-k)Nm + k^2 - g_m^2\big)\chi(M),
    \qquad g_m = \gcd(Nm, k),

and for :math:`c < k` the index of the principal orbits turns negative. The procedure
only ever proves non-triviality; a consistent verdict is not a proof of triviality.
"""

import dataclasses
import enum
import logging
import math

from ..classes import BWData
from ..exceptions import InvalidDimension
from ..mec import chi_m_cover, chi_m_subcritical, first_negative_power, principal_mean_index

LOGGER = logging.getLogger(__name__)

ASSUMPTIONS = {
    "primitive_class": "asserted by caller",
    "adapted_donaldson_hypersurface": "asserted by caller",
}


class VerdictStatus(str, enum.Enum):
    NontrivialIndexNegative = "NontrivialIndexNegative"
    NontrivialChiMismatch = "NontrivialChiMismatch"
    ConsistentCase1 = "ConsistentCase1"
    ConsistentCase2 = "ConsistentCase2"
    ConsistentCase3 = "ConsistentCase3"

    @property
    def nontrivial(self):
        return self.value.startswith("Nontrivial")


@dataclasses.dataclass(frozen=True)
class Verdict:
    r"""
    Outcome of :func:`decide_triviality`.

    Attributes:
        status (VerdictStatus): which obstruction fired, or which consistent case holds.
        witness (dict): the condition and every integer entering it, plus the caller
            assertions the integer data cannot certify.
    """

    status: VerdictStatus
    witness: dict

    @property
    def nontrivial(self):
        return self.status.nontrivial

    def to_dict(self):
        payload = dict(self.witness)
        payload["status"] = self.status.value
        return payload

    @classmethod
    def from_dict(cls, payload):
        witness = dict(payload)
        status = VerdictStatus(witness.pop("status"))
        return cls(status, witness)


def theorem_equation(d, m):
    r"""
    Both sides :math:`(f(m), g(m))` of the comparison equation at cover :math:`m`.

    Returns:
        tuple: ``(lhs, rhs)`` integers.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    g = math.gcd(d.N * m, d.k)
    lhs = ((d.k * (d.c - d.k) + 1) * d.N * m + d.k ** 2 - g ** 2) * d.chi_H
    rhs = (d.k * (d.c - d.k) * d.N * m + d.k ** 2 - g ** 2) * d.chi_M
    return lhs, rhs


def _base_witness(d):
    witness = d.to_dict()
    witness["ell"] = d.ell
    witness["mu_P"] = d.mu_P
    witness["assumptions"] = dict(ASSUMPTIONS)
    return witness


def decide_triviality(d):
    r"""
    Decide whether :math:`\tau^N` is obstructed from being isotopic to the identity.

    * :math:`c < k`: ``NontrivialIndexNegative``.
    * :math:`k \nmid N`: consistent (case 1) iff :math:`\chi(H) = \chi(M) = 0`, which is
      equivalent to the comparison equation holding at the two covers :math:`m = 1` and
      :math:`m = 1 + k` (same gcd). Otherwise the first failing cover is reported.
    * :math:`k \mid N`: consistent iff :math:`((c-k)k+1)\chi(H) = (c-k)k\chi(M)`; case 2
      when :math:`c = k`, case 3 when :math:`c > k`.

    Args:
        d (twistlab.classes.BWData): the data, with :math:`n \ge 4`.

    Returns:
        Verdict

    Raises:
        InvalidDimension: :math:`n < 4`.
    """
    if d.n < 4:
        raise InvalidDimension("the decision procedure needs n >= 4", n=d.n)
    witness = _base_witness(d)

    if d.c < d.k:
        witness.update(
            condition="c < k",
            first_negative_power=first_negative_power(d.c, d.k),
            principal_mean_index=principal_mean_index(d),
        )
        return Verdict(VerdictStatus.NontrivialIndexNegative, witness)

    if d.N % d.k:
        witness["k_divides_N"] = False
        if d.chi_H == 0 and d.chi_M == 0:
            witness.update(condition="c >= k, k does not divide N, chi(H) = chi(M) = 0")
            return Verdict(VerdictStatus.ConsistentCase1, witness)
        for m in (1, 1 + d.k):
            lhs, rhs = theorem_equation(d, m)
            if lhs != rhs:
                break
        witness.update(
            equation="f(m) = g(m)",
            m=m,
            gcd=math.gcd(d.N * m, d.k),
            lhs=lhs,
            rhs=rhs,
        )
        return Verdict(VerdictStatus.NontrivialChiMismatch, witness)

    witness["k_divides_N"] = True
    lhs = ((d.c - d.k) * d.k + 1) * d.chi_H
    rhs = (d.c - d.k) * d.k * d.chi_M
    witness.update(equation="((c-k)k+1) chi(H) = (c-k)k chi(M)", gcd=d.k, lhs=lhs, rhs=rhs)
    if lhs != rhs:
        return Verdict(VerdictStatus.NontrivialChiMismatch, witness)
    if d.c == d.k:
        witness.update(condition="c = k, k divides N, chi(H) = 0")
        return Verdict(VerdictStatus.ConsistentCase2, witness)
    witness.update(condition="c > k, k divides N, ((c-k)k+1) chi(H) = (c-k)k chi(M)")
    return Verdict(VerdictStatus.ConsistentCase3, witness)


def distinct_powers(d_base, N_max):
    r"""
    Verdicts for :math:`\tau^N`, :math:`N = 1, \dots, N_{max}`, and the pairs they separate:
    :math:`\tau^M` and :math:`\tau^N`, :math:`M > N`, are distinguished whenever
    :math:`\tau^{M-N}` is obstructed.

    Args:
        d_base (twistlab.classes.BWData): manifold data; its ``N`` is ignored.
        N_max (int): at least 1.

    Returns:
        dict: ``verdicts``, ``distinguished`` and ``undistinguished`` pairs, and a
        ``conclusion`` string.
    """
    if N_max < 1:
        raise ValueError(f"N_max must be at least 1, got {N_max}")
    verdicts = [decide_triviality(d_base.with_N(N)) for N in range(1, N_max + 1)]
    distinguished = []
    undistinguished = []
    for N in range(1, N_max + 1):
        for M in range(N + 1, N_max + 1):
            (distinguished if verdicts[M - N - 1].nontrivial else undistinguished).append([N, M])
    if N_max == 1:
        conclusion = "single power, nothing to compare"
    elif not distinguished:
        conclusion = "no obstruction from this method"
    elif not undistinguished:
        conclusion = "all powers pairwise distinct"
    else:
        conclusion = "some powers distinguished"
    LOGGER.debug("%d of %d pairs distinguished", len(distinguished), len(distinguished) + len(undistinguished))
    return {
        "data": d_base.to_dict(),
        "N_max": N_max,
        "verdicts": [dict(v.to_dict(), N=N) for N, v in enumerate(verdicts, start=1)],
        "distinguished": distinguished,
        "undistinguished": undistinguished,
        "conclusion": conclusion,
    }


def subcritical_crosscheck(d):
    r"""
    Compare :math:`\chi_m` of the subcritical filling with that of the :math:`k`-fold cover:

    .. math::

        (-1)^{n+1}\frac{k(\chi(M)-\chi(H))}{2}
        \quad\text{vs}\quad
        \chi_m(\text{cover of degree } k).

    The two agree iff the comparison equation holds at :math:`m = 1`.

    Returns:
        tuple: ``(lhs, rhs, equal)`` with exact rationals.
    """
    lhs = chi_m_subcritical(d.n, d.k * (d.chi_M - d.chi_H))
    rhs = chi_m_cover(d, d.k)
    return lhs, rhs, lhs == rhs


__all__ = [
    "VerdictStatus",
    "Verdict",
    "theorem_equation",
    "decide_triviality",
    "distinct_powers",
    "subcritical_crosscheck",
]
