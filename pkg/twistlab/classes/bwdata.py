import dataclasses
import math


@dataclasses.dataclass(frozen=True)
class BWData:
    r"""
    Integer data of a Boothby-Wang orbibundle setup.

    A closed integral symplectic manifold :math:`M` of real dimension :math:`2n-2` carries a
    Donaldson hypersurface :math:`H` Poincare dual to :math:`k[\omega]`; :math:`c` is the
    pairing of :math:`c_1(M)` with the primitive class and :math:`N` the power of the
    fibered Dehn twist.

    Args:
        n (int): half-dimension of the filling, at least 3, so :math:`\dim M = 2n-2`.
        chi_M (int): Euler characteristic of :math:`M`.
        chi_H (int): Euler characteristic of :math:`H`.
        c (int): Chern number.
        k (int): degree of the hypersurface, at least 1.
        N (int): power of the twist, at least 1.

    Derived quantities are :math:`\ell = \gcd(N, k)` and

    .. math::

        \mu_P = \frac{2(N(c-k)+k)}{\ell},

    the index of the smallest contractible cover of a principal orbit. Since
    :math:`\ell` divides both :math:`N` and :math:`k`, :math:`\mu_P` is an integer.
    """

    n: int
    chi_M: int
    chi_H: int
    c: int
    k: int
    N: int

    def __post_init__(self):
        for name in ("n", "chi_M", "chi_H", "c", "k", "N"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise ValueError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.N < 1:
            raise ValueError(f"N must be at least 1, got {self.N}")
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")

    @property
    def ell(self):
        return math.gcd(self.N, self.k)

    @property
    def index_sum(self):
        r""":math:`N(c-k)+k`, half the index of the :math:`k`-fold principal cover."""
        return self.N * (self.c - self.k) + self.k

    @property
    def mu_P(self):
        return 2 * self.index_sum // self.ell

    def with_N(self, N):
        r"""Same manifold data for another power :math:`\tau^N`."""
        return dataclasses.replace(self, N=N)

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, payload):
        return cls(**{f.name: payload[f.name] for f in dataclasses.fields(cls)})

    @classmethod
    def from_sequence(cls, values):
        r"""Build from ``(n, chi_M, chi_H, c, k, N)``, the CLI's ``--bw`` order."""
        if len(values) != 6:
            raise ValueError("expected six integers n chi_M chi_H c k N")
        return cls(*(int(v) for v in values))
