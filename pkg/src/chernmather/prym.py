"""Euler characteristics and Chern-Mather classes along the bielliptic Prym locus.

Loci are described combinatorially: ``EPrime(g, t, k)`` for the stratum of
E'_{g,t} where the count of distinguished divisor pairs is 2k, and
``SCycle(partition, k)`` for the degenerations in which the elliptic curve
becomes a cycle of rational curves with component genera given by the
partition. The integer k is supplied by the caller; it is not computed from
curve data.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .combinatorics import middle_binomial as B
from .pontryagin import BiThetaClass, ThetaClass, theta_basis


@dataclass(frozen=True)
class EPrime:
    g: int
    t: int
    k: int = 0

    def __post_init__(self):
        if self.g < 4:
            raise ValueError(f"EPrime needs g >= 4, got g={self.g}")
        if not 0 <= 2 * self.t <= self.g:
            raise ValueError(f"EPrime needs 0 <= t <= g/2, got t={self.t}, g={self.g}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")

    @property
    def label(self) -> str:
        return f"E'({self.g},{self.t})^{self.k}"


@dataclass(frozen=True)
class SCycle:
    partition: tuple[int, ...]
    k: int = 0

    def __post_init__(self):
        parts = tuple(sorted(int(d) for d in self.partition))
        if not parts or any(d < 1 for d in parts):
            raise ValueError(f"partition must be a nonempty list of positive integers, got {self.partition}")
        if sum(parts) < 4:
            raise ValueError(f"SCycle needs g = sum(partition) >= 4, got {sum(parts)}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        object.__setattr__(self, "partition", parts)

    @property
    def g(self) -> int:
        return sum(self.partition)

    @property
    def label(self) -> str:
        return f"S({','.join(map(str, self.partition))})^{self.k}"


PrymLocus = Union[EPrime, SCycle]


class ChiTag(enum.Enum):
    EXACT = "Exact"
    GREATER_THAN = "GreaterThan"
    EXTERNAL_REFERENCE = "ExternalReference"


@dataclass(frozen=True)
class ChiVerdict:
    tag: ChiTag
    value: int | None = None
    note: str = ""

    def __str__(self) -> str:
        if self.tag is ChiTag.EXACT:
            return str(self.value)
        if self.tag is ChiTag.GREATER_THAN:
            return f"> {self.value}"
        return "external reference"


def _smooth_cover_type(locus: PrymLocus) -> bool:
    """Loci with chi = B_{g-1} - (2 or 1) k: E'_{g,0}, S_(g), S_(1,g-1)."""
    if isinstance(locus, EPrime):
        return locus.t == 0
    return locus.partition in ((locus.g,), (1, locus.g - 1))


def euler_characteristic(locus: PrymLocus) -> ChiVerdict:
    """chi(IC_Xi) = c_{M,0} of the characteristic cycle, where it is known in closed form."""
    g = locus.g
    if _smooth_cover_type(locus):
        # quadratic additional singularities contribute only in odd dimension
        drop = 2 * locus.k if g % 2 == 0 else locus.k
        return ChiVerdict(ChiTag.EXACT, B(g - 1) - drop)
    if isinstance(locus, EPrime):
        t = locus.t
        if t >= 2:
            value = B(t - 1) * B(g - t) + B(t) * B(g - t - 1) - 2 ** (g - 1)
            note = "general member of the stratum; specializations have smaller chi"
            if g == 4 and t == 2:
                note += "; g=4, t=2 assumes a general Prym"
            return ChiVerdict(ChiTag.EXACT, value, note)
        if g >= 5:
            return ChiVerdict(ChiTag.GREATER_THAN, B(g - 1), "degree of the conormal variety exceeds B_{g-1}")
        return ChiVerdict(
            ChiTag.EXTERNAL_REFERENCE,
            note="g=4, t=1: chi = B_3 only on the closure of the two-theta-null locus, which is E_{4,0}",
        )
    return ChiVerdict(
        ChiTag.EXTERNAL_REFERENCE,
        note="chi for this boundary stratum comes from external Prym computations; it is below B_{g-1}",
    )


def matches_jacobian_dimension(locus: PrymLocus) -> bool:
    """True iff chi(IC_Xi) = B_{g-1}, which on the bielliptic locus happens only for k = 0 smooth-cover strata."""
    if locus.g < 4:
        raise ValueError("needs g >= 4")
    return _smooth_cover_type(locus) and locus.k == 0


def prym_chern_mather_t0(g: int, r: int) -> ThetaClass:
    """c_{M,r}(Lambda_Xi) = C(2g-2r-2, g-r-1) [Xi]^{g-r}/(g-r)! on E'_{g,0}, r >= 1."""
    if g < 4:
        raise ValueError(f"needs g >= 4, got {g}")
    if not 1 <= r <= g - 1:
        raise ValueError(f"r must be in 1..{g - 1}, got {r}")
    return theta_basis(g, r).scale(B(g - r - 1))


def prym_chern_mather_t_pos(g: int, t: int, r: int) -> BiThetaClass:
    """c_{M,r}(Lambda_Xi) on E'_{g,t}, t >= 1, in the basis e_{a,b} = xi'^a/a! xi''^b/b!.

    The coefficient of e_{k, g-r-k} is B_k B_{g-r-k-1} + B_{k-1} B_{g-r-k}
    with B_{-1} = 0, so the endpoint terms keep a single product.
    """
    if g < 4:
        raise ValueError(f"needs g >= 4, got {g}")
    if not 1 <= 2 * t <= g:
        raise ValueError(f"t must satisfy 1 <= t <= g/2, got t={t}")
    if not 1 <= r <= g - 1:
        raise ValueError(f"r must be in 1..{g - 1}, got {r}")
    m = g - r
    return BiThetaClass.from_terms(
        g, ((k, m - k, B(k) * B(m - k - 1) + B(k - 1) * B(m - k)) for k in range(m + 1))
    )


def census_loci(g: int, k_max: int = 3) -> list[PrymLocus]:
    """The standard grid: E'(g,t,k) for 0 <= t <= g/2, 0 <= k <= k_max, and S_(g), S_(1,g-1)."""
    loci: list[PrymLocus] = []
    for t in range(g // 2 + 1):
        for k in range(k_max + 1):
            loci.append(EPrime(g, t, k))
    for parts in ((g,), (1, g - 1)):
        for k in range(k_max + 1):
            loci.append(SCycle(parts, k))
    return loci
