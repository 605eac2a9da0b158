"""Truncated power series in x over the theta-subalgebra, and the exterior-power generating series.

For a clean Lagrangian cycle with Chern-Mather data c_0 (an integer) and
c_r = lambda_r w_r, the exterior powers Alt^k have total Chern-Mather classes
given (when the class is multiplicative) by the coefficients of

    E(x) = (1+x)^c_0 * prod_{r>=1} exp( x P_{2r-1}(-x) / (1+x)^(2r) * c_r ).

``alt_via_newton`` recomputes the same coefficients from the power-sum form
exp(sum_m (-1)^(m+1)/m * psi^m(c) x^m), with psi^m the Adams operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import rational
from .combinatorics import binomial, eulerian_polynomial
from .pontryagin import (
    ThetaClass,
    adams,
    class_exp,
    class_inverse,
    class_log,
    pontryagin_mul,
    theta_basis,
)
from .rational import RationalLike


@dataclass(frozen=True)
class ThetaSeries:
    """sum_{j<K} coeffs[j] x^j, taken modulo x^K."""

    g: int
    K: int
    coeffs: tuple[ThetaClass, ...]

    def __post_init__(self):
        if self.K < 1:
            raise ValueError(f"truncation order K must be >= 1, got {self.K}")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.K:
            raise ValueError(f"series of order {self.K} needs {self.K} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if not isinstance(c, ThetaClass) or c.g != self.g:
                raise ValueError(f"all coefficients must be ThetaClass with g={self.g}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, g: int, K: int) -> "ThetaSeries":
        return cls(g, K, (ThetaClass.zero(g),) * K)

    @classmethod
    def one(cls, g: int, K: int) -> "ThetaSeries":
        return cls.from_scalars(g, K, [1])

    @classmethod
    def from_scalars(cls, g: int, K: int, scalars: Sequence[RationalLike], base: ThetaClass | None = None) -> "ThetaSeries":
        """Series sum_j scalars[j] x^j * base, with base = w_0 unless given."""
        if base is None:
            base = theta_basis(g, 0)
        out = []
        for j in range(K):
            a = scalars[j] if j < len(scalars) else 0
            out.append(base.scale(a))
        return cls(g, K, tuple(out))

    def __getitem__(self, j: int) -> ThetaClass:
        return self.coeffs[j]

    def _check(self, other: "ThetaSeries"):
        if not isinstance(other, ThetaSeries):
            raise TypeError(f"expected ThetaSeries, got {type(other).__name__}")
        if (other.g, other.K) != (self.g, self.K):
            raise ValueError(f"shape mismatch: (g={self.g}, K={self.K}) vs (g={other.g}, K={other.K})")

    def __add__(self, other: "ThetaSeries") -> "ThetaSeries":
        self._check(other)
        return ThetaSeries(self.g, self.K, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ThetaSeries") -> "ThetaSeries":
        self._check(other)
        return ThetaSeries(self.g, self.K, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, q: RationalLike) -> "ThetaSeries":
        return ThetaSeries(self.g, self.K, tuple(c.scale(q) for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, ThetaSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> dict:
        return {"g": self.g, "K": self.K, "coeffs": [c.to_json()["coeffs"] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ThetaSeries":
        g = int(data["g"])
        coeffs = tuple(ThetaClass(g, tuple(rational.parse(a) for a in row)) for row in data["coeffs"])
        return cls(g, int(data["K"]), coeffs)


def series_mul(s: ThetaSeries, t: ThetaSeries) -> ThetaSeries:
    """Cauchy product modulo x^K, Pontryagin product on coefficients."""
    s._check(t)
    out = [ThetaClass.zero(s.g) for _ in range(s.K)]
    for i, a in enumerate(s.coeffs):
        if a.is_zero():
            continue
        for j in range(s.K - i):
            b = t.coeffs[j]
            if not b.is_zero():
                out[i + j] = out[i + j] + pontryagin_mul(a, b)
    return ThetaSeries(s.g, s.K, tuple(out))


def series_exp(s: ThetaSeries) -> ThetaSeries:
    """exp(s) modulo x^K.

    The constant term must have zero w_0-component; it is then nilpotent
    and exp(s) = exp(s_0) * exp(s - s_0), the second factor computed by
    the recursion n E_n = sum_{j=1..n} j s_j E_{n-j}.
    """
    s0 = s.coeffs[0]
    if s0.scalar:
        raise ValueError("series_exp needs a constant term with zero w_0-component")
    g, K = s.g, s.K
    e = [ThetaClass.one(g)]
    for n in range(1, K):
        acc = ThetaClass.zero(g)
        for j in range(1, n + 1):
            sj = s.coeffs[j]
            if not sj.is_zero():
                acc = acc + pontryagin_mul(sj, e[n - j]).scale(j)
        e.append(acc / n)
    out = ThetaSeries(g, K, tuple(e))
    if not s0.is_zero():
        out = ThetaSeries(g, K, tuple(pontryagin_mul(class_exp(s0), c) for c in out.coeffs))
    return out


def series_log(s: ThetaSeries) -> ThetaSeries:
    """log(s) modulo x^K, for s with constant term of w_0-component 1."""
    s0 = s.coeffs[0]
    if s0.scalar != 1:
        raise ValueError("series_log needs a constant term with w_0-component 1")
    g, K = s.g, s.K
    inv0 = class_inverse(s0)
    log = [class_log(s0)]
    # n s_n = sum_{j=1..n} j L_j s_{n-j}
    for n in range(1, K):
        acc = s.coeffs[n].scale(n)
        for j in range(1, n):
            acc = acc - pontryagin_mul(log[j], s.coeffs[n - j]).scale(j)
        log.append(pontryagin_mul(acc, inv0) / n)
    return ThetaSeries(g, K, tuple(log))


def _binomial_series(n: int, K: int) -> list[int]:
    return [binomial(n, j) for j in range(K)]


def one_plus_x_pow(n: int, g: int, K: int) -> ThetaSeries:
    """(1+x)^n times the unit w_0, modulo x^K; any integer n."""
    return ThetaSeries.from_scalars(g, K, _binomial_series(n, K))


def _scalar_mul(a: Sequence, b: Sequence, K: int) -> list[Fraction]:
    out = [Fraction(0)] * K
    for i, x in enumerate(a[:K]):
        if x:
            for j, y in enumerate(b[: K - i]):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def exponent_series(r: int, K: int) -> tuple[Fraction, ...]:
    """Scalar series x P_{2r-1}(-x) (1+x)^(-2r) modulo x^K, multiplying c_r inside exp."""
    if r < 1:
        raise ValueError("exponent series defined for r >= 1")
    numerator = [0] + list(eulerian_polynomial(2 * r - 1).substitute_neg().coeffs)
    return tuple(_scalar_mul(numerator, _binomial_series(-2 * r, K), K))


@dataclass(frozen=True)
class LagrangianChernData:
    """Chern-Mather data of a clean Lagrangian cycle: degree c0 and c_r = higher[r-1] * w_r."""

    g: int
    c0: int
    higher: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.g < 1:
            raise ValueError(f"dimension g must be >= 1, got {self.g}")
        higher = tuple(Fraction(a) for a in self.higher)
        if not higher:
            higher = (Fraction(0),) * (self.g - 1)
        if len(higher) != self.g - 1:
            raise ValueError(f"need {self.g - 1} higher multipliers, got {len(higher)}")
        object.__setattr__(self, "c0", int(self.c0))
        object.__setattr__(self, "higher", higher)

    @classmethod
    def of(cls, g: int, c0: int, **lams: RationalLike) -> "LagrangianChernData":
        """Convenience constructor: ``of(5, 8, l1=1)``."""
        higher = [Fraction(0)] * (g - 1)
        for key, v in lams.items():
            r = int(key.lstrip("l"))
            higher[r - 1] = Fraction(v)
        return cls(g, c0, tuple(higher))

    def multiplier(self, r: int) -> Fraction:
        if r == 0:
            return Fraction(self.c0)
        if 1 <= r <= self.g - 1:
            return self.higher[r - 1]
        return Fraction(0)

    def total_class(self) -> ThetaClass:
        return ThetaClass(self.g, (Fraction(self.c0),) + self.higher + (Fraction(0),))

    def rescaled(self, n: int) -> "LagrangianChernData":
        """Data of psi^n: c_r -> n^(2r) c_r."""
        return LagrangianChernData(self.g, self.c0, tuple(a * n ** (2 * r) for r, a in enumerate(self.higher, 1)))


def e_lambda(data: LagrangianChernData, K: int) -> ThetaSeries:
    """The generating series sum_k c_M(Alt^k) x^k modulo x^K."""
    if K < 1:
        raise ValueError(f"truncation order K must be >= 1, got {K}")
    g = data.g
    out = one_plus_x_pow(data.c0, g, K)
    for r, lam in enumerate(data.higher, 1):
        if not lam:
            continue
        arg = ThetaSeries.from_scalars(g, K, exponent_series(r, K), theta_basis(g, r).scale(lam))
        out = series_mul(out, series_exp(arg))
    return out


def alt_class(data: LagrangianChernData, k: int) -> ThetaClass:
    """Total Chern-Mather class of Alt^k, the x^k coefficient of ``e_lambda``."""
    if k < 0:
        raise ValueError(f"exterior power index must be >= 0, got {k}")
    return e_lambda(data, k + 1).coeffs[k]


def alt_via_newton(data: LagrangianChernData, k: int) -> ThetaClass:
    """Alt^k through power sums: exp(sum_m (-1)^(m+1)/m psi^m(c) x^m), coefficient of x^k."""
    if k < 0:
        raise ValueError(f"exterior power index must be >= 0, got {k}")
    g, K = data.g, k + 1
    total = data.total_class()
    log = [ThetaClass.zero(g)]
    for m in range(1, K):
        log.append(adams(total, m).scale(Fraction((-1) ** (m + 1), m)))
    return series_exp(ThetaSeries(g, K, tuple(log))).coeffs[k]


# -- universal coefficients E^n_k(i)

Monomial = tuple[int, ...]


def _poly_mul(p: dict, q: dict, cap: Monomial, K: int) -> dict:
    """Product in Q[x]/(x^K)[c_1..c_m], dropping monomials not dividing c^cap."""
    out: dict[Monomial, list[Fraction]] = {}
    for ea, sa in p.items():
        for eb, sb in q.items():
            e = tuple(a + b for a, b in zip(ea, eb))
            if any(a > c for a, c in zip(e, cap)):
                continue
            prod = _scalar_mul(sa, sb, K)
            acc = out.get(e)
            if acc is None:
                out[e] = prod
            else:
                out[e] = [x + y for x, y in zip(acc, prod)]
    return out


def e_coefficient(n: int, g: int, k: int, index: Sequence[int]) -> Fraction:
    """Coefficient E^n_k(i) of c_1^i_1 ... c_{g-1}^i_{g-1} x^k in

        E^n(c, x) = (1+x)^n prod_{l=1}^{g-1} exp( x P_{2l-1}(-x) / (1+x)^(2l) * c_l ),

    with c_1..c_{g-1} free commuting variables (no degree truncation).
    """
    index = tuple(int(i) for i in index)
    if len(index) != g - 1:
        raise ValueError(f"index must have length g-1 = {g - 1}, got {len(index)}")
    if k < 0 or any(i < 0 for i in index):
        raise ValueError("k and index entries must be >= 0")
    K = k + 1
    zero = (0,) * len(index)
    poly: dict[Monomial, list[Fraction]] = {zero: [Fraction(b) for b in _binomial_series(n, K)]}
    for pos, cap_l in enumerate(index):
        if cap_l == 0:
            continue
        f = exponent_series(pos + 1, K)
        # exp(f c_l) cut at c_l^cap_l
        factor: dict[Monomial, list[Fraction]] = {}
        power = [Fraction(1)] + [Fraction(0)] * (K - 1)
        for m in range(cap_l + 1):
            e = list(zero)
            e[pos] = m
            factor[tuple(e)] = [a / math.factorial(m) for a in power]
            power = _scalar_mul(power, f, K)
        poly = _poly_mul(poly, factor, index, K)
    return poly.get(index, [Fraction(0)] * K)[k]


def unit_index(g: int, r: int, times: int = 1) -> tuple[int, ...]:
    """Multi-index ``times * e_r`` of length g-1."""
    i = [0] * (g - 1)
    i[r - 1] = times
    return tuple(i)


def c2_gap_closed_form(g: int) -> Fraction:
    """-4(2g-5)(g+3)(2g-6)! / (g!(g-3)!)."""
    return Fraction(
        -4 * (2 * g - 5) * (g + 3) * math.factorial(2 * g - 6),
        math.factorial(g) * math.factorial(g - 3),
    )


def c2_gap(g: int) -> Fraction:
    """E^{2g-2}_{g-1}(e_2) - E^{2g-2}_{g-3}(e_2), the c_2 coefficient in the hyperelliptic combination.

    Evaluated both by closed form and by series extraction; a mismatch raises.
    """
    if g < 4:
        raise ValueError(f"c2_gap needs g >= 4, got {g}")
    i = unit_index(g, 2)
    direct = e_coefficient(2 * g - 2, g, g - 1, i) - e_coefficient(2 * g - 2, g, g - 3, i)
    closed = c2_gap_closed_form(g)
    if direct != closed:
        raise AssertionError(f"c2_gap mismatch at g={g}: extraction {direct} != closed form {closed}")
    return closed

