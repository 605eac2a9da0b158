"""Integer combinatorics: generalized binomials, middle binomials, Eulerian polynomials."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient n(n-1)...(n-k+1)/k!.

    Zero for ``k < 0``. Negative ``n`` is allowed, so that ``binomial(n, k)``
    are the coefficients of ``(1 + x)**n`` for every integer ``n``.

    >>> binomial(6, 3), binomial(-1, 5), binomial(3, 5)
    (20, -1, 0)
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # (-1)^k C(k - n - 1, k) for negative upper index
    return (-1) ** k * math.comb(k - n - 1, k)


def middle_binomial(k: int) -> int:
    """C(2k, k), with the convention that it vanishes for negative k."""
    if k < 0:
        return 0
    return math.comb(2 * k, k)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ``coeffs[i]`` is the coefficient of x**i.

    Trailing zeros are stripped on construction so equality is structural;
    the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_iter(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * a for a in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def substitute_neg(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(tuple(a if i % 2 == 0 else -a for i, a in enumerate(self.coeffs)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                mono = str(a)
            else:
                var = "x" if i == 1 else f"x^{i}"
                mono = var if a == 1 else ("-" + var if a == -1 else f"{a}{var}")
            terms.append(mono)
        s = " + ".join(terms)
        return s.replace("+ -", "- ")


_eulerian_cache: list[IntPolynomial] = [IntPolynomial((1,))]
_eulerian_lock = threading.Lock()
_X = IntPolynomial((0, 1))


def _one_minus_x_pow(m: int) -> IntPolynomial:
    return IntPolynomial(tuple((-1) ** j * math.comb(m, j) for j in range(m + 1)))


def eulerian_polynomial(n: int) -> IntPolynomial:
    """Eulerian polynomial P_n, defined by sum_{k>=1} k^n x^k = x P_n(x) / (1-x)^(n+1).

    Computed by the recursion

        P_0 = 1,  P_n = (1-x)^(n-1) + x sum_{0<k<n} C(n, k) P_k(x) (1-x)^(n-1-k),

    which follows from expanding (m+1)^n in the defining sum. Results are
    memoized; the table grows under a lock.

    >>> str(eulerian_polynomial(3))
    '1 + 4x + x^2'
    """
    if n < 0:
        raise ValueError(f"eulerian_polynomial needs n >= 0, got {n}")
    if n < len(_eulerian_cache):
        return _eulerian_cache[n]
    with _eulerian_lock:
        while len(_eulerian_cache) <= n:
            m = len(_eulerian_cache)
            acc = IntPolynomial()
            for k in range(1, m):
                acc = acc + math.comb(m, k) * _eulerian_cache[k] * _one_minus_x_pow(m - 1 - k)
            _eulerian_cache.append(_one_minus_x_pow(m - 1) + _X * acc)
    return _eulerian_cache[n]


def truncated_product(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    """Coefficients of a*b modulo x**order."""
    out = [0] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j, y in enumerate(b[: order - i]):
                out[i + j] += x * y
    return out


def eulerian_defining_check(n: int, order: int) -> bool:
    """Check sum_{k>=1} k^n x^k == x P_n(x) / (1-x)^(n+1) modulo x**order.

    The left side is summed directly; the right side expands
    (1-x)^-(n+1) as sum_j C(n+j, j) x^j.
    """
    if n < 0 or order < 1:
        raise ValueError("need n >= 0 and order >= 1")
    lhs = [0] + [k**n for k in range(1, order)]
    lhs = lhs[:order]
    x_p = [0] + list(eulerian_polynomial(n).coeffs)
    inverse = [math.comb(n + j, j) for j in range(order)]
    rhs = truncated_product(x_p, inverse, order)
    return lhs == rhs
