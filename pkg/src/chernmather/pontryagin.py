"""The theta-subalgebra of even homology of a principally polarized abelian variety.

For a ppav of dimension ``g`` the classes

    w_r = theta^(g-r)/(g-r)! cap [A]   in H_{2r}(A, Q),   0 <= r <= g,

span a subring for the Pontryagin product, with ``w_a * w_b = C(a+b, a) w_{a+b}``
(zero past degree g). So the ring is the truncated divided-power algebra
Q[y]/(y^(g+1)) with ``w_r = y^r / r!``; ``w_0`` is the point class and the unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import rational
from .rational import RationalLike


def _as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"expected an exact rational, got {type(q).__name__}")


@dataclass(frozen=True)
class ThetaClass:
    """``sum_r coeffs[r] * w_r`` in a ppav of dimension ``g``."""

    g: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.g < 1:
            raise ValueError(f"dimension g must be >= 1, got {self.g}")
        coeffs = tuple(_as_fraction(c) for c in self.coeffs)
        if len(coeffs) != self.g + 1:
            raise ValueError(f"ThetaClass in dimension {self.g} needs {self.g + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction

    @classmethod
    def zero(cls, g: int) -> "ThetaClass":
        return cls(g, (Fraction(0),) * (g + 1))

    @classmethod
    def one(cls, g: int) -> "ThetaClass":
        return theta_basis(g, 0)

    @classmethod
    def from_components(cls, g: int, components: Mapping[int, RationalLike]) -> "ThetaClass":
        c = [Fraction(0)] * (g + 1)
        for r, a in components.items():
            if not 0 <= r <= g:
                raise ValueError(f"degree {r} out of range 0..{g}")
            c[r] += _as_fraction(a)
        return cls(g, tuple(c))

    # -- accessors

    def __getitem__(self, r: int) -> Fraction:
        return self.coeffs[r]

    @property
    def scalar(self) -> Fraction:
        """Coefficient of w_0 (the degree of the class)."""
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- module structure

    def _check(self, other: "ThetaClass"):
        if not isinstance(other, ThetaClass):
            raise TypeError(f"expected ThetaClass, got {type(other).__name__}")
        if other.g != self.g:
            raise ValueError(f"dimension mismatch: g={self.g} vs g={other.g}")

    def __add__(self, other: "ThetaClass") -> "ThetaClass":
        self._check(other)
        return ThetaClass(self.g, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ThetaClass") -> "ThetaClass":
        self._check(other)
        return ThetaClass(self.g, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ThetaClass":
        return ThetaClass(self.g, tuple(-a for a in self.coeffs))

    def scale(self, q: RationalLike) -> "ThetaClass":
        q = _as_fraction(q)
        return ThetaClass(self.g, tuple(q * a for a in self.coeffs))

    def __mul__(self, other):
        """Scalar multiple for ints/Fractions, Pontryagin product for classes."""
        if isinstance(other, ThetaClass):
            return pontryagin_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, q: RationalLike) -> "ThetaClass":
        return self.scale(1 / _as_fraction(q))

    def __pow__(self, k: int) -> "ThetaClass":
        if k < 0:
            raise ValueError("negative Pontryagin power")
        out = ThetaClass.one(self.g)
        for _ in range(k):
            out = pontryagin_mul(out, self)
        return out

    # -- serialization

    def to_json(self) -> dict:
        return {"g": self.g, "coeffs": [rational.to_str(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ThetaClass":
        return cls(int(data["g"]), tuple(rational.parse(a) for a in data["coeffs"]))

    def __str__(self) -> str:
        terms = [f"{a}*w{r}" for r, a in enumerate(self.coeffs) if a]
        return " + ".join(terms) if terms else "0"


def theta_basis(g: int, r: int) -> ThetaClass:
    """The basis class w_r = theta^(g-r)/(g-r)! cap [A]."""
    if not 0 <= r <= g:
        raise ValueError(f"basis degree r={r} out of range 0..{g}")
    c = [Fraction(0)] * (g + 1)
    c[r] = Fraction(1)
    return ThetaClass(g, tuple(c))


def pontryagin_mul(u: ThetaClass, v: ThetaClass) -> ThetaClass:
    """Pontryagin product, w_a * w_b = C(a+b, a) w_{a+b}, truncated above degree g."""
    u._check(v)
    g = u.g
    out = [Fraction(0)] * (g + 1)
    for a, x in enumerate(u.coeffs):
        if not x:
            continue
        for b in range(g + 1 - a):
            y = v.coeffs[b]
            if y:
                out[a + b] += math.comb(a + b, a) * x * y
    return ThetaClass(g, tuple(out))


def adams(u: ThetaClass, n: int) -> ThetaClass:
    """Adams operation: push-forward along multiplication by n, scaling H_{2r} by n^(2r)."""
    return ThetaClass(u.g, tuple(a * n ** (2 * r) for r, a in enumerate(u.coeffs)))


def truncate_to(u: ThetaClass, d: int) -> ThetaClass:
    """Image in the quotient H_{<=2d}: drop components of degree > d."""
    if not 0 <= d <= u.g:
        raise ValueError(f"truncation degree d={d} out of range 0..{u.g}")
    return ThetaClass(u.g, u.coeffs[: d + 1] + (Fraction(0),) * (u.g - d))


def class_exp(u: ThetaClass) -> ThetaClass:
    """exp of a class with zero scalar part (a finite sum, since u is nilpotent)."""
    if u.scalar:
        raise ValueError("exp needs a class with zero w_0-component")
    out = ThetaClass.one(u.g)
    term = ThetaClass.one(u.g)
    for m in range(1, u.g + 1):
        term = pontryagin_mul(term, u) / m
        if term.is_zero():
            break
        out = out + term
    return out


def class_log(u: ThetaClass) -> ThetaClass:
    """log of a class with scalar part 1."""
    if u.scalar != 1:
        raise ValueError("log needs a class with w_0-component equal to 1")
    n = u - ThetaClass.one(u.g)
    out = ThetaClass.zero(u.g)
    power = ThetaClass.one(u.g)
    for m in range(1, u.g + 1):
        power = pontryagin_mul(power, n)
        if power.is_zero():
            break
        out = out + power.scale(Fraction((-1) ** (m + 1), m))
    return out


def class_inverse(u: ThetaClass) -> ThetaClass:
    """Pontryagin inverse of a class with nonzero scalar part."""
    a = u.scalar
    if not a:
        raise ZeroDivisionError("class with zero w_0-component is not invertible")
    # u = a (1 + n) with n nilpotent
    n = u.scale(1 / a) - ThetaClass.one(u.g)
    out = ThetaClass.one(u.g)
    power = ThetaClass.one(u.g)
    for m in range(1, u.g + 1):
        power = pontryagin_mul(power, n)
        if power.is_zero():
            break
        out = out + power.scale((-1) ** m)
    return out.scale(1 / a)


def _check_bidegree(g: int, a: int, b: int):
    if a < 0 or b < 0 or a + b > g:
        raise ValueError(f"bidegree ({a}, {b}) invalid for g={g}")


@dataclass(frozen=True)
class BiThetaClass:
    """Class on a bielliptic Prym in the basis

        e_{a,b} = xi'^a/a! . xi''^b/b! cap [P],   a + b <= g,

    where xi', xi'' are the rescaled norm pullbacks of the two Prym
    polarizations. Only linear structure is provided: the Pontryagin
    pairing between xi'- and xi''-monomials is not modelled.
    Zero coefficients are dropped so equality is structural.
    """

    g: int
    coeffs: Mapping[tuple[int, int], Fraction]

    def __post_init__(self):
        if self.g < 1:
            raise ValueError(f"dimension g must be >= 1, got {self.g}")
        clean = {}
        for (a, b), c in self.coeffs.items():
            _check_bidegree(self.g, a, b)
            c = _as_fraction(c)
            if c:
                clean[(a, b)] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_terms(cls, g: int, terms: Iterable[tuple[int, int, RationalLike]]) -> "BiThetaClass":
        acc: dict[tuple[int, int], Fraction] = {}
        for a, b, c in terms:
            acc[(a, b)] = acc.get((a, b), Fraction(0)) + _as_fraction(c)
        return cls(g, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiThetaClass):
            return NotImplemented
        return self.g == other.g and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.g, tuple(self.coeffs.items())))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def _check(self, other: "BiThetaClass"):
        if not isinstance(other, BiThetaClass):
            raise TypeError(f"expected BiThetaClass, got {type(other).__name__}")
        if other.g != self.g:
            raise ValueError(f"dimension mismatch: g={self.g} vs g={other.g}")

    def __add__(self, other: "BiThetaClass") -> "BiThetaClass":
        self._check(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return BiThetaClass(self.g, acc)

    def __neg__(self) -> "BiThetaClass":
        return self.scale(-1)

    def __sub__(self, other: "BiThetaClass") -> "BiThetaClass":
        return self + (-other)

    def scale(self, q: RationalLike) -> "BiThetaClass":
        q = _as_fraction(q)
        return BiThetaClass(self.g, {k: q * c for k, c in self.coeffs.items()})

    def __mul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    __rmul__ = __mul__

    def to_json(self) -> list[dict]:
        return [{"a": a, "b": b, "coeff": rational.to_str(c)} for (a, b), c in self.coeffs.items()]

    @classmethod
    def from_json(cls, g: int, data: Iterable[Mapping]) -> "BiThetaClass":
        return cls.from_terms(g, ((int(d["a"]), int(d["b"]), rational.parse(d["coeff"])) for d in data))

    def __str__(self) -> str:
        terms = [f"{c}*e({a},{b})" for (a, b), c in self.coeffs.items()]
        return " + ".join(terms) if terms else "0"
