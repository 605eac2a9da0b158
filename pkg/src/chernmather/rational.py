"""Lossless text form for rationals: ``"num/den"`` in lowest terms, den > 0."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

RationalLike = int | Fraction


def to_str(q: RationalLike) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse(text: str | int | Fraction) -> Fraction:
    """Parse ``"a/b"`` or an integer literal. Decimal points are rejected."""
    if isinstance(text, Rational):
        return Fraction(text)
    s = str(text).strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
