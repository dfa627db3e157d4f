"""Exact scalars: rationals, the extended value ``INF`` and a few integer helpers.

Rationals are plain :class:`fractions.Fraction` objects.  ``INF`` only ever
appears as an ellipsoid parameter (a cylinder factor); it orders above every
finite value and supports no arithmetic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce, total_ordering
from typing import Iterable, Union

__all__ = [
    "DomainError",
    "INF",
    "ExtRational",
    "PositiveInfinity",
    "ceil_div_two",
    "format_rational",
    "is_finite",
    "parse_ext_rational",
    "parse_rational",
    "rational_lcm",
    "to_rational",
]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


@total_ordering
class PositiveInfinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self or isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("capax.INF")

    def __reduce__(self):
        return (PositiveInfinity, ())


INF = PositiveInfinity()

ExtRational = Union[Fraction, PositiveInfinity]


def is_finite(x: ExtRational) -> bool:
    return x is not INF


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float has already lost the exact value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise DomainError(f"invalid rational {text!r}") from None
        if d == 0:
            raise DomainError(f"zero denominator in {text!r}")
        return Fraction(n, d)
    try:
        return Fraction(int(text))
    except ValueError:
        raise DomainError(f"invalid rational {text!r}") from None


def parse_ext_rational(text: str) -> ExtRational:
    if text.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    return parse_rational(text)


def format_rational(x: ExtRational) -> str:
    if x is INF:
        return "inf"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_lcm(values: Iterable[ExtRational]) -> Fraction:
    """Smallest positive rational that is an integer multiple of every value.

    With ``v_j = n_j/d_j`` in lowest terms this is
    ``lcm(n_1, ..., n_k) / gcd(d_1, ..., d_k)``.
    """
    values = list(values)
    if not values:
        raise DomainError("rational_lcm of an empty list")
    for v in values:
        if v is INF:
            raise DomainError("rational_lcm of an infinite value")
        if v <= 0:
            raise DomainError(f"rational_lcm needs positive values, got {v}")
    values = [Fraction(v) for v in values]
    num = reduce(math.lcm, (v.numerator for v in values))
    den = reduce(math.gcd, (v.denominator for v in values))
    return Fraction(num, den)


def ceil_div_two(k: int) -> tuple[int, int]:
    """Return ``(ceil(k/2), ceil((k+1)/2))``."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return (k + 1) // 2, (k + 2) // 2
