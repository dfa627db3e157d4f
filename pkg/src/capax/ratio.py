"""Capacity ratios ``c_k / vol^(1/n)``, carried exactly as their n-th power."""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .ellipsoid import Ellipsoid, capacity, is_rational
from .exact import DomainError, ceil_div_two, format_rational, parse_rational, to_rational
from .toric import ToricProfile, capacity_toric, volume

__all__ = [
    "Ordering",
    "RatioValue",
    "crossover_check",
    "ratio_ellipsoid",
    "ratio_polydisk_closed_form",
    "ratio_toric",
]


@dataclass(frozen=True, order=False)
class RatioValue:
    """``nth_power = c_k^n / vol`` exactly; ``approx`` is for display only."""

    nth_power: Fraction
    n: int

    def __post_init__(self):
        if self.nth_power <= 0:
            raise DomainError("a capacity ratio is positive")
        if self.n < 1:
            raise DomainError("dimension index n must be >= 1")

    @property
    def approx(self) -> float:
        return float(self.nth_power) ** (1.0 / self.n)

    def _same_dim(self, other: "RatioValue") -> None:
        if not isinstance(other, RatioValue):
            raise TypeError(f"cannot compare RatioValue with {type(other).__name__}")
        if other.n != self.n:
            raise DomainError(f"cannot compare ratios in dimensions {2 * self.n} and {2 * other.n}")

    def __lt__(self, other):
        self._same_dim(other)
        return self.nth_power < other.nth_power

    def __le__(self, other):
        self._same_dim(other)
        return self.nth_power <= other.nth_power

    def __gt__(self, other):
        self._same_dim(other)
        return self.nth_power > other.nth_power

    def __ge__(self, other):
        self._same_dim(other)
        return self.nth_power >= other.nth_power

    def to_json(self) -> dict:
        return {
            "nth_power": format_rational(self.nth_power),
            "n": self.n,
            "approx": round(self.approx, 8),
        }

    @classmethod
    def from_json(cls, data) -> "RatioValue":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(parse_rational(str(data["nth_power"])), int(data["n"]))


def ratio_ellipsoid(E: Ellipsoid, k: int) -> RatioValue:
    if not is_rational(E):
        raise DomainError(f"{E} has infinite volume")
    vol = math.prod(E.params)
    return RatioValue(capacity(E, k) ** E.n / vol, E.n)


def ratio_toric(P: ToricProfile, k: int) -> RatioValue:
    return RatioValue(capacity_toric(P, k) ** 2 / volume(P), 2)


def ratio_polydisk_closed_form(a, b, k: int) -> RatioValue:
    """``c_k(P(a, b))^2 / vol = k^2 min(a, b)^2 / (2ab)``."""
    a, b = to_rational(a), to_rational(b)
    if a <= 0 or b <= 0:
        raise DomainError("polydisk parameters must be positive")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return RatioValue(k * k * min(a, b) ** 2 / (2 * a * b), 2)


class Ordering(str, enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def crossover_check(k: int) -> Ordering:
    """Compare the square polydisk P(1,1) against the best 4-dimensional ellipsoid."""
    lo, hi = ceil_div_two(k)
    poly = Fraction(k * k, 2)
    ell = lo * hi
    if poly < ell:
        return Ordering.LESS
    if poly > ell:
        return Ordering.GREATER
    return Ordering.EQUAL
