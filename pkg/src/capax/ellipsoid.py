"""Ellipsoids E(a_1, ..., a_n) and their capacity spectrum.

Every k-capacity agrees on ellipsoids: list all positive multiples
``m * a_j`` of the finite parameters in nondecreasing order, one entry per
pair ``(j, m)``, and ``c_k`` is the k-th entry.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator, NamedTuple, Sequence

from .exact import (
    INF,
    DomainError,
    ExtRational,
    format_rational,
    parse_ext_rational,
    rational_lcm,
    to_rational,
)

__all__ = [
    "Ellipsoid",
    "SpectrumEntry",
    "capacity",
    "capacities",
    "common_period",
    "is_rational",
    "iter_spectrum",
    "k_m",
    "k_set",
    "spectrum",
]


def _coerce_param(value) -> ExtRational:
    if value is INF:
        return INF
    if isinstance(value, str):
        return parse_ext_rational(value)
    return to_rational(value)


@dataclass(frozen=True)
class Ellipsoid:
    """Parameters ``a_1..a_n`` in (0, inf], at least one of them finite.

    The order of the parameters is kept as given; capacities do not depend
    on it.
    """

    params: tuple

    def __init__(self, params: Sequence):
        coerced = tuple(_coerce_param(p) for p in params)
        if not coerced:
            raise DomainError("an ellipsoid needs at least one parameter")
        for p in coerced:
            if p is not INF and p <= 0:
                raise DomainError(f"ellipsoid parameters must be positive, got {p}")
        if all(p is INF for p in coerced):
            raise DomainError("at least one ellipsoid parameter must be finite")
        object.__setattr__(self, "params", coerced)

    @property
    def n(self) -> int:
        return len(self.params)

    @property
    def finite_params(self) -> list[Fraction]:
        return [p for p in self.params if p is not INF]

    def scaled(self, factor) -> "Ellipsoid":
        factor = to_rational(factor)
        if factor <= 0:
            raise DomainError("scale factor must be positive")
        return Ellipsoid([p if p is INF else p * factor for p in self.params])

    def sorted(self) -> "Ellipsoid":
        return Ellipsoid(sorted(self.params))

    def to_json(self) -> list[str]:
        return [format_rational(p) for p in self.params]

    @classmethod
    def from_json(cls, data) -> "Ellipsoid":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list):
            raise DomainError("ellipsoid JSON must be an array of strings")
        return cls([str(x) for x in data])

    def __str__(self):
        return "E(" + ", ".join(format_rational(p) for p in self.params) + ")"


class SpectrumEntry(NamedTuple):
    value: Fraction
    source_index: int  # 1-based
    multiplier: int


def iter_spectrum(E: Ellipsoid) -> Iterator[SpectrumEntry]:
    """Lazy n-way merge of the multiples of the finite parameters.

    Equal values from different ``(j, m)`` come out ordered by ``j``.
    """
    heap = [(a, j, 1) for j, a in enumerate(E.params, start=1) if a is not INF]
    heapq.heapify(heap)
    while True:
        value, j, m = heapq.heappop(heap)
        yield SpectrumEntry(value, j, m)
        heapq.heappush(heap, (value + E.params[j - 1], j, m + 1))


def spectrum(E: Ellipsoid, count: int) -> list[SpectrumEntry]:
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    return list(islice(iter_spectrum(E), count))


def capacity(E: Ellipsoid, k: int) -> Fraction:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return spectrum(E, k)[-1].value


def capacities(E: Ellipsoid, kmax: int) -> list[Fraction]:
    """``[c_1(E), ..., c_kmax(E)]`` from a single merge."""
    return [entry.value for entry in spectrum(E, kmax)]


def is_rational(E: Ellipsoid) -> bool:
    return all(p is not INF for p in E.params)


def common_period(E: Ellipsoid) -> Fraction:
    if not is_rational(E):
        raise DomainError(f"{E} has an infinite parameter: no common period")
    return rational_lcm(E.params)


def _first_hits(E: Ellipsoid, max_m: int) -> list[int]:
    tau = common_period(E)
    hits = []
    target = tau
    for k, entry in enumerate(iter_spectrum(E), start=1):
        if entry.value == target:
            hits.append(k)
            if len(hits) == max_m:
                return hits
            target += tau
    raise AssertionError("unreachable: the spectrum is infinite")


def k_m(E: Ellipsoid, m: int) -> int:
    """Smallest k with ``c_k(E) = m * tau(E)``."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return _first_hits(E, m)[-1]


def k_set(E: Ellipsoid, max_m: int) -> list[int]:
    """``[k_1(E), ..., k_max_m(E)]``."""
    if max_m < 1:
        raise DomainError(f"max_m must be >= 1, got {max_m}")
    return _first_hits(E, max_m)
