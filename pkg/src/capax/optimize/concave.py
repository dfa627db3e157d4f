"""Concave toric domains never beat the best ellipsoid.

For a concave profile pick a lattice vector ``v`` attaining the capacity and a
graph vertex ``w`` attaining ``min <v, .>``.  The line ``<v, .> = <v, w>``
supports the (convex) profile function from below, so the triangle under it
is an ellipsoid inside the profile with at least the same capacity.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..ellipsoid import Ellipsoid, capacity
from ..exact import DomainError, ceil_div_two
from ..ratio import RatioValue, ratio_ellipsoid, ratio_toric
from ..toric import (
    Kind,
    ToricProfile,
    capacity_concave_attained,
    contains_point,
    support_min_attained,
    volume,
)

__all__ = [
    "ConcaveCheck",
    "check_concave_profile",
    "random_concave_profile",
    "tangent_ellipsoid",
    "verify_concave_max",
]


def tangent_ellipsoid(P: ToricProfile, k: int):
    """Return ``(E, v, w)``: the supporting-line ellipsoid, its lattice vector and contact vertex."""
    value, vs = capacity_concave_attained(P, k)
    v = vs[0]
    _, ws = support_min_attained(P, v)
    w = ws[0]
    # g(x) = w2 - (v1/v2)(x - w1) vanishes at value/v1 and equals value/v2 at 0
    return Ellipsoid([value / v[0], value / v[1]]), v, w


@dataclass(frozen=True)
class ConcaveCheck:
    k: int
    ratio: RatioValue
    bound: Fraction
    tangent: Ellipsoid
    tangent_ratio: RatioValue

    @property
    def below_bound(self) -> bool:
        return self.ratio.nth_power <= self.bound

    @property
    def tangent_dominates(self) -> bool:
        return self.tangent_ratio.nth_power >= self.ratio.nth_power

    @property
    def ok(self) -> bool:
        return self.below_bound and self.tangent_dominates


def check_concave_profile(P: ToricProfile, k: int) -> ConcaveCheck:
    if P.kind is not Kind.CONCAVE:
        raise DomainError("expected a concave profile")
    lo, hi = ceil_div_two(k)
    ratio = ratio_toric(P, k)
    E, v, w = tangent_ellipsoid(P, k)
    a1, a2 = E.params
    # the triangle must sit inside the profile and keep the capacity
    if not (contains_point(P, (a1, 0)) and contains_point(P, (0, a2))):
        raise AssertionError(f"tangent triangle of {P} leaves the profile")
    if capacity(E, k) < capacity_concave_attained(P, k)[0]:
        raise AssertionError(f"tangent ellipsoid {E} lost capacity")
    if a1 * a2 > volume(P):
        raise AssertionError(f"tangent ellipsoid {E} has more volume than {P}")
    return ConcaveCheck(k, ratio, Fraction(lo * hi), E, ratio_ellipsoid(E, k))


def verify_concave_max(k: int, profiles: Iterable[ToricProfile]) -> bool:
    """True iff no profile beats ``ceil(k/2) * ceil((k+1)/2)`` and every
    tangent ellipsoid dominates its profile."""
    profiles = list(profiles)
    for P in profiles:
        if P.kind is not Kind.CONCAVE:
            raise DomainError("verify_concave_max needs concave profiles")
    return all(check_concave_profile(P, k).ok for P in profiles)


def _rand_rational(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int) -> Fraction:
    """Random rational with denominator <= max_den strictly inside (lo, hi), or ``lo``."""
    for _ in range(20):
        q = rng.randint(1, max_den)
        a = math.floor(lo * q) + 1
        b = math.ceil(hi * q) - 1
        if a <= b:
            return Fraction(rng.randint(a, b), q)
    return lo


def random_concave_profile(
    rng: random.Random, max_vertices: int = 6, max_den: int = 10, extent: int = 3
) -> ToricProfile:
    """Random strictly convex decreasing chain with small-denominator vertices.

    Vertices are placed left to right; each new ``y`` lies strictly above the
    extension of the previous edge and strictly below the chord to ``(x0, 0)``.
    """
    if max_vertices < 2:
        raise DomainError("a profile has at least two vertices")
    zero = Fraction(0)
    while True:
        x0 = _rand_rational(rng, zero, Fraction(extent), max_den)
        y0 = _rand_rational(rng, zero, Fraction(extent), max_den)
        if x0 > 0 and y0 > 0:
            break
    xs = sorted({_rand_rational(rng, zero, x0, max_den) for _ in range(rng.randint(0, max_vertices - 2))})
    chain = [(zero, y0)]
    for x in xs:
        if x <= 0:
            continue
        px, py = chain[-1]
        lower = zero
        if len(chain) >= 2:
            (qx, qy) = chain[-2]
            lower = max(lower, py + (py - qy) / (px - qx) * (x - px))
        upper = py * (x0 - x) / (x0 - px)
        y = _rand_rational(rng, lower, upper, max_den)
        if lower < y < upper:
            chain.append((x, y))
    chain.append((x0, zero))
    return ToricProfile(Kind.CONCAVE, chain)
