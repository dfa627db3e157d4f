"""Local and global maximizers of the capacity ratio over ellipsoids."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..ellipsoid import Ellipsoid, is_rational
from ..exact import DomainError, to_rational
from ..ratio import RatioValue, ratio_ellipsoid

__all__ = [
    "GridSearchResult",
    "MaximizerReport",
    "Verdict",
    "default_directions",
    "ellipsoid_grid_max",
    "global_ellipsoid_max",
    "global_max_power",
    "kappa",
    "verify_global_ellipsoid_max",
    "verify_local_ellipsoid_max",
]

DEFAULT_EPS = (Fraction(1, 10), Fraction(1, 100))


def _split(n: int, k: int) -> tuple[int, int]:
    # k = q*n + r with r in 1..n
    q = (k - 1) // n
    return q, k - q * n


def global_max_power(n: int, k: int) -> Fraction:
    """n-th power of the largest ratio ``c_k / vol^(1/n)`` over 2n-dim ellipsoids."""
    if n < 1 or k < 1:
        raise DomainError("need n >= 1 and k >= 1")
    q, r = _split(n, k)
    return Fraction((q + 1) ** (n - r + 1) * (q + 2) ** (r - 1))


def global_ellipsoid_max(n: int, k: int) -> tuple[Ellipsoid, RatioValue]:
    """The maximizing ellipsoid, with integer parameters, and its ratio.

    With ``k = q*n + r`` (``1 <= r <= n``) the first ``r - 1`` parameters are
    ``q + 1`` and the rest ``q + 2``; for ``r = 1`` all parameters are ``q + 1``.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    q, r = _split(n, k)
    if r == 1:
        params = [q + 1] * n
    else:
        params = [q + 1] * (r - 1) + [q + 2] * (n - r + 1)
    return Ellipsoid(params), RatioValue(global_max_power(n, k), n)


def kappa(n: int) -> int:
    """Least integer ``kappa >= 2`` such that the unit polydisk P(1,...,1)
    beats or ties the best ellipsoid for every ``k >= kappa``.

    The polydisk power is ``k^n / n!``.  The ellipsoid power is at most
    ``(k/n + 2)^n``, so beyond ``2 / (n!^(-1/n) - 1/n)`` the polydisk wins and
    only the finitely many smaller k need an exact check.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    fact = math.factorial(n)
    tail = 2.0 / (fact ** (-1.0 / n) - 1.0 / n)
    horizon = int(tail * 1.01) + 3
    last_bad = 1
    for k in range(1, horizon + 1):
        if Fraction(k**n, fact) < global_max_power(n, k):
            last_bad = k
    return max(2, last_bad + 1)


@dataclass(frozen=True)
class GridSearchResult:
    k: int
    denom_bound: int
    max_power: Fraction
    argmax: tuple  # ratios a1/a2 attaining the maximum, ascending


def ellipsoid_grid_max(k: int, denom_bound: int) -> GridSearchResult:
    """Exhaustive search over E(p/q, 1), 0 < p/q <= 1, q <= denom_bound."""
    if denom_bound < 1:
        raise DomainError("denom_bound must be >= 1")
    grid = sorted({Fraction(p, q) for q in range(1, denom_bound + 1) for p in range(1, q + 1)})
    best = None
    argmax: list[Fraction] = []
    for a1 in grid:
        value = ratio_ellipsoid(Ellipsoid([a1, 1]), k).nth_power
        if best is None or value > best:
            best, argmax = value, [a1]
        elif value == best:
            argmax.append(a1)
    return GridSearchResult(k, denom_bound, best, tuple(argmax))


def verify_global_ellipsoid_max(n: int, k: int, denom_bound: int = 30) -> bool:
    if n != 2:
        raise DomainError("grid verification is only implemented for n = 2")
    if denom_bound < 2:
        raise DomainError("denom_bound must be >= 2")
    E, ratio = global_ellipsoid_max(n, k)
    a1, a2 = sorted(E.params)
    result = ellipsoid_grid_max(k, denom_bound)
    return result.max_power == ratio.nth_power and result.argmax == (a1 / a2,)


class Verdict(str, enum.Enum):
    CONFIRMED_MAX = "confirmed_max"
    WITNESS_FOUND = "witness_found"


@dataclass(frozen=True)
class MaximizerReport:
    candidate: object
    k: int
    ratio: RatioValue
    verdict: Verdict
    witness: Optional[object] = None
    witness_ratio: Optional[RatioValue] = None
    checked: int = field(default=0, compare=False)


def default_directions(n: int) -> list[tuple[int, ...]]:
    """Shrink each axis, grow each axis, then trade between pairs of axes."""
    def unit(j, sign):
        return tuple(sign if h == j else 0 for h in range(n))

    dirs = [unit(j, -1) for j in range(n)] + [unit(j, 1) for j in range(n)]
    for j in range(n):
        for h in range(j + 1, n):
            d = tuple(1 if x == j else -1 if x == h else 0 for x in range(n))
            dirs += [d, tuple(-c for c in d)]
    return dirs


def verify_local_ellipsoid_max(
    E: Ellipsoid,
    k: int,
    eps_list: Optional[Sequence] = None,
    directions: Optional[Sequence[Sequence[int]]] = None,
) -> MaximizerReport:
    """Sampled local-maximality check of ``c_k / vol^(1/n)`` at ``E``.

    Tries ``a + eps * d`` for every ``eps`` (in the given, decreasing, order)
    and direction ``d``; the first strictly better ellipsoid is the witness.
    ``CONFIRMED_MAX`` means only that no sampled perturbation did better.
    """
    if not is_rational(E):
        raise DomainError(f"{E} is not a rational ellipsoid")
    eps_list = [to_rational(e) for e in (eps_list if eps_list is not None else DEFAULT_EPS)]
    if any(e <= 0 for e in eps_list):
        raise DomainError("perturbation sizes must be positive")
    if any(a <= b for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError("perturbation sizes must be strictly decreasing")
    directions = [tuple(d) for d in (directions if directions is not None else default_directions(E.n))]
    for d in directions:
        if len(d) != E.n or not any(d):
            raise DomainError(f"bad direction {d} for {E}")

    base = ratio_ellipsoid(E, k)
    checked = 0
    for eps in eps_list:
        for d in directions:
            params = [a + eps * c for a, c in zip(E.params, d)]
            if any(p <= 0 for p in params):
                continue
            F = Ellipsoid(params)
            ratio = ratio_ellipsoid(F, k)
            checked += 1
            if ratio.nth_power > base.nth_power:
                return MaximizerReport(E, k, base, Verdict.WITNESS_FOUND, F, ratio, checked)
    return MaximizerReport(E, k, base, Verdict.CONFIRMED_MAX, checked=checked)
