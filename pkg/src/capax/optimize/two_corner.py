"""The two-corner convex profiles Omega(alpha, s, t) and their algebra.

The region is ``{0 <= y <= 1+s} & {0 <= x <= 1+t} & {y >= 1 - alpha (x - 1)}``
with corners ``v+ = (1 - s/alpha, 1 + s)`` and ``v- = (1 + t, 1 - alpha t)``.
The slope parameter is written ``alpha = (i + r) / (k - (i + r))`` with
``i`` in ``0..k-1`` and ``r`` in ``[0, 1)``; ``i + r = 0`` and ``i + r = k``
are the two rectangle limits (``alpha = 0`` and ``alpha = inf``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from ..exact import INF, DomainError, ExtRational, format_rational, to_rational
from ..toric import Kind, ToricProfile, polydisk_profile, support_max
from ..ratio import ratio_toric

__all__ = [
    "Condition",
    "IdentityCheck",
    "SupportCheck",
    "Thresholds",
    "TwoCornerFamily",
    "balanced_t",
    "check_ratio_identity",
    "check_two_corner_supports",
    "conditions_holding",
    "first_inequality",
    "first_inequality_reduced",
    "second_inequality",
    "second_inequality_reduced",
    "thresholds",
    "two_corner_area",
    "two_corner_profile",
    "two_corner_ratio_identity",
    "two_corner_supports",
    "uncovered_parameters",
]


def _alpha(k: int, i: int, r: Fraction) -> ExtRational:
    m = i + r
    if m == k:
        return INF
    return m / (k - m)


@dataclass(frozen=True)
class TwoCornerFamily:
    k: int
    i: int
    r: Fraction
    s: Fraction
    t: Fraction

    def __init__(self, k: int, i: int, r, s, t):
        r, s, t = to_rational(r), to_rational(s), to_rational(t)
        if k < 1:
            raise DomainError(f"k must be >= 1, got {k}")
        if not ((0 <= i <= k - 1 and 0 <= r < 1) or (i == k and r == 0)):
            raise DomainError(f"(i, r) = ({i}, {r}) outside {{0..k-1}} x [0, 1) or (k, 0)")
        alpha = _alpha(k, i, r)
        if s < 0 or (alpha is not INF and s > alpha):
            raise DomainError(f"s = {s} outside [0, alpha = {alpha}]")
        if t < 0 or (alpha is not INF and alpha > 0 and t * alpha > 1) or (alpha is INF and t != 0):
            raise DomainError(f"t = {t} outside [0, 1/alpha]")
        for name, value in (("k", k), ("i", i), ("r", r), ("s", s), ("t", t)):
            object.__setattr__(self, name, value)

    @classmethod
    def balanced(cls, k: int, i: int, r, s) -> "TwoCornerFamily":
        """Member whose two candidate capacities coincide (t fixed by s)."""
        return cls(k, i, r, s, balanced_t(k, i, r, s))

    @property
    def alpha(self) -> ExtRational:
        return _alpha(self.k, self.i, self.r)

    @property
    def degenerate(self) -> bool:
        """True for the rectangle limits ``i + r in {0, k}``."""
        return self.i + self.r in (0, self.k)

    @property
    def v_plus(self) -> tuple[Fraction, Fraction]:
        if self.alpha is INF:
            return (Fraction(1), 1 + self.s)
        if self.alpha == 0:
            return (Fraction(0), Fraction(1))
        return (1 - self.s / self.alpha, 1 + self.s)

    @property
    def v_minus(self) -> tuple[Fraction, Fraction]:
        if self.alpha is INF:
            return (Fraction(1), Fraction(1))
        return (1 + self.t, 1 - self.alpha * self.t)

    def is_balanced(self) -> bool:
        if self.degenerate:
            return False
        return self.t == balanced_t(self.k, self.i, self.r, self.s)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "i": self.i,
            "r": format_rational(self.r),
            "s": format_rational(self.s),
            "t": format_rational(self.t),
        }


def balanced_t(k: int, i: int, r, s) -> Fraction:
    r, s = to_rational(r), to_rational(s)
    alpha = _alpha(k, i, r)
    if alpha is INF or alpha == 0:
        raise DomainError("balance is only defined for 0 < i + r < k")
    return r / (1 - r) * s / alpha


def two_corner_profile(F: TwoCornerFamily) -> ToricProfile:
    if F.alpha is INF:
        return polydisk_profile(1, 1 + F.s)
    if F.alpha == 0:
        return polydisk_profile(1 + F.t, 1)
    top = (Fraction(0), 1 + F.s)
    right = (1 + F.t, Fraction(0))
    return ToricProfile(Kind.CONVEX, [top, F.v_plus, F.v_minus, right])


def two_corner_area(F: TwoCornerFamily) -> Fraction:
    """Euclidean area of the profile (half the volume of the toric domain)."""
    if F.alpha is INF:
        return 1 + F.s
    if F.alpha == 0:
        return 1 + F.t
    a = F.alpha
    return 1 + F.t + F.s - F.s**2 / (2 * a) - F.t**2 * a / 2


def _require_regular(F: TwoCornerFamily) -> None:
    if F.degenerate:
        raise DomainError("closed forms need 0 < i + r < k; rectangles are polydisks")


def two_corner_supports(F: TwoCornerFamily) -> tuple[Fraction, Fraction]:
    """Closed forms of the support values at ``(i, k-i)`` and ``(i+1, k-i-1)``."""
    _require_regular(F)
    k, i, r, s, t = F.k, F.i, F.r, F.s, F.t
    return (
        k * (1 + s * r / (i + r)),
        k * (1 + t * (1 - r) / (k - (i + r))),
    )


class SupportCheck(NamedTuple):
    closed_forms: tuple
    oracle: tuple
    corners_ok: bool
    minimal_ok: bool

    @property
    def ok(self) -> bool:
        return self.closed_forms == self.oracle and self.corners_ok and self.minimal_ok


def check_two_corner_supports(F: TwoCornerFamily) -> SupportCheck:
    """Compare the closed forms with a vertex search over the actual profile.

    Also checks that ``(j, k-j)`` is maximized at ``v+`` for ``j <= i`` and
    at ``v-`` for ``j >= i+1``, and that the two closed-form values are the
    smallest on their side.
    """
    closed = two_corner_supports(F)
    P = two_corner_profile(F)
    k, i = F.k, F.i
    norms = [support_max(P, (j, k - j)) for j in range(k + 1)]
    oracle = (norms[i], norms[i + 1])
    corners_ok = True
    for j in range(k + 1):
        w = F.v_plus if j <= i else F.v_minus
        if j * w[0] + (k - j) * w[1] != norms[j]:
            corners_ok = False
    minimal_ok = all(norms[j] >= norms[i] for j in range(i + 1)) and all(
        norms[j] >= norms[i + 1] for j in range(i + 1, k + 1)
    )
    return SupportCheck(closed, oracle, corners_ok, minimal_ok)


def two_corner_ratio_identity(F: TwoCornerFamily) -> Fraction:
    """Closed form of ``c_k^2 / area``, i.e. twice the squared capacity ratio."""
    _require_regular(F)
    k, i, r, s, t = F.k, F.i, F.r, F.s, F.t
    gain = min(s * r / (i + r), t * (1 - r) / (k - (i + r)))
    return k * k * (1 + gain) ** 2 / two_corner_area(F)


class IdentityCheck(NamedTuple):
    closed_form: Fraction
    oracle: Fraction
    balanced: bool

    @property
    def agree(self) -> bool:
        return self.closed_form == self.oracle


def check_ratio_identity(F: TwoCornerFamily) -> IdentityCheck:
    """Both sides of the identity; ``balanced`` reports whether ``t`` is the balanced value."""
    closed = two_corner_ratio_identity(F)
    oracle = 2 * ratio_toric(two_corner_profile(F), F.k).nth_power
    return IdentityCheck(closed, oracle, F.is_balanced())


class Thresholds(NamedTuple):
    u0: Fraction
    l0: Fraction
    u_top: Fraction  # for i = k - 1
    l_top: Fraction


def thresholds(k: int) -> Thresholds:
    if k < 2:
        raise DomainError(f"thresholds need k >= 2, got {k}")
    return Thresholds(
        u0=Fraction(2 * k * k - 3 * k, 2 * k * k - 2 * k - 1),
        l0=Fraction(k, 2 * k - 1),
        u_top=Fraction(k - 1, 2 * k - 1),
        l_top=Fraction(k - 1, 2 * k * k - 2 * k - 1),
    )


# -- sufficient conditions for strict inequality ---------------------------------


def first_inequality(k: int, i: int, r) -> bool:
    """Strict inequality implied for every s when s/alpha <= 1."""
    r = to_rational(r)
    a = _alpha(k, i, r)
    m = i + r
    lhs = r * r * a / m**2 + ((1 - r) ** 2 + r * r) / (2 * (1 - r) ** 2)
    rhs = 1 + r / ((1 - r) * a) - 2 * r / m
    return lhs < rhs


def first_inequality_reduced(k: int, i: int, r) -> bool:
    """Polynomial form of :func:`first_inequality`."""
    r = to_rational(r)
    return 0 < ((k - i) * (k - i - 2) + r) * r + (i + r) * (k - i - r) * (1 - 2 * r) / (2 * (1 - r))


def second_inequality(k: int, i: int, r) -> bool:
    """Strict inequality implied for every s when s/alpha <= (1-r)/(r alpha)."""
    r = to_rational(r)
    if r == 0:
        return False
    a = _alpha(k, i, r)
    m = i + r
    lhs = (1 - r) * r / m**2 + ((1 - r) ** 2 + r * r) / (2 * (1 - r) * r * a)
    rhs = 1 + r / ((1 - r) * a) - 2 * r / m
    return lhs < rhs


def second_inequality_reduced(k: int, i: int, r) -> bool:
    r = to_rational(r)
    if r == 0:
        return False
    a = _alpha(k, i, r)
    return r < i * i + (i + r) ** 2 * (2 * r - 1) / (2 * (1 - r) * r * a)


class Condition(str, enum.Enum):
    FIRST_MIDDLE = "first: i <= k-2, r <= 1/2"
    FIRST_TOP = "first: i = k-1, r < u_top"
    FIRST_BOTTOM = "first: i = 0, r < u0"
    SECOND_MIDDLE = "second: i > 0, r >= 1/2"
    SECOND_BOTTOM = "second: i = 0, r > l0"
    SECOND_TOP = "second: i = k-1, r > l_top"

    @property
    def implies_first(self) -> bool:
        return self.name.startswith("FIRST")


def conditions_holding(k: int, i: int, r) -> list[Condition]:
    """Which of the explicit sufficient conditions cover the parameter ``(i, r)``."""
    r = to_rational(r)
    if not (0 <= i <= k - 1 and 0 <= r < 1 and 0 < i + r):
        raise DomainError(f"(i, r) = ({i}, {r}) outside 0 < i + r < k")
    th = thresholds(k)
    half = Fraction(1, 2)
    out = []
    if i <= k - 2 and r <= half:
        out.append(Condition.FIRST_MIDDLE)
    if i == k - 1 and r < th.u_top:
        out.append(Condition.FIRST_TOP)
    if i == 0 and r < th.u0:
        out.append(Condition.FIRST_BOTTOM)
    if i > 0 and r >= half:
        out.append(Condition.SECOND_MIDDLE)
    if i == 0 and r > th.l0:
        out.append(Condition.SECOND_BOTTOM)
    if i == k - 1 and r > th.l_top:
        out.append(Condition.SECOND_TOP)
    return out


def uncovered_parameters(k: int) -> list[tuple[int, Fraction, Optional[Fraction]]]:
    """Gaps in the cover of ``{0..k-1} x [0, 1)`` by the sufficient conditions.

    Each gap is ``(i, r, None)`` for an isolated point or ``(i, a, b)`` for an
    open interval ``(a, b)``.  The union of the conditions is a finite union
    of intervals with endpoints among ``0, 1/2`` and the thresholds, so testing
    those endpoints and the midpoints between them is exhaustive.
    """
    th = thresholds(k)
    cuts = sorted({Fraction(0), Fraction(1, 2), th.u0, th.l0, th.u_top, th.l_top, Fraction(1)})
    cuts = [c for c in cuts if 0 <= c <= 1]
    gaps = []
    for i in range(k):
        for a, b in zip(cuts, cuts[1:]):
            if not (i == 0 and a == 0) and not conditions_holding(k, i, a):
                gaps.append((i, a, None))
            mid = (a + b) / 2
            if not conditions_holding(k, i, mid):
                gaps.append((i, a, b))
    return gaps
