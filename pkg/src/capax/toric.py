"""Four-dimensional toric domains given by piecewise-linear profiles.

A profile is the region under the graph of a nonincreasing function
``f: [0, x0] -> [0, y0]``, stored by the graph's vertices from ``(0, y0)``
to ``(x0, 0)``.  The region always includes the origin and the two axis
segments.  ``Kind.CONCAVE`` profiles have convex ``f`` (the complement of the
region is convex); ``Kind.CONVEX`` profiles have concave ``f``.

Capacities follow the Gutt-Hutchings lattice formulas:

* concave:  c_k = max over v1 + v2 = k + 1, v1, v2 >= 1, of min_{w in graph} <v, w>
* convex:   c_k = min over v = (j, k - j), j = 0..k, of max_{w in region} <v, w>
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from pathlib import Path
from typing import Sequence

from .exact import DomainError, format_rational, parse_rational, to_rational

__all__ = [
    "Kind",
    "ToricProfile",
    "capacity_concave",
    "capacity_concave_attained",
    "capacity_convex",
    "capacity_convex_attained",
    "capacity_toric",
    "contains_point",
    "ellipsoid_profile",
    "load_profile",
    "polydisk_profile",
    "support_max",
    "support_max_attained",
    "support_min_on_graph",
    "support_min_attained",
    "volume",
]

Point = tuple[Fraction, Fraction]


class Kind(str, enum.Enum):
    CONCAVE = "concave"
    CONVEX = "convex"


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _canonical_vertices(kind: Kind, raw: Sequence) -> tuple[Point, ...]:
    pts: list[Point] = []
    for item in raw:
        if len(item) != 2:
            raise DomainError(f"vertex must be a pair, got {item!r}")
        p = (to_rational(item[0]), to_rational(item[1]))
        if p[0] < 0 or p[1] < 0:
            raise DomainError(f"vertex {p} outside the first quadrant")
        if not pts or pts[-1] != p:
            pts.append(p)
    if len(pts) < 2:
        raise DomainError("a profile needs at least two distinct vertices")
    if pts[0][0] != 0 or pts[0][1] <= 0:
        raise DomainError("profile must start at (0, y0) with y0 > 0")
    if pts[-1][1] != 0 or pts[-1][0] <= 0:
        raise DomainError("profile must end at (x0, 0) with x0 > 0")
    for a, b in zip(pts, pts[1:]):
        if b[0] < a[0] or b[1] > a[1]:
            raise DomainError(f"edge {a} -> {b} is not monotone")
        if kind is Kind.CONCAVE and (b[0] == a[0] or b[1] == a[1]):
            raise DomainError(
                f"edge {a} -> {b}: concave profiles need strictly decreasing slopes"
            )
    # right turns only for convex regions, left turns only for concave ones
    sign = -1 if kind is Kind.CONVEX else 1
    out = [pts[0]]
    for nxt_i in range(1, len(pts)):
        nxt = pts[nxt_i]
        if len(out) >= 2:
            c = _cross(out[-2], out[-1], nxt)
            if c == 0:
                out.pop()
            elif (c > 0) != (sign > 0):
                raise DomainError(
                    f"vertex {out[-1]} breaks {kind.value} shape of the profile"
                )
        out.append(nxt)
    return tuple(out)


@dataclass(frozen=True)
class ToricProfile:
    kind: Kind
    vertices: tuple
    # common-denominator integer copy of the vertices, used in the hot loops
    _scale: int = field(init=False, repr=False, compare=False)
    _ivertices: tuple = field(init=False, repr=False, compare=False)

    def __init__(self, kind, vertices: Sequence):
        kind = Kind(kind)
        verts = _canonical_vertices(kind, vertices)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "vertices", verts)
        scale = reduce(math.lcm, (c.denominator for p in verts for c in p), 1)
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(
            self,
            "_ivertices",
            tuple((int(x * scale), int(y * scale)) for x, y in verts),
        )

    @property
    def x0(self) -> Fraction:
        return self.vertices[-1][0]

    @property
    def y0(self) -> Fraction:
        return self.vertices[0][1]

    def scaled(self, factor) -> "ToricProfile":
        c = to_rational(factor)
        if c <= 0:
            raise DomainError("scale factor must be positive")
        return ToricProfile(self.kind, [(x * c, y * c) for x, y in self.vertices])

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": [[format_rational(x), format_rational(y)] for x, y in self.vertices],
        }

    @classmethod
    def from_json(cls, data) -> "ToricProfile":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            kind = data["kind"]
            raw = data["vertices"]
        except (KeyError, TypeError):
            raise DomainError("profile JSON needs 'kind' and 'vertices'") from None
        if kind not in ("concave", "convex"):
            raise DomainError(f"unknown profile kind {kind!r}")
        verts = []
        for pair in raw:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise DomainError(f"vertex must be a pair, got {pair!r}")
            verts.append(tuple(parse_rational(str(c)) for c in pair))
        return cls(kind, verts)


def load_profile(path) -> ToricProfile:
    return ToricProfile.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def _lattice(v) -> tuple[int, int]:
    v1, v2 = v
    if not (isinstance(v1, int) and isinstance(v2, int)):
        raise DomainError(f"lattice vector must have integer entries, got {v!r}")
    if v1 < 0 or v2 < 0 or (v1 == 0 and v2 == 0):
        raise DomainError(f"lattice vector must be nonnegative and nonzero, got {v!r}")
    return v1, v2


def support_max(P: ToricProfile, v) -> Fraction:
    """max of <v, w> over the region (attained at a vertex of the graph)."""
    v1, v2 = _lattice(v)
    return Fraction(max(v1 * x + v2 * y for x, y in P._ivertices), P._scale)


def support_max_attained(P: ToricProfile, v) -> tuple[Fraction, list[Point]]:
    v1, v2 = _lattice(v)
    vals = [v1 * x + v2 * y for x, y in P._ivertices]
    best = max(vals)
    return Fraction(best, P._scale), [w for w, val in zip(P.vertices, vals) if val == best]


def support_min_on_graph(P: ToricProfile, v) -> Fraction:
    """min of <v, w> over the graph of the profile function."""
    v1, v2 = _lattice(v)
    return Fraction(min(v1 * x + v2 * y for x, y in P._ivertices), P._scale)


def support_min_attained(P: ToricProfile, v) -> tuple[Fraction, list[Point]]:
    v1, v2 = _lattice(v)
    vals = [v1 * x + v2 * y for x, y in P._ivertices]
    best = min(vals)
    return Fraction(best, P._scale), [w for w, val in zip(P.vertices, vals) if val == best]


def volume(P: ToricProfile) -> Fraction:
    """Symplectic volume of the toric domain: twice the area of the profile."""
    poly = [(Fraction(0), Fraction(0))] + list(reversed(P.vertices))
    twice_area = sum(
        a[0] * b[1] - b[0] * a[1] for a, b in zip(poly, poly[1:] + poly[:1])
    )
    return twice_area


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")


def _convex_min(f, lo: int, hi: int) -> int:
    """Minimum of a convex function on the integers lo..hi."""
    while lo < hi:
        mid = (lo + hi) // 2
        if f(mid) <= f(mid + 1):
            hi = mid
        else:
            lo = mid + 1
    return f(lo)


def capacity_concave(P: ToricProfile, k: int) -> Fraction:
    if P.kind is not Kind.CONCAVE:
        raise DomainError("capacity_concave needs a concave profile")
    _check_k(k)
    kk = k + 1
    slopes = [(x - y, kk * y) for x, y in P._ivertices]
    # v1 -> min over the graph is concave, so maximize it by bisection
    best = -_convex_min(lambda v1: -min([v1 * d + c for d, c in slopes]), 1, k)
    return Fraction(best, P._scale)


def capacity_concave_attained(P: ToricProfile, k: int) -> tuple[Fraction, list[tuple[int, int]]]:
    """Concave capacity plus every lattice vector attaining the maximum."""
    value = capacity_concave(P, k)
    vs = [(v1, k + 1 - v1) for v1 in range(1, k + 1)]
    return value, [v for v in vs if support_min_on_graph(P, v) == value]


def capacity_convex(P: ToricProfile, k: int) -> Fraction:
    if P.kind is not Kind.CONVEX:
        raise DomainError("capacity_convex needs a convex profile")
    _check_k(k)
    slopes = [(x - y, k * y) for x, y in P._ivertices]
    best = _convex_min(lambda j: max([j * d + c for d, c in slopes]), 0, k)
    return Fraction(best, P._scale)


def capacity_convex_attained(P: ToricProfile, k: int) -> tuple[Fraction, list[tuple[int, int]]]:
    value = capacity_convex(P, k)
    vs = [(j, k - j) for j in range(0, k + 1)]
    return value, [v for v in vs if support_max(P, v) == value]


def capacity_toric(P: ToricProfile, k: int) -> Fraction:
    if P.kind is Kind.CONCAVE:
        return capacity_concave(P, k)
    return capacity_convex(P, k)


def contains_point(P: ToricProfile, point) -> bool:
    """Whether ``point`` lies in the closed region of the profile."""
    x, y = to_rational(point[0]), to_rational(point[1])
    if x < 0 or y < 0 or x > P.x0 or y > P.y0:
        return False
    for a, b in zip(P.vertices, P.vertices[1:]):
        if a[0] <= x <= b[0]:
            if a[0] == b[0]:
                # vertical edge at x = x0: everything up to a[1] is inside
                return y <= a[1]
            f = a[1] + (b[1] - a[1]) * (x - a[0]) / (b[0] - a[0])
            return y <= f
    return False


def ellipsoid_profile(a1, a2, kind) -> ToricProfile:
    a1, a2 = to_rational(a1), to_rational(a2)
    if a1 <= 0 or a2 <= 0:
        raise DomainError("ellipsoid parameters must be positive")
    return ToricProfile(kind, [(0, a2), (a1, 0)])


def polydisk_profile(a, b) -> ToricProfile:
    a, b = to_rational(a), to_rational(b)
    if a <= 0 or b <= 0:
        raise DomainError("polydisk parameters must be positive")
    return ToricProfile(Kind.CONVEX, [(0, b), (a, b), (a, 0)])
