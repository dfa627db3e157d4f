"""Exact sweep of the two-corner family: no convex toric domain beats
``2 * ratio^2 = k^2`` (the square polydisk), except the ``E(1, 2)`` ties at k = 2.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exact import DomainError, format_rational
from ..ratio import ratio_polydisk_closed_form, ratio_toric
from ..toric import ToricProfile
from .two_corner import (
    TwoCornerFamily,
    balanced_t,
    conditions_holding,
    thresholds,
    two_corner_profile,
    two_corner_ratio_identity,
    uncovered_parameters,
)

__all__ = ["GRIDS", "ConvexSweepReport", "GridSpec", "sweep_convex_toric", "verify_convex_toric_max"]


@dataclass(frozen=True)
class GridSpec:
    """Sampling of ``(i, r, s)``; ``i`` always runs over all of ``0..k-1``.

    ``r`` takes the values ``j / r_steps`` together with every fraction of
    denominator ``<= r_farey``; ``s`` runs over ``s_steps + 1`` equally spaced
    points of its admissible range, endpoints included.  The rectangle limits
    use ``rect_steps + 1`` side lengths in ``[1, 3]``.
    """

    r_steps: int = 40
    r_farey: int = 6
    s_steps: int = 40
    rect_steps: int = 10
    name: str = "custom"

    def r_values(self) -> list[Fraction]:
        vals = {Fraction(j, self.r_steps) for j in range(self.r_steps)}
        vals |= {Fraction(p, q) for q in range(1, self.r_farey + 1) for p in range(q)}
        return sorted(vals)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "r_steps": self.r_steps,
            "r_farey": self.r_farey,
            "s_steps": self.s_steps,
            "rect_steps": self.rect_steps,
        }


GRIDS = {
    "coarse": GridSpec(10, 3, 10, 4, "coarse"),
    "default": GridSpec(40, 6, 40, 10, "default"),
    "dense": GridSpec(80, 12, 80, 20, "dense"),
}


@dataclass
class ConvexSweepReport:
    k: int
    grid: GridSpec
    balanced: bool
    points: int = 0
    max_value: Optional[Fraction] = None
    equality_loci: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    uncovered: list = field(default_factory=list)
    thresholds_ok: bool = True

    @property
    def holds(self) -> bool:
        return not self.violations and self.thresholds_ok

    def to_json(self) -> dict:
        return {
            "claim": "prop-toric-convex",
            "k": self.k,
            "grid": self.grid.as_dict(),
            "balanced": self.balanced,
            "verdict": "holds" if self.holds else "fails",
            "points": self.points,
            "max_value": format_rational(self.max_value) if self.max_value is not None else None,
            "bound": format_rational(Fraction(self.k * self.k)),
            "thresholds_ok": self.thresholds_ok,
            "uncovered": [
                {"i": i, "r": format_rational(a)} if b is None
                else {"i": i, "r_open_interval": [format_rational(a), format_rational(b)]}
                for i, a, b in self.uncovered
            ],
            "equality_loci": [{**locus, "points": locus["points"][:5]} for locus in self.equality_loci],
            "violations": self.violations,
        }


def _allowed_equality(P: ToricProfile, k: int) -> bool:
    v = P.vertices
    if len(v) == 3 and v[0][1] == v[1][1] == v[1][0] == v[2][0]:
        return True  # square polydisk
    if k == 2 and len(v) == 2:
        x0, y0 = v[1][0], v[0][1]
        return x0 == 2 * y0 or y0 == 2 * x0
    return False


def _members(k: int, i: int, grid: GridSpec, balanced: bool):
    for r in grid.r_values():
        if i == 0 and r == 0:
            continue
        probe = TwoCornerFamily(k, i, r, 0, 0)
        alpha = probe.alpha
        s_max = alpha if r == 0 else min(alpha, (1 - r) / r)
        for a in range(grid.s_steps + 1):
            s = s_max * a / grid.s_steps
            if balanced:
                yield TwoCornerFamily(k, i, r, s, balanced_t(k, i, r, s))
            else:
                for b in range(grid.s_steps + 1):
                    yield TwoCornerFamily(k, i, r, s, b * (1 / alpha) / grid.s_steps)


def _rectangles(k: int, grid: GridSpec):
    for a in range(grid.rect_steps + 1):
        e = Fraction(2 * a, grid.rect_steps)
        yield TwoCornerFamily(k, k, 0, e, 0)
        if a:
            yield TwoCornerFamily(k, 0, 0, 0, e)


def _evaluate(F: TwoCornerFamily):
    """Return ``(2 ratio^2, profile, problem-or-None)`` for one member."""
    P = two_corner_profile(F)
    value = 2 * ratio_toric(P, F.k).nth_power
    if F.degenerate:
        side = 1 + F.s + F.t
        closed = 2 * ratio_polydisk_closed_form(1, side, F.k).nth_power
    else:
        closed = two_corner_ratio_identity(F)
    problem = None
    if closed != value:
        problem = f"closed form {closed} != profile value {value}"
    return value, P, problem


def _sweep_chunk(args):
    k, i, grid, balanced = args
    members = _rectangles(k, grid) if i is None else _members(k, i, grid, balanced)
    count, best, hits, bad = 0, None, [], []
    bound = k * k
    for F in members:
        value, P, problem = _evaluate(F)
        count += 1
        if best is None or value > best:
            best = value
        if problem:
            bad.append({**F.as_dict(), "reason": problem})
        if value > bound:
            bad.append({**F.as_dict(), "reason": f"2*ratio^2 = {format_rational(value)} > {bound}"})
        elif value == bound:
            if _allowed_equality(P, k):
                hits.append((P, F.as_dict()))
            else:
                bad.append({**F.as_dict(), "reason": "unexpected equality"})
    return count, best, hits, bad


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CAPAX_JOBS", "1")))
    except ValueError:
        return 1


def sweep_convex_toric(
    k: int, grid: GridSpec = GRIDS["default"], balanced: bool = True, jobs: Optional[int] = None
) -> ConvexSweepReport:
    if k < 2:
        raise DomainError(f"the two-corner sweep needs k >= 2, got {k}")
    jobs = _default_jobs() if jobs is None else max(1, jobs)
    tasks = [(k, None, grid, balanced)] + [(k, i, grid, balanced) for i in range(k)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, tasks))
    else:
        results = [_sweep_chunk(t) for t in tasks]

    report = ConvexSweepReport(k, grid, balanced)
    loci: dict = {}
    for count, best, hits, bad in results:
        report.points += count
        if best is not None and (report.max_value is None or best > report.max_value):
            report.max_value = best
        report.violations.extend(bad)
        for P, point in hits:
            loci.setdefault(P.vertices, (P, []))[1].append(point)
    for P, pts in sorted(loci.values(), key=lambda item: (len(item[0].vertices), item[0].vertices)):
        report.equality_loci.append(
            {"profile": P.to_json(), "count": len(pts), "points": pts}
        )

    th = thresholds(k)
    if k == 2:
        report.thresholds_ok = th.l_top == th.u_top and th.l0 == th.u0
    else:
        report.thresholds_ok = th.l_top < th.u_top and th.l0 < th.u0
    report.uncovered = uncovered_parameters(k)
    allowed_gaps = {(1, Fraction(1, 3), None), (0, Fraction(2, 3), None)} if k == 2 else set()
    if set(report.uncovered) != allowed_gaps:
        report.thresholds_ok = False
    # every sampled (i, r) must be covered, apart from the two k = 2 tie points
    for i in range(k):
        for r in grid.r_values():
            if (i == 0 and r == 0) or conditions_holding(k, i, r):
                continue
            if (i, r, None) not in allowed_gaps:
                report.violations.append({"k": k, "i": i, "r": format_rational(r), "reason": "not covered"})
    return report


def verify_convex_toric_max(
    k: int, grid: GridSpec = GRIDS["default"], balanced: bool = True, jobs: Optional[int] = None
) -> bool:
    return sweep_convex_toric(k, grid, balanced, jobs).holds
