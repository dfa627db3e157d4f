from fractions import Fraction

import pytest

from capax.exact import DomainError
from capax.optimize.convex import GRIDS, GridSpec, sweep_convex_toric, verify_convex_toric_max

F = Fraction
COARSE = GRIDS["coarse"]


def locus_profiles(report):
    return [tuple(tuple(v) for v in locus["profile"]["vertices"]) for locus in report.equality_loci]


def test_grid_contains_tie_parameters():
    rs = GRIDS["default"].r_values()
    assert F(1, 3) in rs and F(2, 3) in rs
    assert len(rs) == len(set(rs)) and rs == sorted(rs)
    assert all(0 <= r < 1 for r in rs)


def test_k2_has_three_equality_loci():
    rep = sweep_convex_toric(2, COARSE)
    assert rep.holds and rep.max_value == 4
    assert locus_profiles(rep) == [
        (("0", "3/2"), ("3", "0")),
        (("0", "3"), ("3/2", "0")),
        (("0", "1"), ("1", "1"), ("1", "0")),
    ]
    points = [locus["points"][0] for locus in rep.equality_loci[:2]]
    assert points == [
        {"k": 2, "i": 0, "r": "2/3", "s": "1/2", "t": "2"},
        {"k": 2, "i": 1, "r": "1/3", "s": "2", "t": "1/2"},
    ]
    assert [(i, a) for i, a, _ in rep.uncovered] == [(0, F(2, 3)), (1, F(1, 3))]


@pytest.mark.parametrize("k", [3, 4, 5])
def test_only_square_ties_for_k_at_least_3(k):
    rep = sweep_convex_toric(k, COARSE)
    assert rep.holds and rep.max_value == k * k
    assert locus_profiles(rep) == [(("0", "1"), ("1", "1"), ("1", "0"))]
    assert rep.uncovered == []


def test_unbalanced_sweep():
    grid = GridSpec(6, 3, 6, 3)
    for k in (2, 3):
        rep = sweep_convex_toric(k, grid, balanced=False)
        assert rep.holds and rep.max_value == k * k


def test_jobs_do_not_change_report():
    one = sweep_convex_toric(3, COARSE, jobs=1).to_json()
    two = sweep_convex_toric(3, COARSE, jobs=2).to_json()
    assert one == two


def test_verify_bool_and_domain():
    assert verify_convex_toric_max(2, COARSE)
    with pytest.raises(DomainError):
        sweep_convex_toric(1, COARSE)


def test_report_json_shape():
    data = sweep_convex_toric(2, COARSE).to_json()
    assert data["claim"] == "prop-toric-convex"
    assert data["verdict"] == "holds"
    assert data["grid"]["name"] == "coarse"
    assert len(data["equality_loci"]) == 3
    assert data["violations"] == []
