from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from capax.exact import INF, DomainError
from capax.optimize.two_corner import (
    Condition,
    TwoCornerFamily,
    balanced_t,
    check_ratio_identity,
    check_two_corner_supports,
    conditions_holding,
    first_inequality,
    first_inequality_reduced,
    second_inequality,
    second_inequality_reduced,
    thresholds,
    two_corner_area,
    two_corner_profile,
    two_corner_ratio_identity,
    two_corner_supports,
    uncovered_parameters,
)
from capax.toric import volume

F = Fraction


def shoelace_area(P):
    poly = [(F(0), F(0))] + list(reversed(P.vertices))
    return abs(sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(poly, poly[1:] + poly[:1]))) / 2


@st.composite
def families(draw, kmax=8, balanced=False):
    k = draw(st.integers(2, kmax))
    i = draw(st.integers(0, k - 1))
    q = draw(st.integers(1, 12))
    r = F(draw(st.integers(0, q - 1)), q)
    assume(i + r > 0)
    alpha = (i + r) / (k - i - r)
    u = F(draw(st.integers(0, 12)), 12)
    if balanced:
        s_max = alpha if r == 0 else min(alpha, (1 - r) / r)
        return TwoCornerFamily.balanced(k, i, r, s_max * u)
    w = F(draw(st.integers(0, 12)), 12)
    return TwoCornerFamily(k, i, r, alpha * u, w / alpha)


def test_profile_examples():
    assert two_corner_profile(TwoCornerFamily(2, 1, F(1, 3), 2, F(1, 2))).vertices == ((0, 3), (F(3, 2), 0))
    assert two_corner_profile(TwoCornerFamily(2, 0, F(2, 3), F(1, 2), 2)).vertices == ((0, F(3, 2)), (3, 0))
    for k in (1, 2, 5):
        for i in range(k):
            assert two_corner_profile(TwoCornerFamily(k, i, F(1, 2), 0, 0)).vertices == ((0, 1), (1, 1), (1, 0))


def test_rectangle_limits():
    top = TwoCornerFamily(3, 3, 0, 2, 0)
    assert top.alpha is INF and top.degenerate
    assert two_corner_profile(top).vertices == ((0, 3), (1, 3), (1, 0))
    assert two_corner_area(top) == 3
    side = TwoCornerFamily(3, 0, 0, 0, 1)
    assert side.alpha == 0
    assert two_corner_profile(side).vertices == ((0, 1), (2, 1), (2, 0))
    with pytest.raises(DomainError):
        two_corner_supports(top)
    with pytest.raises(DomainError):
        two_corner_ratio_identity(side)


@pytest.mark.parametrize(
    "args",
    [(2, 2, F(1, 2), 0, 0), (2, 1, 1, 0, 0), (2, 1, F(1, 3), 3, 0), (2, 1, F(1, 3), 0, 1), (2, 1, F(1, 3), -1, 0)],
)
def test_family_validation(args):
    with pytest.raises(DomainError):
        TwoCornerFamily(*args)


def test_area_examples():
    assert two_corner_area(TwoCornerFamily(4, 2, F(1, 5), 0, 0)) == 1
    assert two_corner_area(TwoCornerFamily(2, 1, F(1, 3), 2, F(1, 2))) == F(9, 4)
    assert two_corner_area(TwoCornerFamily(2, 0, F(2, 3), F(1, 2), 2)) == F(9, 4)


def test_supports_examples():
    assert two_corner_supports(TwoCornerFamily(2, 1, F(1, 3), 2, F(1, 2))) == (3, 3)
    for k in (2, 3, 7):
        assert two_corner_supports(TwoCornerFamily(k, 1, F(1, 4), 0, 0)) == (k, k)
    assert check_two_corner_supports(TwoCornerFamily(3, 1, F(1, 2), 1, F(1, 3))).ok


def test_identity_examples():
    assert two_corner_ratio_identity(TwoCornerFamily(5, 2, F(1, 3), 0, 0)) == 25
    assert two_corner_ratio_identity(TwoCornerFamily(2, 1, F(1, 3), 2, F(1, 2))) == 4
    F3 = TwoCornerFamily.balanced(3, 1, F(1, 2), F(1, 10))
    check = check_ratio_identity(F3)
    assert check.balanced and check.agree
    assert check.closed_form < 9


def test_unbalanced_is_reported():
    check = check_ratio_identity(TwoCornerFamily(3, 1, F(1, 2), F(1, 10), F(1, 2)))
    assert not check.balanced and check.agree


def test_balanced_t():
    assert balanced_t(2, 1, F(1, 3), 2) == F(1, 2)
    assert balanced_t(2, 0, F(2, 3), F(1, 2)) == 2
    with pytest.raises(DomainError):
        balanced_t(2, 0, 0, 0)


@given(families())
def test_area_matches_shoelace(fam):
    P = two_corner_profile(fam)
    assert two_corner_area(fam) == shoelace_area(P) == volume(P) / 2


@given(families())
def test_supports_match_oracle(fam):
    check = check_two_corner_supports(fam)
    assert check.closed_forms == check.oracle
    assert check.corners_ok and check.minimal_ok


@given(families())
def test_identity_matches_profile(fam):
    assert check_ratio_identity(fam).agree


@given(families(balanced=True))
def test_balanced_never_exceeds_square(fam):
    value = two_corner_ratio_identity(fam)
    k = fam.k
    assert value <= k * k
    if value == k * k and fam.s:
        assert k == 2
        assert (fam.i, fam.r, fam.s, fam.t) in {(1, F(1, 3), 2, F(1, 2)), (0, F(2, 3), F(1, 2), 2)}


def test_thresholds_examples():
    th = thresholds(2)
    assert (th.u_top, th.l_top, th.u0, th.l0) == (F(1, 3), F(1, 3), F(2, 3), F(2, 3))
    th = thresholds(3)
    assert (th.u_top, th.l_top) == (F(2, 5), F(2, 11))
    assert (th.u0, th.l0) == (F(9, 11), F(3, 5))
    with pytest.raises(DomainError):
        thresholds(1)


def test_threshold_order():
    for k in range(2, 201):
        th = thresholds(k)
        if k == 2:
            assert th.l_top == th.u_top and th.l0 == th.u0
        else:
            assert th.l_top < th.u_top and th.l0 < th.u0


def test_cover_gaps():
    assert uncovered_parameters(2) == [(0, F(2, 3), None), (1, F(1, 3), None)]
    for k in range(3, 51):
        assert uncovered_parameters(k) == []


rs = st.builds(lambda p, q: F(p % q, q), st.integers(0, 200), st.integers(1, 40))


@given(st.integers(2, 12), st.data(), rs)
def test_reduced_forms_are_equivalent(k, data, r):
    i = data.draw(st.integers(0, k - 1))
    assume(i + r > 0)
    assert first_inequality(k, i, r) == first_inequality_reduced(k, i, r)
    assert second_inequality(k, i, r) == second_inequality_reduced(k, i, r)


@given(st.integers(2, 12), st.data(), rs)
def test_conditions_imply_their_inequality(k, data, r):
    i = data.draw(st.integers(0, k - 1))
    assume(i + r > 0)
    for cond in conditions_holding(k, i, r):
        if cond.implies_first:
            assert first_inequality(k, i, r), cond
        else:
            assert second_inequality(k, i, r), cond


def test_conditions_at_tie_points():
    assert conditions_holding(2, 1, F(1, 3)) == []
    assert conditions_holding(2, 0, F(2, 3)) == []
    assert Condition.FIRST_MIDDLE in conditions_holding(3, 1, F(1, 2))
    assert Condition.SECOND_MIDDLE in conditions_holding(3, 1, F(1, 2))
