import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from capax.ellipsoid import Ellipsoid
from capax.exact import DomainError
from capax.optimize.concave import (
    check_concave_profile,
    random_concave_profile,
    tangent_ellipsoid,
    verify_concave_max,
)
from capax.toric import Kind, ToricProfile, ellipsoid_profile, polydisk_profile, support_min_on_graph

from conftest import concave_profiles

F = Fraction


def test_triangle_attains_bound_k2():
    P = ellipsoid_profile(1, 2, "concave")
    check = check_concave_profile(P, 2)
    assert check.ratio.nth_power == check.bound == 2
    assert verify_concave_max(2, [P])


def test_ball_attains_bound_k3():
    check = check_concave_profile(ellipsoid_profile(1, 1, "concave"), 3)
    assert check.ratio.nth_power == 4 == check.bound
    assert check.tangent == Ellipsoid([1, 1])


def test_random_profiles_k1():
    rng = random.Random(7)
    assert verify_concave_max(1, [random_concave_profile(rng) for _ in range(50)])


def test_tangent_line_supports_from_below():
    P = ToricProfile("concave", [(0, 3), (1, 1), (3, 0)])
    E, v, w = tangent_ellipsoid(P, 4)
    a1, a2 = E.params
    # the line through (a1, 0) and (0, a2) passes through w and has normal v
    assert w[0] / a1 + w[1] / a2 == 1
    assert a1 * v[0] == a2 * v[1]
    assert support_min_on_graph(P, v) == v[0] * w[0] + v[1] * w[1]


def test_rejects_convex_profiles():
    with pytest.raises(DomainError):
        verify_concave_max(2, [polydisk_profile(1, 1)])


def test_generator_shapes():
    rng = random.Random(3)
    sizes = set()
    for _ in range(300):
        P = random_concave_profile(rng)
        assert P.kind is Kind.CONCAVE
        assert 2 <= len(P.vertices) <= 6
        assert all(c.denominator <= 10 for w in P.vertices for c in w)
        sizes.add(len(P.vertices))
    assert sizes == {2, 3, 4, 5, 6}


@given(concave_profiles(), st.integers(1, 12))
def test_concave_never_beats_ellipsoid(P, k):
    check = check_concave_profile(P, k)
    assert check.below_bound and check.tangent_dominates
