from fractions import Fraction

from hypothesis import settings, strategies as st

from capax.toric import Kind, ToricProfile

settings.register_profile("default", deadline=None, max_examples=80)
settings.load_profile("default")


def positive_rationals(max_num=20, max_den=20):
    return st.builds(
        Fraction, st.integers(1, max_num), st.integers(1, max_den)
    )


@st.composite
def convex_profiles(draw, max_den=10, max_inner=4):
    """Concave-function graphs: upper hull of random points under the box."""
    x0 = draw(positive_rationals(30, max_den))
    y0 = draw(positive_rationals(30, max_den))
    inner = draw(
        st.lists(
            st.tuples(positive_rationals(30, max_den), positive_rationals(30, max_den)),
            max_size=max_inner,
        )
    )
    pts = {(Fraction(0), y0), (x0, Fraction(0))}
    for x, y in inner:
        if x < x0 and y < y0:
            pts.add((x, y))
        elif x < x0:
            pts.add((x, y0))
        elif y < y0:
            pts.add((x0, y))
    # upper hull, left to right, dropping points that are not monotone
    hull = []
    for p in sorted(pts, key=lambda q: (q[0], -q[1])):
        while len(hull) >= 2:
            (ox, oy), (ax, ay) = hull[-2], hull[-1]
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    # points with equal x are kept highest-first; keep the chain monotone
    chain = [hull[0]]
    for p in hull[1:]:
        if p[0] >= chain[-1][0] and p[1] <= chain[-1][1]:
            chain.append(p)
    return ToricProfile(Kind.CONVEX, chain)


@st.composite
def concave_profiles(draw, max_den=10):
    """Convex-function graphs built from random strictly increasing slopes."""
    import random

    from capax.optimize.concave import random_concave_profile

    seed = draw(st.integers(0, 2**32 - 1))
    return random_concave_profile(random.Random(seed), max_den=max_den)
