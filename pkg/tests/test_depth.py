import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import spanning_points
from tverberg.depth import DimensionTooLarge, centerpoint_cell, rado_check, tukey_depth
from tverberg.gallery import cross, line
from tverberg.linalg import PointSet
from tverberg.lp import Feasible, in_convex_hull


def depth_by_deletion(p, s):
    """Least number of deletions that push p out of the hull of the rest."""
    n = len(s)
    for k in range(n + 1):
        for removed in itertools.combinations(range(n), k):
            rest = [i for i in range(n) if i not in removed]
            if not rest or not isinstance(in_convex_hull(p, s, rest), Feasible):
                return k


def test_depth_on_a_line():
    s = line(5)
    assert tukey_depth([2], s).depth == 3
    assert tukey_depth([0], s).depth == 1
    assert tukey_depth([Fraction(1, 2)], s).depth == 1
    assert tukey_depth([7], s).depth == 0


def test_depth_of_the_cross_center():
    rep = tukey_depth([0, 0], cross(2))
    assert rep.depth == 3 and rep.verify(cross(2))


def test_depth_is_limited_to_three_dimensions():
    with pytest.raises(DimensionTooLarge):
        tukey_depth([0] * 4, cross(4))


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(1, 6), st.integers(0, 10**6), st.booleans())
def test_depth_matches_deletion_count(d, n, seed, on_point):
    rng = random.Random(seed)
    s = spanning_points(rng, max(n, d + 1), d, scale=3) if rng.random() < 0.5 else None
    if s is None:
        pts = set()
        while len(pts) < min(n, 5**d):  # only 5**d grid points exist
            pts.add(tuple(rng.randint(-2, 2) for _ in range(d)))
        s = PointSet.of(sorted(pts), dim=d)
    if on_point:
        p = s[rng.randrange(len(s))]
    else:
        p = tuple(Fraction(rng.randint(-6, 6), 2) for _ in range(d))
    rep = tukey_depth(p, s)
    assert rep.verify(s)
    assert rep.depth == depth_by_deletion(p, s)


def test_centerpoint_cell_hulls():
    c = centerpoint_cell(line(5), 1)
    assert len(c.hulls) == 5 and all(len(h) == 4 for h in c.hulls)
    with pytest.raises(ValueError):
        centerpoint_cell(line(3), 3)


def test_rado_check_reports_the_bound():
    rep = rado_check(line(6), 2)
    assert rep.bound == 5 and rep.bound_met and rep.nonempty
    assert rep.depth.depth >= 3
    assert rep.witness.verify(centerpoint_cell(line(6), 2))


def test_rado_check_below_the_bound_can_be_empty():
    # two points, t = 1: deleting either leaves the other alone
    rep = rado_check(line(2), 1)
    assert not rep.bound_met and not rep.nonempty


def test_witness_survives_every_deletion():
    rng = random.Random(9)
    s = spanning_points(rng, 7, 2)
    rep = rado_check(s, 2)
    for removed in itertools.combinations(s.indices, 2):
        rest = [i for i in s.indices if i not in removed]
        assert isinstance(in_convex_hull(rep.witness.point, s, rest), Feasible)
