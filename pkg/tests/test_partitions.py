import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import rational_points
from tverberg.gallery import line, paper_blocks, paper_counterexample
from tverberg.linalg import PointSet, dependence_space
from tverberg.lp import check_barycentric
from tverberg.partitions import (
    NotADependence,
    Partition,
    SearchExhausted,
    TverbergRefutation,
    TverbergWitness,
    enumerate_partitions,
    is_tolerant_partition,
    is_tverberg_partition,
    radon_from_dependence,
    search_tverberg,
    stirling2,
    tverberg_exists,
    tverberg_verdict,
)


def intervals_meet(s, parts):
    """1-D oracle: closed intervals share a point iff max of lows <= min of highs."""
    lows = [min(s[i][0] for i in p) for p in parts]
    highs = [max(s[i][0] for i in p) for p in parts]
    return max(lows) <= min(highs)


@pytest.mark.parametrize("n, r, count", [(4, 2, 7), (5, 3, 25), (7, 3, 301), (10, 3, 9330), (6, 1, 1), (3, 4, 0)])
def test_stirling_numbers(n, r, count):
    assert stirling2(n, r) == count


@given(st.integers(1, 7), st.integers(1, 7))
def test_enumeration_lists_each_partition_once(n, r):
    seen = list(enumerate_partitions(n, r))
    assert len(seen) == stirling2(n, r)
    assert len(set(seen)) == len(seen)
    for p in seen:
        assert p.r == r and sorted(i for part in p.parts for i in part) == list(range(n))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        Partition(((0,), ()))
    p = Partition.of([[2, 0], [1]], size=4)
    assert p.parts == ((0, 2), (1,)) and p.unassigned == (3,)
    assert p.without([1]) is None
    assert p.without([2]).parts == ((0,), (1,))


def test_radon_partition_of_three_collinear_points():
    s = line(3)
    (alpha,) = dependence_space(s).basis
    rad = radon_from_dependence(s, alpha)
    assert {rad.a, rad.b} == {(0, 2), (1,)}
    assert rad.point == (1,)
    assert sum(abs(a) for a in rad.alpha) == 2


def test_radon_rejects_non_dependences():
    with pytest.raises(NotADependence):
        radon_from_dependence(line(3), [1, 1, -1])
    with pytest.raises(NotADependence):
        radon_from_dependence(line(3), [0, 0, 0])


@given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=4, max_size=7, unique_by=tuple))
def test_every_dependence_gives_a_radon_partition(pts):
    s = PointSet.of(pts)
    for alpha in dependence_space(s).basis:
        rad = radon_from_dependence(s, alpha)
        wa, wb = rad.weights()
        assert check_barycentric(s, rad.a, wa, rad.point)
        assert check_barycentric(s, rad.b, wb, rad.point)


def test_paper_blocks_are_tverberg_pairs_through_the_origin():
    s = paper_counterexample()
    x = paper_blocks()
    w = is_tverberg_partition(s, Partition((x[0], x[1])), point=[0] * 5)
    assert w is not None and w.verify(s)
    assert w.coefficients == ((Fraction(1, 3),) * 3,) * 2


def test_verdicts_carry_certificates_for_both_outcomes():
    s = line(4)
    yes = tverberg_verdict(s, Partition(((0, 3), (1, 2))))
    no = tverberg_verdict(s, Partition(((0, 1), (2, 3))))
    assert isinstance(yes, TverbergWitness) and yes.verify(s)
    assert isinstance(no, TverbergRefutation) and no.verify(s)


def test_seven_points_in_the_plane_have_a_three_partition():
    s = PointSet.of([[0, 0], [6, 0], [0, 6], [6, 6], [3, 1], [1, 3], [4, 4]])
    w = tverberg_exists(s, 3)
    assert w is not None and w.verify(s) and w.partition.r == 3


def test_search_keeps_every_refutation_when_nothing_is_found():
    s = line(4)
    res = search_tverberg(s, 3)
    assert not res.found
    assert res.examined == len(res.refutations) == stirling2(4, 3)
    assert all(r.verify(s) for r in res.refutations)


def test_budget_is_reported_not_swallowed():
    with pytest.raises(SearchExhausted):
        search_tverberg(paper_counterexample(), 3, budget=100)


def test_parallel_search_agrees():
    rng = random.Random(5)
    for _ in range(3):
        s = rational_points(rng, 7, 2)
        a = search_tverberg(s, 3)
        b = search_tverberg(s, 3, threads=2)
        assert a.found == b.found
        if b.found:
            assert b.witness.verify(s)
        else:
            assert all(r.verify(s) for r in b.refutations)


def test_tolerant_partition_on_six_collinear_points():
    s = line(6)
    odd_even = Partition(((0, 2, 4), (1, 3, 5)))
    # deleting any one point leaves two interleaved intervals
    assert is_tolerant_partition(s, odd_even, 1)
    assert not is_tolerant_partition(s, odd_even, 2)
    assert not is_tolerant_partition(s, Partition(((0, 1, 2), (3, 4, 5))), 0)


@given(st.integers(3, 7), st.integers(0, 2), st.data())
def test_tolerance_matches_the_interval_oracle(n, t, data):
    s = line(n)
    labels = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    parts = [tuple(i for i in range(n) if labels[i] == k) for k in (0, 1)]
    if not all(parts):
        return
    p = Partition(tuple(parts))
    expected = True
    for removed in itertools.combinations(range(n), t):
        rest = [tuple(i for i in q if i not in removed) for q in parts]
        if not all(rest) or not intervals_meet(s, rest):
            expected = False
            break
    assert is_tolerant_partition(s, p, t) == expected
