from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tverberg.gallery import cross, line
from tverberg.linalg import (
    Mat,
    PointSet,
    affine_hull_equations,
    affine_span_dim,
    dependence_space,
    dot,
    is_dependence,
    kernel_basis,
    rank,
    rref,
    solve,
    to_rat,
)

small = st.integers(min_value=-5, max_value=5)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


@pytest.mark.parametrize("bad", [0.5, "1.5", "2e3", "1E-2", True])
def test_to_rat_rejects_inexact_input(bad):
    with pytest.raises((TypeError, ValueError)):
        to_rat(bad)


@pytest.mark.parametrize("text, value", [("3/4", Fraction(3, 4)), ("-7", Fraction(-7)), (" 2/6 ", Fraction(1, 3)), (5, Fraction(5))])
def test_to_rat_accepts_exact_input(text, value):
    assert to_rat(text) == value


def test_points_must_be_distinct_and_of_one_dimension():
    with pytest.raises(ValueError):
        PointSet.of([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        PointSet.of([[0, 1], [0]], dim=2)


def test_without_keeps_original_indices():
    s = line(5)
    rest, keep = s.without([1, 3])
    assert keep == [0, 2, 4]
    assert [p[0] for p in rest] == [0, 2, 4]


def test_three_collinear_points_have_one_dependence():
    w = dependence_space(line(3))
    assert w.dim == 1
    (alpha,) = w.basis
    assert alpha[0] * -2 == alpha[1] and alpha[2] == alpha[0]


def test_simplex_vertices_have_no_dependence():
    s = PointSet.of([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert not dependence_space(s).basis
    assert affine_span_dim(s) == 3


def test_cross_has_two_independent_dependences():
    w = dependence_space(cross(2))
    assert w.dim == 2
    assert all(is_dependence(cross(2), a) for a in w.basis)


@given(matrices())
def test_kernel_basis_is_a_basis_of_the_kernel(rows):
    m = Mat.from_rows(rows)
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.apply(v))
    assert rank(basis) == len(basis) if basis else True


@given(matrices())
def test_rref_has_unit_pivots(rows):
    r, pivots = rref(Mat.from_rows(rows))
    for i, j in enumerate(pivots):
        assert r[i, j] == 1
        assert all(r[k, j] == 0 for k in range(r.rows) if k != i)
    assert pivots == sorted(pivots)


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_finds_a_solution_of_consistent_systems(rows, x):
    m = Mat.from_rows(rows)
    x = [Fraction(v) for v in x[: m.cols]]
    rhs = m.apply(x)
    y = solve(m, rhs)
    assert y is not None and m.apply(y) == rhs


def test_solve_reports_inconsistency():
    m = Mat.from_rows([[1, 1], [2, 2]])
    assert solve(m, [1, 3]) is None


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=6, unique_by=tuple))
def test_affine_hull_equations_vanish_exactly_on_the_span(pts):
    s = PointSet.of(pts)
    eqs = affine_hull_equations(list(s.points), 3)
    assert len(eqs) == 3 - affine_span_dim(s)
    for a, b in eqs:
        assert all(dot(a, p) == b for p in s)


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=1, max_size=7, unique_by=tuple))
def test_dependence_space_dimension(pts):
    s = PointSet.of(pts)
    w = dependence_space(s)
    assert w.dim == len(s) - 1 - affine_span_dim(s)
    assert all(is_dependence(s, a) for a in w.basis)
