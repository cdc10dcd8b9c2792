from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tverberg.gallery import paper_counterexample
from tverberg.linalg import PointSet
from tverberg.lp import (
    EmptyIndexSet,
    Feasible,
    Infeasible,
    LinearSystem,
    Optimum,
    Unbounded,
    check_barycentric,
    hull_system,
    in_convex_hull,
    maximize,
    minimize,
    satisfies,
    solve_feasibility,
    verify_certificate,
    verify_optimum,
)

coef = st.integers(-4, 4)


@st.composite
def systems(draw, max_vars=5, max_rows=4):
    n = draw(st.integers(1, max_vars))
    m = draw(st.integers(1, max_rows))
    rows = [(draw(st.lists(coef, min_size=n, max_size=n)), draw(coef)) for _ in range(m)]
    flags = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return LinearSystem.build(rows, flags)


def test_single_nonnegative_variable():
    sys = LinearSystem.build([([1], 1)], [True])
    v = solve_feasibility(sys)
    assert isinstance(v, Feasible) and v.assignment == (1,)


def test_negative_right_hand_side_is_refuted():
    sys = LinearSystem.build([([1], -1)], [True])
    v = solve_feasibility(sys)
    assert isinstance(v, Infeasible)
    assert verify_certificate(sys, v)


def test_free_variables_can_go_negative():
    sys = LinearSystem.build([([1, 1], -3)], [False, True])
    v = solve_feasibility(sys)
    assert isinstance(v, Feasible) and satisfies(sys, v.assignment)


def test_inconsistent_equalities_are_refuted():
    sys = LinearSystem.build([([1, 1], 1), ([2, 2], 3)], [False, False])
    v = solve_feasibility(sys)
    assert isinstance(v, Infeasible) and verify_certificate(sys, v)


def test_wrong_certificates_are_rejected():
    sys = LinearSystem.build([([1], -1)], [True])
    assert not verify_certificate(sys, Infeasible((Fraction(-1),)))
    assert not verify_certificate(sys, Infeasible((Fraction(1), Fraction(0))))
    assert not verify_certificate(sys, Feasible((Fraction(-1),)))


def test_origin_in_a_triangle_of_the_counterexample():
    s = paper_counterexample()
    v = in_convex_hull([0] * 5, s, [0, 2, 5])
    assert isinstance(v, Feasible)
    assert v.assignment == (Fraction(1, 3),) * 3


def test_origin_outside_an_edge_has_a_separating_certificate():
    s = paper_counterexample()
    v = in_convex_hull([0] * 5, s, [0, 1])
    assert isinstance(v, Infeasible)
    hs = hull_system(s, [[0, 1]], point=[0] * 5)
    assert verify_certificate(hs.system, v)


def test_empty_hull_is_an_error():
    with pytest.raises(EmptyIndexSet):
        in_convex_hull([0], PointSet.of([[0]]), [])


def test_check_barycentric_is_strict():
    s = PointSet.of([[0], [2]])
    assert check_barycentric(s, [0, 1], [Fraction(1, 2)] * 2, [1])
    assert not check_barycentric(s, [0, 1], [Fraction(1, 2)] * 2, [Fraction(3, 2)])
    assert not check_barycentric(s, [0, 1], [Fraction(3, 2), Fraction(-1, 2)], [-1])


def test_minimize_and_maximize_over_a_segment():
    # x + y = 2, x, y >= 0
    sys = LinearSystem.build([([1, 1], 2)], [True, True])
    lo = minimize(sys, [1, -1])
    hi = maximize(sys, [1, -1])
    assert isinstance(lo, Optimum) and lo.value == -2
    assert isinstance(hi, Optimum) and hi.value == 2
    assert verify_optimum(sys, [1, -1], lo)
    assert verify_optimum(sys, [1, -1], hi, maximize=True)


def test_unbounded_objective_raises():
    sys = LinearSystem.build([([1, -1], 0)], [True, True])
    with pytest.raises(Unbounded):
        minimize(sys, [-1, 0])


@given(systems())
def test_verdicts_verify(sys):
    v = solve_feasibility(sys)
    assert verify_certificate(sys, v)


@given(systems(), st.lists(coef, min_size=5, max_size=5))
def test_bounded_optima_carry_dual_certificates(sys, c):
    c = c[: sys.variables]
    try:
        opt = minimize(sys, c)
    except Unbounded:
        return
    if isinstance(opt, Infeasible):
        assert verify_certificate(sys, opt)
    else:
        assert verify_optimum(sys, c, opt)


@given(st.lists(st.lists(coef, min_size=2, max_size=2), min_size=1, max_size=6, unique_by=tuple),
       st.lists(coef, min_size=2, max_size=2))
def test_hull_membership_matches_its_certificate(pts, p):
    s = PointSet.of(pts)
    v = in_convex_hull(p, s, s.indices)
    if isinstance(v, Feasible):
        assert check_barycentric(s, s.indices, v.assignment, p)
    else:
        assert verify_certificate(hull_system(s, [s.indices], point=p).system, v)
