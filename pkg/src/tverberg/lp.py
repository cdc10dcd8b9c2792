"""Exact rational linear feasibility with two-sided certificates.

Systems have the form ``A x = b`` with a per-variable nonnegativity flag.
:func:`solve_feasibility` returns either a :class:`Feasible` assignment or an
:class:`Infeasible` Farkas multiplier vector ``z`` with

    z . A[:, j] >= 0   for every nonnegative variable j,
    z . A[:, j] == 0   for every free variable j,
    z . b < 0,

which rules out any solution: it would satisfy ``z.b = z.A x >= 0``.

The solver is a dense tableau simplex using Bland's rule, run over
``gmpy2.mpq`` for speed; results are handed back as ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from gmpy2 import mpq

from .linalg import PointSet, Vector, combine, to_vector


class EmptyIndexSet(ValueError):
    """conv of the empty set contains nothing."""


class Unbounded(ArithmeticError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    variables: int
    equalities: tuple[tuple[Vector, Fraction], ...]
    nonnegative: tuple[bool, ...]

    def __post_init__(self):
        if len(self.nonnegative) != self.variables:
            raise ValueError("one nonnegativity flag per variable")
        for coeffs, _ in self.equalities:
            if len(coeffs) != self.variables:
                raise ValueError("coefficient vector length must equal the variable count")

    @classmethod
    def build(cls, equalities, nonnegative) -> LinearSystem:
        nonneg = tuple(bool(f) for f in nonnegative)
        eqs = tuple((to_vector(a), Fraction(b)) for a, b in equalities)
        return cls(len(nonneg), eqs, nonneg)


@dataclass(frozen=True)
class Feasible:
    assignment: Vector

    feasible = True


@dataclass(frozen=True)
class Infeasible:
    multipliers: Vector

    feasible = False


Verdict = Union[Feasible, Infeasible]


@dataclass(frozen=True)
class Optimum:
    """Minimum of ``objective . x`` with a primal point and dual multipliers."""

    value: Fraction
    assignment: Vector
    duals: Vector

    feasible = True


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


class _Tableau:
    """Phase-1 / phase-2 simplex tableau over mpq.

    Columns: split structural columns (free variables get a +/- pair), then
    one artificial column per row, then the right-hand side.
    """

    def __init__(self, sys: LinearSystem):
        self.sys = sys
        cols: list[tuple[int, int]] = []  # (variable, sign)
        for j in range(sys.variables):
            cols.append((j, 1))
            if not sys.nonnegative[j]:
                cols.append((j, -1))
        self.cols = cols
        m = len(sys.equalities)
        n = len(cols)
        self.m, self.n = m, n
        self.signs = []
        rows = []
        zero = mpq(0)
        for i, (a, b) in enumerate(sys.equalities):
            sgn = -1 if b < 0 else 1
            self.signs.append(sgn)
            row = []
            for j, s in cols:
                v = a[j]
                if v:
                    x = mpq(v.numerator, v.denominator)
                    row.append(x if sgn * s > 0 else -x)
                else:
                    row.append(zero)
            art = [zero] * m
            art[i] = mpq(1)
            rows.append(row + art + [mpq(abs(b.numerator), b.denominator)])
        self.t = rows
        self.basis = [n + i for i in range(m)]
        self.rhs = n + m

    def _pivot(self, r: int, e: int):
        t = self.t
        prow = t[r]
        piv = prow[e]
        if piv != 1:
            prow = [x / piv for x in prow]
            t[r] = prow
        nz = [k for k, x in enumerate(prow) if x]
        for i, row in enumerate(t):
            if i != r:
                f = row[e]
                if f:
                    for k in nz:
                        row[k] -= f * prow[k]
        f = self.obj[e]
        if f:
            obj = self.obj
            for k in nz:
                obj[k] -= f * prow[k]
        self.basis[r] = e

    def _run(self):
        """Bland's rule until optimal; raises Unbounded."""
        n, t = self.n, self.t
        while True:
            e = next((j for j in range(n) if self.obj[j] < 0), None)
            if e is None:
                return
            best = None
            for i, row in enumerate(t):
                a = row[e]
                if a > 0:
                    ratio = row[self.rhs] / a
                    if best is None or ratio < best[0] or (ratio == best[0] and self.basis[i] < self.basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                raise Unbounded
            self._pivot(best[1], e)

    def phase1(self) -> bool:
        n, m, t = self.n, self.m, self.t
        obj = [mpq(0)] * (n + m + 1)
        for row in t:
            for k in range(n):
                obj[k] -= row[k]
            obj[self.rhs] -= row[self.rhs]
        self.obj = obj
        self._run()
        if self.obj[self.rhs] != 0:
            return False
        # drive zero-valued artificials out of the basis where possible
        for i in range(m):
            if self.basis[i] >= n:
                e = next((j for j in range(n) if t[i][j] != 0), None)
                if e is not None:
                    self._pivot(i, e)
        return True

    def farkas(self) -> Vector:
        # y_i = 1 - reduced cost of artificial i; the certificate is -y
        n = self.n
        return tuple(_frac(-(1 - self.obj[n + i]) * self.signs[i]) for i in range(self.m))

    def phase2(self, objective: Sequence[Fraction]):
        n, m = self.n, self.m
        cost = [mpq(s * objective[j]) for j, s in self.cols] + [mpq(0)] * m
        obj = cost + [mpq(0)]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.t[i]
                for k in range(n + m + 1):
                    if row[k]:
                        obj[k] -= cb * row[k]
        self.obj = obj
        self._run()

    def duals(self) -> Vector:
        n = self.n
        return tuple(_frac(-self.obj[n + i] * self.signs[i]) for i in range(self.m))

    def assignment(self) -> Vector:
        x = [mpq(0)] * self.sys.variables
        for i, b in enumerate(self.basis):
            if b < self.n:
                j, s = self.cols[b]
                x[j] += s * self.t[i][self.rhs]
        return tuple(_frac(v) for v in x)


def solve_feasibility(sys: LinearSystem) -> Verdict:
    tab = _Tableau(sys)
    if not tab.phase1():
        return Infeasible(tab.farkas())
    return Feasible(tab.assignment())


def minimize(sys: LinearSystem, objective: Sequence, maximize: bool = False) -> Optimum | Infeasible:
    """Optimize a linear objective; the dual vector certifies optimality.

    For ``maximize=True`` the returned value is the maximum, and ``duals``
    certify the minimum of the negated objective.
    """
    c = [Fraction(v) for v in to_vector(objective)]
    if maximize:
        c = [-v for v in c]
    tab = _Tableau(sys)
    if not tab.phase1():
        return Infeasible(tab.farkas())
    tab.phase2(c)
    x = tab.assignment()
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return Optimum(-value if maximize else value, x, tab.duals())


def maximize(sys: LinearSystem, objective: Sequence) -> Optimum | Infeasible:
    return minimize(sys, objective, maximize=True)


def _combination(sys: LinearSystem, z: Sequence[Fraction]) -> tuple[list[Fraction], Fraction]:
    g = [Fraction(0)] * sys.variables
    rhs = Fraction(0)
    for zi, (a, b) in zip(z, sys.equalities):
        if zi:
            for j, aj in enumerate(a):
                if aj:
                    g[j] += zi * aj
            rhs += zi * b
    return g, rhs


def satisfies(sys: LinearSystem, x: Sequence[Fraction]) -> bool:
    if len(x) != sys.variables:
        return False
    if any(flag and v < 0 for flag, v in zip(sys.nonnegative, x)):
        return False
    return all(sum((aj * xj for aj, xj in zip(a, x) if aj), Fraction(0)) == b for a, b in sys.equalities)


def verify_certificate(sys: LinearSystem, v: Verdict) -> bool:
    """Check a verdict by exact substitution, independently of the solver."""
    if isinstance(v, (Feasible, Optimum)):
        return satisfies(sys, v.assignment)
    if isinstance(v, Infeasible):
        z = v.multipliers
        if len(z) != len(sys.equalities):
            return False
        g, rhs = _combination(sys, z)
        for gj, nonneg in zip(g, sys.nonnegative):
            if (nonneg and gj < 0) or (not nonneg and gj != 0):
                return False
        return rhs < 0
    return False


def verify_optimum(sys: LinearSystem, objective: Sequence, opt: Optimum, maximize: bool = False) -> bool:
    """Primal feasibility, dual feasibility and equal objective values."""
    c = [Fraction(v) for v in to_vector(objective)]
    if maximize:
        c = [-v for v in c]
    if not satisfies(sys, opt.assignment) or len(opt.duals) != len(sys.equalities):
        return False
    g, rhs = _combination(sys, opt.duals)
    for cj, gj, nonneg in zip(c, g, sys.nonnegative):
        red = cj - gj
        if (nonneg and red < 0) or (not nonneg and red != 0):
            return False
    primal = sum((ci * xi for ci, xi in zip(c, opt.assignment)), Fraction(0))
    value = -opt.value if maximize else opt.value
    return primal == rhs == value


# ---------------------------------------------------------------------------
# Convex-hull membership systems


@dataclass(frozen=True)
class HullSystem:
    """Joint system for ``p in conv(ground[h])`` for every hull ``h``.

    With ``point`` given, p is fixed and only barycentric variables exist.
    Otherwise the first ``dim`` variables are the free coordinates of p.
    Rows per hull: ``dim`` coordinate rows, then ``sum(lambda) = 1``.
    """

    ground: PointSet
    hulls: tuple[tuple[int, ...], ...]
    point: Vector | None
    system: LinearSystem
    offsets: tuple[int, ...]

    def point_of(self, assignment: Sequence[Fraction]) -> Vector:
        if self.point is not None:
            return self.point
        return tuple(assignment[: self.ground.dim])

    def coefficients_of(self, assignment: Sequence[Fraction]) -> tuple[Vector, ...]:
        return tuple(
            tuple(assignment[off: off + len(h)]) for off, h in zip(self.offsets, self.hulls)
        )

    def rows_of(self, hull: int) -> range:
        size = self.ground.dim + 1
        return range(hull * size, (hull + 1) * size)


def hull_system(ground: PointSet, hulls: Sequence[Sequence[int]], point: Sequence | None = None) -> HullSystem:
    hulls = tuple(tuple(h) for h in hulls)
    if not hulls or any(not h for h in hulls):
        raise EmptyIndexSet("every hull needs at least one point")
    d = ground.dim
    fixed = None if point is None else to_vector(point)
    if fixed is not None and len(fixed) != d:
        raise ValueError("point has the wrong dimension")
    nfree = 0 if fixed is not None else d
    offsets = []
    nvars = nfree
    for h in hulls:
        offsets.append(nvars)
        nvars += len(h)
    zero = Fraction(0)
    rows = []
    for h, off in zip(hulls, offsets):
        for k in range(d):
            a = [zero] * nvars
            if fixed is None:
                a[k] = Fraction(1)
                for pos, i in enumerate(h):
                    a[off + pos] = -ground[i][k]
                rows.append((tuple(a), zero))
            else:
                for pos, i in enumerate(h):
                    a[off + pos] = ground[i][k]
                rows.append((tuple(a), fixed[k]))
        a = [zero] * nvars
        for pos in range(len(h)):
            a[off + pos] = Fraction(1)
        rows.append((tuple(a), Fraction(1)))
    nonneg = (False,) * nfree + (True,) * (nvars - nfree)
    return HullSystem(ground, hulls, fixed, LinearSystem(nvars, tuple(rows), nonneg), tuple(offsets))


def check_barycentric(ground: PointSet, indices: Sequence[int], coefficients: Sequence[Fraction], point: Sequence[Fraction]) -> bool:
    """Direct substitution: coefficients are a convex combination giving point."""
    if len(indices) != len(coefficients) or not indices:
        return False
    if any(c < 0 for c in coefficients) or sum(coefficients) != 1:
        return False
    return combine(coefficients, [ground[i] for i in indices]) == tuple(point)


def in_convex_hull(p: Sequence, ground: PointSet, indices: Sequence[int]) -> Verdict:
    """Barycentric coefficients of p over ``ground[indices]``, or a Farkas certificate."""
    indices = tuple(indices)
    if not indices:
        raise EmptyIndexSet("conv of the empty set is empty")
    hs = hull_system(ground, [indices], point=p)
    return solve_feasibility(hs.system)
