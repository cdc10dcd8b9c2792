"""Exact rational linear algebra and the affine-dependence space of a point set.

Every number is a :class:`fractions.Fraction`; nothing here ever rounds.
Point indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Rat = Fraction
Vector = tuple[Fraction, ...]


def to_rat(value) -> Fraction:
    """Convert an int, Fraction or ``"a/b"`` string to a Fraction.

    Floats are rejected outright: a silent binary-to-rational conversion
    would change which points are coincident or collinear.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, float):
        raise TypeError(f"floating-point value {value!r} is not allowed; use 'a/b'")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"{value!r} is not an exact rational; use 'a/b'")
        return Fraction(text)
    # gmpy2.mpq and friends expose numerator/denominator
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except AttributeError:
        raise TypeError(f"cannot interpret {value!r} as a rational") from None


def to_vector(values: Iterable) -> Vector:
    return tuple(to_rat(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def combine(coefficients: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> Vector:
    """Return ``sum_i coefficients[i] * points[i]``."""
    dim = len(points[0])
    out = [Fraction(0)] * dim
    for c, x in zip(coefficients, points):
        if c:
            for k in range(dim):
                out[k] += c * x[k]
    return tuple(out)


@dataclass(frozen=True)
class Mat:
    """Dense row-major rational matrix."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Mat:
        rows = [to_vector(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(dot(self.row(i), v) for i in range(self.rows))


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan elimination; returns pivot columns."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form over Q and the (0-based) pivot columns."""
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols)
    return Mat(m.rows, m.cols, tuple(x for r in rows for x in r)), pivots


def rank(m: Mat | Sequence[Sequence[Fraction]]) -> int:
    if not isinstance(m, Mat):
        m = Mat.from_rows(m) if m else Mat(0, 0, ())
    return len(rref(m)[1])


def kernel_basis(m: Mat) -> list[Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column of the RREF.

    Each basis vector has a 1 in its free column and 0 in every other free
    column, which makes the output canonical.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r, f]
        basis.append(tuple(v))
    return basis


def solve(m: Mat, rhs: Sequence[Fraction]) -> Vector | None:
    """One exact solution of ``m x = rhs`` (free variables set to 0), or None."""
    rows = [list(m.row(i)) + [Fraction(rhs[i])] for i in range(m.rows)]
    pivots = _rref_rows(rows, m.cols)
    for i in range(len(pivots), m.rows):
        if rows[i][m.cols] != 0:
            return None
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


@dataclass(frozen=True)
class PointSet:
    """Finite set of distinct points with exact rational coordinates.

    The position of a point in ``points`` is its stable identity.
    """

    dim: int
    points: tuple[Vector, ...]

    def __post_init__(self):
        pts = tuple(to_vector(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")

    @classmethod
    def of(cls, points: Sequence[Sequence], dim: int | None = None) -> PointSet:
        points = [to_vector(p) for p in points]
        if dim is None:
            if not points:
                raise ValueError("cannot infer the dimension of an empty set")
            dim = len(points[0])
        return cls(dim, tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Vector:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    @property
    def indices(self) -> range:
        return range(len(self.points))

    def lifted(self) -> Mat:
        """The (d+1) x N matrix whose i-th column is ``(x_i, 1)``."""
        rows = [[p[k] for p in self.points] for k in range(self.dim)]
        rows.append([Fraction(1)] * len(self.points))
        return Mat.from_rows(rows, cols=len(self.points))

    def without(self, removed: Iterable[int]) -> tuple[PointSet, list[int]]:
        """Sub-set with ``removed`` indices dropped and the kept original indices."""
        removed = set(removed)
        keep = [i for i in self.indices if i not in removed]
        return PointSet(self.dim, tuple(self.points[i] for i in keep)), keep

    def translate(self, shift: Sequence[Fraction]) -> PointSet:
        return PointSet(self.dim, tuple(sub(p, shift) for p in self.points))

    def map_affine(self, matrix: Sequence[Sequence], offset: Sequence) -> PointSet:
        a = Mat.from_rows(matrix)
        b = to_vector(offset)
        return PointSet(a.rows, tuple(tuple(x + y for x, y in zip(a.apply(p), b)) for p in self.points))


@dataclass(frozen=True)
class DependenceSpace:
    """Basis of all affine dependences of ``ground``."""

    ground: PointSet
    basis: tuple[Vector, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, alpha: Sequence[Fraction]) -> bool:
        return is_dependence(self.ground, alpha)

    def coordinate_functionals(self) -> list[Vector]:
        """Row i holds ``lambda_i(b_k)`` for each basis vector ``b_k``."""
        return [tuple(b[i] for b in self.basis) for i in self.ground.indices]


def is_dependence(s: PointSet, alpha: Sequence) -> bool:
    alpha = to_vector(alpha)
    if len(alpha) != len(s):
        return False
    return sum(alpha) == 0 and all(v == 0 for v in combine(alpha, s.points))


def dependence_space(s: PointSet) -> DependenceSpace:
    if not len(s):
        raise ValueError("empty point set")
    return DependenceSpace(s, tuple(kernel_basis(s.lifted())))


def affine_span_dim(s: PointSet) -> int:
    if not len(s):
        raise ValueError("empty point set")
    return rank(s.lifted()) - 1


def affine_hull_equations(points: Sequence[Vector], dim: int) -> list[tuple[Vector, Fraction]]:
    """Equations ``n . x = c`` cutting out the affine hull of ``points``.

    The normals form a basis of the orthogonal complement of the hull's
    direction space, so there are ``dim - affine_dim`` of them.
    """
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    if diffs:
        normals = kernel_basis(Mat.from_rows(diffs, cols=dim))
    else:
        normals = [tuple(Fraction(int(i == k)) for i in range(dim)) for k in range(dim)]
    return [(n, dot(n, base)) for n in normals]
