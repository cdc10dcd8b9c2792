"""Exact Tukey depth (d <= 3) and the r = 1 core C^t_1(S).

Depth uses closed halfspaces: the depth of p is the least number of points
of S in a closed halfspace containing p.  Equivalently it is the least
number of points whose deletion puts p outside the hull of the rest, which
is how points of depth > t make up C^t_1(S).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Mat, PointSet, Vector, affine_span_dim, dot, kernel_basis, rank, solve, sub, to_vector
from .lp import Infeasible, in_convex_hull
from .regions import CellWitness, ConvexCell, cell_verdict

MAX_DEPTH_DIM = 3


class DimensionTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class DepthReport:
    """``depth`` points of S lie in ``{x : normal . x >= offset}``, which contains ``point``."""

    point: Vector
    depth: int
    normal: Vector
    offset: Fraction

    def verify(self, s: PointSet) -> bool:
        if dot(self.normal, self.point) < self.offset or not any(self.normal):
            return False
        return sum(dot(self.normal, x) >= self.offset for x in s) == self.depth


def _min_open_count(vecs: list[tuple[int, Vector]]) -> tuple[int, list[int]]:
    """Least ``#{v : u.v > 0}`` over directions u with ``u.v != 0`` for all v.

    Returns the count and the indices counted.  Works in coordinates of the
    span of ``vecs``; candidate directions are the extreme rays of the
    arrangement, and ties on a ray are resolved by recursing on the vectors
    orthogonal to it.
    """
    if not vecs:
        return 0, []
    basis: list[Vector] = []
    for _, v in vecs:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
    k = len(basis)
    if k == 1:
        b = basis[0]
        j = next(i for i, x in enumerate(b) if x)
        pos = [i for i, v in vecs if v[j] / b[j] > 0]
        neg = [i for i, v in vecs if v[j] / b[j] < 0]
        return (len(pos), pos) if len(pos) <= len(neg) else (len(neg), neg)
    to_basis = Mat.from_rows([[b[r] for b in basis] for r in range(len(basis[0]))])
    coords = [solve(to_basis, v) for _, v in vecs]
    best: tuple[int, list[int]] | None = None
    for combo in itertools.combinations(range(len(vecs)), k - 1):
        rows = [coords[i] for i in combo]
        if rank(rows) < k - 1:
            continue
        g = kernel_basis(Mat.from_rows(rows, cols=k))[0]
        for sign in (1, -1):
            values = [sign * dot(g, c) for c in coords]
            pos = [vecs[i][0] for i, x in enumerate(values) if x > 0]
            if best is not None and len(pos) >= best[0]:
                continue
            flat = [vecs[i] for i, x in enumerate(values) if x == 0]
            count, extra = _min_open_count(flat)
            if best is None or len(pos) + count < best[0]:
                best = (len(pos) + count, pos + extra)
    return best


def tukey_depth(p: Sequence, s: PointSet) -> DepthReport:
    p = to_vector(p)
    d = s.dim
    if d > MAX_DEPTH_DIM:
        raise DimensionTooLarge(f"exact depth is limited to d <= {MAX_DEPTH_DIM}")
    diffs = [sub(x, p) for x in s]
    at_p = [i for i, v in enumerate(diffs) if not any(v)]
    _, counted = _min_open_count([(i, v) for i, v in enumerate(diffs) if any(v)])
    inside = set(at_p) | set(counted)
    rest = [i for i in s.indices if i not in inside]
    if rest:
        v = in_convex_hull(p, s, rest)
        assert isinstance(v, Infeasible), "remaining points must miss p"
        normal = tuple(-z for z in v.multipliers[:d])
    else:
        normal = tuple(Fraction(int(k == 0)) for k in range(d))
    report = DepthReport(p, len(inside), normal, dot(normal, p))
    assert report.verify(s)
    return report


def centerpoint_cell(s: PointSet, t: int) -> ConvexCell:
    """C^t_1(S): the intersection of the hulls of all (|S| - t)-subsets."""
    if t < 0 or len(s) <= t:
        raise ValueError("need 0 <= t < |S|")
    return ConvexCell(s, tuple(itertools.combinations(s.indices, len(s) - t)))


@dataclass(frozen=True)
class RadoReport:
    t: int
    size: int
    bound: int  # t * (affine dim + 1) + 1
    nonempty: bool
    witness: CellWitness | None
    depth: DepthReport | None

    @property
    def bound_met(self) -> bool:
        return self.size >= self.bound


def rado_check(s: PointSet, t: int) -> RadoReport:
    a = affine_span_dim(s)
    bound = t * (a + 1) + 1
    if len(s) <= t:
        return RadoReport(t, len(s), bound, False, None, None)
    v = cell_verdict(centerpoint_cell(s, t))
    if not isinstance(v, CellWitness):
        return RadoReport(t, len(s), bound, False, None, None)
    depth = tukey_depth(v.point, s) if s.dim <= MAX_DEPTH_DIM else None
    return RadoReport(t, len(s), bound, True, v, depth)
