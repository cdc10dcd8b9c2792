"""Tverberg sets and cores as finite unions of implicitly described convex cells.

A :class:`ConvexCell` is ``{p : p in conv(A) for every hull A}``; a
:class:`Region` is a union of cells.  Every query reduces to exact LPs.
Dimensions follow the convention dim(empty) = -1; for a finite union of
polytopes the covering dimension is the largest affine-hull dimension of a
cell, which is what is computed here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import Mat, PointSet, Vector, affine_hull_equations, dot, kernel_basis, rank, sub, to_vector
from .lp import (
    Feasible,
    Infeasible,
    Optimum,
    check_barycentric,
    hull_system,
    in_convex_hull,
    minimize,
    solve_feasibility,
    verify_certificate,
)
from .partitions import Partition, TverbergRefutation, TverbergWitness, enumerate_partitions, search_tverberg, tverberg_verdict

# cells with more hulls than this are solved by adding hulls lazily
DIRECT_LIMIT = 12
LAZY_BATCH = 1


def _canonical_hulls(hulls: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Sorted, deduplicated hull list without hulls containing another one.

    Dropping a superset B of some listed A is exact: conv(A) is inside conv(B).
    """
    uniq = sorted({tuple(sorted(set(h))) for h in hulls}, key=lambda h: (len(h), h))
    kept: list[tuple[int, ...]] = []
    for h in uniq:
        hs = set(h)
        if not any(set(k) <= hs for k in kept):
            kept.append(h)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class ConvexCell:
    ground: PointSet
    hulls: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        hulls = _canonical_hulls(self.hulls)
        if not hulls or any(not h for h in hulls):
            raise ValueError("a cell needs at least one nonempty hull")
        n = len(self.ground)
        if any(i < 0 or i >= n for h in hulls for i in h):
            raise IndexError("hull index out of range")
        object.__setattr__(self, "hulls", hulls)

    def to_json(self) -> list[list[int]]:
        return [[i + 1 for i in h] for h in self.hulls]


@dataclass(frozen=True)
class CellWitness:
    point: Vector
    coefficients: tuple[Vector, ...]

    def verify(self, cell: ConvexCell) -> bool:
        return len(self.coefficients) == len(cell.hulls) and all(
            check_barycentric(cell.ground, h, c, self.point)
            for h, c in zip(cell.hulls, self.coefficients)
        )


@dataclass(frozen=True)
class CellRefutation:
    """Farkas multipliers for the joint system of a sub-list of the hulls.

    Infeasibility of any sub-list already empties the whole cell.
    """

    hulls: tuple[tuple[int, ...], ...]
    multipliers: Vector

    def verify(self, cell: ConvexCell) -> bool:
        if not set(self.hulls) <= set(cell.hulls):
            return False
        hs = hull_system(cell.ground, self.hulls)
        return verify_certificate(hs.system, Infeasible(self.multipliers))


@lru_cache(maxsize=None)
def cell_verdict(c: ConvexCell) -> CellWitness | CellRefutation:
    if len(c.hulls) <= DIRECT_LIMIT:
        hs = hull_system(c.ground, c.hulls)
        v = solve_feasibility(hs.system)
        if isinstance(v, Feasible):
            return CellWitness(hs.point_of(v.assignment), hs.coefficients_of(v.assignment))
        return CellRefutation(c.hulls, v.multipliers)
    active = [0]
    while True:
        sub_hulls = [c.hulls[i] for i in active]
        hs = hull_system(c.ground, sub_hulls)
        v = solve_feasibility(hs.system)
        if isinstance(v, Infeasible):
            return CellRefutation(tuple(sub_hulls), v.multipliers)
        p = hs.point_of(v.assignment)
        known = dict(zip(active, hs.coefficients_of(v.assignment)))
        coefs, violated = [], []
        # Shortcuts between LPs: a hull containing an earlier barycentric
        # support contains p, and a hull strictly beyond an earlier
        # separating normal misses p.
        supports: list[dict[int, Fraction]] = []
        normals: list[tuple[Vector, Fraction]] = []
        for i, h in enumerate(c.hulls):
            if i in known:
                coefs.append(known[i])
                continue
            members = set(h)
            support = next((w for w in supports if w.keys() <= members), None)
            if support is not None:
                coefs.append(tuple(support.get(j, Fraction(0)) for j in h))
                continue
            if any(all(dot(n, c.ground[j]) > level for j in h) for n, level in normals):
                violated.append(i)
                continue
            w = in_convex_hull(p, c.ground, h)
            if isinstance(w, Feasible):
                coefs.append(w.assignment)
                supports.append({j: x for j, x in zip(h, w.assignment) if x})
            else:
                violated.append(i)
                n = w.multipliers[: c.ground.dim]
                normals.append((n, dot(n, p)))
        if not violated:
            return CellWitness(p, tuple(coefs))
        active.extend(violated[:LAZY_BATCH])


def cell_feasible(c: ConvexCell) -> Vector | None:
    v = cell_verdict(c)
    return v.point if isinstance(v, CellWitness) else None


def _optimize(c: ConvexCell, direction: Sequence[Fraction], maximize: bool) -> Optimum | None:
    hs = hull_system(c.ground, c.hulls)
    objective = tuple(direction) + (Fraction(0),) * (hs.system.variables - c.ground.dim)
    res = minimize(hs.system, objective, maximize=maximize)
    return res if isinstance(res, Optimum) else None


def cell_extreme(c: ConvexCell, direction: Sequence[Fraction], maximize: bool = True) -> tuple[Fraction, Vector] | None:
    """Optimal value of ``direction . p`` over the cell and an attaining point."""
    res = _optimize(c, to_vector(direction), maximize)
    if res is None:
        return None
    return res.value, tuple(res.assignment[: c.ground.dim])


@lru_cache(maxsize=None)
def cell_bounds(c: ConvexCell) -> tuple[tuple[Fraction, Fraction], ...] | None:
    """Exact bounding box (per-coordinate min and max), None if empty."""
    if cell_feasible(c) is None:
        return None
    d = c.ground.dim
    box = []
    for k in range(d):
        e = tuple(Fraction(int(i == k)) for i in range(d))
        lo = cell_extreme(c, e, maximize=False)[0]
        hi = cell_extreme(c, e, maximize=True)[0]
        box.append((lo, hi))
    return tuple(box)


@lru_cache(maxsize=None)
def cell_dim(c: ConvexCell) -> int:
    """Affine-hull dimension of the cell (-1 when empty).

    Grows an affinely independent set of cell points: while some normal of
    the current affine hull is not constant on the cell, its maximizer or
    minimizer is a new independent point.
    """
    p0 = cell_feasible(c)
    if p0 is None:
        return -1
    d = c.ground.dim
    box = cell_bounds(c)
    dirs: list[Vector] = []
    if all(lo == hi for lo, hi in box):
        return 0
    while len(dirs) < d:
        if dirs:
            normals = kernel_basis(Mat.from_rows(dirs, cols=d))
        else:
            normals = [tuple(Fraction(int(i == k)) for i in range(d)) for k in range(d)]
        level = None
        for n in normals:
            base = dot(n, p0)
            for maximize in (True, False):
                value, q = cell_extreme(c, n, maximize)
                if value != base:
                    level = q
                    break
            if level is not None:
                break
        if level is None:
            break
        dirs.append(sub(level, p0))
    return len(dirs)


@lru_cache(maxsize=None)
def hull_facets(ground: PointSet, hull: tuple[int, ...]) -> tuple[tuple[tuple[Vector, Fraction], ...], tuple[tuple[Vector, Fraction], ...]]:
    """H-description of conv(ground[hull]): (equations n.x = e, inequalities h.x <= e).

    Facets are found among hyperplanes (relative to the affine hull) through
    affinely independent subsets of the hull's points.
    """
    pts = [ground[i] for i in hull]
    d = ground.dim
    eqs = affine_hull_equations(pts, d)
    a = d - len(eqs)
    if a == 0:
        return tuple(eqs), ()
    normals = [n for n, _ in eqs]
    facets = set()
    for sub_pts in itertools.combinations(pts, a):
        diffs = [sub(q, sub_pts[0]) for q in sub_pts[1:]]
        if len(diffs) and rank(diffs) < a - 1:
            continue
        ker = kernel_basis(Mat.from_rows(normals + diffs, cols=d))
        if len(ker) != 1:
            continue
        h = ker[0]
        e = dot(h, sub_pts[0])
        vals = [dot(h, q) for q in pts]
        if all(v <= e for v in vals):
            pass
        elif all(v >= e for v in vals):
            h, e = tuple(-x for x in h), -e
        else:
            continue
        scale = abs(next(x for x in h if x != 0))
        facets.add((tuple(x / scale for x in h), e / scale))
    return tuple(eqs), tuple(sorted(facets))


def cell_in_hull(c: ConvexCell, hull: tuple[int, ...]) -> bool:
    """Exact test of ``c subset conv(ground[hull])`` (c assumed nonempty)."""
    hs = set(hull)
    if any(set(h) <= hs for h in c.hulls):
        return True
    eqs, ineqs = hull_facets(c.ground, tuple(sorted(hull)))
    for n, e in eqs:
        if cell_extreme(c, n, True)[0] != e or cell_extreme(c, n, False)[0] != e:
            return False
    return all(cell_extreme(c, h, True)[0] <= e for h, e in ineqs)


def reduce_cell(c: ConvexCell) -> ConvexCell:
    """Drop hulls implied by the others; the cell's point set is unchanged."""
    hulls = list(c.hulls)
    for h in sorted(c.hulls, key=lambda h: (-len(h), h)):
        if len(hulls) == 1:
            break
        rest = ConvexCell(c.ground, tuple(k for k in hulls if k != h))
        if cell_feasible(rest) is not None and cell_in_hull(rest, h):
            hulls.remove(h)
    return ConvexCell(c.ground, tuple(hulls))


def cell_subset(x: ConvexCell, y: ConvexCell) -> bool:
    """Is the nonempty cell x contained in y?"""
    bx, by = cell_bounds(x), cell_bounds(y)
    if by is None:
        return False
    if any(lo < ylo or hi > yhi for (lo, hi), (ylo, yhi) in zip(bx, by)):
        return False
    if x.ground.dim == 1:
        return True
    return all(cell_in_hull(x, h) for h in y.hulls)


@dataclass(frozen=True)
class Region:
    """Union of cells over one ground set; no cells means the empty set.

    ``refutations`` keeps the certificates of candidate cells found empty.
    """

    ground: PointSet
    cells: tuple[ConvexCell, ...] = ()
    refutations: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        cells = tuple(sorted(set(self.cells), key=lambda c: c.hulls))
        if any(c.ground != self.ground for c in cells):
            raise ValueError("cells must share the region's ground set")
        object.__setattr__(self, "cells", cells)

    @property
    def empty(self) -> bool:
        return not self.cells

    def to_json(self) -> list[list[list[int]]]:
        return [c.to_json() for c in self.cells]


def simplify(reg: Region) -> Region:
    """Drop empty cells and cells contained in another cell; the union is unchanged."""
    live = [c for c in reg.cells if cell_feasible(c) is not None]

    def size(c):
        return sum(hi - lo for lo, hi in cell_bounds(c))

    live.sort(key=lambda c: (-size(c), c.hulls))
    kept: list[ConvexCell] = []
    for c in live:
        if not any(cell_subset(c, k) for k in kept):
            kept.append(c)
    return Region(reg.ground, tuple(kept), reg.refutations)


@lru_cache(maxsize=None)
def _tverberg_region(s: PointSet, indices: tuple[int, ...], r: int) -> Region:
    cells, refutations = [], []
    for p in enumerate_partitions(len(indices), r):
        parts = tuple(tuple(indices[i] for i in part) for part in p.parts)
        v = tverberg_verdict(s, Partition(parts))
        if isinstance(v, TverbergWitness):
            cells.append(ConvexCell(s, parts))
        else:
            refutations.append(v)
    return Region(s, tuple(cells), tuple(refutations))


def tverberg_region(s: PointSet, r: int) -> Region:
    """T_r(s): one cell per feasible unordered r-partition."""
    if r < 1:
        raise ValueError("r must be positive")
    return _tverberg_region(s, tuple(s.indices), r)


def region_dim(reg: Region) -> int:
    best = -1
    for c in reg.cells:
        best = max(best, cell_dim(c))
        if best == reg.ground.dim:
            break
    return best


@dataclass(frozen=True)
class PointVerdict:
    """Membership of a point in a region.

    A member comes with one cell and barycentric coefficients for each of
    its hulls; a non-member with Farkas multipliers for every cell.
    """

    point: Vector
    cell: ConvexCell | None = None
    coefficients: tuple[Vector, ...] = ()
    refutations: tuple[tuple[ConvexCell, Vector], ...] = ()

    @property
    def member(self) -> bool:
        return self.cell is not None

    def verify(self, reg: Region) -> bool:
        if self.cell is not None:
            return self.cell in reg.cells and len(self.coefficients) == len(self.cell.hulls) and all(
                check_barycentric(reg.ground, h, coef, self.point) for h, coef in zip(self.cell.hulls, self.coefficients)
            )
        if {c for c, _ in self.refutations} != set(reg.cells):
            return False
        return all(
            verify_certificate(hull_system(c.ground, c.hulls, point=self.point).system, Infeasible(z))
            for c, z in self.refutations
        )


def point_verdict(reg: Region, p: Sequence) -> PointVerdict:
    p = to_vector(p)
    refutations = []
    for c in reg.cells:
        hs = hull_system(c.ground, c.hulls, point=p)
        v = solve_feasibility(hs.system)
        if isinstance(v, Feasible):
            return PointVerdict(p, c, hs.coefficients_of(v.assignment))
        refutations.append((c, v.multipliers))
    return PointVerdict(p, refutations=tuple(refutations))


def region_contains(reg: Region, p: Sequence) -> bool:
    return point_verdict(reg, p).member


def cell_contains(c: ConvexCell, p: Sequence) -> bool:
    hs = hull_system(c.ground, c.hulls, point=p)
    v = solve_feasibility(hs.system)
    return isinstance(v, Feasible) and all(
        check_barycentric(c.ground, h, coef, hs.point) for h, coef in zip(c.hulls, hs.coefficients_of(v.assignment))
    )


def region_intersect(a: Region, b: Region) -> Region:
    """Pairwise hull-list concatenations, with empty and dominated cells pruned."""
    if a.ground != b.ground:
        raise ValueError("regions over different ground sets")
    if a.empty or b.empty:
        return Region(a.ground, (), a.refutations + b.refutations)
    a, b = simplify(a), simplify(b)
    cells, refutations = [], []
    for x in a.cells:
        for y in b.cells:
            c = ConvexCell(a.ground, x.hulls + y.hulls)
            v = cell_verdict(c)
            if isinstance(v, CellWitness):
                cells.append(reduce_cell(c))
            else:
                refutations.append((c, v))
    kept = a.refutations + b.refutations + tuple(refutations)
    return simplify(Region(a.ground, tuple(cells), kept))


def core_region(s: PointSet, r: int, t: int) -> Region:
    """C^t_r(s): intersection of T_r(s minus S') over all t-subsets S'."""
    if r < 1 or t < 0 or len(s) <= t:
        raise ValueError("need r >= 1, t >= 0 and |s| > t")
    acc: Region | None = None
    for removed in itertools.combinations(s.indices, t):
        keep = tuple(i for i in s.indices if i not in removed)
        reg = _tverberg_region(s, keep, r)
        acc = reg if acc is None else region_intersect(acc, reg)
        if acc.empty:
            break
    return acc


@dataclass
class CoreMembership:
    """Per-deletion evidence for (or against) ``p in C^t_r(s)``."""

    member: bool
    witnesses: dict[tuple[int, ...], TverbergWitness] = field(default_factory=dict)
    failed_deletion: tuple[int, ...] | None = None
    refutations: list[TverbergRefutation] = field(default_factory=list)


def core_membership(p: Sequence, s: PointSet, r: int, t: int) -> CoreMembership:
    """Check every t-deletion separately with the point fixed.

    Witness and refutation indices refer to the reduced set ``s.without(deletion)``.
    """
    if r < 1 or t < 0 or len(s) <= t:
        raise ValueError("need r >= 1, t >= 0 and |s| > t")
    p = to_vector(p)
    out = CoreMembership(True)
    for removed in itertools.combinations(s.indices, t):
        rest, _ = s.without(removed)
        res = search_tverberg(rest, r, point=p)
        if res.witness is None:
            out.member = False
            out.failed_deletion = removed
            out.refutations = res.refutations
            return out
        out.witnesses[removed] = res.witness
    return out


def core_member(p: Sequence, s: PointSet, r: int, t: int) -> bool:
    return core_membership(p, s, r, t).member


def cascade_sum(s: PointSet) -> tuple[int, list[int]]:
    if not len(s):
        raise ValueError("empty point set")
    dims = [region_dim(tverberg_region(s, r)) for r in range(1, len(s) + 1)]
    return sum(dims), dims


def interval_union(reg: Region) -> list[tuple[Fraction, Fraction]]:
    """For d = 1: the region as a sorted list of disjoint closed intervals."""
    if reg.ground.dim != 1:
        raise ValueError("interval_union needs a 1-dimensional ground set")
    spans = sorted(cell_bounds(c)[0] for c in reg.cells if cell_bounds(c) is not None)
    merged: list[list[Fraction]] = []
    for lo, hi in spans:
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]
