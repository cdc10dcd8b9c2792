"""Radon and Tverberg partitions: enumeration, certification and search."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .linalg import PointSet, Vector, combine, is_dependence, to_vector
from .lp import (
    Feasible,
    HullSystem,
    Infeasible,
    check_barycentric,
    hull_system,
    solve_feasibility,
    verify_certificate,
)


class NotADependence(ValueError):
    pass


class SearchExhausted(RuntimeError):
    """A search budget ran out before a verdict was reached."""


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty parts plus the indices left out of every part."""

    parts: tuple[tuple[int, ...], ...]
    unassigned: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "unassigned", tuple(sorted(self.unassigned)))
        seen: set[int] = set()
        for p in parts:
            if not p:
                raise ValueError("parts must be nonempty")
            if seen.intersection(p):
                raise ValueError("parts must be pairwise disjoint")
            seen.update(p)
        if seen.intersection(self.unassigned):
            raise ValueError("an index cannot be both assigned and unassigned")

    @classmethod
    def of(cls, parts: Sequence[Sequence[int]], size: int | None = None) -> Partition:
        """Build a partition; with ``size`` the leftover indices become unassigned."""
        parts = tuple(tuple(p) for p in parts)
        unassigned: tuple[int, ...] = ()
        if size is not None:
            used = {i for p in parts for i in p}
            unassigned = tuple(i for i in range(size) if i not in used)
        return cls(parts, unassigned)

    @property
    def r(self) -> int:
        return len(self.parts)

    def covers(self, s: PointSet) -> bool:
        indices = [i for p in self.parts for i in p] + list(self.unassigned)
        return sorted(indices) == list(s.indices)

    def without(self, removed: Sequence[int]) -> Partition | None:
        """Drop indices; None if some part becomes empty."""
        removed = set(removed)
        parts = [tuple(i for i in p if i not in removed) for p in self.parts]
        if any(not p for p in parts):
            return None
        return Partition(tuple(parts), tuple(i for i in self.unassigned if i not in removed))


@dataclass(frozen=True)
class TverbergWitness:
    partition: Partition
    point: Vector
    coefficients: tuple[Vector, ...]

    def verify(self, s: PointSet) -> bool:
        return len(self.coefficients) == self.partition.r and all(
            check_barycentric(s, part, coef, self.point)
            for part, coef in zip(self.partition.parts, self.coefficients)
        )


@dataclass(frozen=True)
class TverbergRefutation:
    """Farkas certificate that the parts' hulls have no common point."""

    partition: Partition
    multipliers: Vector
    point: Vector | None = None

    def verify(self, s: PointSet) -> bool:
        hs = hull_system(s, self.partition.parts, point=self.point)
        return verify_certificate(hs.system, Infeasible(self.multipliers))


def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind by the triangle recurrence."""
    row = [1] + [0] * k
    for _ in range(n):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def enumerate_partitions(n: int, r: int) -> Iterator[Partition]:
    """Every unordered partition of ``range(n)`` into ``r`` nonempty parts, once.

    Parts are generated as restricted growth strings, so each partition
    appears with its parts ordered by least element.
    """
    if r < 1 or n < r:
        return
    labels = [0] * n

    def rec(i: int, used: int):
        if n - i < r - used:
            return
        if i == n:
            parts = [[] for _ in range(r)]
            for idx, lab in enumerate(labels):
                parts[lab].append(idx)
            yield Partition(tuple(tuple(p) for p in parts))
            return
        for lab in range(min(used + 1, r)):
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    labels[0] = 0
    yield from rec(1, 1)


def _box_refutation(s: PointSet, hs: HullSystem) -> Vector | None:
    """Farkas multipliers from disjoint coordinate ranges of two hulls.

    If max over part a of coordinate k is below the min over part b, the
    multipliers below combine the two hulls' rows into ``0 >= a_max - b_min``.
    """
    d = s.dim
    for k in range(d):
        ranges = [(max(s[i][k] for i in h), min(s[i][k] for i in h)) for h in hs.hulls]
        for ha, (amax, _) in enumerate(ranges):
            for hb, (_, bmin) in enumerate(ranges):
                if amax < bmin:
                    z = [Fraction(0)] * len(hs.system.equalities)
                    ra, rb = hs.rows_of(ha), hs.rows_of(hb)
                    if hs.point is None:
                        z[ra[k]], z[rb[k]] = Fraction(1), Fraction(-1)
                        z[ra[d]], z[rb[d]] = amax, -bmin
                    else:
                        z[ra[k]], z[rb[k]] = Fraction(-1), Fraction(1)
                        z[ra[d]], z[rb[d]] = amax, -bmin
                    return tuple(z)
    return None


def tverberg_verdict(s: PointSet, p: Partition, point: Sequence | None = None) -> TverbergWitness | TverbergRefutation:
    """Decide whether the parts' hulls share a point (or contain ``point``)."""
    hs = hull_system(s, p.parts, point=point)
    z = _box_refutation(s, hs)
    if z is not None:
        return TverbergRefutation(p, z, hs.point)
    v = solve_feasibility(hs.system)
    if isinstance(v, Feasible):
        return TverbergWitness(p, hs.point_of(v.assignment), hs.coefficients_of(v.assignment))
    return TverbergRefutation(p, v.multipliers, hs.point)


def is_tverberg_partition(s: PointSet, p: Partition, point: Sequence | None = None) -> TverbergWitness | None:
    v = tverberg_verdict(s, p, point)
    return v if isinstance(v, TverbergWitness) else None


@dataclass
class TverbergSearch:
    """Outcome of an exhaustive partition search."""

    r: int
    witness: TverbergWitness | None = None
    refutations: list[TverbergRefutation] = field(default_factory=list)
    examined: int = 0

    @property
    def found(self) -> bool:
        return self.witness is not None


def _search_chunk(args) -> tuple[TverbergWitness | None, list[TverbergRefutation], int]:
    s, parts_list, point = args
    refutations = []
    for n, p in enumerate(parts_list, 1):
        v = tverberg_verdict(s, p, point)
        if isinstance(v, TverbergWitness):
            return v, refutations, n
        refutations.append(v)
    return None, refutations, len(parts_list)


def search_tverberg(
    s: PointSet,
    r: int,
    point: Sequence | None = None,
    budget: int | None = None,
    threads: int = 1,
) -> TverbergSearch:
    """Scan r-partitions in canonical order, keeping every refutation.

    Raises :class:`SearchExhausted` if more than ``budget`` partitions would
    have to be examined.  With ``threads > 1`` the partition list is split
    across worker processes and any valid witness may be returned.
    """
    if r < 1:
        raise ValueError("r must be positive")
    result = TverbergSearch(r)
    total = stirling2(len(s), r)
    if budget is not None and total > budget:
        raise SearchExhausted(f"{total} partitions exceed the budget of {budget}")
    if threads > 1 and total > 1:
        everything = list(enumerate_partitions(len(s), r))
        size = -(-len(everything) // threads)
        chunks = [(s, everything[i:i + size], point) for i in range(0, len(everything), size)]
        with ProcessPoolExecutor(threads) as pool:
            for witness, refs, n in pool.map(_search_chunk, chunks):
                result.examined += n
                result.refutations.extend(refs)
                if witness is not None and result.witness is None:
                    result.witness = witness
        return result
    for p in enumerate_partitions(len(s), r):
        result.examined += 1
        v = tverberg_verdict(s, p, point)
        if isinstance(v, TverbergWitness):
            result.witness = v
            return result
        result.refutations.append(v)
    return result


def tverberg_exists(s: PointSet, r: int, budget: int | None = None) -> TverbergWitness | None:
    return search_tverberg(s, r, budget=budget).witness


def is_tolerant_partition(s: PointSet, p: Partition, t: int) -> bool:
    """Does p stay Tverberg after deleting any t points of s?"""
    for removed in itertools.combinations(s.indices, t):
        q = p.without(removed)
        if q is None or is_tverberg_partition(s, q) is None:
            return False
    return True


class Radon(NamedTuple):
    """Ordered Radon partition read off an l1-normalized dependence."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    point: Vector
    alpha: Vector

    def weights(self) -> tuple[Vector, Vector]:
        """Barycentric weights on ``a`` and ``b`` (the |alpha_i|)."""
        return tuple(self.alpha[i] for i in self.a), tuple(-self.alpha[i] for i in self.b)


def radon_from_dependence(s: PointSet, alpha: Sequence) -> Radon:
    alpha = to_vector(alpha)
    if not is_dependence(s, alpha) or not any(alpha):
        raise NotADependence("alpha must be a nonzero affine dependence of s")
    scale = Fraction(2) / sum(abs(v) for v in alpha)
    alpha = tuple(v * scale for v in alpha)
    a = tuple(i for i, v in enumerate(alpha) if v > 0)
    b = tuple(i for i, v in enumerate(alpha) if v < 0)
    point = combine([max(v, Fraction(0)) for v in alpha], s.points)
    res = Radon(a, b, point, alpha)
    wa, wb = res.weights()
    assert check_barycentric(s, a, wa, point) and check_barycentric(s, b, wb, point)
    return res
