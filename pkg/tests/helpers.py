"""Random instances and certificate audits shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from tverberg.linalg import PointSet, affine_span_dim
from tverberg.partitions import TverbergRefutation
from tverberg.regions import CellWitness, Region, cell_verdict

def rational_points(rng: random.Random, n: int, d: int, scale: int = 12, denominators=(1, 2, 3)) -> PointSet:
    """n distinct random points with small rational coordinates."""
    seen, pts = set(), []
    while len(pts) < n:
        p = tuple(Fraction(rng.randint(-scale, scale), rng.choice(denominators)) for _ in range(d))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return PointSet.of(pts, dim=d)


def spanning_points(rng: random.Random, n: int, d: int, **kw) -> PointSet:
    while True:
        s = rational_points(rng, n, d, **kw)
        if affine_span_dim(s) == d:
            return s


def assert_region_certified(reg: Region, r: int | None = None, t: int = 0) -> None:
    """Every cell has a verifying witness and every discarded candidate a verifying refutation.

    An empty region without refutations is accepted only when no r-partition
    of the |S| - t remaining points exists at all.
    """
    for c in reg.cells:
        w = cell_verdict(c)
        assert isinstance(w, CellWitness) and w.verify(c)
    for r in reg.refutations:
        if isinstance(r, TverbergRefutation):
            assert r.verify(reg.ground)
        else:
            cell, ref = r
            assert ref.verify(cell)
    if reg.empty and not reg.refutations:
        assert r is not None and r > len(reg.ground) - t, "an empty region must carry refutations"
