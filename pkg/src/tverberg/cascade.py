"""Tverberg (t+2)-partitions for sets with a single Radon point, and the cascade sum.

When T_2(S) is a single point (moved to the origin), every affine
dependence has its Radon point at 0.  Indices whose coordinate functionals
on the dependence space are proportional form blocks; each block contains 0
in its hull, so enough blocks give the partition directly, and a single
block splits by the sign of its constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import PointSet, Vector, affine_span_dim, combine, dependence_space, rank
from .lp import Feasible, in_convex_hull, check_barycentric
from .partitions import Partition, TverbergWitness
from .regions import cell_feasible, region_dim, tverberg_region


class HypothesisViolated(ValueError):
    pass


class NotNormalized(ValueError):
    """Some dependence has a Radon point other than the origin."""


class ClaimFailed(ArithmeticError):
    """A block's |c|-weighted point sum is not the origin."""


def unique_radon_point(s: PointSet) -> Vector | None:
    """The only Radon point of s, if T_2(s) is a single point.

    Decided by building all of T_2(s) and comparing cells.
    """
    reg = tverberg_region(s, 2)
    if reg.empty or region_dim(reg) > 0:
        return None
    points = {cell_feasible(c) for c in reg.cells}
    return points.pop() if len(points) == 1 else None


@dataclass(frozen=True)
class BlockDecomposition:
    ground: PointSet  # translated so that the Radon point is the origin
    ignored: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    functionals: tuple[Vector, ...]  # one per block, in dependence-basis coordinates
    constants: dict  # index -> c_i with lambda_i = c_i * functional of its block

    def block_of(self, i: int) -> int:
        return next(j for j, b in enumerate(self.blocks) if i in b)

    def block_sum(self, j: int) -> Fraction:
        return sum((self.constants[i] for i in self.blocks[j]), Fraction(0))

    def block_moment(self, j: int, absolute: bool = False) -> Vector:
        """``sum c_i x_i`` (or ``sum |c_i| x_i``) over block j."""
        b = self.blocks[j]
        coef = [abs(self.constants[i]) if absolute else self.constants[i] for i in b]
        return combine(coef, [self.ground[i] for i in b])


def _proportional(u: Vector, v: Vector) -> bool:
    return rank([u, v]) == 1


def block_decomposition(s: PointSet) -> BlockDecomposition:
    """Group indices by proportional coordinate functionals on the dependence space.

    ``s`` must already be translated so that its Radon point is the origin.
    """
    w = dependence_space(s)
    zero = (Fraction(0),) * s.dim
    for alpha in w.basis:
        if combine([max(a, Fraction(0)) for a in alpha], s.points) != zero:
            raise NotNormalized("a basis dependence has a nonzero Radon point")
    lam = w.coordinate_functionals()
    ignored, blocks, functionals = [], [], []
    constants: dict[int, Fraction] = {}
    for i, li in enumerate(lam):
        if not any(li):
            ignored.append(i)
            continue
        for j, phi in enumerate(functionals):
            if _proportional(phi, li):
                k = next(k for k, x in enumerate(phi) if x)
                constants[i] = li[k] / phi[k]
                blocks[j].append(i)
                break
        else:
            functionals.append(li)
            blocks.append([i])
            constants[i] = Fraction(1)
    return BlockDecomposition(
        s, tuple(ignored), tuple(tuple(b) for b in blocks), tuple(functionals), constants
    )


@dataclass(frozen=True)
class BlockCertificate:
    block: tuple[int, ...]
    coefficients: Vector  # |c_i| normalized to sum 1

    def verify(self, ground: PointSet) -> bool:
        return check_barycentric(ground, self.block, self.coefficients, (Fraction(0),) * ground.dim)


def claim_blocks_check(bd: BlockDecomposition) -> list[BlockCertificate]:
    certs = []
    zero = (Fraction(0),) * bd.ground.dim
    for j, b in enumerate(bd.blocks):
        if bd.block_moment(j, absolute=True) != zero:
            raise ClaimFailed(f"block {b} does not balance at the origin")
        weights = [abs(bd.constants[i]) for i in b]
        total = sum(weights)
        certs.append(BlockCertificate(b, tuple(x / total for x in weights)))
    return certs


@dataclass(frozen=True)
class CascadeResult:
    branch: str  # "many-blocks" or "split"
    partition: Partition
    point: Vector  # the Radon point, in the input's coordinates
    witness: TverbergWitness
    decomposition: BlockDecomposition
    block_certificates: tuple[BlockCertificate, ...]


def construct_cascade_partition(s: PointSet, t: int, split_all: bool = False) -> CascadeResult:
    """A Tverberg partition of s into at least t+2 parts through the Radon point.

    Needs ``|s| = a + t + 2`` with ``a`` the affine dimension of s, and a
    unique Radon point.  With at least t+2 blocks the first t+2 blocks are
    the parts; with t+1 blocks the first block is split by the sign of its
    constants (``split_all`` splits every block).  Leftover blocks and
    ignored indices join the first part.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    a = affine_span_dim(s)
    if len(s) != a + t + 2:
        raise HypothesisViolated(f"need |S| = {a} + {t} + 2 points, got {len(s)}")
    y = unique_radon_point(s)
    if y is None:
        raise HypothesisViolated("T_2(S) is not a single point")
    moved = s.translate(y)
    bd = block_decomposition(moved)
    certs = claim_blocks_check(bd)
    nblocks = len(bd.blocks)
    if nblocks >= t + 2:
        branch = "many-blocks"
        parts = [list(b) for b in bd.blocks[: t + 2]]
        for b in bd.blocks[t + 2:]:
            parts[0].extend(b)
    elif nblocks == t + 1:
        branch = "split"
        zero = (Fraction(0),) * s.dim
        for j in range(nblocks):
            if bd.block_sum(j) != 0 or bd.block_moment(j) != zero:
                raise HypothesisViolated(f"block {bd.blocks[j]} is not self-balancing")
        splits = range(nblocks) if split_all else range(1)
        parts = []
        for j, b in enumerate(bd.blocks):
            if j in splits:
                parts.append([i for i in b if bd.constants[i] > 0])
                parts.append([i for i in b if bd.constants[i] < 0])
            else:
                parts.append(list(b))
    else:
        raise HypothesisViolated(f"{nblocks} blocks for t = {t}")
    parts[0].extend(bd.ignored)
    partition = Partition(tuple(tuple(p) for p in parts))
    coefficients = []
    for part in partition.parts:
        v = in_convex_hull(y, s, part)
        if not isinstance(v, Feasible):
            raise ClaimFailed(f"Radon point not in the hull of part {part}")
        coefficients.append(v.assignment)
    witness = TverbergWitness(partition, y, tuple(coefficients))
    assert witness.verify(s)
    return CascadeResult(branch, partition, y, witness, bd, tuple(certs))


@dataclass(frozen=True)
class CascadeReport:
    total: int
    dims: tuple[int, ...]
    affine_dim: int
    max_parts: int  # largest m with T_m(S) nonempty

    @property
    def holds(self) -> bool:
        return self.total >= 0


def verify_cascade_inequality(s: PointSet) -> CascadeReport:
    """Cascade sum for a set whose Radon points form at most a single point."""
    if region_dim(tverberg_region(s, 2)) > 0:
        raise HypothesisViolated("dim T_2(S) > 0")
    dims = []
    for r in range(1, len(s) + 1):
        # T_r is empty beyond the first empty one
        dims.append(-1 if dims and dims[-1] == -1 else region_dim(tverberg_region(s, r)))
    max_parts = max((r for r, d in enumerate(dims, 1) if d >= 0), default=0)
    return CascadeReport(sum(dims), tuple(dims), affine_span_dim(s), max_parts)
