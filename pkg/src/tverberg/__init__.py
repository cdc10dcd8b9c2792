"""Exact computations for Radon and Tverberg partitions.

Every verdict comes with a certificate that can be checked by substitution:
barycentric coefficients for memberships and Farkas multipliers for
infeasibility.  All arithmetic is over the rationals.
"""

from .cascade import (
    BlockDecomposition,
    CascadeReport,
    CascadeResult,
    HypothesisViolated,
    block_decomposition,
    construct_cascade_partition,
    unique_radon_point,
    verify_cascade_inequality,
)
from .depth import DepthReport, DimensionTooLarge, RadoReport, centerpoint_cell, rado_check, tukey_depth
from .flip import FlipPath, RadonState, find_flip_path, flip_neighbors, verify_paper_example, verify_path
from .linalg import DependenceSpace, Mat, PointSet, affine_span_dim, dependence_space, is_dependence, kernel_basis, rank, to_rat
from .lp import (
    EmptyIndexSet,
    Feasible,
    Infeasible,
    LinearSystem,
    Optimum,
    in_convex_hull,
    minimize,
    solve_feasibility,
    verify_certificate,
)
from .partitions import (
    Partition,
    Radon,
    SearchExhausted,
    TverbergRefutation,
    TverbergWitness,
    enumerate_partitions,
    is_tolerant_partition,
    is_tverberg_partition,
    radon_from_dependence,
    search_tverberg,
    tverberg_exists,
)
from .regions import (
    ConvexCell,
    Region,
    cascade_sum,
    cell_dim,
    cell_verdict,
    core_member,
    core_membership,
    core_region,
    PointVerdict,
    interval_union,
    point_verdict,
    region_contains,
    region_dim,
    region_intersect,
    tverberg_region,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
