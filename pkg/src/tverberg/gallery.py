"""Named point configurations used by the CLI, the tests and the scripts."""

from __future__ import annotations

from fractions import Fraction

from .linalg import PointSet


def unit(i: int, d: int) -> list[int]:
    return [int(k == i) for k in range(d)]


def paper_counterexample() -> PointSet:
    """e_1..e_5 and f_i = -e_i - e_{i+2} (indices mod 5) in R^5.

    Index i < 5 is e_{i+1}; index 5 + i is f_{i+1}.
    """
    es = [unit(i, 5) for i in range(5)]
    fs = [[-a - b for a, b in zip(unit(i, 5), unit((i + 2) % 5, 5))] for i in range(5)]
    return PointSet.of(es + fs)


def paper_blocks() -> list[tuple[int, ...]]:
    """X_i = {e_i, e_{i+2}, f_i} as index triples, i = 1..5."""
    return [tuple(sorted((i, (i + 2) % 5, 5 + i))) for i in range(5)]


def cross(d: int = 2) -> PointSet:
    """+-e_1, ..., +-e_d and the origin."""
    pts = []
    for i in range(d):
        pts.append(unit(i, d))
        pts.append([-x for x in unit(i, d)])
    pts.append([0] * d)
    return PointSet.of(pts)


def line(n: int) -> PointSet:
    """0, 1, ..., n-1 on the real line."""
    return PointSet.of([[i] for i in range(n)])


# Sets with a single Radon point and |S| = affine dim + t + 2, paired with t.
# The s = t+1 branch only arises for t = 0: blocks there are balanced
# dependences sharing the origin, which forces dim W >= 2s - 1.
CURATED_CASCADE: dict[str, tuple[list[list], int]] = {
    "cross-2": ([[1, 0], [-1, 0], [0, 1], [0, -1], [0, 0]], 1),
    "cross-3": ([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1], [0, 0, 0]], 2),
    "cross-4": ([unit(i, 4) for i in range(4)] + [[-x for x in unit(i, 4)] for i in range(4)] + [[0] * 4], 3),
    "skew-cross": ([[2, 0], [-1, 0], [0, 3], [0, -1], [0, 0]], 1),
    "shifted-cross": ([[3, 1], [1, 1], [2, "5/2"], [2, "1/2"], [2, 1]], 1),
    "square": ([[1, 0], [-1, 0], [0, 1], [0, -1]], 0),
    "triangle-center": ([[0, 0], [4, 0], [0, 4], [1, 1]], 0),
    "quadrilateral": ([[0, 0], [2, 0], [2, 2], [0, 3]], 0),
    "tetra-center": ([[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 4], [1, 1, 1]], 0),
    "line-3": ([[0], [1], [2]], 0),
}


def curated_cascade(name: str) -> tuple[PointSet, int]:
    pts, t = CURATED_CASCADE[name]
    return PointSet.of(pts), t


def named(name: str) -> PointSet:
    """Resolve a gallery name such as ``cross``, ``line-6`` or ``curated-cascade-square``."""
    if name == "paper-counterexample":
        return paper_counterexample()
    if name == "cross":
        return cross(2)
    if name.startswith("cross-") and name[6:].isdigit():
        return cross(int(name[6:]))
    if name.startswith("line-") and name[5:].isdigit():
        return line(int(name[5:]))
    if name.startswith("curated-cascade-"):
        key = name[len("curated-cascade-"):]
        if key.isdigit():
            keys = list(CURATED_CASCADE)
            if int(key) >= len(keys):
                raise KeyError(name)
            key = keys[int(key)]
        return curated_cascade(key)[0]
    raise KeyError(name)


def random_points(rng, n: int, d: int, scale: int = 20, denominator: int = 1) -> PointSet:
    """n distinct random rational points with coordinates k/denominator, |k| <= scale."""
    if n > (2 * scale + 1) ** d:
        raise ValueError(f"only {(2 * scale + 1) ** d} distinct points available")
    seen = set()
    pts = []
    while len(pts) < n:
        p = tuple(Fraction(rng.randint(-scale, scale), denominator) for _ in range(d))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return PointSet.of(pts, dim=d)
