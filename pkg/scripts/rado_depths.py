"""Depth of the centerpoint-cell witness for random sets of t(d+1)+1 points.

For each (d, t) the table shows how often the cell was nonempty and the
smallest witness depth seen; the bound asks for depth at least t + 1.
"""

import argparse
import random
import time
from fractions import Fraction

from tverberg.depth import rado_check
from tverberg.linalg import PointSet, affine_span_dim


def spanning(rng: random.Random, n: int, d: int) -> PointSet:
    while True:
        pts = {tuple(Fraction(rng.randint(-12, 12), rng.choice([1, 2, 3])) for _ in range(d)) for _ in range(n)}
        if len(pts) == n:
            s = PointSet.of(sorted(pts))
            if affine_span_dim(s) == d:
                return s


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=10)
    parser.add_argument("--seed", type=int, default=6)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'d':>2} {'t':>2} {'points':>6} {'nonempty':>9} {'min depth':>9} {'seconds':>8}")
    for d in (1, 2, 3):
        for t in (1, 2, 3):
            n = t * (d + 1) + 1
            started = time.perf_counter()
            nonempty, depths = 0, []
            for _ in range(args.count):
                rep = rado_check(spanning(rng, n, d), t)
                nonempty += rep.nonempty
                if rep.depth is not None:
                    depths.append(rep.depth.depth)
            elapsed = time.perf_counter() - started
            print(f"{d:>2} {t:>2} {n:>6} {nonempty:>5}/{args.count:<3} {min(depths):>9} {elapsed:>8.1f}")


if __name__ == "__main__":
    main()
