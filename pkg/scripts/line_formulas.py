"""Tabulate T_r and C^t_r for random points on a line against the interval formulas.

With points x_1 < ... < x_{n+1}, the formulas are T_r = [x_r, x_{n-r+2}] and
C^t_r = [x_{r+t}, x_{n-r-t+2}], nonempty exactly when n >= 2r + 2t - 2.
"""

import argparse
import random
from fractions import Fraction

from tverberg.linalg import PointSet
from tverberg.regions import core_region, interval_union, tverberg_region


def show(interval):
    return "empty" if not interval else "[" + ", ".join(str(x) for x in interval[0]) + "]"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=7, help="number of points (n + 1)")
    parser.add_argument("--max-t", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    values = set()
    while len(values) < args.size:
        values.add(Fraction(rng.randint(-30, 30), rng.choice([1, 2, 3])))
    x = sorted(values)
    s = PointSet.of([[v] for v in x])
    n = args.size - 1
    print("points:", ", ".join(str(v) for v in x))
    print(f"{'r':>2} {'t':>2}  {'computed':<24} {'formula':<24} match")
    mismatches = 0
    for r in range(1, args.size + 1):
        for t in range(0, min(args.max_t, args.size - 1) + 1):
            reg = tverberg_region(s, r) if t == 0 else core_region(s, r, t)
            got = interval_union(reg)
            want = [(x[r + t - 1], x[n - r - t + 1])] if n >= 2 * r + 2 * t - 2 else []
            mismatches += got != want
            print(f"{r:>2} {t:>2}  {show(got):<24} {show(want):<24} {'yes' if got == want else 'NO'}")
    print("all intervals match" if not mismatches else f"{mismatches} mismatches")


if __name__ == "__main__":
    main()
