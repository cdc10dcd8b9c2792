"""Cascade sums and (t+2)-part constructions on the curated suite and random sets.

Random sets have d + 2 points in general position, so their Radon point is
unique and the construction runs with t = 0.
"""

import argparse
import random
from fractions import Fraction

from tverberg.cascade import HypothesisViolated, construct_cascade_partition, verify_cascade_inequality
from tverberg.gallery import CURATED_CASCADE, curated_cascade
from tverberg.linalg import PointSet, affine_span_dim


def report(name: str, s: PointSet, t: int) -> None:
    rep = verify_cascade_inequality(s)
    res = construct_cascade_partition(s, t)
    parts = " | ".join(",".join(str(i + 1) for i in p) for p in res.partition.parts)
    point = "(" + ", ".join(str(v) for v in res.point) + ")"
    print(f"{name:<18} t={t} dims={list(rep.dims)} sum={rep.total:>2} {res.branch:<11} {parts}  at {point}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--random", type=int, default=10, help="random sets per dimension")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    for name in CURATED_CASCADE:
        s, t = curated_cascade(name)
        report(name, s, t)
    rng = random.Random(args.seed)
    for d in (2, 3):
        done = 0
        while done < args.random:
            pts = {tuple(Fraction(rng.randint(-9, 9)) for _ in range(d)) for _ in range(d + 2)}
            if len(pts) < d + 2:
                continue
            s = PointSet.of(sorted(pts))
            if affine_span_dim(s) < d:
                continue
            try:
                report(f"random-{d}d-{done}", s, 0)
            except HypothesisViolated as e:
                print(f"random-{d}d-{done}: skipped ({e})")
            done += 1


if __name__ == "__main__":
    main()
