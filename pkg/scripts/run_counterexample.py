"""Run the five checks on the ten-point set in R^5 and print a summary.

Usage: python scripts/run_counterexample.py [--json out.json]
"""

import argparse
import json
import time

from tverberg.flip import expand_set_moves, paper_flip_pairs, verify_paper_example
from tverberg.gallery import paper_counterexample


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--json", help="also write the report to this file")
    args = parser.parse_args()

    started = time.perf_counter()
    rep = verify_paper_example()
    elapsed = time.perf_counter() - started
    for name, ok in rep.checks.items():
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
    for key, value in rep.details.items():
        print(f"     {key}: {value}")
    path = expand_set_moves(paper_counterexample(), (0,) * 5, paper_flip_pairs())
    print("single moves:")
    for op, side, i in path.moves:
        print(f"     {op:6} {side} {i + 1}")
    print(f"elapsed {elapsed:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"checks": rep.checks, "details": rep.details, "moves": path.to_json()["moves"]}, fh, indent=1)


if __name__ == "__main__":
    main()
