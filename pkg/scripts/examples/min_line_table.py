#!/usr/bin/env python3
"""Print the minimum number of lines for small n under each search constraint."""
import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from line_search import Constraint, Mode, SearchTask, min_lines, sampled_search


def main():
    parser = argparse.ArgumentParser(description="Minimum line counts for small n")
    parser.add_argument("--max-n", type=int, default=5, help="Largest n searched exhaustively (<= 7)")
    parser.add_argument("--sampled-n", type=int, nargs="*", default=[8, 10],
                        help="Sizes explored by sampling (upper bounds only)")
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    constraints = [Constraint.NO_UNIVERSAL, Constraint.DBE_TWO_OR_THREE, Constraint.DBE_TWO]
    header = f"{'n':>3} " + " ".join(f"{c.value:>18}" for c in constraints) + f" {'seconds':>8}"
    print(header)
    print("-" * len(header))
    for n in range(3, args.max_n + 1):
        start = time.time()
        cells = []
        for constraint in constraints:
            result = min_lines(n, constraint, workers=args.workers)
            cells.append("-" if result.min_m is None else str(result.min_m))
        print(f"{n:>3} " + " ".join(f"{c:>18}" for c in cells) + f" {time.time() - start:>8.2f}")

    for n in args.sampled_n:
        result = sampled_search(SearchTask(n, Mode.SAMPLED), args.trials, workers=args.workers)
        print(f"{n:>3} sampled min over {args.trials} trials: {result.min_m} (no universal line)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
