#!/usr/bin/env python3
"""Time the naive and optimized line engines on the same random instances."""
import argparse
import os
import random
import sys
import time

import psutil

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from line_search import code_of, line_profile
from lines_core import Hypergraph3, LineEngine, naive_profile


def random_instances(n, count, seed):
    rng = random.Random(f"bench:{n}:{seed}")
    triples = [(a, b, c) for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)]
    for _ in range(count):
        p = rng.random()
        yield Hypergraph3(n, frozenset(t for t in triples if rng.random() < p))


def engine_profile(h):
    engine = LineEngine(h)
    return engine.m, engine.universal


def time_engine(name, instances, profile):
    start = time.perf_counter()
    results = [profile(h) for h in instances]
    elapsed = time.perf_counter() - start
    return name, elapsed, results


def main():
    parser = argparse.ArgumentParser(description="Benchmark line engines")
    parser.add_argument("--n", type=int, nargs="+", default=[6, 8, 10, 12, 16])
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    process = psutil.Process()
    print(f"{'n':>4} {'engine':>10} {'seconds':>9} {'per inst (us)':>14}")
    print("-" * 42)
    for n in args.n:
        instances = list(random_instances(n, args.count, args.seed))
        runs = [
            time_engine("naive", instances, naive_profile),
            time_engine("engine", instances, engine_profile),
            time_engine("code", instances, lambda h: line_profile(h.n, code_of(h))),
        ]
        baseline = runs[0][2]
        for name, elapsed, results in runs:
            if results != baseline:
                print(f"  MISMATCH: {name} disagrees with naive at n={n}")
                return 1
            print(f"{n:>4} {name:>10} {elapsed:>9.3f} {elapsed / len(instances) * 1e6:>14.1f}")

    memory = process.memory_info().rss / 1024 / 1024
    cpu = process.cpu_times()
    print("-" * 42)
    print(f"RSS: {memory:.1f} MB, CPU user {cpu.user:.2f}s system {cpu.system:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
