#!/usr/bin/env python3
"""Follow a search checkpoint file and print progress and throughput."""
import argparse
import json
import math
import sys
import time

import psutil


def read_checkpoint(path):
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError):
        # mid-replace or not written yet
        return None


def shard_total(task):
    index, count = task["shard"]
    total = 1 << math.comb(task["n"], 3)
    return total * index // count, total * (index + 1) // count


def main():
    parser = argparse.ArgumentParser(description="Monitor a search checkpoint")
    parser.add_argument("checkpoint", help="Checkpoint JSON written by `lines_cli.py search --checkpoint`")
    parser.add_argument("--interval", type=float, default=5.0)
    parser.add_argument("--pid", type=int, help="Search process to report CPU and memory for")
    args = parser.parse_args()

    process = psutil.Process(args.pid) if args.pid else None
    start_time = time.time()
    last_index = None
    last_time = start_time

    print(f"Monitoring {args.checkpoint} every {args.interval:.0f}s (Ctrl-C to stop)")
    try:
        while True:
            data = read_checkpoint(args.checkpoint)
            now = time.time()
            if data:
                lo, hi = shard_total(data["task"])
                index = data["next_index"]
                rate = (index - last_index) / (now - last_time) if last_index is not None else 0.0
                done = (index - lo) / (hi - lo) * 100 if hi > lo else 100.0
                partial = data["partial"]
                line = (f"[{now - start_time:.0f}s] {index - lo}/{hi - lo} ({done:.1f}%) "
                        f"{rate:.0f}/s min_m={partial['min_m']} examined={partial['examined']}")
                if process:
                    line += f" cpu={process.cpu_percent():.0f}% rss={process.memory_info().rss / 1048576:.0f}MB"
                print(line)
                last_index, last_time = index, now
                if index >= hi:
                    print("Shard complete")
                    return 0
            else:
                print(f"[{now - start_time:.0f}s] waiting for {args.checkpoint}")
            time.sleep(args.interval)
    except KeyboardInterrupt:
        print("\nStopped")
    except psutil.NoSuchProcess:
        print(f"Process {args.pid} exited")
    return 0


if __name__ == "__main__":
    sys.exit(main())
